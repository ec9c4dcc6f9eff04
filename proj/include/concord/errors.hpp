#pragma once

#include <stdexcept>
#include <string>

namespace concord {

// Root of the library's exception hierarchy. Everything thrown on bad input
// derives from this, so callers can catch one type at the CLI boundary.
class Error : public std::runtime_error {
public:
    explicit Error(const std::string& what) : std::runtime_error(what) {}
};

#define CONCORD_DEFINE_ERROR(Name)                                     \
    class Name : public Error {                                        \
    public:                                                            \
        explicit Name(const std::string& what) : Error(what) {}        \
    }

CONCORD_DEFINE_ERROR(MalformedSeifertMatrix);
CONCORD_DEFINE_ERROR(InvalidTwistParameter);
CONCORD_DEFINE_ERROR(NotPrime);
CONCORD_DEFINE_ERROR(NoPrimaryPart);
CONCORD_DEFINE_ERROR(NonCyclicPrimaryPart);
CONCORD_DEFINE_ERROR(PrimeMismatch);
CONCORD_DEFINE_ERROR(MismatchedOrder);
CONCORD_DEFINE_ERROR(ZeroScalar);
CONCORD_DEFINE_ERROR(NotCoprimeToCyclotomic);
CONCORD_DEFINE_ERROR(BudgetExceeded);
CONCORD_DEFINE_ERROR(PrimeNotThreeMod4);
CONCORD_DEFINE_ERROR(DependentBasis);
CONCORD_DEFINE_ERROR(NotNormalized);
CONCORD_DEFINE_ERROR(EvenDeterminant);
CONCORD_DEFINE_ERROR(NotInfiniteOrderVerdict);
CONCORD_DEFINE_ERROR(MalformedFamily);
CONCORD_DEFINE_ERROR(CertificateVerificationFailed);

#undef CONCORD_DEFINE_ERROR

// Parse failure in a text input; remembers the 1-based line it happened on.
class ParseError : public Error {
public:
    ParseError(long line, const std::string& what)
        : Error("line " + std::to_string(line) + ": " + what), line_(line) {}
    long line() const { return line_; }

private:
    long line_;
};

// A knot-table row whose fields contradict each other (determinant vs
// polynomial, non-normalized coefficients, ...). Remembers the 1-based row.
class InconsistentRecord : public Error {
public:
    InconsistentRecord(long row, const std::string& what)
        : Error("row " + std::to_string(row) + ": " + what), row_(row) {}
    long row() const { return row_; }

private:
    long row_;
};

} // namespace concord
