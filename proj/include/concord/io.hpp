#pragma once

#include "concord/homology.hpp"
#include "concord/knot_algebra.hpp"
#include "concord/metabolizer.hpp"
#include "concord/obstruction.hpp"

#include <optional>
#include <string>
#include <vector>

namespace concord {

enum class OutputFormat { Text, Json };

// --- Seifert matrix files -------------------------------------------------
// Line 1: the size 2g; then 2g whitespace-separated integer rows. '#' starts
// a comment, blank lines are skipped.
SeifertMatrix parse_seifert_file(const std::string& text);
std::string emit_seifert_file(const SeifertMatrix& V);

// --- Knot tables ----------------------------------------------------------
// CSV with header "name,crossings,alexander,determinant"; alexander is a
// semicolon-separated ascending coefficient list. Rows are cross-checked:
// determinant odd and equal to |Delta(-1)|, Delta(1) = +-1, coefficients
// normalized and palindromic.
std::vector<KnotRecord> parse_knot_table(const std::string& text);
std::string emit_knot_table(const std::vector<KnotRecord>& records);

IntPolynomial parse_coefficient_list(const std::string& text); // "1;-5;9;-5;1"
std::string emit_coefficient_list(const IntPolynomial& poly);

// --- Certificates ---------------------------------------------------------
std::string certificate_to_json(const MetabolizerCertificate& cert);
std::string certificates_to_json(const CertifyResult& result);
// Re-verifies the relation closure h * f = n * t^0 (and the basis shape) on
// load; loading a tampered certificate fails.
MetabolizerCertificate certificate_from_json(const std::string& json_text);

// --- Analysis reports -----------------------------------------------------
struct PrimeAnalysis {
    Int p;
    Int c;
    int square_class = 0;
    Int bordism_of_unit; // class of chi_1
    Int sigma;           // sigma invariant of chi_1, mod p
};

struct AnalyzeReport {
    std::optional<int> genus;              // present when a matrix was given
    IntPolynomial alexander;
    Int determinant;
    std::optional<FiniteAbelianGroup> homology; // ditto
    std::vector<PrimeAnalysis> primes;     // odd primes dividing det exactly once
    bool quadratic_order4 = false;
    Verdict verdict;
};

AnalyzeReport analyze_matrix(const SeifertMatrix& V);
AnalyzeReport analyze_record(const KnotRecord& record);
std::string render_analyze_report(const AnalyzeReport& report, OutputFormat format);

// --- Table reports ----------------------------------------------------------
struct TableRow {
    std::string name;
    Int determinant;
    Verdict verdict;
};

struct TableReport {
    std::vector<TableRow> rows;
    // witness prime -> number of rows with that witness, sorted by prime
    std::vector<std::pair<Int, int>> witness_partition;
    int inconclusive = 0;
};

TableReport analyze_table(const std::vector<KnotRecord>& records);
std::string render_table_report(const TableReport& report, OutputFormat format);

// --- Certify / family / demo reports ---------------------------------------
std::string render_certify_report(const CertifyResult& result, OutputFormat format);
std::string render_family_report(const std::vector<FamilyMember>& members,
                                 const FamilyReport& report, OutputFormat format);

// The p = 19 walkthrough: dlog bookkeeping, the relation of (2,3,15,16), the
// scalar action by 5, and the integer certificate for the relation.
std::string ring_demo(OutputFormat format);

} // namespace concord
