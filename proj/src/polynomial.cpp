#include "concord/polynomial.hpp"

#include <algorithm>
#include <sstream>

namespace concord {

IntPolynomial::IntPolynomial(std::vector<Int> ascending) : c_(std::move(ascending)) {
    while (!c_.empty() && c_.back() == 0)
        c_.pop_back();
    size_t low = 0;
    while (low < c_.size() && c_[low] == 0)
        ++low;
    if (low)
        c_.erase(c_.begin(), c_.begin() + static_cast<long>(low));
    if (!c_.empty() && c_.back() < 0)
        for (Int& v : c_)
            v = -v;
}

IntPolynomial IntPolynomial::from_longs(const std::vector<long>& ascending) {
    std::vector<Int> c(ascending.begin(), ascending.end());
    return IntPolynomial(std::move(c));
}

Int IntPolynomial::evaluate(const Int& t) const {
    Int acc = 0;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it)
        acc = acc * t + *it;
    return acc;
}

bool IntPolynomial::palindromic_up_to_sign() const {
    if (c_.empty())
        return true;
    size_t n = c_.size();
    bool plus = true, minus = true;
    for (size_t i = 0; i < n; ++i) {
        if (c_[i] != c_[n - 1 - i])
            plus = false;
        if (c_[i] != -c_[n - 1 - i])
            minus = false;
    }
    return plus || minus;
}

IntPolynomial IntPolynomial::operator*(const IntPolynomial& rhs) const {
    if (is_zero() || rhs.is_zero())
        return IntPolynomial();
    std::vector<Int> p(c_.size() + rhs.c_.size() - 1, Int(0));
    for (size_t i = 0; i < c_.size(); ++i)
        for (size_t j = 0; j < rhs.c_.size(); ++j)
            p[i + j] += c_[i] * rhs.c_[j];
    return IntPolynomial(std::move(p));
}

std::string IntPolynomial::to_string() const {
    if (c_.empty())
        return "0";
    std::ostringstream os;
    bool first = true;
    for (int i = degree(); i >= 0; --i) {
        const Int& v = c_[static_cast<size_t>(i)];
        if (v == 0)
            continue;
        Int mag = abs(v);
        if (first) {
            if (v < 0)
                os << "-";
            first = false;
        } else {
            os << (v < 0 ? " - " : " + ");
        }
        if (mag != 1 || i == 0)
            os << mag.get_str();
        if (i == 1)
            os << "t";
        else if (i > 1)
            os << "t^" << i;
    }
    return os.str();
}

} // namespace concord
