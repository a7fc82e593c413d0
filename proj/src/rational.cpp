#include "bgforms/rational.hpp"

#include <ostream>

namespace bgforms {

std::string Rational::str() const {
    std::string s = numerator().str();
    if (!is_integer()) s += "/" + denominator().str();
    return s;
}

std::ostream& operator<<(std::ostream& os, const Rational& r) { return os << r.str(); }

Rational rational_normalize(const Integer& n, const Integer& d) {
    return Rational(n, d);  // the constructor canonicalizes and rejects d = 0
}

}  // namespace bgforms
