#include "bgforms/unipoly.hpp"

#include <ostream>
#include <sstream>

namespace bgforms {

UniPoly operator+(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    r.c_.resize(std::max(a.c_.size(), b.c_.size()));
    for (std::size_t i = 0; i < r.c_.size(); ++i) {
        if (i < a.c_.size()) r.c_[i] += a.c_[i];
        if (i < b.c_.size()) r.c_[i] += b.c_[i];
    }
    r.trim();
    return r;
}

UniPoly operator-(const UniPoly& a, const UniPoly& b) { return a + (-b); }

UniPoly UniPoly::operator-() const {
    UniPoly r = *this;
    for (auto& c : r.c_) c = -c;
    return r;
}

UniPoly operator*(const UniPoly& a, const UniPoly& b) {
    UniPoly r;
    if (a.is_zero() || b.is_zero()) return r;
    r.c_.assign(a.c_.size() + b.c_.size() - 1, ParamScalar());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
        if (a.c_[i].is_zero()) continue;
        for (std::size_t j = 0; j < b.c_.size(); ++j) r.c_[i + j] += a.c_[i] * b.c_[j];
    }
    r.trim();
    return r;
}

UniPoly operator*(const ParamScalar& s, const UniPoly& p) {
    UniPoly r;
    if (s.is_zero()) return r;
    r.c_.reserve(p.c_.size());
    for (const auto& c : p.c_) r.c_.push_back(s * c);
    r.trim();
    return r;
}

ParamScalar UniPoly::eval(const ParamScalar& point) const {
    ParamScalar acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * point + *it;
    return acc;
}

UniPoly UniPoly::compose(const UniPoly& inner) const {
    UniPoly acc;
    for (auto it = c_.rbegin(); it != c_.rend(); ++it) acc = acc * inner + UniPoly(*it);
    return acc;
}

UniPoly UniPoly::shifted_up(std::size_t k) const {
    if (is_zero() || k == 0) return *this;
    UniPoly r;
    r.c_.assign(c_.size() + k, ParamScalar());
    for (std::size_t i = 0; i < c_.size(); ++i) r.c_[i + k] = c_[i];
    return r;
}

UniPoly UniPoly::mapped(const std::function<ParamScalar(const ParamScalar&)>& fn) const {
    UniPoly r;
    r.c_.reserve(c_.size());
    for (const auto& c : c_) r.c_.push_back(fn(c));
    r.trim();
    return r;
}

UniPoly UniPoly::pow(unsigned e) const {
    UniPoly r(1);
    UniPoly base = *this;
    while (e > 0) {
        if (e & 1u) r = r * base;
        e >>= 1u;
        if (e > 0) base = base * base;
    }
    return r;
}

std::string UniPoly::str(const std::string& var) const {
    if (is_zero()) return "0";
    std::ostringstream os;
    bool first = true;
    for (std::size_t i = c_.size(); i-- > 0;) {
        if (c_[i].is_zero()) continue;
        if (!first) os << " + ";
        first = false;
        if (i == 0) {
            os << c_[i].str();
            continue;
        }
        if (!c_[i].is_one()) os << "(" << c_[i].str() << ")*";
        os << var;
        if (i > 1) os << "^" << i;
    }
    return os.str();
}

std::ostream& operator<<(std::ostream& os, const UniPoly& p) { return os << p.str(); }

}  // namespace bgforms
