#include "bgforms/identity.hpp"

#include "bgforms/error.hpp"

namespace bgforms {

namespace {

// Evaluates every coefficient of diff on the parameter grid anchored at the
// given offsets. Returns true when all vanish, false on the first nonzero
// value; nullopt when some point hits a denominator zero (caller shifts).
std::optional<bool> grid_scan(const UniPoly& diff, const DegreeBounds& b,
                              const std::array<long, 3>& offset) {
    for (long ib = 0; ib <= b.beta; ++ib) {
        for (long il = 0; il <= b.lambda; ++il) {
            for (long iu = 0; iu <= b.u; ++iu) {
                const std::array<Rational, 3> point{Rational(offset[0] + ib),
                                                    Rational(offset[1] + il),
                                                    Rational(offset[2] + iu)};
                for (const auto& c : diff.coefficients()) {
                    const auto v = c.eval(point);
                    if (!v.has_value()) return std::nullopt;
                    if (!v->is_zero()) return false;
                }
            }
        }
    }
    return true;
}

}  // namespace

bool identity_check(const UniPoly& lhs, const UniPoly& rhs, const DegreeBounds& bounds,
                    EqualityRoute route) {
    const UniPoly diff = lhs - rhs;
    if (diff.is_zero()) return true;
    if (route == EqualityRoute::canonical) return false;

    // Vanishing of every y-coefficient at each grid point dominates vanishing
    // on the full grid including the y direction, so bounds.y needs no loop.
    std::array<long, 3> offset{2, 3, 5};
    for (int attempt = 0; attempt < 32; ++attempt) {
        const auto verdict = grid_scan(diff, bounds, offset);
        if (verdict.has_value()) return *verdict;
        for (auto& o : offset) o += 7;  // escape the finitely many denominator zeros
    }
    throw AlgebraError(AlgebraError::Kind::degenerate_sampling,
                       "degenerate sampling: grid kept hitting denominator zeros");
}

}  // namespace bgforms
