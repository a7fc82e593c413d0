#pragma once

#include "bgforms/unipoly.hpp"

namespace bgforms {

/// Per-variable degree bounds for identity_check. The bounds must dominate the
/// true degrees of lhs - rhs in each variable.
struct DegreeBounds {
    int y = 0;
    int beta = 0;
    int lambda = 0;
    int u = 0;
};

enum class EqualityRoute {
    canonical,  ///< canonical-form equality in Q(beta,lambda,u)[y]
    sampling,   ///< exact evaluation on a grid exceeding the degree bounds
};

/// Decides lhs = rhs as an identity in Q(beta,lambda,u)[y].
///
/// The canonical route compares normal forms coefficientwise. The sampling
/// route evaluates the coefficient vector of lhs - rhs on a rational grid with
/// bounds+1 points per parameter: a nonzero polynomial cannot vanish on such a
/// grid, so the answer is deterministic, not probabilistic. Grid points hitting
/// a denominator zero shift the whole grid; after 32 shifts the check gives up
/// with "degenerate sampling".
bool identity_check(const UniPoly& lhs, const UniPoly& rhs, const DegreeBounds& bounds,
                    EqualityRoute route = EqualityRoute::canonical);

}  // namespace bgforms
