#pragma once

#include "bgforms/report.hpp"
#include "bgforms/unipoly.hpp"

namespace bgforms {

/// The three sum families built on top of the product family; index-0
/// conventions: sMinus/sPlus give 1, sOne gives the zero polynomial.
enum class SumFamily { s_minus, s_plus, s_one };

/// Product family: degree-k product of [y - (alpha-l)(alpha-l+1)] for l = 1..k,
/// with the empty product 1 at k = 0.
UniPoly build_r(unsigned k, const ParamScalar& alpha);

/// Companion family vanishing at y = (beta/2)(beta/2+1); zero at k = 0.
UniPoly build_r1(unsigned k);

/// Sum families over the product family; coefficients live in Q(beta, lambda).
UniPoly build_s(SumFamily tag, unsigned m);

/// Expansion coefficients of the sum families (cached with the polynomials).
ParamScalar coeff_c_minus(unsigned m, unsigned k);
ParamScalar coeff_c_plus(unsigned m, unsigned k);
ParamScalar coeff_d_one(unsigned m, unsigned k);

/// Precompute all families up to index m_max (makes later reads lock-cheap and
/// lets verification loops run on immutable data).
void warm_family_caches(unsigned m_max);

/// s_m^- three-term recurrence in m. Negative control: the 2m coefficient is
/// mutated to 2m+1, which must fail at m = 1 already.
Report verify_sminus_recurrence(int m_max, bool negative_control = false);

/// s_m^+ three-term recurrence. Negative control: flipped sign of the
/// two-step coefficient.
Report verify_splus_recurrence(int m_max, bool negative_control = false);

/// Relation R_m(y;0) = R1_m(y) + (beta/2-m+1)_{2m}.
Report verify_r_relation(int m_max);

/// R1 recurrence: R1_{m+1} = [y - m(m+1)] R1_m + (beta/2-m+1)_{2m} [y - (beta/2)(beta/2+1)].
/// Negative control: inhomogeneous term dropped.
Report verify_r1_recurrence(int m_max, bool negative_control = false);

/// Four-term decomposition of s_m^1 into s^- of indices m, m-1, m-2, 0
/// (valid for m >= 2). Negative control: constant term dropped.
Report verify_s1_decomposition(int m_max, bool negative_control = false);

}  // namespace bgforms
