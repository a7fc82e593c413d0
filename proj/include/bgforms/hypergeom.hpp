#pragma once

#include <optional>
#include <vector>

#include "bgforms/report.hpp"
#include "bgforms/unipoly.hpp"

namespace bgforms {

/// A terminating generalized hypergeometric series: upper/lower parameter
/// lists and the argument. Termination comes from an upper parameter that is a
/// nonpositive integer, or from an explicit term cap.
struct HypergeomSpec {
    std::vector<ParamScalar> upper;
    std::vector<ParamScalar> lower;
    ParamScalar argument = ParamScalar(1);
    std::optional<long> terms_cap;  // sum l = 0..terms_cap when set
};

/// Exact finite sum of the series. Throws "hypergeometric pole" when a lower
/// parameter hits a nonpositive integer before the series terminates, and an
/// invalid-argument error when nothing terminates the sum.
ParamScalar pfq_terminating(const HypergeomSpec& spec);

/// Series with y-dependent upper parameters (each a UniPoly in y); lower
/// parameters stay y-free. Returns the polynomial value.
UniPoly pfq_poly(const std::vector<UniPoly>& upper, const std::vector<ParamScalar>& lower,
                 const ParamScalar& argument, std::optional<long> terms_cap = std::nullopt);

/// Degree-m polynomial in the quadratic-lattice variable w = n(n+a+b+1),
/// built from the series with uppers (-m, -n, n+a+b+1) and lowers (a+1, 1-N).
/// N may be a formal ParamScalar; when enforce_classical_range is set, N must
/// be an integer with m <= N-1.
UniPoly dual_hahn(unsigned m, const ParamScalar& a, const ParamScalar& b, const ParamScalar& N,
                  bool enforce_classical_range = false);

/// Product-to-Pochhammer form of the composed product family:
/// R_k(y(y+1); alpha) = (-1)^k (-y-alpha)_k (y+1-alpha)_k, alpha formal.
/// Negative control: flipped sign.
Report verify_pochhammer_product(int k_max, bool negative_control = false);

/// Dual Hahn / 3F2 representations of s^- and s^+ composed with y(y+1).
/// Negative control: the two families' first lower parameters are swapped.
Report verify_s_hahn_representation(int m_max, bool negative_control = false);

/// The three series representations of s^1(y(y+1)): the four-term 3F2/2F1
/// combination, the 4F3 form with the ratio parameter gamma, and the
/// two-3F2 form with y-dependent coefficients. Negative control: gamma+1.
Report verify_s1_hypergeometric(int m_max, bool negative_control = false);

/// Chu-Vandermonde plus the two Pochhammer-weighted coefficient sums and the
/// auxiliary identity used to prove them. Negative control: Chu-Vandermonde
/// with numerator (gamma+alpha)_m instead of (gamma-alpha)_m.
Report verify_pochhammer_sums(int m_max, bool negative_control = false);

}  // namespace bgforms
