#pragma once

#include "bgforms/bvp.hpp"
#include "bgforms/form_operator.hpp"
#include "bgforms/report.hpp"

namespace bgforms {

/// Concrete operator parameters: order 2N on p-forms in dimension n.
struct BGSpec {
    int N = 1;
    int n = 3;
    int p = 0;

    int beta() const { return n - 2 * p; }
    void validate() const;
    /// (beta/2 - N + 1)_{2N-1} = 0, i.e. n even with beta = 2l, 0 <= l <= N-1
    /// (after excluding negative l by p <= n/2).
    bool exceptional() const;
};

/// Order-2N conformally covariant operator on p-forms, built from the two
/// polynomial families evaluated at the operator slots; formal in beta and u.
FormOperator bg_operator(int N, const ParamScalar& beta);
FormOperator bg_operator(const BGSpec& spec);

/// Pochhammer-normalized variant whose second-order factors have polynomial
/// coefficients.
FormOperator bg_normalized(int N, const ParamScalar& beta);

/// One-step recurrence of the normalized operators. Negative control: x and z
/// coefficients swapped in the step factor.
Report verify_bg_recurrence(int N_max, bool negative_control = false);

/// The N second-order factors of the normalized operator (polynomial
/// coefficients), ordered as l = 1..N.
std::vector<FormOperator> bg_factors(int N, const ParamScalar& beta);

/// Factors of the unnormalized product form, k = 1..N; their product times
/// beta/2 equals the operator (checked by the factorization suite).
std::vector<FormOperator> bg_unnormalized_factors(int N, const ParamScalar& beta);

/// Thm-level factorization checks: ordered product equals the normalized
/// operator, the factors pairwise commute, and the unnormalized product form
/// holds away from the even-dimensional exceptional betas. Negative control:
/// one factor's curvature coefficient mutated.
Report verify_bg_factorization(int N_max, bool negative_control = false);

/// Exceptional factorization at beta = 2l, 0 <= l <= N-1 (n even, p <= n/2).
/// For l >= 1 the product is -(2l/(2l-1)) * P~ * (tail factors); for l = 0 it
/// is N(x - z) * prod_{k=2..N}[x + z - k(k-1)u].
struct ExceptionalFactorization {
    FormOperator fourth_order;        // P~ for l >= 1; N(x-z) block for l = 0
    std::vector<FormOperator> tail;   // remaining second-order factors
    FormOperator product;             // assembled product, equals bg_operator
};
ExceptionalFactorization bg_exceptional(int l, int N);

Report verify_bg_exceptional(int N_max, bool negative_control = false);

/// Critical case 2N = beta on even-dimensional p-forms: the critical operator,
/// the Q-curvature operator on the (p+1)-side (d-delta realization) and the
/// gauge companion. Requires beta = n - 2p > 0 and n even.
struct CriticalOperators {
    FormOperator L;
    FormOperator Q;
    FormOperator G;
};
CriticalOperators critical_operators(int n, int p);

/// Product formula, double factorization L = G∘d = delta∘Q∘d and flat (u = 0)
/// specializations for the given list of betas. Negative control: Q built on
/// the wrong side (x instead of z), which breaks the double factorization.
Report verify_critical(const std::vector<int>& betas, bool negative_control = false);

/// Residue of the order-2N solution operator at the resonance lambda = beta/2 - N:
/// the pole is simple and the residue is a nonzero scalar multiple of the
/// order-2N operator; the multiple is computed, never assumed.
struct ResidueLink {
    ParamScalar scalar;       // residue / bg_operator
    FormOperator residue_op;
    FormOperator bg_op;
    bool simple_pole = false;
};
ResidueLink residue_link(int N);

/// Residue of a single coefficient at lambda = pole_location(beta); zero when
/// there is no pole, error "unexpected pole structure" when the pole order
/// exceeds one.
ParamScalar coefficient_residue(const ParamScalar& f, const ParamScalar& pole_location);

/// Componentwise operator residue at lambda = pole_location.
FormOperator operator_residue(const FormOperator& op, const ParamScalar& pole_location,
                              bool& saw_pole);

Report verify_residue_link(int N_max, bool negative_control = false);

}  // namespace bgforms
