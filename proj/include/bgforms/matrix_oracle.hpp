#pragma once

#include <cstdint>
#include <random>
#include <vector>

#include "bgforms/form_operator.hpp"
#include "bgforms/report.hpp"

namespace bgforms {

/// Dense matrix over Rational (row-major), sized rows x cols.
class RatMatrix {
  public:
    RatMatrix() = default;
    RatMatrix(std::size_t rows, std::size_t cols)
        : rows_(rows), cols_(cols), a_(rows * cols, Rational(0)) {}

    static RatMatrix identity(std::size_t n);

    std::size_t rows() const { return rows_; }
    std::size_t cols() const { return cols_; }
    Rational& at(std::size_t i, std::size_t j) { return a_[i * cols_ + j]; }
    const Rational& at(std::size_t i, std::size_t j) const { return a_[i * cols_ + j]; }

    bool is_zero() const;
    friend RatMatrix operator+(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const RatMatrix& a, const RatMatrix& b);
    friend RatMatrix operator*(const Rational& s, const RatMatrix& a);
    friend bool operator==(const RatMatrix& a, const RatMatrix& b) {
        return a.rows_ == b.rows_ && a.cols_ == b.cols_ && a.a_ == b.a_;
    }
    friend bool operator!=(const RatMatrix& a, const RatMatrix& b) { return !(a == b); }

    /// Basis of { w : w^T * this = 0 } via Gauss-Jordan; each vector has rows() entries.
    std::vector<std::vector<Rational>> left_nullspace() const;

  private:
    std::size_t rows_ = 0, cols_ = 0;
    std::vector<Rational> a_;
};

/// A random exact representation of the relations d^2 = 0, delta^2 = 0:
/// two independent square-zero rational matrices plus a rational parameter
/// point for the coefficients.
struct MatrixRep {
    RatMatrix d_mat;
    RatMatrix delta_mat;
    std::array<Rational, 3> param_point;  // (beta, lambda, u)
};

/// Random square-zero matrix built from a rank factorization U*V with V*U = 0
/// (rows of V drawn from the left nullspace of U). Never returns the zero matrix.
RatMatrix random_square_zero(std::size_t dim, std::mt19937_64& rng);

/// Representation map: the matrix of the operator under (d, delta) |-> matrices
/// with coefficients evaluated at the parameter point. Throws an
/// invalid-argument error when a coefficient denominator vanishes at the point.
RatMatrix representation(const FormOperator& op, const MatrixRep& rep);

/// True when some coefficient denominator of op vanishes at the point.
bool parameter_point_singular(const FormOperator& op, const std::array<Rational, 3>& point);

/// Deterministic random parameter point avoiding the denominators of the given
/// operators (resampled up to a retry budget).
std::array<Rational, 3> sample_parameter_point(const std::vector<FormOperator>& ops,
                                               std::mt19937_64& rng);

/// Random operator with all five components filled, component degrees <= max_degree.
FormOperator random_form_operator(std::mt19937_64& rng, int max_degree);

/// Oracle outcome: per-trial exact matrix comparison of a and b versus their
/// normal-form comparison, plus a homomorphism check rep(a*b) = rep(a)*rep(b)
/// per trial. Soundness direction is hard: normal-form equality forces matrix
/// equality in every trial. When the normal forms differ, the suite check
/// additionally requires at least one trial to distinguish them.
struct OracleOutcome {
    bool normal_forms_equal = false;
    int trials = 0;
    int equal_trials = 0;
    Report report;
};
OracleOutcome matrix_oracle_check(const FormOperator& a, const FormOperator& b, int trials,
                                  std::size_t dimension, std::uint64_t seed);

}  // namespace bgforms
