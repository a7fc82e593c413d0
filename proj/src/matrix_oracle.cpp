#include "bgforms/matrix_oracle.hpp"

#include <sstream>

#include "bgforms/error.hpp"

namespace bgforms {

RatMatrix RatMatrix::identity(std::size_t n) {
    RatMatrix m(n, n);
    for (std::size_t i = 0; i < n; ++i) m.at(i, i) = Rational(1);
    return m;
}

bool RatMatrix::is_zero() const {
    for (const auto& v : a_)
        if (!v.is_zero()) return false;
    return true;
}

RatMatrix operator+(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = a.a_[i] + b.a_[i];
    return r;
}

RatMatrix operator*(const RatMatrix& a, const RatMatrix& b) {
    RatMatrix r(a.rows_, b.cols_);
    for (std::size_t i = 0; i < a.rows_; ++i) {
        for (std::size_t k = 0; k < a.cols_; ++k) {
            const Rational& aik = a.at(i, k);
            if (aik.is_zero()) continue;
            for (std::size_t j = 0; j < b.cols_; ++j) {
                if (b.at(k, j).is_zero()) continue;
                r.at(i, j) += aik * b.at(k, j);
            }
        }
    }
    return r;
}

RatMatrix operator*(const Rational& s, const RatMatrix& a) {
    RatMatrix r(a.rows_, a.cols_);
    for (std::size_t i = 0; i < a.a_.size(); ++i) r.a_[i] = s * a.a_[i];
    return r;
}

std::vector<std::vector<Rational>> RatMatrix::left_nullspace() const {
    // Row-reduce the transpose (cols_ x rows_); free columns give the basis.
    const std::size_t R = cols_, C = rows_;
    std::vector<std::vector<Rational>> t(R, std::vector<Rational>(C, Rational(0)));
    for (std::size_t i = 0; i < rows_; ++i)
        for (std::size_t j = 0; j < cols_; ++j) t[j][i] = at(i, j);

    std::vector<long> pivot_of_col(C, -1);
    std::size_t rank = 0;
    for (std::size_t col = 0; col < C && rank < R; ++col) {
        std::size_t sel = rank;
        while (sel < R && t[sel][col].is_zero()) ++sel;
        if (sel == R) continue;
        std::swap(t[sel], t[rank]);
        const Rational inv = t[rank][col].inverse();
        for (auto& v : t[rank]) v *= inv;
        for (std::size_t r = 0; r < R; ++r) {
            if (r == rank || t[r][col].is_zero()) continue;
            const Rational f = t[r][col];
            for (std::size_t cc = 0; cc < C; ++cc) t[r][cc] -= f * t[rank][cc];
        }
        pivot_of_col[col] = static_cast<long>(rank);
        ++rank;
    }

    std::vector<std::vector<Rational>> basis;
    for (std::size_t col = 0; col < C; ++col) {
        if (pivot_of_col[col] >= 0) continue;
        std::vector<Rational> v(C, Rational(0));
        v[col] = Rational(1);
        for (std::size_t c2 = 0; c2 < C; ++c2) {
            if (pivot_of_col[c2] >= 0)
                v[c2] = -t[static_cast<std::size_t>(pivot_of_col[c2])][col];
        }
        basis.push_back(std::move(v));
    }
    return basis;
}

RatMatrix random_square_zero(std::size_t dim, std::mt19937_64& rng) {
    std::uniform_int_distribution<int> small(-3, 3);
    const std::size_t r = dim / 2;
    for (int attempt = 0; attempt < 64; ++attempt) {
        RatMatrix u(dim, r);
        for (std::size_t i = 0; i < dim; ++i)
            for (std::size_t j = 0; j < r; ++j) u.at(i, j) = Rational(small(rng));
        const auto kernel = u.left_nullspace();
        if (kernel.empty()) continue;
        RatMatrix v(r, dim);
        for (std::size_t i = 0; i < r; ++i)
            for (const auto& basis_vec : kernel) {
                const int mix = small(rng);
                if (mix == 0) continue;
                for (std::size_t j = 0; j < dim; ++j)
                    v.at(i, j) += Rational(mix) * basis_vec[j];
            }
        RatMatrix m = u * v;
        if (m.is_zero()) continue;
        return m;
    }
    throw AlgebraError(AlgebraError::Kind::internal, "failed to sample a square-zero matrix");
}

bool parameter_point_singular(const FormOperator& op, const std::array<Rational, 3>& point) {
    const auto bad = [&point](const ParamScalar& s) {
        return s.den().eval(point).is_zero();
    };
    if (bad(op.scalar())) return true;
    for (const auto* part : {&op.x_part(), &op.z_part(), &op.delta_part(), &op.d_part()})
        for (const auto& c : part->coefficients())
            if (bad(c)) return true;
    return false;
}

namespace {

RatMatrix poly_of_matrix(const UniPoly& p, const RatMatrix& m,
                         const std::array<Rational, 3>& point) {
    const std::size_t n = m.rows();
    RatMatrix acc(n, n);
    for (int k = p.degree(); k >= 0; --k) {
        acc = acc * m;
        const auto c = p.coefficient(static_cast<std::size_t>(k)).eval(point);
        if (!c)
            throw AlgebraError(AlgebraError::Kind::invalid_argument,
                               "singular parameter point for representation");
        if (!c->is_zero()) acc = acc + *c * RatMatrix::identity(n);
    }
    return acc;
}

}  // namespace

RatMatrix representation(const FormOperator& op, const MatrixRep& rep) {
    const std::size_t n = rep.d_mat.rows();
    const RatMatrix xm = rep.delta_mat * rep.d_mat;
    const RatMatrix zm = rep.d_mat * rep.delta_mat;
    RatMatrix out = poly_of_matrix(op.x_full(), xm, rep.param_point);  // scalar + P(x)
    out = out + poly_of_matrix(op.z_part(), zm, rep.param_point);
    out = out + poly_of_matrix(op.delta_part(), xm, rep.param_point) * rep.delta_mat;
    out = out + poly_of_matrix(op.d_part(), zm, rep.param_point) * rep.d_mat;
    (void)n;
    return out;
}

std::array<Rational, 3> sample_parameter_point(const std::vector<FormOperator>& ops,
                                               std::mt19937_64& rng) {
    std::uniform_int_distribution<int> num(-40, 40);
    std::uniform_int_distribution<int> den(1, 8);
    for (int attempt = 0; attempt < 256; ++attempt) {
        std::array<Rational, 3> point{Rational(num(rng), den(rng)), Rational(num(rng), den(rng)),
                                      Rational(num(rng), den(rng))};
        if (point[2].is_zero()) continue;  // keep 1/u-bearing intermediates usable
        bool ok = true;
        for (const auto& op : ops)
            if (parameter_point_singular(op, point)) {
                ok = false;
                break;
            }
        if (ok) return point;
    }
    throw AlgebraError(AlgebraError::Kind::degenerate_sampling,
                       "degenerate sampling: no nonsingular parameter point found");
}

FormOperator random_form_operator(std::mt19937_64& rng, int max_degree) {
    std::uniform_int_distribution<int> small(-5, 5);
    std::uniform_int_distribution<int> pick(0, 9);
    const auto coeff = [&]() {
        ParamScalar c(small(rng));
        // occasionally bring a parameter in so coefficient arithmetic is stressed too
        const int kind = pick(rng);
        if (kind == 0) c *= ParamScalar::beta();
        if (kind == 1) c *= ParamScalar::lambda();
        if (kind == 2) c += ParamScalar::u();
        return c;
    };
    const auto poly = [&](bool allow_const) {
        UniPoly p;
        std::uniform_int_distribution<int> deg(0, max_degree);
        const int top = deg(rng);
        for (int k = allow_const ? 0 : 1; k <= top; ++k)
            p += UniPoly::monomial(static_cast<std::size_t>(k), coeff());
        return p;
    };
    return FormOperator::from_parts(coeff(), poly(false), poly(false), poly(true), poly(true));
}

OracleOutcome matrix_oracle_check(const FormOperator& a, const FormOperator& b, int trials,
                                  std::size_t dimension, std::uint64_t seed) {
    OracleOutcome out;
    out.normal_forms_equal = (a == b);
    out.trials = trials;

    std::vector<NamedCheck> checks;
    for (int t = 0; t < trials; ++t) {
        checks.push_back(
            {"oracle-trial-" + std::to_string(t),
             "matrix image of a and b under a random square-zero representation",
             [&a, &b, t, dimension, seed, &out](std::string& detail) {
                 std::mt19937_64 rng(seed + static_cast<std::uint64_t>(t) * 0x9e3779b97f4a7c15ULL);
                 MatrixRep rep;
                 rep.d_mat = random_square_zero(dimension, rng);
                 rep.delta_mat = random_square_zero(dimension, rng);
                 rep.param_point = sample_parameter_point({a, b, a * b}, rng);
                 const RatMatrix ma = representation(a, rep);
                 const RatMatrix mb = representation(b, rep);
                 const bool equal = (ma == mb);
                 if (equal) out.equal_trials++;
                 // homomorphism property holds unconditionally
                 if (representation(a * b, rep) != ma * mb) {
                     detail = "representation is not multiplicative";
                     return false;
                 }
                 if (out.normal_forms_equal && !equal) {
                     detail = "normal forms equal but matrices differ (algebra bug)";
                     return false;
                 }
                 return true;
             }});
    }
    // Trials mutate shared counters; run them sequentially.
    out.report = run_suite("matrix-oracle", std::move(checks), /*parallel=*/false);
    return out;
}

}  // namespace bgforms
