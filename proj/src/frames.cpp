#include "affineorth/frames.hpp"

#include <algorithm>
#include <cmath>

namespace affineorth {

std::size_t pair_count(std::size_t n) { return n * (n - 1) / 2; }

std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n) {
    if (!(a < b && b < n))
        throw ShapeError("pair_index: need a < b < n");
    // Lexicographic position of (a, b) among ordered pairs.
    return a * n - a * (a + 1) / 2 + (b - a - 1);
}

std::pair<std::size_t, std::size_t> pair_from_index(std::size_t idx, std::size_t n) {
    for (std::size_t a = 0; a + 1 < n; ++a) {
        const std::size_t row = n - a - 1;
        if (idx < row)
            return {a, a + 1 + idx};
        idx -= row;
    }
    throw ShapeError("pair_from_index: index out of range");
}

OneFormMatrix::OneFormMatrix(std::size_t bundle_dim, std::size_t base_dim)
    : r_(bundle_dim), n_(base_dim),
      c_(bundle_dim * bundle_dim * base_dim, ScalarField::constant(0.0)) {
    if (r_ < 1 || n_ < 1)
        throw ShapeError("OneFormMatrix: dimensions must be at least 1");
}

const ScalarField& OneFormMatrix::coeff(std::size_t i, std::size_t j, std::size_t a) const {
    if (i >= r_ || j >= r_ || a >= n_)
        throw ShapeError("OneFormMatrix::coeff: index out of range");
    return c_[(i * r_ + j) * n_ + a];
}

void OneFormMatrix::set_coeff(std::size_t i, std::size_t j, std::size_t a, ScalarField c) {
    if (i >= r_ || j >= r_ || a >= n_)
        throw ShapeError("OneFormMatrix::set_coeff: index out of range");
    c_[(i * r_ + j) * n_ + a] = std::move(c);
}

Matrix OneFormMatrix::coefficient_matrix(std::size_t a, const Point& p) const {
    Matrix m(static_cast<Eigen::Index>(r_), static_cast<Eigen::Index>(r_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = coeff(i, j, a)(p);
    return m;
}

TwoForm::TwoForm(std::size_t base_dim)
    : n_(base_dim), c_(pair_count(base_dim), ScalarField::constant(0.0)) {
    if (n_ < 2)
        throw ShapeError("TwoForm: base dimension must be at least 2");
}

const ScalarField& TwoForm::coeff(std::size_t pair_idx) const {
    if (pair_idx >= c_.size())
        throw ShapeError("TwoForm::coeff: pair index out of range");
    return c_[pair_idx];
}

void TwoForm::set_coeff(std::size_t pair_idx, ScalarField c) {
    if (pair_idx >= c_.size())
        throw ShapeError("TwoForm::set_coeff: pair index out of range");
    c_[pair_idx] = std::move(c);
}

TwoFormMatrix::TwoFormMatrix(std::size_t bundle_dim, std::size_t base_dim)
    : r_(bundle_dim), n_(base_dim),
      c_(bundle_dim * bundle_dim * pair_count(base_dim), ScalarField::constant(0.0)) {
    if (r_ < 1 || n_ < 2)
        throw ShapeError("TwoFormMatrix: need bundle dim >= 1 and base dim >= 2");
}

const ScalarField& TwoFormMatrix::coeff(std::size_t i, std::size_t j,
                                        std::size_t pair_idx) const {
    if (i >= r_ || j >= r_ || pair_idx >= pair_count(n_))
        throw ShapeError("TwoFormMatrix::coeff: index out of range");
    return c_[(i * r_ + j) * pair_count(n_) + pair_idx];
}

void TwoFormMatrix::set_coeff(std::size_t i, std::size_t j, std::size_t pair_idx,
                              ScalarField c) {
    if (i >= r_ || j >= r_ || pair_idx >= pair_count(n_))
        throw ShapeError("TwoFormMatrix::set_coeff: index out of range");
    c_[(i * r_ + j) * pair_count(n_) + pair_idx] = std::move(c);
}

Matrix TwoFormMatrix::coefficient_matrix(std::size_t pair_idx, const Point& p) const {
    Matrix m(static_cast<Eigen::Index>(r_), static_cast<Eigen::Index>(r_));
    for (std::size_t i = 0; i < r_; ++i)
        for (std::size_t j = 0; j < r_; ++j)
            m(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) =
                coeff(i, j, pair_idx)(p);
    return m;
}

OneFormMatrix torus_connection_form(double k) {
    OneFormMatrix omega(2, 2);
    omega.set_coeff(0, 0, 1, ScalarField::constant(k)); // ω^1_1 = k θ²
    omega.set_coeff(0, 1, 0, ScalarField::constant(k)); // ω^1_2 = k θ¹
    omega.set_coeff(1, 0, 0, ScalarField::constant(k)); // ω^2_1 = k θ¹
    return omega;
}

namespace {

// Coefficient of θ^a∧θ^b (a < b) in (Σ_c f_c θ^c) ∧ (Σ_d g_d θ^d).
ScalarField wedge_pair_coeff(const OneFormMatrix& f, std::size_t fi, std::size_t fj,
                             const OneFormMatrix& g, std::size_t gi, std::size_t gj,
                             std::size_t a, std::size_t b) {
    return add(multiply(f.coeff(fi, fj, a), g.coeff(gi, gj, b)),
               scale(multiply(f.coeff(fi, fj, b), g.coeff(gi, gj, a)), -1.0));
}

} // namespace

TwoFormMatrix wedge_matrix(const OneFormMatrix& omega, const OneFormMatrix& eta) {
    if (omega.bundle_dim() != eta.bundle_dim() || omega.base_dim() != eta.base_dim())
        throw ShapeError("wedge_matrix: dimension mismatch");
    const std::size_t r = omega.bundle_dim();
    const std::size_t n = omega.base_dim();
    TwoFormMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
                const auto [a, b] = pair_from_index(idx, n);
                ScalarField acc = ScalarField::constant(0.0);
                for (std::size_t m = 0; m < r; ++m)
                    acc = add(acc, wedge_pair_coeff(omega, i, m, eta, m, j, a, b));
                out.set_coeff(i, j, idx, acc);
            }
    return out;
}

TwoFormMatrix exterior_derivative(const OneFormMatrix& omega) {
    const std::size_t r = omega.bundle_dim();
    const std::size_t n = omega.base_dim();
    TwoFormMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
                const auto [a, b] = pair_from_index(idx, n);
                // d(c θ^a) terms: ∂_a c_b − ∂_b c_a on θ^a∧θ^b.
                out.set_coeff(i, j, idx,
                              add(derivative(omega.coeff(i, j, b), a),
                                  scale(derivative(omega.coeff(i, j, a), b), -1.0)));
            }
    return out;
}

TwoFormMatrix curvature_form(const OneFormMatrix& omega) {
    const TwoFormMatrix d = exterior_derivative(omega);
    const TwoFormMatrix ww = wedge_matrix(omega, omega);
    const std::size_t r = omega.bundle_dim();
    const std::size_t n = omega.base_dim();
    TwoFormMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t idx = 0; idx < pair_count(n); ++idx)
                out.set_coeff(i, j, idx, add(d.coeff(i, j, idx), ww.coeff(i, j, idx)));
    return out;
}

std::vector<TwoForm> torsion_forms(const OneFormMatrix& omega) {
    const std::size_t r = omega.bundle_dim();
    const std::size_t n = omega.base_dim();
    if (r != n)
        throw ShapeError("torsion_forms: bundle frame must match the coframe (r = n)");
    std::vector<TwoForm> torsion;
    torsion.reserve(n);
    for (std::size_t i = 0; i < n; ++i) {
        TwoForm t(n);
        for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
            const auto [a, b] = pair_from_index(idx, n);
            // dθ^i = 0; ω^i_j ∧ θ^j contributes c^i_{b,a} − c^i_{a,b}.
            t.set_coeff(idx, add(omega.coeff(i, b, a), scale(omega.coeff(i, a, b), -1.0)));
        }
        torsion.push_back(std::move(t));
    }
    return torsion;
}

namespace {

template <class FormMatrix>
ResidualResult skewness_defect_impl(const FormMatrix& m, std::span<const Point> probes,
                                    std::size_t coeff_slots) {
    if (probes.empty())
        throw PreconditionError("skewness_defect: need at least one probe");
    const std::size_t r = m.bundle_dim();
    ResidualResult worst{-1.0, probes[0]};
    for (const Point& p : probes) {
        double local = 0.0;
        for (std::size_t slot = 0; slot < coeff_slots; ++slot)
            for (std::size_t i = 0; i < r; ++i)
                for (std::size_t j = i; j < r; ++j)
                    local = std::max(local,
                                     std::abs(m.coeff(i, j, slot)(p) + m.coeff(j, i, slot)(p)));
        if (local > worst.value)
            worst = ResidualResult{local, p};
    }
    return worst;
}

} // namespace

ResidualResult skewness_defect(const OneFormMatrix& m, std::span<const Point> probes) {
    return skewness_defect_impl(m, probes, m.base_dim());
}

ResidualResult skewness_defect(const TwoFormMatrix& m, std::span<const Point> probes) {
    return skewness_defect_impl(m, probes, pair_count(m.base_dim()));
}

ResidualResult max_abs_coeff(const TwoForm& f, std::span<const Point> probes) {
    if (probes.empty())
        throw PreconditionError("max_abs_coeff: need at least one probe");
    ResidualResult worst{-1.0, probes[0]};
    for (const Point& p : probes) {
        double local = 0.0;
        for (std::size_t idx = 0; idx < pair_count(f.base_dim()); ++idx)
            local = std::max(local, std::abs(f.coeff(idx)(p)));
        if (local > worst.value)
            worst = ResidualResult{local, p};
    }
    return worst;
}

namespace {

double pfaffian_expand(const Matrix& m, std::vector<Eigen::Index>& active) {
    const std::size_t sz = active.size();
    if (sz == 0)
        return 1.0;
    if (sz == 2)
        return m(active[0], active[1]);
    const Eigen::Index pivot = active[0];
    double sum = 0.0;
    double sign = 1.0; // position 2 (1-based) carries +
    for (std::size_t q = 1; q < sz; ++q) {
        const Eigen::Index col = active[q];
        std::vector<Eigen::Index> rest;
        rest.reserve(sz - 2);
        for (std::size_t t = 1; t < sz; ++t)
            if (t != q)
                rest.push_back(active[t]);
        sum += sign * m(pivot, col) * pfaffian_expand(m, rest);
        sign = -sign;
    }
    return sum;
}

} // namespace

double pfaffian(const Matrix& skew, double skew_tol) {
    if (skew.rows() != skew.cols())
        throw ShapeError("pfaffian: matrix is not square");
    const Eigen::Index r = skew.rows();
    if (r % 2 != 0)
        throw ShapeError("pfaffian: size must be even");
    if (max_abs(Matrix(skew + skew.transpose())) > skew_tol)
        throw PreconditionError("pfaffian: matrix is not skew-symmetric within tolerance");
    std::vector<Eigen::Index> active(static_cast<std::size_t>(r));
    for (Eigen::Index i = 0; i < r; ++i)
        active[static_cast<std::size_t>(i)] = i;
    return pfaffian_expand(skew, active);
}

TopForm2D pfaffian_form(const TwoFormMatrix& omega, std::span<const Point> skew_probes,
                        double skew_tol) {
    if (omega.bundle_dim() != 2 || omega.base_dim() != 2)
        throw ShapeError("pfaffian_form: implemented for r = 2 over a 2-dim base");
    if (skewness_defect(omega, skew_probes).value > skew_tol)
        throw PreconditionError("pfaffian_form: 2-form matrix is not skew-symmetric");
    return TopForm2D{omega.coeff(0, 1, 0)};
}

TwoFormMatrix conjugate(const TwoFormMatrix& omega, const Matrix& a) {
    const std::size_t r = omega.bundle_dim();
    if (a.rows() != a.cols() || static_cast<std::size_t>(a.rows()) != r)
        throw ShapeError("conjugate: frame-change matrix dimension mismatch");
    Matrix inv;
    try {
        inv = inverse_checked(a);
    } catch (const PreconditionError&) {
        throw PreconditionError("conjugate: frame-change matrix is singular");
    }
    const std::size_t n = omega.base_dim();
    TwoFormMatrix out(r, n);
    for (std::size_t i = 0; i < r; ++i)
        for (std::size_t j = 0; j < r; ++j)
            for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
                ScalarField acc = ScalarField::constant(0.0);
                for (std::size_t m = 0; m < r; ++m)
                    for (std::size_t l = 0; l < r; ++l) {
                        const double w = inv(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(m)) *
                                         a(static_cast<Eigen::Index>(l),
                                           static_cast<Eigen::Index>(j));
                        if (w != 0.0)
                            acc = add(acc, scale(omega.coeff(m, l, idx), w));
                    }
                out.set_coeff(i, j, idx, acc);
            }
    return out;
}

} // namespace affineorth
