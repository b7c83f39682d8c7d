#pragma once

// Frame-based form calculus over a closed global coframe θ^1..θ^n
// (dθ^a = 0): connection 1-form matrices, wedge products, exterior
// derivatives, curvature and torsion 2-forms, skewness defects, Pfaffians
// and constant frame changes.
//
// 2-form coefficients are stored on ordered index pairs a < b only; every
// wedge result is normalized on construction, so equality tests never chase
// signs.

#include <cstddef>
#include <span>
#include <utility>
#include <vector>

#include "affineorth/fields.hpp"
#include "affineorth/linalg.hpp"
#include "affineorth/metrics.hpp"

namespace affineorth {

// Ordered-pair indexing for 2-form coefficients, lexicographic over a < b.
std::size_t pair_count(std::size_t n);
std::size_t pair_index(std::size_t a, std::size_t b, std::size_t n);
std::pair<std::size_t, std::size_t> pair_from_index(std::size_t idx, std::size_t n);

// ω^i_j = Σ_a c^i_{j,a} θ^a on an r-dim bundle over an n-dim base.
class OneFormMatrix {
public:
    OneFormMatrix(std::size_t bundle_dim, std::size_t base_dim);

    std::size_t bundle_dim() const { return r_; }
    std::size_t base_dim() const { return n_; }

    const ScalarField& coeff(std::size_t i, std::size_t j, std::size_t a) const;
    void set_coeff(std::size_t i, std::size_t j, std::size_t a, ScalarField c);

    // The r×r matrix of θ^a-coefficients evaluated at p.
    Matrix coefficient_matrix(std::size_t a, const Point& p) const;

private:
    std::size_t r_, n_;
    std::vector<ScalarField> c_;
};

// Single 2-form Σ_{a<b} c_{ab} θ^a∧θ^b.
class TwoForm {
public:
    explicit TwoForm(std::size_t base_dim);

    std::size_t base_dim() const { return n_; }
    const ScalarField& coeff(std::size_t pair_idx) const;
    void set_coeff(std::size_t pair_idx, ScalarField c);

private:
    std::size_t n_;
    std::vector<ScalarField> c_;
};

// r×r matrix of 2-forms.
class TwoFormMatrix {
public:
    TwoFormMatrix(std::size_t bundle_dim, std::size_t base_dim);

    std::size_t bundle_dim() const { return r_; }
    std::size_t base_dim() const { return n_; }

    const ScalarField& coeff(std::size_t i, std::size_t j, std::size_t pair_idx) const;
    void set_coeff(std::size_t i, std::size_t j, std::size_t pair_idx, ScalarField c);

    // The r×r matrix of θ^a∧θ^b coefficients for one pair, evaluated at p.
    Matrix coefficient_matrix(std::size_t pair_idx, const Point& p) const;

private:
    std::size_t r_, n_;
    std::vector<ScalarField> c_;
};

// Top-degree form c·θ^1∧θ^2 on a 2-dim base.
struct TopForm2D {
    ScalarField coeff;
};

// The 2×2 connection 1-form matrix ((kθ², kθ¹), (kθ¹, 0)) on the torus.
OneFormMatrix torus_connection_form(double k);

// (ω∧η)^i_j = Σ_m ω^i_m ∧ η^m_j, normalized to ordered pairs.
TwoFormMatrix wedge_matrix(const OneFormMatrix& omega, const OneFormMatrix& eta);

// Entrywise exterior derivative; the coframe is closed by construction, so
// d(c θ^a) = Σ_b ∂_b c · θ^b∧θ^a.
TwoFormMatrix exterior_derivative(const OneFormMatrix& omega);

// Ω = dω + ω∧ω.
TwoFormMatrix curvature_form(const OneFormMatrix& omega);

// T^i = dθ^i + ω^i_j ∧ θ^j; requires the bundle frame to match the coframe
// (r = n).
std::vector<TwoForm> torsion_forms(const OneFormMatrix& omega);

// Max over probes, entries and basis indices of |(M + Mᵀ) coefficients|.
ResidualResult skewness_defect(const OneFormMatrix& m, std::span<const Point> probes);
ResidualResult skewness_defect(const TwoFormMatrix& m, std::span<const Point> probes);

// Max over probes and pairs of the largest |coefficient| of a 2-form.
ResidualResult max_abs_coeff(const TwoForm& f, std::span<const Point> probes);

inline constexpr double kPfaffianSkewTolerance = 1e-9;

// Pfaffian of an even skew matrix by recursive expansion along the first
// row, with the sign convention Pf((0, a), (−a, 0)) = a.
double pfaffian(const Matrix& skew, double skew_tol = kPfaffianSkewTolerance);

// For r = 2, n = 2 the Pfaffian of a skew 2-form matrix is its (1,2) entry.
// Skewness is checked on the probe set.
TopForm2D pfaffian_form(const TwoFormMatrix& omega, std::span<const Point> skew_probes,
                        double skew_tol = kPfaffianSkewTolerance);

// Constant frame change Ω̃ = A⁻¹ Ω A, entrywise on coefficients.
TwoFormMatrix conjugate(const TwoFormMatrix& omega, const Matrix& a);

} // namespace affineorth
