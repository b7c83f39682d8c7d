#pragma once

// Integration of top-degree forms over the flat 2-torus by the periodic
// trapezoid rule (uniform nodes, no endpoint duplication), and the Euler
// integrals built on it.

#include <cstddef>
#include <numbers>

#include "affineorth/frames.hpp"
#include "affineorth/metrics.hpp"

namespace affineorth {

struct PeriodicGrid {
    std::size_t dim = 2;
    std::size_t points_per_axis = 64;
    double period = 2.0 * std::numbers::pi;

    void validate() const {
        if (dim < 1)
            throw ShapeError("PeriodicGrid: dimension must be at least 1");
        if (points_per_axis < 4)
            throw PreconditionError("PeriodicGrid: need at least 4 points per axis");
        if (!(period > 0.0))
            throw PreconditionError("PeriodicGrid: period must be positive");
    }

    double node(std::size_t j) const {
        return period * static_cast<double>(j) / static_cast<double>(points_per_axis);
    }
};

struct IntegralResult {
    double value;
    PeriodicGrid grid;
    // |value − value at doubled resolution|; spectrally small for smooth
    // periodic integrands.
    double estimated_error;
};

// (period/N)² Σ_{j,l} coeff(θ_j, θ_l); exact for trigonometric polynomials
// below the grid's Nyquist degree.
IntegralResult integrate_top_form(const TopForm2D& f, const PeriodicGrid& grid);

// ∫ Pf(Ω) for Ω = dω + ω∧ω; the curvature matrix must be skew.
IntegralResult euler_integral(const OneFormMatrix& omega, const PeriodicGrid& grid);

// Integral of the Gaussian curvature times the area form of a diagonal
// metric on T²: for g = diag(E, G),
//   K·√(EG) = −[∂₁(∂₁√G/√E) + ∂₂(∂₂√E/√G)],
// the curvature 2-form of the Levi-Civita connection in the orthonormal
// frame of g. Vanishes for every metric on the torus.
IntegralResult gauss_bonnet_torus(const DiagonalMetric& g, const PeriodicGrid& grid);

} // namespace affineorth
