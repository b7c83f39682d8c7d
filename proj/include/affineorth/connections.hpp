#pragma once

// Coordinate-expressed connections: Christoffel fields, Levi-Civita symbols
// of diagonal metrics, the deformation family t·D, metric-compatibility
// residuals, coordinate curvature, parallel transport and holonomy.

#include <cstddef>
#include <functional>
#include <span>
#include <vector>

#include "affineorth/fields.hpp"
#include "affineorth/metrics.hpp"
#include "affineorth/point.hpp"

namespace affineorth {

// Γ^k_{ij} at one point; k upper, (i, j) lower.
class ChristoffelValue {
public:
    explicit ChristoffelValue(std::size_t n) : n_(n), v_(n * n * n, 0.0) {}

    std::size_t dim() const { return n_; }
    double operator()(std::size_t k, std::size_t i, std::size_t j) const {
        return v_[(k * n_ + i) * n_ + j];
    }
    double& at(std::size_t k, std::size_t i, std::size_t j) {
        return v_[(k * n_ + i) * n_ + j];
    }

    double max_abs() const;
    // max |Γ^k_{ij} − Γ^k_{ji}|; zero for torsion-free coordinate connections.
    double symmetry_defect() const;

private:
    std::size_t n_;
    std::vector<double> v_;
};

class ChristoffelField {
public:
    ChristoffelField(std::size_t dim, std::function<ChristoffelValue(const Point&)> eval)
        : dim_(dim), eval_(std::move(eval)) {}

    std::size_t dim() const { return dim_; }
    ChristoffelValue operator()(const Point& p) const;

private:
    std::size_t dim_;
    std::function<ChristoffelValue(const Point&)> eval_;
};

// Closed-form symbols of the diagonal power family g^t:
//   Γ^i_{ij} = Γ^i_{ji} = (t/2) ∂_j g_i / g_i  (every j, including j = i)
//   Γ^k_{ii} = −(t/2) ∂_k g_i / g_i            (k ≠ i)
// and every other symbol zero. For metrics whose diagonal entries all
// coincide these are exactly the Levi-Civita symbols of g^t.
ChristoffelField levi_civita_diagonal(const DiagonalMetric& g, double t);

// Unspecialized formula Γ^k_{ij} = ½ g^{kl}(∂_i g_{jl} + ∂_j g_{il} − ∂_l g_{ij})
// on a symmetric positive-definite matrix field, with finite-difference
// partials of the entries.
ChristoffelField levi_civita_general(const MatrixMetricField& g,
                                     const DifferentiationConfig& cfg = {});

// Γ(∇^t) = t·Γ(D) in an affine chart where the flat connection has zero
// symbols. t must lie in [0, 1].
ChristoffelField deform(double t, const ChristoffelField& levi_civita);

// Constant connection on the n-torus chart: Γ^i_{ii} = k, all else zero.
ChristoffelField torus_affine(double k, std::size_t n);

// max over probes and indices of |∂_k g_{ij} − Γ^l_{ki} g_{lj} − Γ^l_{kj} g_{il}|.
ResidualResult metric_compatibility_residual(const ChristoffelField& gamma,
                                             const DiagonalMetric& g,
                                             std::span<const Point> probes);
ResidualResult metric_compatibility_residual(const ChristoffelField& gamma,
                                             const MatrixMetricField& g,
                                             std::span<const Point> probes,
                                             const DifferentiationConfig& cfg = {});

// R(E_i,E_j)E_k = R^l_{ijk} E_l, stored antisymmetrically in (i, j) by
// construction.
class CurvatureTensorValue {
public:
    CurvatureTensorValue(Point p, std::size_t n)
        : point_(std::move(p)), n_(n), v_(n * n * n * n, 0.0) {}

    const Point& point() const { return point_; }
    std::size_t dim() const { return n_; }
    double operator()(std::size_t l, std::size_t i, std::size_t j, std::size_t k) const {
        return v_[((l * n_ + i) * n_ + j) * n_ + k];
    }
    double& at(std::size_t l, std::size_t i, std::size_t j, std::size_t k) {
        return v_[((l * n_ + i) * n_ + j) * n_ + k];
    }

    double max_abs() const;
    // max |R^l_{ijk} + R^l_{jki} + R^l_{kij}| (first Bianchi identity).
    double bianchi_defect() const;

private:
    Point point_;
    std::size_t n_;
    std::vector<double> v_;
};

// R^l_{ijk} = ∂_i Γ^l_{jk} − ∂_j Γ^l_{ik} + Γ^l_{im} Γ^m_{jk} − Γ^l_{jm} Γ^m_{ik},
// with finite-difference partials of the symbols.
CurvatureTensorValue curvature_tensor(const ChristoffelField& gamma, const Point& p,
                                      const DifferentiationConfig& cfg = {});

// Parameterized curve with exact velocity. When period is non-empty, loop
// closure is understood per axis modulo that period (torus charts).
struct Curve {
    std::function<Point(double)> position;
    std::function<std::vector<double>(double)> velocity;
    std::vector<double> period;
};

// c(s) = base + 2πs·e_axis with velocity 2π·e_axis and per-axis period 2π.
Curve torus_axis_loop(std::size_t axis, std::size_t n);

// Solves v' = −Γ(c(s))(c'(s), v) by classical 4th-order one-step integration
// with uniform step 1/steps; returns v(1).
std::vector<double> parallel_transport(const ChristoffelField& gamma, const Curve& c,
                                       std::vector<double> v0, int steps);

// Transports the standard basis around the loop, assembles the holonomy
// matrix, and returns its eigenvalue moduli sorted ascending.
std::vector<double> holonomy_eigenvalues(const ChristoffelField& gamma, const Curve& loop,
                                         int steps);

} // namespace affineorth
