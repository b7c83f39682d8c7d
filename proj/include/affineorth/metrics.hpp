#pragma once

// Diagonal Riemannian metrics in affine coordinates: evaluation, the power
// family g^t, and pullback under linear chart maps.

#include <functional>
#include <span>
#include <vector>

#include "affineorth/fields.hpp"
#include "affineorth/linalg.hpp"
#include "affineorth/point.hpp"

namespace affineorth {

// Max residual over a probe set together with the probe that attains it.
struct ResidualResult {
    double value;
    Point at;
};

// Diagonal values of a metric at one point.
struct MetricMatrix {
    Point point;
    std::vector<double> diagonal;
};

class DiagonalMetric {
public:
    explicit DiagonalMetric(std::vector<ScalarField> entries) : entries_(std::move(entries)) {
        if (entries_.empty())
            throw ShapeError("DiagonalMetric: dimension must be at least 1");
    }

    std::size_t dim() const { return entries_.size(); }
    const ScalarField& entry(std::size_t i) const { return entries_.at(i); }
    const std::vector<ScalarField>& entries() const { return entries_; }

    // Diagonal at p; every entry must be strictly positive.
    MetricMatrix eval(const Point& p) const;

    // Dense matrix at p, for callers that want the bilinear form.
    Matrix matrix(const Point& p) const;

    // The family g^t: entrywise power. t = 0 is Euclidean, t = 1 is g.
    DiagonalMetric power(double t) const;

private:
    std::vector<ScalarField> entries_;
};

DiagonalMetric euclidean_metric(std::size_t n);

// Scale-invariant metric (1/Σx_i²)·Σdx_i² on ℝⁿ minus the origin.
DiagonalMetric hopf_metric(std::size_t n);

// A symmetric matrix-valued metric field; the shape general operations
// (pullbacks, the unspecialized Christoffel formula) consume.
struct MatrixMetricField {
    std::size_t dim;
    std::function<Matrix(const Point&)> eval;
};

MatrixMetricField as_matrix_field(const DiagonalMetric& g);

// p ↦ Aᵀ · Matrix(g)(A·p) · A, evaluable wherever A·p lies in g's domain.
class PullbackMetricField {
public:
    PullbackMetricField(DiagonalMetric g, Matrix a);
    std::size_t dim() const { return g_.dim(); }
    Matrix operator()(const Point& p) const;

private:
    DiagonalMetric g_;
    Matrix a_;
};

// Max over probes of the entrywise max-norm difference between the pullback
// under a and the metric itself. Zero iff the linear map preserves g on the
// probe set.
ResidualResult pullback_residual(const DiagonalMetric& g, const Matrix& a,
                                 std::span<const Point> probes);

} // namespace affineorth
