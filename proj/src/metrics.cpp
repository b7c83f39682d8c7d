#include "affineorth/metrics.hpp"

#include <algorithm>
#include <cmath>

namespace affineorth {

MetricMatrix DiagonalMetric::eval(const Point& p) const {
    if (p.dim() != dim())
        throw ShapeError("DiagonalMetric::eval: point dimension mismatch");
    std::vector<double> diag(dim());
    for (std::size_t i = 0; i < dim(); ++i) {
        diag[i] = entries_[i](p);
        if (!(diag[i] > 0.0))
            throw DegeneracyError("metric entry " + std::to_string(i) +
                                  " is not positive at " + p.to_string());
    }
    return MetricMatrix{p, std::move(diag)};
}

Matrix DiagonalMetric::matrix(const Point& p) const {
    const MetricMatrix m = eval(p);
    Matrix out = Matrix::Zero(static_cast<Eigen::Index>(dim()), static_cast<Eigen::Index>(dim()));
    for (std::size_t i = 0; i < dim(); ++i)
        out(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) = m.diagonal[i];
    return out;
}

DiagonalMetric DiagonalMetric::power(double t) const {
    std::vector<ScalarField> powered;
    powered.reserve(dim());
    for (const ScalarField& g : entries_)
        powered.push_back(affineorth::power(g, t));
    return DiagonalMetric(std::move(powered));
}

DiagonalMetric euclidean_metric(std::size_t n) {
    return DiagonalMetric(std::vector<ScalarField>(n, ScalarField::constant(1.0)));
}

DiagonalMetric hopf_metric(std::size_t n) {
    auto f = [n](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < n; ++i)
            s += p[i] * p[i];
        return s;
    };
    ScalarField entry =
        ScalarField::with_exact_partials(
            [f](const Point& p) { return 1.0 / f(p); },
            [f](std::size_t j, const Point& p) {
                const double fp = f(p);
                return -2.0 * p[j] / (fp * fp);
            })
            .restricted(
                [f](const Point& p) { return f(p) > 0.0; }, "Hopf metric, x != 0");
    return DiagonalMetric(std::vector<ScalarField>(n, entry));
}

MatrixMetricField as_matrix_field(const DiagonalMetric& g) {
    return MatrixMetricField{g.dim(), [g](const Point& p) { return g.matrix(p); }};
}

PullbackMetricField::PullbackMetricField(DiagonalMetric g, Matrix a)
    : g_(std::move(g)), a_(std::move(a)) {
    if (a_.rows() != a_.cols() || static_cast<std::size_t>(a_.rows()) != g_.dim())
        throw ShapeError("pullback: matrix dimension does not match the metric");
    inverse_checked(a_); // invertibility is part of the contract
}

Matrix PullbackMetricField::operator()(const Point& p) const {
    if (p.dim() != g_.dim())
        throw ShapeError("pullback: point dimension mismatch");
    Vector x(static_cast<Eigen::Index>(p.dim()));
    for (std::size_t i = 0; i < p.dim(); ++i)
        x(static_cast<Eigen::Index>(i)) = p[i];
    const Vector image = a_ * x;
    const Point q(std::vector<double>(image.data(), image.data() + image.size()));
    return a_.transpose() * g_.matrix(q) * a_;
}

ResidualResult pullback_residual(const DiagonalMetric& g, const Matrix& a,
                                 std::span<const Point> probes) {
    if (probes.empty())
        throw PreconditionError("pullback_residual: need at least one probe");
    const PullbackMetricField pulled(g, a);
    ResidualResult worst{-1.0, probes[0]};
    for (const Point& p : probes) {
        const double r = max_abs(pulled(p) - g.matrix(p));
        if (r > worst.value)
            worst = ResidualResult{r, p};
    }
    return worst;
}

} // namespace affineorth
