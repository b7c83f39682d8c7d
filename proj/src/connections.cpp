#include "affineorth/connections.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "affineorth/linalg.hpp"

namespace affineorth {

namespace {

// Derivative of a matrix field along one axis by central differences,
// optionally with one Richardson step.
Matrix matrix_partial(const MatrixMetricField& g, std::size_t axis, const Point& p,
                      const DifferentiationConfig& cfg) {
    const double h = cfg.fd_step;
    const Matrix d_h = (g.eval(p.shifted(axis, h)) - g.eval(p.shifted(axis, -h))) / (2.0 * h);
    if (!cfg.richardson)
        return d_h;
    const Matrix d_h2 =
        (g.eval(p.shifted(axis, h / 2.0)) - g.eval(p.shifted(axis, -h / 2.0))) / h;
    return (4.0 * d_h2 - d_h) / 3.0;
}

ChristoffelValue gamma_partial(const ChristoffelField& gamma, std::size_t axis,
                               const Point& p, const DifferentiationConfig& cfg) {
    const std::size_t n = gamma.dim();
    const double h = cfg.fd_step;
    const ChristoffelValue plus = gamma(p.shifted(axis, h));
    const ChristoffelValue minus = gamma(p.shifted(axis, -h));
    ChristoffelValue d(n);
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j)
                d.at(k, i, j) = (plus(k, i, j) - minus(k, i, j)) / (2.0 * h);
    if (!cfg.richardson)
        return d;
    const ChristoffelValue plus2 = gamma(p.shifted(axis, h / 2.0));
    const ChristoffelValue minus2 = gamma(p.shifted(axis, -h / 2.0));
    for (std::size_t k = 0; k < n; ++k)
        for (std::size_t i = 0; i < n; ++i)
            for (std::size_t j = 0; j < n; ++j) {
                const double d2 = (plus2(k, i, j) - minus2(k, i, j)) / h;
                d.at(k, i, j) = (4.0 * d2 - d.at(k, i, j)) / 3.0;
            }
    return d;
}

} // namespace

double ChristoffelValue::max_abs() const {
    double m = 0.0;
    for (double x : v_)
        m = std::max(m, std::abs(x));
    return m;
}

double ChristoffelValue::symmetry_defect() const {
    double m = 0.0;
    for (std::size_t k = 0; k < n_; ++k)
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = i + 1; j < n_; ++j)
                m = std::max(m, std::abs((*this)(k, i, j) - (*this)(k, j, i)));
    return m;
}

ChristoffelValue ChristoffelField::operator()(const Point& p) const {
    if (p.dim() != dim_)
        throw ShapeError("ChristoffelField: point dimension mismatch");
    ChristoffelValue v = eval_(p);
    for (std::size_t k = 0; k < dim_; ++k)
        for (std::size_t i = 0; i < dim_; ++i)
            for (std::size_t j = 0; j < dim_; ++j)
                if (!std::isfinite(v(k, i, j)))
                    throw EvaluationError("Christoffel symbol non-finite at " + p.to_string());
    return v;
}

ChristoffelField levi_civita_diagonal(const DiagonalMetric& g, double t) {
    const std::size_t n = g.dim();
    return ChristoffelField(n, [g, t, n](const Point& p) {
        const MetricMatrix m = g.eval(p);
        ChristoffelValue out(n);
        for (std::size_t i = 0; i < n; ++i) {
            const double gi = m.diagonal[i];
            for (std::size_t j = 0; j < n; ++j) {
                const double ratio = g.entry(i).partial(j, p) / gi;
                const double half_t_ratio = 0.5 * t * ratio;
                out.at(i, i, j) = half_t_ratio;
                out.at(i, j, i) = half_t_ratio;
                if (j != i)
                    out.at(j, i, i) = -half_t_ratio;
            }
        }
        return out;
    });
}

ChristoffelField levi_civita_general(const MatrixMetricField& g,
                                     const DifferentiationConfig& cfg) {
    cfg.validate();
    const std::size_t n = g.dim;
    return ChristoffelField(n, [g, cfg, n](const Point& p) {
        const Matrix m = g.eval(p);
        Eigen::FullPivLU<Matrix> lu(m);
        if (!lu.isInvertible())
            throw DegeneracyError("levi_civita_general: metric not invertible at " +
                                  p.to_string());
        const Matrix inv = lu.inverse();
        std::vector<Matrix> dm;
        dm.reserve(n);
        for (std::size_t a = 0; a < n; ++a)
            dm.push_back(matrix_partial(g, a, p, cfg));
        ChristoffelValue out(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    double s = 0.0;
                    for (std::size_t l = 0; l < n; ++l)
                        s += inv(static_cast<Eigen::Index>(k), static_cast<Eigen::Index>(l)) *
                             (dm[i](static_cast<Eigen::Index>(j), static_cast<Eigen::Index>(l)) +
                              dm[j](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(l)) -
                              dm[l](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)));
                    out.at(k, i, j) = 0.5 * s;
                }
        return out;
    });
}

ChristoffelField deform(double t, const ChristoffelField& levi_civita) {
    if (!(t >= 0.0 && t <= 1.0))
        throw PreconditionError("deform: t must lie in [0, 1]");
    const std::size_t n = levi_civita.dim();
    return ChristoffelField(n, [t, levi_civita, n](const Point& p) {
        ChristoffelValue v = levi_civita(p);
        ChristoffelValue out(n);
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    out.at(k, i, j) = t * v(k, i, j);
        return out;
    });
}

ChristoffelField torus_affine(double k, std::size_t n) {
    return ChristoffelField(n, [k, n](const Point&) {
        ChristoffelValue out(n);
        for (std::size_t i = 0; i < n; ++i)
            out.at(i, i, i) = k;
        return out;
    });
}

namespace {

ResidualResult compatibility_impl(const ChristoffelField& gamma, std::size_t n,
                                  std::span<const Point> probes,
                                  const std::function<Matrix(const Point&)>& metric_at,
                                  const std::function<Matrix(std::size_t, const Point&)>& dmetric_at) {
    if (probes.empty())
        throw PreconditionError("metric_compatibility_residual: need at least one probe");
    if (gamma.dim() != n)
        throw ShapeError("metric_compatibility_residual: dimension mismatch");
    ResidualResult worst{-1.0, probes[0]};
    for (const Point& p : probes) {
        const ChristoffelValue ga = gamma(p);
        const Matrix m = metric_at(p);
        std::vector<Matrix> dm;
        dm.reserve(n);
        for (std::size_t a = 0; a < n; ++a)
            dm.push_back(dmetric_at(a, p));
        double local = 0.0;
        for (std::size_t k = 0; k < n; ++k)
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j) {
                    double r = dm[k](static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j));
                    for (std::size_t l = 0; l < n; ++l)
                        r -= ga(l, k, i) * m(static_cast<Eigen::Index>(l),
                                             static_cast<Eigen::Index>(j)) +
                             ga(l, k, j) * m(static_cast<Eigen::Index>(i),
                                             static_cast<Eigen::Index>(l));
                    local = std::max(local, std::abs(r));
                }
        if (local > worst.value)
            worst = ResidualResult{local, p};
    }
    return worst;
}

} // namespace

ResidualResult metric_compatibility_residual(const ChristoffelField& gamma,
                                             const DiagonalMetric& g,
                                             std::span<const Point> probes) {
    const std::size_t n = g.dim();
    return compatibility_impl(
        gamma, n, probes, [&g](const Point& p) { return g.matrix(p); },
        [&g, n](std::size_t a, const Point& p) {
            Matrix d = Matrix::Zero(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
            for (std::size_t i = 0; i < n; ++i)
                d(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(i)) =
                    g.entry(i).partial(a, p);
            return d;
        });
}

ResidualResult metric_compatibility_residual(const ChristoffelField& gamma,
                                             const MatrixMetricField& g,
                                             std::span<const Point> probes,
                                             const DifferentiationConfig& cfg) {
    cfg.validate();
    return compatibility_impl(
        gamma, g.dim, probes, g.eval,
        [&g, cfg](std::size_t a, const Point& p) { return matrix_partial(g, a, p, cfg); });
}

double CurvatureTensorValue::max_abs() const {
    double m = 0.0;
    for (double x : v_)
        m = std::max(m, std::abs(x));
    return m;
}

double CurvatureTensorValue::bianchi_defect() const {
    double m = 0.0;
    for (std::size_t l = 0; l < n_; ++l)
        for (std::size_t i = 0; i < n_; ++i)
            for (std::size_t j = 0; j < n_; ++j)
                for (std::size_t k = 0; k < n_; ++k)
                    m = std::max(m, std::abs((*this)(l, i, j, k) + (*this)(l, j, k, i) +
                                             (*this)(l, k, i, j)));
    return m;
}

CurvatureTensorValue curvature_tensor(const ChristoffelField& gamma, const Point& p,
                                      const DifferentiationConfig& cfg) {
    cfg.validate();
    const std::size_t n = gamma.dim();
    if (p.dim() != n)
        throw ShapeError("curvature_tensor: point dimension mismatch");
    const ChristoffelValue g0 = gamma(p);
    std::vector<ChristoffelValue> dg;
    dg.reserve(n);
    for (std::size_t a = 0; a < n; ++a)
        dg.push_back(gamma_partial(gamma, a, p, cfg));

    CurvatureTensorValue r(p, n);
    // Fill i < j and mirror; (i, j)-antisymmetry is structural.
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j)
            for (std::size_t l = 0; l < n; ++l)
                for (std::size_t k = 0; k < n; ++k) {
                    double v = dg[i](l, j, k) - dg[j](l, i, k);
                    for (std::size_t m = 0; m < n; ++m)
                        v += g0(l, i, m) * g0(m, j, k) - g0(l, j, m) * g0(m, i, k);
                    r.at(l, i, j, k) = v;
                    r.at(l, j, i, k) = -v;
                }
    return r;
}

Curve torus_axis_loop(std::size_t axis, std::size_t n) {
    const double two_pi = 2.0 * std::numbers::pi;
    return Curve{
        [axis, n, two_pi](double s) {
            std::vector<double> c(n, 0.0);
            c[axis] = two_pi * s;
            return Point(std::move(c));
        },
        [axis, n, two_pi](double) {
            std::vector<double> v(n, 0.0);
            v[axis] = two_pi;
            return v;
        },
        std::vector<double>(n, two_pi)};
}

std::vector<double> parallel_transport(const ChristoffelField& gamma, const Curve& c,
                                       std::vector<double> v0, int steps) {
    if (steps < 1)
        throw PreconditionError("parallel_transport: steps must be at least 1");
    const std::size_t n = gamma.dim();
    if (v0.size() != n)
        throw ShapeError("parallel_transport: vector dimension mismatch");

    auto rhs = [&](double s, const std::vector<double>& v) {
        const Point p = c.position(s);
        const std::vector<double> vel = c.velocity(s);
        if (p.dim() != n || vel.size() != n)
            throw ShapeError("parallel_transport: curve dimension mismatch");
        const ChristoffelValue ga = gamma(p);
        std::vector<double> dv(n, 0.0);
        for (std::size_t k = 0; k < n; ++k) {
            double s_k = 0.0;
            for (std::size_t i = 0; i < n; ++i)
                for (std::size_t j = 0; j < n; ++j)
                    s_k += ga(k, i, j) * vel[i] * v[j];
            dv[k] = -s_k;
        }
        return dv;
    };

    auto axpy = [n](const std::vector<double>& v, double a, const std::vector<double>& d) {
        std::vector<double> out(n);
        for (std::size_t i = 0; i < n; ++i)
            out[i] = v[i] + a * d[i];
        return out;
    };

    std::vector<double> v = std::move(v0);
    const double h = 1.0 / steps;
    for (int m = 0; m < steps; ++m) {
        const double s = m * h;
        const auto k1 = rhs(s, v);
        const auto k2 = rhs(s + h / 2.0, axpy(v, h / 2.0, k1));
        const auto k3 = rhs(s + h / 2.0, axpy(v, h / 2.0, k2));
        const auto k4 = rhs(s + h, axpy(v, h, k3));
        for (std::size_t i = 0; i < n; ++i) {
            v[i] += h / 6.0 * (k1[i] + 2.0 * k2[i] + 2.0 * k3[i] + k4[i]);
            if (!std::isfinite(v[i]))
                throw IntegrationError("parallel_transport: state became non-finite");
        }
    }
    return v;
}

std::vector<double> holonomy_eigenvalues(const ChristoffelField& gamma, const Curve& loop,
                                         int steps) {
    const std::size_t n = gamma.dim();
    const Point start = loop.position(0.0);
    const Point end = loop.position(1.0);
    if (start.dim() != n || end.dim() != n)
        throw ShapeError("holonomy_eigenvalues: curve dimension mismatch");
    for (std::size_t i = 0; i < n; ++i) {
        const double d = end[i] - start[i];
        const double defect =
            (i < loop.period.size() && loop.period[i] > 0.0)
                ? std::abs(std::remainder(d, loop.period[i]))
                : std::abs(d);
        if (defect > 1e-9)
            throw PreconditionError("holonomy_eigenvalues: curve is not a closed loop");
    }

    Matrix hol(static_cast<Eigen::Index>(n), static_cast<Eigen::Index>(n));
    for (std::size_t j = 0; j < n; ++j) {
        std::vector<double> basis(n, 0.0);
        basis[j] = 1.0;
        const std::vector<double> out = parallel_transport(gamma, loop, basis, steps);
        for (std::size_t i = 0; i < n; ++i)
            hol(static_cast<Eigen::Index>(i), static_cast<Eigen::Index>(j)) = out[i];
    }
    return eigenvalue_moduli(hol);
}

} // namespace affineorth
