#include "affineorth/quadrature.hpp"

#include <cmath>
#include <vector>

namespace affineorth {

namespace {

double riemann_sum(const ScalarField& coeff, const PeriodicGrid& grid, std::size_t n) {
    const double step = grid.period / static_cast<double>(n);
    double sum = 0.0;
    for (std::size_t j = 0; j < n; ++j) {
        const double x = step * static_cast<double>(j);
        for (std::size_t l = 0; l < n; ++l) {
            const double y = step * static_cast<double>(l);
            sum += coeff(Point{x, y});
        }
    }
    return sum * step * step;
}

std::vector<Point> grid_probes(const PeriodicGrid& grid, std::size_t per_axis) {
    const double step = grid.period / static_cast<double>(per_axis);
    std::vector<Point> probes;
    probes.reserve(per_axis * per_axis);
    for (std::size_t j = 0; j < per_axis; ++j)
        for (std::size_t l = 0; l < per_axis; ++l)
            probes.emplace_back(Point{step * static_cast<double>(j),
                                      step * static_cast<double>(l)});
    return probes;
}

} // namespace

IntegralResult integrate_top_form(const TopForm2D& f, const PeriodicGrid& grid) {
    grid.validate();
    if (grid.dim != 2)
        throw ShapeError("integrate_top_form: grid must be 2-dimensional");
    const double coarse = riemann_sum(f.coeff, grid, grid.points_per_axis);
    const double fine = riemann_sum(f.coeff, grid, 2 * grid.points_per_axis);
    return IntegralResult{coarse, grid, std::abs(coarse - fine)};
}

IntegralResult euler_integral(const OneFormMatrix& omega, const PeriodicGrid& grid) {
    grid.validate();
    if (omega.bundle_dim() != 2)
        throw ShapeError("euler_integral: bundle rank must be 2");
    if (omega.base_dim() != 2 || grid.dim != 2)
        throw ShapeError("euler_integral: base must be 2-dimensional");
    const TwoFormMatrix curvature = curvature_form(omega);
    const std::vector<Point> probes = grid_probes(grid, 8);
    return integrate_top_form(pfaffian_form(curvature, probes), grid);
}

IntegralResult gauss_bonnet_torus(const DiagonalMetric& g, const PeriodicGrid& grid) {
    grid.validate();
    if (g.dim() != 2 || grid.dim != 2)
        throw ShapeError("gauss_bonnet_torus: metric and grid must be 2-dimensional");
    for (const Point& p : grid_probes(grid, 8))
        g.eval(p); // positivity sweep; throws DegeneracyError on misuse

    const ScalarField sqrt_e = power(g.entry(0), 0.5);
    const ScalarField sqrt_g = power(g.entry(1), 0.5);
    const ScalarField a = multiply(derivative(sqrt_g, 0), reciprocal(sqrt_e));
    const ScalarField b = multiply(derivative(sqrt_e, 1), reciprocal(sqrt_g));
    const ScalarField integrand = scale(add(derivative(a, 0), derivative(b, 1)), -1.0);
    return integrate_top_form(TopForm2D{integrand}, grid);
}

} // namespace affineorth
