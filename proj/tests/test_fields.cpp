#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <thread>
#include <vector>

#include "affineorth/fields.hpp"
#include "affineorth/rng.hpp"

using namespace affineorth;

namespace {

ScalarField sum_of_squares() {
    return ScalarField::with_exact_partials(
        [](const Point& p) {
            double s = 0.0;
            for (std::size_t i = 0; i < p.dim(); ++i)
                s += p[i] * p[i];
            return s;
        },
        [](std::size_t i, const Point& p) { return 2.0 * p[i]; });
}

// Same function without exact partials, to exercise the differencing path.
ScalarField sum_of_squares_fd() {
    return ScalarField::from_function([](const Point& p) {
        double s = 0.0;
        for (std::size_t i = 0; i < p.dim(); ++i)
            s += p[i] * p[i];
        return s;
    });
}

std::vector<Point> probes_away_from_axes(Rng& rng, std::size_t dim, int count) {
    std::vector<Point> out;
    while (out.size() < static_cast<std::size_t>(count)) {
        std::vector<double> c(dim);
        for (auto& x : c) {
            x = rng.uniform(0.1, 2.0);
            if (rng.uniform() < 0.5)
                x = -x;
        }
        out.emplace_back(std::move(c));
    }
    return out;
}

} // namespace

TEST_CASE("point invariants") {
    CHECK_THROWS_AS(Point(std::vector<double>{}), ShapeError);
    CHECK_THROWS_AS(Point{std::nan("")}, EvaluationError);
    CHECK_THROWS_AS(Point{1.0 / 0.0}, EvaluationError);
    const Point p{1.0, -2.0};
    CHECK(p.dim() == 2);
    CHECK(p.shifted(1, 0.5)[1] == -1.5);
    CHECK(p.shifted(1, 0.5)[0] == 1.0);
    CHECK(p.to_string() == "(1, -2)");
}

TEST_CASE("evaluation of basic fields") {
    const ScalarField f = sum_of_squares();
    CHECK(f(Point{1.0, 0.0, 0.0}) == 1.0);
    CHECK(f(Point{1.0, 2.0, 2.0}) == 9.0);
    CHECK(ScalarField::constant(3.0)(Point{-7.0, 11.0}) == 3.0);
}

TEST_CASE("domain restriction is a hard error") {
    const ScalarField f =
        reciprocal(sum_of_squares().restricted(
            [](const Point& p) { return p[0] != 0.0 || p[1] != 0.0; }, "x != 0"));
    CHECK(f(Point{1.0, 2.0}) == doctest::Approx(0.2));
    CHECK_THROWS_AS(f(Point{0.0, 0.0}), EvaluationError);
}

TEST_CASE("non-finite evaluation is rejected") {
    const ScalarField f = ScalarField::from_function(
        [](const Point& p) { return 1.0 / p[0]; });
    CHECK_THROWS_AS(f(Point{0.0}), EvaluationError);
}

TEST_CASE("first partials, exact and differenced") {
    const Point p{1.0, 2.0};
    CHECK(sum_of_squares().partial(0, p) == 2.0);
    CHECK(sum_of_squares_fd().partial(0, p) == doctest::Approx(2.0).epsilon(1e-9));
    CHECK(ScalarField::constant(5.0).partial(1, p) == 0.0);

    const ScalarField xy = multiply(ScalarField::coordinate(0), ScalarField::coordinate(1));
    CHECK(xy.partial(1, Point{3.0, 5.0}) == 3.0);

    CHECK_THROWS_AS(sum_of_squares().partial(2, p), ShapeError);
}

TEST_CASE("central differences hit quadratics to 1e-8 relative") {
    Rng rng(11);
    const ScalarField sq = sum_of_squares_fd();
    const ScalarField xy = ScalarField::from_function(
        [](const Point& p) { return p[0] * p[1]; });
    for (const Point& p : probes_away_from_axes(rng, 2, 50)) {
        for (std::size_t i = 0; i < 2; ++i) {
            const double exact_sq = 2.0 * p[i];
            CHECK(std::abs(sq.partial(i, p) - exact_sq) / std::abs(exact_sq) <= 1e-8);
            const double exact_xy = p[1 - i];
            CHECK(std::abs(xy.partial(i, p) - exact_xy) / std::abs(exact_xy) <= 1e-8);
        }
    }
}

TEST_CASE("supplied partials agree with differencing (self-consistency)") {
    Rng rng(5);
    const std::vector<Point> probes = probes_away_from_axes(rng, 3, 40);
    CHECK(max_partial_inconsistency(sum_of_squares(), probes) <= 1e-6);

    const ScalarField trig = ScalarField::with_exact_partials(
        [](const Point& p) { return std::exp(std::sin(p[0]) + 0.5 * std::cos(p[1])); },
        [](std::size_t i, const Point& p) {
            const double v = std::exp(std::sin(p[0]) + 0.5 * std::cos(p[1]));
            return i == 0 ? std::cos(p[0]) * v : -0.5 * std::sin(p[1]) * v;
        });
    const std::vector<Point> plane_probes = probes_away_from_axes(rng, 2, 40);
    CHECK(max_partial_inconsistency(trig, plane_probes) <= 1e-6);
}

TEST_CASE("combinators: add, multiply, reciprocal") {
    const ScalarField x = ScalarField::coordinate(0);
    const ScalarField y = ScalarField::coordinate(1);
    const Point p{1.5, -2.0};
    CHECK(add(x, y)(p) == -0.5);
    CHECK(multiply(x, y)(p) == -3.0);
    CHECK(add(x, y).partial(0, p) == 1.0);
    CHECK(multiply(x, y).partial(0, p) == -2.0);
    CHECK(reciprocal(ScalarField::constant(4.0))(p) == 0.25);
    CHECK_THROWS_AS(reciprocal(x)(Point{-1.0, 0.0}), EvaluationError);
}

TEST_CASE("power combinator") {
    const ScalarField f = sum_of_squares();
    const Point p{1.0, 2.0, 2.0}; // f = 9
    CHECK(power(f, 0.0)(p) == 1.0);
    CHECK(power(f, 1.0)(p) == 9.0);
    CHECK(power(ScalarField::constant(4.0), 0.5)(Point{0.0}) == 2.0);
    CHECK(power(f, 0.5)(p) == doctest::Approx(3.0));

    // Integer exponents accept negative bases; fractional ones do not.
    const ScalarField x = ScalarField::coordinate(0);
    CHECK(power(x, 2.0)(Point{-2.0}) == 4.0);
    CHECK_THROWS_AS(power(x, 0.5)(Point{-2.0}), EvaluationError);
}

TEST_CASE("chain rule: partial of f^t matches t f^(t-1) f' within 1e-5") {
    Rng rng(23);
    const ScalarField f = ScalarField::from_function([](const Point& p) {
        return std::exp(std::sin(p[0]) + 0.5 * std::cos(p[1])) + 0.5;
    });
    for (double t : {0.3, 0.5, 1.7}) {
        const ScalarField ft = power(f, t);
        for (int trial = 0; trial < 30; ++trial) {
            const Point p = rng.point_in_box(2, -2.0, 2.0);
            for (std::size_t i = 0; i < 2; ++i) {
                const double lhs = ft.partial(i, p);
                const double rhs = t * std::pow(f(p), t - 1.0) * f.partial(i, p);
                CHECK(std::abs(lhs - rhs) / std::max(1.0, std::abs(rhs)) <= 1e-5);
            }
        }
    }
}

TEST_CASE("evaluation is pure: repeats are bit-identical") {
    Rng rng(99);
    const ScalarField f =
        power(add(multiply(sum_of_squares(), ScalarField::constant(0.25)),
                  ScalarField::constant(1.0)),
              0.75);
    for (int trial = 0; trial < 20; ++trial) {
        const Point p = rng.point_in_box(2, -2.0, 2.0);
        CHECK(f(p) == f(p));
        CHECK(f.partial(0, p) == f.partial(0, p));
    }
}

TEST_CASE("second partials difference the first partials") {
    const ScalarField f = ScalarField::with_exact_partials(
        [](const Point& p) { return p[0] * p[0] * p[1]; },
        [](std::size_t i, const Point& p) {
            return i == 0 ? 2.0 * p[0] * p[1] : p[0] * p[0];
        });
    const Point p{1.5, -0.7};
    CHECK(f.second_partial(0, 1, p) == doctest::Approx(3.0).epsilon(1e-9));
    CHECK(f.second_partial(0, 0, p) == doctest::Approx(-1.4).epsilon(1e-7));
}

TEST_CASE("derivative combinator exposes the partial as a field") {
    const ScalarField f = sum_of_squares();
    const ScalarField df = derivative(f, 1);
    CHECK(df(Point{1.0, 3.0}) == 6.0);
    // Second level falls back to differencing.
    CHECK(df.partial(1, Point{1.0, 3.0}) == doctest::Approx(2.0).epsilon(1e-8));
}

TEST_CASE("fields evaluate identically from multiple threads") {
    const ScalarField f =
        power(add(multiply(sum_of_squares(), ScalarField::constant(0.5)),
                  ScalarField::constant(1.0)),
              0.3);
    const Point p{0.7, -1.1};
    const double expected_value = f(p);
    const double expected_partial = f.partial(0, p);

    std::vector<std::thread> workers;
    std::vector<int> mismatches(4, 0);
    for (int w = 0; w < 4; ++w)
        workers.emplace_back([&, w] {
            for (int i = 0; i < 200; ++i)
                if (f(p) != expected_value || f.partial(0, p) != expected_partial)
                    ++mismatches[static_cast<std::size_t>(w)];
        });
    for (auto& t : workers)
        t.join();
    for (int m : mismatches)
        CHECK(m == 0);
}

TEST_CASE("differentiation config validation and Richardson step") {
    const DifferentiationConfig zero_step{0.0, false};
    const DifferentiationConfig huge_step{0.1, false};
    CHECK_THROWS_AS(zero_step.validate(), PreconditionError);
    CHECK_THROWS_AS(huge_step.validate(), PreconditionError);
    DifferentiationConfig{1e-5, true}.validate();

    auto cubic = [](double offset) {
        const double x = 1.0 + offset;
        return x * x * x;
    };
    const double plain = central_difference(cubic, DifferentiationConfig{1e-3, false});
    const double extrapolated = central_difference(cubic, DifferentiationConfig{1e-3, true});
    CHECK(std::abs(extrapolated - 3.0) <= std::abs(plain - 3.0));
    CHECK(extrapolated == doctest::Approx(3.0).epsilon(1e-11));
}
