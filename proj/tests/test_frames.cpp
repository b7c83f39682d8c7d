#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <cmath>
#include <vector>

#include "affineorth/frames.hpp"
#include "affineorth/rng.hpp"

using namespace affineorth;

namespace {

constexpr double kTwoPi = 6.283185307179586;

std::vector<Point> torus_probes(Rng& rng, int count) {
    std::vector<Point> probes;
    for (int i = 0; i < count; ++i)
        probes.push_back(rng.point_in_box(2, 0.0, kTwoPi));
    return probes;
}

// Test-local wedge of two single 1-forms given by coefficient vectors,
// independent of the library's matrix wedge.
double single_wedge_coeff(const std::vector<double>& f, const std::vector<double>& g,
                          std::size_t a, std::size_t b) {
    return f[a] * g[b] - f[b] * g[a];
}

} // namespace

TEST_CASE("pair indexing round-trips") {
    for (std::size_t n : {2u, 3u, 5u}) {
        for (std::size_t idx = 0; idx < pair_count(n); ++idx) {
            const auto [a, b] = pair_from_index(idx, n);
            CHECK(a < b);
            CHECK(b < n);
            CHECK(pair_index(a, b, n) == idx);
        }
    }
    CHECK_THROWS_AS(pair_index(1, 1, 3), ShapeError);
}

TEST_CASE("torus connection form coefficients") {
    const Point p{0.3, 1.1};

    const OneFormMatrix zero = torus_connection_form(0.0);
    for (std::size_t i = 0; i < 2; ++i)
        for (std::size_t j = 0; j < 2; ++j)
            for (std::size_t a = 0; a < 2; ++a)
                CHECK(zero.coeff(i, j, a)(p) == 0.0);

    const OneFormMatrix unit = torus_connection_form(1.0);
    CHECK(unit.coeff(0, 0, 1)(p) == 1.0); // ω^1_1 = θ²
    CHECK(unit.coeff(0, 1, 0)(p) == 1.0); // ω^1_2 = θ¹
    CHECK(unit.coeff(1, 0, 0)(p) == 1.0); // ω^2_1 = θ¹
    CHECK(unit.coeff(0, 0, 0)(p) == 0.0);
    CHECK(unit.coeff(1, 1, 0)(p) == 0.0);
    CHECK(unit.coeff(1, 1, 1)(p) == 0.0);

    const OneFormMatrix scaled = torus_connection_form(-2.0);
    CHECK(scaled.coeff(0, 0, 1)(p) == -2.0);
    CHECK(scaled.coeff(0, 1, 0)(p) == -2.0);
    CHECK(scaled.coeff(1, 0, 0)(p) == -2.0);
}

TEST_CASE("matrix wedge") {
    const Point p{0.7, 0.2};

    SUBCASE("omega wedge omega reproduces the curvature entries") {
        const TwoFormMatrix ww = wedge_matrix(torus_connection_form(1.0),
                                              torus_connection_form(1.0));
        CHECK(ww.coeff(0, 1, 0)(p) == -1.0);
        CHECK(ww.coeff(1, 0, 0)(p) == 1.0);
        CHECK(ww.coeff(0, 0, 0)(p) == 0.0);
        CHECK(ww.coeff(1, 1, 0)(p) == 0.0);
    }

    SUBCASE("zero wedge anything is zero") {
        const TwoFormMatrix z = wedge_matrix(OneFormMatrix(2, 2), torus_connection_form(3.0));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(z.coeff(i, j, 0)(p) == 0.0);
    }

    SUBCASE("diag(θ¹, θ²) wedge itself vanishes") {
        OneFormMatrix diag(2, 2);
        diag.set_coeff(0, 0, 0, ScalarField::constant(1.0));
        diag.set_coeff(1, 1, 1, ScalarField::constant(1.0));
        const TwoFormMatrix ww = wedge_matrix(diag, diag);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(ww.coeff(i, j, 0)(p) == 0.0);
    }

    SUBCASE("entrywise anticommutation against an independent expansion") {
        Rng rng(3);
        OneFormMatrix omega(2, 3);
        OneFormMatrix eta(2, 3);
        std::vector<std::vector<std::vector<double>>> oc(2), ec(2);
        for (std::size_t i = 0; i < 2; ++i) {
            oc[i].resize(2);
            ec[i].resize(2);
            for (std::size_t j = 0; j < 2; ++j) {
                for (std::size_t a = 0; a < 3; ++a) {
                    oc[i][j].push_back(rng.uniform(-1.0, 1.0));
                    ec[i][j].push_back(rng.uniform(-1.0, 1.0));
                    omega.set_coeff(i, j, a, ScalarField::constant(oc[i][j][a]));
                    eta.set_coeff(i, j, a, ScalarField::constant(ec[i][j][a]));
                }
            }
        }
        const TwoFormMatrix lhs = wedge_matrix(omega, eta);
        const Point q{0.1, 0.2, 0.3};
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                for (std::size_t idx = 0; idx < pair_count(3); ++idx) {
                    const auto [a, b] = pair_from_index(idx, 3);
                    // Σ_m ω^i_m∧η^m_j = −Σ_m η^m_j∧ω^i_m, expanded by hand.
                    double expected = 0.0;
                    for (std::size_t m = 0; m < 2; ++m)
                        expected -= single_wedge_coeff(ec[m][j], oc[i][m], a, b);
                    CHECK(lhs.coeff(i, j, idx)(q) == doctest::Approx(expected).epsilon(1e-12));
                }
    }

    SUBCASE("dimension mismatch") {
        CHECK_THROWS_AS(wedge_matrix(OneFormMatrix(2, 2), OneFormMatrix(3, 2)), ShapeError);
    }
}

TEST_CASE("exterior derivative over the closed coframe") {
    const Point p{0.9, 1.7};

    SUBCASE("constant coefficients are closed") {
        const TwoFormMatrix d = exterior_derivative(torus_connection_form(2.5));
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(d.coeff(i, j, 0)(p) == 0.0);
    }

    SUBCASE("product rule on sin(θ₁)·θ²") {
        OneFormMatrix omega(1, 2);
        omega.set_coeff(0, 0, 1,
                        ScalarField::with_exact_partials(
                            [](const Point& q) { return std::sin(q[0]); },
                            [](std::size_t i, const Point& q) {
                                return i == 0 ? std::cos(q[0]) : 0.0;
                            }));
        const TwoFormMatrix d = exterior_derivative(omega);
        CHECK(d.coeff(0, 0, 0)(p) == doctest::Approx(std::cos(p[0])).epsilon(1e-12));
    }

    SUBCASE("zero matrix") {
        const TwoFormMatrix d = exterior_derivative(OneFormMatrix(2, 2));
        CHECK(d.coeff(0, 1, 0)(p) == 0.0);
    }
}

TEST_CASE("curvature form of the torus family") {
    Rng rng(1);
    const std::vector<Point> probes = torus_probes(rng, 100);
    for (double k : {-1.0, 0.5, 3.0}) {
        const TwoFormMatrix curv = curvature_form(torus_connection_form(k));
        const double kk = k * k;
        for (const Point& p : probes) {
            CHECK(std::abs(curv.coeff(0, 1, 0)(p) - (-kk)) <= 1e-12);
            CHECK(std::abs(curv.coeff(1, 0, 0)(p) - kk) <= 1e-12);
            CHECK(std::abs(curv.coeff(0, 0, 0)(p)) <= 1e-12);
            CHECK(std::abs(curv.coeff(1, 1, 0)(p)) <= 1e-12);
        }
        CHECK(skewness_defect(curv, probes).value == 0.0);
    }

    SUBCASE("nilpotent constant form has zero curvature") {
        OneFormMatrix omega(2, 2);
        omega.set_coeff(0, 1, 0, ScalarField::constant(0.8));
        const TwoFormMatrix curv = curvature_form(omega);
        for (std::size_t i = 0; i < 2; ++i)
            for (std::size_t j = 0; j < 2; ++j)
                CHECK(curv.coeff(i, j, 0)(Point{0.1, 0.4}) == 0.0);
    }
}

TEST_CASE("torsion forms") {
    Rng rng(2);
    const std::vector<Point> probes = torus_probes(rng, 100);

    for (double k : {-1.0, 0.5, 3.0}) {
        const std::vector<TwoForm> torsion = torsion_forms(torus_connection_form(k));
        REQUIRE(torsion.size() == 2);
        for (const TwoForm& t : torsion)
            CHECK(max_abs_coeff(t, probes).value <= 1e-12);
    }

    SUBCASE("zero connection has zero torsion") {
        for (const TwoForm& t : torsion_forms(OneFormMatrix(2, 2)))
            CHECK(max_abs_coeff(t, probes).value == 0.0);
    }

    SUBCASE("single-entry examples") {
        // ω^1_2 = θ² wedges against θ² and dies.
        OneFormMatrix omega(2, 2);
        omega.set_coeff(0, 1, 1, ScalarField::constant(1.0));
        CHECK(max_abs_coeff(torsion_forms(omega)[0], probes).value == 0.0);

        // ω^1_2 = θ¹ leaves T¹ = θ¹∧θ².
        OneFormMatrix omega2(2, 2);
        omega2.set_coeff(0, 1, 0, ScalarField::constant(1.0));
        CHECK(torsion_forms(omega2)[0].coeff(0)(probes[0]) == 1.0);
    }

    SUBCASE("bundle frame must match the coframe") {
        CHECK_THROWS_AS(torsion_forms(OneFormMatrix(3, 2)), ShapeError);
    }
}

TEST_CASE("skewness defect") {
    Rng rng(4);
    const std::vector<Point> probes = torus_probes(rng, 50);
    CHECK(skewness_defect(torus_connection_form(1.0), probes).value ==
          doctest::Approx(2.0));
    CHECK(skewness_defect(torus_connection_form(-3.0), probes).value ==
          doctest::Approx(6.0));
    CHECK(skewness_defect(OneFormMatrix(2, 2), probes).value == 0.0);
}

TEST_CASE("pfaffian of scalar skew matrices") {
    SUBCASE("2x2 sign convention") {
        Matrix m(2, 2);
        m << 0.0, 1.7, -1.7, 0.0;
        CHECK(pfaffian(m) == 1.7);
    }

    SUBCASE("block 4x4 multiplies the blocks") {
        Matrix m = Matrix::Zero(4, 4);
        m(0, 1) = 2.0;
        m(1, 0) = -2.0;
        m(2, 3) = -3.0;
        m(3, 2) = 3.0;
        CHECK(pfaffian(m) == doctest::Approx(-6.0));
    }

    SUBCASE("zero matrix") { CHECK(pfaffian(Matrix::Zero(4, 4)) == 0.0); }

    SUBCASE("squares to the determinant (sqrt-det oracle)") {
        Rng rng(12);
        for (std::size_t n : {2u, 4u, 6u}) {
            for (int trial = 0; trial < 25; ++trial) {
                const Matrix m = random_skew(n, rng);
                const double pf = pfaffian(m);
                const double det = m.determinant();
                CHECK(std::abs(pf * pf - det) / std::max(1.0, std::abs(det)) <= 1e-10);
                CHECK(std::abs(std::abs(pf) - std::sqrt(std::max(det, 0.0))) /
                          std::max(1.0, std::sqrt(std::max(det, 0.0))) <=
                      1e-10);
            }
        }
    }

    SUBCASE("conjugation invariance under special-orthogonal frames") {
        Rng rng(21);
        for (std::size_t n : {2u, 4u, 6u}) {
            for (int trial = 0; trial < 20; ++trial) {
                const Matrix m = random_skew(n, rng);
                const Matrix a = random_special_orthogonal(n, rng);
                const Matrix conj = a.transpose() * m * a;
                CHECK(std::abs(pfaffian(conj) - pfaffian(m)) <= 1e-10);
            }
        }
    }

    SUBCASE("shape and skewness preconditions") {
        CHECK_THROWS_AS(pfaffian(Matrix::Zero(3, 3)), ShapeError);
        CHECK_THROWS_AS(pfaffian(Matrix::Zero(2, 3)), ShapeError);
        Matrix not_skew(2, 2);
        not_skew << 0.0, 1.0, 1.0, 0.0;
        CHECK_THROWS_AS(pfaffian(not_skew), PreconditionError);
    }
}

TEST_CASE("pfaffian form of the torus curvature") {
    Rng rng(5);
    const std::vector<Point> probes = torus_probes(rng, 25);
    const TwoFormMatrix curv = curvature_form(torus_connection_form(3.0));
    const TopForm2D pf = pfaffian_form(curv, probes);
    CHECK(pf.coeff(probes[0]) == doctest::Approx(-9.0));

    // A non-skew 2-form matrix is rejected.
    TwoFormMatrix bad(2, 2);
    bad.set_coeff(0, 1, 0, ScalarField::constant(1.0));
    bad.set_coeff(1, 0, 0, ScalarField::constant(1.0));
    CHECK_THROWS_AS(pfaffian_form(bad, probes), PreconditionError);
}

TEST_CASE("constant frame changes") {
    Rng rng(6);
    const std::vector<Point> probes = torus_probes(rng, 25);
    const TwoFormMatrix curv = curvature_form(torus_connection_form(2.0));

    SUBCASE("identity is a no-op") {
        const TwoFormMatrix same = conjugate(curv, Matrix::Identity(2, 2));
        for (const Point& p : probes)
            CHECK(max_abs(Matrix(same.coefficient_matrix(0, p) -
                                 curv.coefficient_matrix(0, p))) == 0.0);
    }

    SUBCASE("rotations commute with the curvature") {
        const double c = std::cos(0.8), s = std::sin(0.8);
        Matrix rot(2, 2);
        rot << c, -s, s, c;
        const TwoFormMatrix rotated = conjugate(curv, rot);
        for (const Point& p : probes)
            CHECK(max_abs(Matrix(rotated.coefficient_matrix(0, p) -
                                 curv.coefficient_matrix(0, p))) <= 1e-12);
    }

    SUBCASE("anisotropic scalings break skewness") {
        Matrix a(2, 2);
        a << 2.0, 0.0, 0.0, 0.5;
        const TwoFormMatrix scaled = conjugate(curv, a);
        const Point p = probes[0];
        CHECK(scaled.coeff(0, 1, 0)(p) == doctest::Approx(-4.0 / 4.0)); // (1/2)·(−4)·(1/2)
        CHECK(scaled.coeff(1, 0, 0)(p) == doctest::Approx(16.0));       // 2·4·2
        CHECK(skewness_defect(scaled, probes).value > 1.0);
    }

    SUBCASE("singular frame changes are rejected") {
        CHECK_THROWS_AS(conjugate(curv, Matrix::Zero(2, 2)), PreconditionError);
        CHECK_THROWS_AS(conjugate(curv, Matrix::Identity(3, 3)), ShapeError);
    }
}
