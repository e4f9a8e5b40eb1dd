#include <doctest.h>

#include <cmath>
#include <numbers>

#include "monoconv/transforms.hpp"

using namespace monoconv;

namespace {
const double kPi = std::numbers::pi;
}

TEST_CASE("Cauchy transform of an atomic measure") {
    const Measure m = AtomicMeasure({{-1.0, 0.25}, {2.0, 0.75}});
    const cplx z(0.3, 0.8);
    const cplx want = 0.25 / (z + 1.0) + 0.75 / (z - 2.0);
    CHECK(std::abs(cauchy_G(m, z) - want) < 1e-15);
    CHECK(std::abs(reciprocal_H(m, z) - 1.0 / want) < 1e-14);
}

TEST_CASE("H maps the upper half-plane into itself with Im H >= Im z") {
    const Measure m = AtomicMeasure({{-2.0, 0.2}, {0.0, 0.3}, {1.5, 0.5}});
    for (double x = -3.0; x <= 3.0; x += 0.5)
        for (double y : {0.01, 0.3, 2.0}) {
            const cplx h = reciprocal_H(m, {x, y});
            CHECK(h.imag() >= y - 1e-12);
        }
}

TEST_CASE("arcsine evaluator matches sqrt(z^2 - 2t)") {
    const TransformEvaluator h = evaluator_of(Measure{AnalyticFamily{Arcsine{0.75}}});
    const cplx z(0.4, 0.6);
    cplx s = std::sqrt(z * z - 1.5);
    if (s.imag() < 0) s = -s;
    CHECK(std::abs(h(z) - s) < 1e-14);
}

TEST_CASE("finite variance and Nevanlinna representations agree with H") {
    const Measure m = AtomicMeasure({{-1.0, 0.3}, {0.5, 0.2}, {2.0, 0.5}});
    const FiniteVarianceRep f = finite_variance_rep(m);
    const NevanlinnaRep n = nevanlinna_rep(f);
    const double mean = -0.3 + 0.1 + 1.0;
    CHECK(f.a == doctest::Approx(-mean));
    const double var = 0.3 + 0.2 * 0.25 + 0.5 * 4.0 - mean * mean;
    CHECK(total_mass(f.rho) == doctest::Approx(var));
    for (cplx z : {cplx(0.1, 0.2), cplx(-3.0, 1.0), cplx(5.0, 0.01)}) {
        CHECK(std::abs(evaluate(f, z) - reciprocal_H(m, z)) < 1e-12);
        CHECK(std::abs(evaluate(n, z) - reciprocal_H(m, z)) < 1e-12);
    }
}

TEST_CASE("point masses have an empty rho") {
    const FiniteVarianceRep f = finite_variance_rep(Measure{AtomicMeasure::dirac(1.5)});
    CHECK(f.a == -1.5);
    CHECK(is_zero_measure(f.rho));
    CHECK_THROWS_AS(divisibility_bound(f, Collision{{0.0, 0.5}, {0.0, 2.0}}), ZeroVariance);
    CHECK_THROWS_AS(finite_variance_rep(Measure{AnalyticFamily{Stable{0.5, 1.0, 0.0, 1.0}}}), InfiniteVariance);
}

TEST_CASE("uniform three-atom measure has rho mass 2/3") {
    const FiniteVarianceRep f = finite_variance_rep(Measure{AtomicMeasure({{-1.0, 1.0 / 3}, {0.0, 1.0 / 3}, {1.0, 1.0 / 3}})});
    CHECK(total_mass(f.rho) == doctest::Approx(2.0 / 3.0));
}

TEST_CASE("inversion of a semicircle") {
    const TransformEvaluator h =
        closed_form([](cplx z) { return 0.5 * (z + std::sqrt(z - 2.0) * std::sqrt(z + 2.0)); }, "semicircle");
    std::vector<double> xs;
    // nodes avoid the square-root edges, where the eps limit is not linear
    for (int i = 0; i <= 80; ++i) xs.push_back(-1.99 + 0.04975 * i);
    const GridMeasure g = stieltjes_invert(h, xs);
    double err = 0.0;
    for (std::size_t i = 0; i < xs.size(); ++i)
        err = std::max(err, std::abs(g.density()[i] - std::sqrt(4.0 - xs[i] * xs[i]) / (2.0 * kPi)));
    CHECK(err < 1e-3);
    CHECK(g.atoms().empty());
    CHECK(g.mass() == doctest::Approx(1.0).epsilon(2e-3));
    std::vector<double> edge{-2.0, -1.0, 0.0};
    CHECK_THROWS_AS(stieltjes_invert(h, edge), GridTooCoarse);
}

TEST_CASE("inversion finds atoms and their weights") {
    const Measure m = AtomicMeasure({{-1.0, 0.3}, {1.0, 0.7}});
    std::vector<double> xs;
    for (int i = 0; i <= 300; ++i) xs.push_back(-3.0 + 0.02 * i);
    const GridMeasure g = stieltjes_invert(evaluator_of(m), xs);
    REQUIRE(g.atoms().size() == 2);
    CHECK(g.atoms().atoms()[0].x == doctest::Approx(-1.0).epsilon(1e-9));
    CHECK(g.atoms().atoms()[0].w == doctest::Approx(0.3).epsilon(1e-6));
    CHECK(g.atoms().atoms()[1].w == doctest::Approx(0.7).epsilon(1e-6));
    CHECK(g.density_mass() < 1e-6);
}

TEST_CASE("atom weight through the iy G limit") {
    const Measure m = AtomicMeasure({{0.0, 0.4}, {3.0, 0.6}});
    CHECK(atom_weight_at(evaluator_of(m), 0.0) == doctest::Approx(0.4).epsilon(1e-8));
    CHECK(atom_weight_at(evaluator_of(m), 1.0) == 0.0);
}

TEST_CASE("contour masses") {
    const TransformEvaluator h = evaluator_of(Measure{AnalyticFamily{Arcsine{0.5}}});
    // arcsine on [-1, 1]: mu((-inf, b)) = 1/2 + asin(b)/pi
    for (double b : {-0.9, -0.3, 0.0, 0.5})
        CHECK(mass_below(h, b) == doctest::Approx(0.5 + std::asin(b) / kPi).epsilon(1e-7));
    CHECK(mass_above(h, 0.5) == doctest::Approx(0.5 - std::asin(0.5) / kPi).epsilon(1e-7));
    CHECK(interval_mass(h, -0.5, 0.5) == doctest::Approx(2.0 * std::asin(0.5) / kPi).epsilon(1e-7));
    const TransformEvaluator a = evaluator_of(Measure{AtomicMeasure({{-1.0, 0.25}, {1.0, 0.75}})});
    CHECK(mass_below(a, 0.0) == doctest::Approx(0.25).epsilon(1e-8));
}

TEST_CASE("collision of the symmetric Bernoulli law") {
    const Measure nu = AtomicMeasure({{-1.0, 0.5}, {1.0, 0.5}});
    const auto c = collision_search(evaluator_of(nu));
    REQUIRE(c.has_value());
    CHECK(c->im_product() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(reciprocal_H(nu, c->z1) - reciprocal_H(nu, c->z2)) < 1e-10);
    CHECK(divisibility_bound(finite_variance_rep(nu), *c) == 1);
}

TEST_CASE("no collision for an injective H") {
    const TransformEvaluator h = evaluator_of(Measure{AnalyticFamily{Arcsine{1.0}}});
    const std::vector<std::pair<cplx, cplx>> seeds{{{0.0, 0.5}, {0.0, 2.0}}, {{1.0, 0.3}, {-1.0, 1.0}}};
    CHECK_FALSE(collision_search(h, seeds).has_value());
}

TEST_CASE("positivity from the Nevanlinna pair") {
    const Measure pos = AtomicMeasure({{0.5, 0.5}, {2.0, 0.5}});
    const Measure neg = AtomicMeasure({{-0.5, 0.5}, {2.0, 0.5}});
    CHECK(positivity_check(nevanlinna_rep(finite_variance_rep(pos))));
    CHECK_FALSE(positivity_check(nevanlinna_rep(finite_variance_rep(neg))));
}
