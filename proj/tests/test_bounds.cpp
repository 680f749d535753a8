#include "catch_amalgamated.hpp"

#include <cmath>
#include <complex>
#include <random>

#include "entrobound/bounds.hpp"
#include "entrobound/geometry.hpp"

using namespace entrobound;
namespace {
constexpr double PI = std::numbers::pi;
}

TEST_CASE("max_overlap piecewise form") {
    CHECK(max_overlap(0.0) == 1.0);
    CHECK(max_overlap(PI / 2) == Catch::Approx(1.0 / std::sqrt(2.0)));
    CHECK(max_overlap(2.0) == Catch::Approx(std::sin(1.0)));
    CHECK_THROWS_AS(max_overlap(PI), DomainError);
}

TEST_CASE("deutsch bound values") {
    CHECK(deutsch_bound(0.0) == Catch::Approx(0.0).margin(1e-15));
    // frozen from the arbitrary-precision oracle
    CHECK(deutsch_bound(PI / 2) == Catch::Approx(0.31669436764074988).margin(1e-14));
    CHECK(deutsch_bound(PI / 3) < maassen_uffink_bound(PI / 3));
}

TEST_CASE("maassen-uffink bound values") {
    CHECK(maassen_uffink_bound(0.0) == Catch::Approx(0.0).margin(1e-15));
    CHECK(maassen_uffink_bound(PI / 2) == Catch::Approx(ln2));
    CHECK(maassen_uffink_bound(1.0) == Catch::Approx(-2.0 * std::log(std::cos(0.5))));
}

TEST_CASE("bound_report ordering") {
    const auto r0 = bound_report(0.0);
    CHECK(r0.optimal == 0.0);
    CHECK(r0.maassen_uffink == Catch::Approx(0.0).margin(1e-15));
    CHECK(r0.deutsch == Catch::Approx(0.0).margin(1e-15));

    const auto rc = bound_report(PI / 2);
    CHECK(rc.optimal == Catch::Approx(ln2).margin(1e-9));
    CHECK(rc.maassen_uffink == Catch::Approx(ln2));
    CHECK(rc.deutsch < rc.maassen_uffink);

    const auto r = bound_report(0.9);
    CHECK(r.deutsch < r.maassen_uffink);
    CHECK(r.maassen_uffink < r.optimal);
}

TEST_CASE("ordering holds along a fine alpha grid") {
    for (double a = 0.0; a < PI; a += 1e-3) {
        const auto r = bound_report(a); // throws if the ordering is violated
        CHECK(r.deutsch <= r.maassen_uffink + 1e-12);
        CHECK(r.maassen_uffink <= r.optimal + 1e-12);
    }
}

TEST_CASE("optimal equals maassen-uffink only at complementarity") {
    for (double a : {0.3, 1.0, 1.4, 1.8, 2.5}) {
        if (std::abs(a - PI / 2) > 1e-6)
            CHECK(optimal_bound(a) - maassen_uffink_bound(a) > 1e-4);
    }
    CHECK(optimal_bound(PI / 2) - maassen_uffink_bound(PI / 2) <=
          Catch::Approx(0.0).margin(1e-9));
}

TEST_CASE("bounds symmetric under alpha -> pi - alpha") {
    std::mt19937 rng(53);
    std::uniform_real_distribution<double> ua(1e-6, PI - 1e-6);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        CHECK(deutsch_bound(a) == Catch::Approx(deutsch_bound(PI - a)).margin(1e-12));
        CHECK(maassen_uffink_bound(a) ==
              Catch::Approx(maassen_uffink_bound(PI - a)).margin(1e-12));
    }
}

// Recomputes the bounds from explicit qubit eigenvectors: for axes at angle
// alpha in the xz-plane, the sigma.n eigenvectors in the sigma.z basis are
// (cos(a/2), sin(a/2)) and (-sin(a/2), cos(a/2)). The largest overlap with
// the z eigenbasis is max(cos(a/2), sin(a/2)).
TEST_CASE("angle forms agree with the general overlap forms") {
    std::mt19937 rng(59);
    std::uniform_real_distribution<double> ua(0.0, PI - 1e-9);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        const double h = 0.5 * a;
        const double overlaps[4] = {std::cos(h), std::sin(h), std::sin(h), std::cos(h)};
        double sup = 0.0;
        for (double o : overlaps) sup = std::max(sup, std::abs(o));
        CHECK(sup == Catch::Approx(max_overlap(a)).margin(1e-12));
        CHECK(2.0 * std::log(2.0 / (1.0 + sup)) ==
              Catch::Approx(deutsch_bound(a)).margin(1e-12));
        CHECK(-2.0 * std::log(sup) == Catch::Approx(maassen_uffink_bound(a)).margin(1e-12));
    }
}

// Same check built on overlap_probability, exercising the geometry route.
TEST_CASE("max overlap from Bloch overlap probabilities") {
    std::mt19937 rng(61);
    std::uniform_real_distribution<double> ua(0.0, PI - 1e-9);
    for (int i = 0; i < 100; ++i) {
        const double a = ua(rng);
        const UnitVector3 m(0, 0, 1);
        const UnitVector3 n(std::sin(a), 0.0, std::cos(a));
        double sup2 = 0.0;
        for (const auto& em : {m, m.negated()})
            for (const auto& en : {n, n.negated()})
                sup2 = std::max(sup2, overlap_probability(em, en));
        CHECK(std::sqrt(sup2) == Catch::Approx(max_overlap(a)).margin(1e-12));
    }
}
