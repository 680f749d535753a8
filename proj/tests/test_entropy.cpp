#include "catch_amalgamated.hpp"

#include <cmath>
#include <random>

#include "entrobound/entropy.hpp"
#include "entrobound/geometry.hpp"

using namespace entrobound;
namespace {
constexpr double PI = std::numbers::pi;
}

TEST_CASE("binary_entropy endpoints and maximum") {
    CHECK(binary_entropy(0.0) == Catch::Approx(ln2).margin(1e-15));
    CHECK(binary_entropy(1.0) == 0.0);
    CHECK(binary_entropy(-1.0) == 0.0);
    // value frozen from an independent arbitrary-precision evaluation
    CHECK(binary_entropy(0.5) == Catch::Approx(0.56233514461880835).margin(1e-15));
}

TEST_CASE("binary_entropy is even and clamps borderline inputs") {
    const double x = 1.0 / std::sqrt(2.0);
    CHECK(binary_entropy(x) == binary_entropy(-x));
    CHECK(binary_entropy(1.0 + 5e-13) == 0.0);
    CHECK_THROWS_AS(binary_entropy(1.0 + 1e-6), DomainError);
    CHECK_THROWS_AS(binary_entropy(-1.1), DomainError);
}

TEST_CASE("binary_entropy is nonnegative near the endpoints") {
    for (double e : {1e-18, 1e-15, 1e-12, 1e-9, 1e-6}) {
        CHECK(binary_entropy(1.0 - e) >= 0.0);
        CHECK(binary_entropy(-1.0 + e) >= 0.0);
    }
}

TEST_CASE("shannon_entropy of axis-aligned and orthogonal states") {
    const UnitVector3 z(0, 0, 1), x(1, 0, 0);
    CHECK(shannon_entropy(z, z) == 0.0);
    CHECK(shannon_entropy(z, x) == Catch::Approx(ln2));
}

TEST_CASE("entropy_sum reference values") {
    CHECK(entropy_sum(0.0, PI / 2) == Catch::Approx(ln2).margin(1e-15));
    // 2 H0(cos(pi/4)), frozen from the arbitrary-precision oracle; lies above
    // the minimum ln 2 since pi/2 sits in the bifurcated regime
    CHECK(entropy_sum(PI / 4, PI / 2) == Catch::Approx(0.83299106139937490).margin(1e-14));
    CHECK(entropy_sum(PI / 4, PI / 2) > ln2);
}

TEST_CASE("entropy_sum symmetries and range") {
    std::mt19937 rng(19);
    std::uniform_real_distribution<double> ua(0.0, PI), ut(0.0, 2 * PI);
    for (int i = 0; i < 300; ++i) {
        const double a = ua(rng), t = ut(rng);
        const double v = entropy_sum(t, a);
        CHECK(v >= 0.0);
        CHECK(v <= 2 * ln2 + 1e-12);
        CHECK(entropy_sum(t + PI, a) == Catch::Approx(v).margin(1e-12));
        CHECK(entropy_sum(a - t, a) == Catch::Approx(v).margin(1e-12));
    }
}

TEST_CASE("entropy_sum agrees with per-observable entropies on the plane") {
    const UnitVector3 z(0, 0, 1);
    const UnitVector3 tilted(std::sin(1.1), 0.0, std::cos(1.1));
    const auto frame = pair_frame(QubitObservable(0, 1, z), QubitObservable(0, 1, tilted));
    std::mt19937 rng(23);
    std::uniform_real_distribution<double> ut(0.0, 2 * PI);
    for (int i = 0; i < 100; ++i) {
        const double t = ut(rng);
        const auto k = state_on_plane(frame, t);
        const double direct = shannon_entropy(frame.e1, k) + shannon_entropy(tilted, k);
        CHECK(entropy_sum(t, frame.alpha) == Catch::Approx(direct).margin(1e-12));
    }
}

TEST_CASE("derivatives vanish at the symmetry points") {
    for (double a : {0.3, 0.8, 1.5, 2.0, 2.9}) {
        CHECK(entropy_sum_d1(a / 2, a) == Catch::Approx(0.0).margin(1e-14));
        CHECK(entropy_sum_d1(PI + a / 2, a) == Catch::Approx(0.0).margin(1e-12));
    }
}

TEST_CASE("second derivative positive at theta=alpha/2 below the critical angle") {
    const double a = 0.8;
    const double h = 1e-5;
    const double fd2 = (entropy_sum(a / 2 + h, a) - 2 * entropy_sum(a / 2, a) +
                        entropy_sum(a / 2 - h, a)) / (h * h);
    CHECK(entropy_sum_d2(a / 2, a) > 0.0);
    CHECK(entropy_sum_d2(a / 2, a) == Catch::Approx(fd2).margin(1e-4));
}

TEST_CASE("closed-form derivatives match finite differences") {
    std::mt19937 rng(31);
    std::uniform_real_distribution<double> ua(0.0, PI), ut(0.0, 2 * PI);
    const double h = 1e-6;
    int done = 0;
    while (done < 1000) {
        const double a = ua(rng), t = ut(rng);
        if (!derivatives_defined(t, a) || detail::dist_to_multiple_of_pi(t) < 1e-3 ||
            detail::dist_to_multiple_of_pi(a - t) < 1e-3)
            continue;
        ++done;
        const double d1 = entropy_sum_d1(t, a);
        const double fd1 = (entropy_sum(t + h, a) - entropy_sum(t - h, a)) / (2 * h);
        CHECK(std::abs(d1 - fd1) <= 1e-6 * (1.0 + std::abs(d1)));
        const double d2 = entropy_sum_d2(t, a);
        const double fd2 = (entropy_sum_d1(t + h, a) - entropy_sum_d1(t - h, a)) / (2 * h);
        CHECK(std::abs(d2 - fd2) <= 1e-6 * (1.0 + std::abs(d2)));
    }
}

TEST_CASE("derivatives refuse the singular windows") {
    CHECK_THROWS_AS(entropy_sum_d1(1e-10, 1.0), NearSingular);
    CHECK_THROWS_AS(entropy_sum_d1(1.0, 1.0), NearSingular); // cos(alpha-theta)=1
    CHECK_THROWS_AS(entropy_sum_d2(PI, 0.5), NearSingular);
    CHECK_NOTHROW(entropy_sum_d1(0.5, 1.0));
}
