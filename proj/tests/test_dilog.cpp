#include <doctest.h>

#include <cmath>
#include <complex>
#include <limits>
#include <numbers>
#include <random>

#include "twobridge/dilog.hpp"

using namespace twobridge;
using cplx = std::complex<double>;

namespace {

constexpr double kPi = std::numbers::pi;

// Plain power series Li_2(z) = sum z^k / k^2; usable oracle for |z| <= 0.7.
cplx li2_series_oracle(cplx z) {
    cplx sum = 0.0, pw = z;
    for (int k = 1; k < 400; ++k) {
        sum += pw / static_cast<double>(k * k);
        pw *= z;
    }
    return sum;
}

// Direct sine series for the Clausen sum D(e^{i theta}) = sum sin(k theta)/k^2,
// no recurrences shared with the implementation.
double clausen_oracle(double theta, int terms) {
    double sum = 0.0;
    for (int k = terms; k >= 1; --k) sum += std::sin(k * theta) / (double(k) * k);
    return sum;
}

}  // namespace

TEST_CASE("bloch_wigner vanishes on the reals and at degenerate points") {
    CHECK(bloch_wigner({0.5, 0.0}) == 0.0);
    CHECK(bloch_wigner({0.0, 0.0}) == 0.0);
    CHECK(bloch_wigner({1.0, 0.0}) == 0.0);
    CHECK(bloch_wigner({-3.7, 0.0}) == 0.0);
    CHECK(bloch_wigner({std::numeric_limits<double>::infinity(), 0.0}) == 0.0);
    CHECK(bloch_wigner({std::numeric_limits<double>::quiet_NaN(), 1.0}) == 0.0);
}

TEST_CASE("reference values") {
    // series oracle values, frozen
    CHECK(v3() == doctest::Approx(1.014941606409653625).epsilon(1e-14));
    CHECK(bloch_wigner({0.0, 1.0}) ==
          doctest::Approx(0.91596559417721901505).epsilon(1e-13));  // Catalan
    CHECK(v3() > 1.0);
    CHECK(v3() < 1.02);
    CHECK(v3() == bloch_wigner(std::polar(1.0, kPi / 3.0)));

    // D(e^{i theta}) equals the Clausen sum
    for (double theta : {0.3, 1.1, 2.0, 2.9}) {
        CHECK(bloch_wigner(std::polar(1.0, theta)) ==
              doctest::Approx(clausen_oracle(theta, 20000000)).epsilon(1e-11));
    }
}

TEST_CASE("li2 agrees with the plain power series") {
    std::mt19937 rng(5150);
    std::uniform_real_distribution<double> mag(0.05, 0.7), ang(0.0, 2 * kPi);
    for (int i = 0; i < 200; ++i) {
        cplx z = std::polar(mag(rng), ang(rng));
        CHECK(std::abs(li2(z) - li2_series_oracle(z)) < 1e-14);
    }
}

TEST_CASE("conjugation antisymmetry") {
    std::mt19937 rng(6021023);
    std::uniform_real_distribution<double> coord(-4.0, 4.0);
    for (int i = 0; i < 1000; ++i) {
        cplx z{coord(rng), coord(rng)};
        CHECK(std::abs(bloch_wigner(std::conj(z)) + bloch_wigner(z)) <= 1e-12);
    }
}

TEST_CASE("single-variable identities") {
    std::mt19937 rng(31415);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    for (int i = 0; i < 500; ++i) {
        cplx z{coord(rng), coord(rng)};
        if (std::abs(z) < 0.05 || std::abs(z - 1.0) < 0.05) continue;
        CHECK(std::abs(bloch_wigner(1.0 / z) + bloch_wigner(z)) <= 1e-12);
        CHECK(std::abs(bloch_wigner(1.0 - z) + bloch_wigner(z)) <= 1e-12);
    }
}

TEST_CASE("five-term relation") {
    std::mt19937 rng(991);
    std::uniform_real_distribution<double> coord(-3.0, 3.0);
    auto rand_z = [&] {
        while (true) {
            cplx z{coord(rng), coord(rng)};
            if (std::abs(z) > 0.05 && std::abs(z - 1.0) > 0.05) return z;
        }
    };
    for (int i = 0; i < 1000; ++i) {
        cplx x = rand_z(), y = rand_z();
        double rel = bloch_wigner(x) - bloch_wigner(y) + bloch_wigner(y / x) -
                     bloch_wigner((1.0 - y) / (1.0 - x)) +
                     bloch_wigner((1.0 - 1.0 / y) / (1.0 - 1.0 / x));
        CHECK(std::abs(rel) <= 1e-10);
    }
}

TEST_CASE("lobachevsky function") {
    CHECK(lobachevsky(0.0) == 0.0);
    CHECK(std::abs(lobachevsky(kPi / 2)) < 1e-12);
    CHECK(std::abs(lobachevsky(kPi)) < 1e-12);

    // odd, pi-periodic
    CHECK(lobachevsky(-0.4) == doctest::Approx(-lobachevsky(0.4)).epsilon(1e-12));
    CHECK(lobachevsky(0.4 + kPi) == doctest::Approx(lobachevsky(0.4)).epsilon(1e-9));

    // 2 Lambda(pi/3) = D(e^{2 i pi/3})
    CHECK(2.0 * lobachevsky(kPi / 3) ==
          doctest::Approx(bloch_wigner(std::polar(1.0, 2 * kPi / 3))).epsilon(1e-10));

    // plain-series cross-check on a grid
    for (double theta : {0.2, 0.7, 1.2, 1.5}) {
        CHECK(lobachevsky(theta) ==
              doctest::Approx(0.5 * clausen_oracle(2 * theta, 20000000)).epsilon(1e-10));
    }

    // doubling max_terms moves the value by less than series_tol-scale noise
    DilogConfig base;
    base.max_terms = 500000;
    DilogConfig doubled;
    doubled.max_terms = 1000000;
    for (double theta = 0.1; theta < 1.6; theta += 0.17)
        CHECK(std::abs(lobachevsky(theta, base) - lobachevsky(theta, doubled)) < 1e-11);
}

TEST_CASE("series_tol degrades gracefully") {
    DilogConfig coarse;
    coarse.series_tol = 1e-1;
    coarse.max_terms = 50;
    // coarse truncation must actually lose accuracy (negative control hook)
    double coarse_v3 = bloch_wigner(std::polar(1.0, kPi / 3.0), coarse);
    CHECK(std::abs(coarse_v3 - v3()) > 1e-9);
}
