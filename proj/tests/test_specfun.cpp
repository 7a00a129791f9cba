#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <cmath>
#include <complex>
#include <random>

#include "fraclap/specfun.hpp"
#include "oracles.hpp"

using namespace fraclap::specfun;
using cplx = std::complex<double>;

TEST_CASE("bessel_j values") {
    CHECK(bessel_j(BesselOrder::zero, 0.0) == 1.0);
    CHECK(bessel_j(BesselOrder::one, 0.0) == 0.0);

    // First J0 zero located with the series oracle; frozen value below.
    const double z1 = oracles::j0_first_zero();
    CHECK(z1 == doctest::Approx(2.404825557695773).epsilon(1e-14));
    CHECK(std::abs(bessel_j(BesselOrder::zero, 2.404825557695773)) < 1e-10);

    // Parity extension.
    CHECK(bessel_j(BesselOrder::zero, -3.0) == bessel_j(BesselOrder::zero, 3.0));
    CHECK(bessel_j(BesselOrder::one, -3.0) == -bessel_j(BesselOrder::one, 3.0));

    CHECK_THROWS_AS(bessel_j(BesselOrder::zero, std::nan("")), std::domain_error);
    CHECK_THROWS_AS(bessel_j(BesselOrder::one, INFINITY), std::domain_error);
}

namespace {
// Independent downward-recurrence evaluation of J0 and J1, used to check
// the library across its internal regime switches.
void j_recurrence_oracle(double x, double& out0, double& out1) {
    int m = static_cast<int>(x) + 64;
    if (m % 2 != 0) ++m;
    double jp = 0.0, jc = 1e-300, v0 = 0.0, v1 = 0.0, norm = 0.0;
    for (int k = m; k >= 1; --k) {
        const double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == 1) v1 = jp;
        if (k - 1 == 0) v0 = jc;
        if ((k - 1) % 2 == 0 && k - 1 >= 2) norm += 2.0 * jc;
        if (std::abs(jc) > 1e270) {
            jc *= 1e-270; jp *= 1e-270; norm *= 1e-270; v1 *= 1e-270;
        }
    }
    norm += v0;
    out0 = v0 / norm;
    out1 = v1 / norm;
}
} // namespace

TEST_CASE("bessel_j regime agreement") {
    for (double x : {0.5, 2.0, 5.0, 7.9}) {
        CHECK(bessel_j(BesselOrder::zero, x) == doctest::Approx(oracles::j0_series(x)).epsilon(1e-13));
    }
    // Across the series/recurrence/asymptotic switches.
    for (double x : {8.05, 12.0, 20.0, 24.9, 25.1, 39.0, 120.0}) {
        double r0, r1;
        j_recurrence_oracle(x, r0, r1);
        CHECK(std::abs(bessel_j(BesselOrder::zero, x) - r0) < 1e-13);
        CHECK(std::abs(bessel_j(BesselOrder::one, x) - r1) < 1e-13);
    }
}

TEST_CASE("bessel_i values") {
    CHECK(bessel_i(BesselOrder::zero, 0.0) == 1.0);
    CHECK(bessel_i(BesselOrder::one, 0.0) == 0.0);

    const double i0_1 = oracles::i_series(0, 1.0);
    CHECK(i0_1 == doctest::Approx(1.26606587775201).epsilon(1e-14));
    CHECK(bessel_i(BesselOrder::zero, 1.0) == doctest::Approx(i0_1).epsilon(1e-13));

    // Series/asymptotic seam and the large-x regime against the oracle series
    // (convergent and stable for I at any x).
    for (double x : {24.9, 25.1, 40.0, 120.0, 600.0}) {
        CHECK(bessel_i(BesselOrder::zero, x) ==
              doctest::Approx(oracles::i_series(0, x)).epsilon(1e-12));
        CHECK(bessel_i(BesselOrder::one, x) ==
              doctest::Approx(oracles::i_series(1, x)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(bessel_i(BesselOrder::zero, 701.0), std::range_error);
    CHECK_THROWS_AS(bessel_i(BesselOrder::zero, -1.0), std::domain_error);
    CHECK_NOTHROW(bessel_i(BesselOrder::zero, 700.0));
}

TEST_CASE("bessel_k values") {
    const double k0_1 = oracles::k_integral(0, 1.0);
    const double k1_1 = oracles::k_integral(1, 1.0);
    CHECK(k0_1 == doctest::Approx(0.42102443824070834).epsilon(1e-12));
    CHECK(k1_1 == doctest::Approx(0.6019072301972346).epsilon(1e-12));
    CHECK(bessel_k(BesselOrder::zero, 1.0) == doctest::Approx(k0_1).epsilon(1e-12));
    CHECK(bessel_k(BesselOrder::one, 1.0) == doctest::Approx(k1_1).epsilon(1e-12));

    for (double x : {0.01, 0.5, 1.9, 2.1, 7.0, 14.9, 15.1, 40.0}) {
        CHECK(bessel_k(BesselOrder::zero, x) ==
              doctest::Approx(oracles::k_integral(0, x)).epsilon(1e-12));
        CHECK(bessel_k(BesselOrder::one, x) ==
              doctest::Approx(oracles::k_integral(1, x)).epsilon(1e-12));
    }

    CHECK_THROWS_AS(bessel_k(BesselOrder::zero, 0.0), std::domain_error);
    CHECK_THROWS_AS(bessel_k(BesselOrder::zero, -2.0), std::domain_error);
}

TEST_CASE("Wronskian identity x (K0 I1 + I0 K1) = 1") {
    for (double x : oracles::log_grid(1e-3, 50.0, 50)) {
        const double w = x * (bessel_k(BesselOrder::zero, x) * bessel_i(BesselOrder::one, x) +
                              bessel_i(BesselOrder::zero, x) * bessel_k(BesselOrder::one, x));
        CHECK(std::abs(w - 1.0) <= 1e-11);
    }
}

TEST_CASE("derivative relations") {
    // J0' = -J1, I0' = I1, K0' = -K1 against extrapolated central differences.
    for (double x : {0.3, 1.0, 2.7, 6.0, 11.0, 30.0}) {
        const double dj0 = oracles::derivative([](double t) { return j0(t); }, x);
        CHECK(std::abs(dj0 + j1(x)) < 1e-8);
        const double di0 = oracles::derivative([](double t) { return i0(t); }, x);
        CHECK(std::abs(di0 - i1(x)) < 1e-8 * std::max(1.0, i1(x)));
        const double dk0 = oracles::derivative([](double t) { return k0(t); }, x);
        CHECK(std::abs(dk0 + k1(x)) < 1e-8 * std::max(1.0, k1(x)));
    }
}

TEST_CASE("gamma values") {
    CHECK(gamma(cplx(1.0, 0.0)).real() == doctest::Approx(1.0).epsilon(1e-14));
    CHECK(gamma(cplx(0.5, 0.0)).real() ==
          doctest::Approx(std::sqrt(oracles::pi)).epsilon(1e-14));

    // |Gamma(1+i)|^2 = pi / sinh(pi), plus the full value against Stirling.
    const cplx g1i = gamma(cplx(1.0, 1.0));
    CHECK(std::norm(g1i) == doctest::Approx(oracles::pi / std::sinh(oracles::pi)).epsilon(1e-13));
    const cplx ref = oracles::gamma_stirling(cplx(1.0, 1.0));
    CHECK(std::abs(g1i - ref) / std::abs(ref) < 1e-12);

    CHECK_THROWS_AS(gamma(cplx(0.0, 0.0)), fraclap::pole_error);
    CHECK_THROWS_AS(gamma(cplx(-3.0, 0.0)), fraclap::pole_error);
    try {
        gamma(cplx(-2.0, 0.0));
    } catch (const fraclap::pole_error& e) {
        CHECK(e.pole() == cplx(-2.0, 0.0));
    }
}

TEST_CASE("gamma against Stirling across the plane") {
    for (double re : {0.5, 1.7, 4.2, 9.0}) {
        for (double im : {0.0, 0.5, 3.0, 25.0, 80.0, 200.0}) {
            const cplx z(re, im);
            const cplx got = gamma(z);
            const cplx ref = oracles::gamma_stirling(z);
            CHECK(std::abs(got - ref) / std::abs(ref) < 1e-12);
        }
    }
    // Left half-plane via reflection (moderate imaginary parts).
    for (double re : {-0.3, -2.4, -7.6}) {
        for (double im : {0.25, 1.5, 10.0}) {
            const cplx z(re, im);
            const cplx got = gamma(z);
            const cplx ref = oracles::gamma_stirling(z);
            CHECK(std::abs(got - ref) / std::abs(ref) < 1e-11);
        }
    }
}

TEST_CASE("gamma reflection identity") {
    std::mt19937 rng(12345);
    std::uniform_real_distribution<double> re(-8.0, 8.0);
    std::uniform_real_distribution<double> im(0.05, 12.0);
    int tested = 0;
    while (tested < 20) {
        cplx z(re(rng), im(rng));
        if (std::abs(z.real() - std::round(z.real())) < 0.05) continue; // stay off poles
        const cplx lhs = gamma(z) * gamma(1.0 - z) * std::sin(oracles::pi * z) / oracles::pi;
        CHECK(std::abs(lhs - 1.0) < 1e-10);
        ++tested;
    }
}

TEST_CASE("bessel_j_zero estimates") {
    const auto raw = bessel_j_zero(BesselOrder::zero, 1, false);
    CHECK(raw.value == doctest::Approx(3.0 * oracles::pi / 4.0).epsilon(1e-15));
    CHECK_FALSE(raw.refined);

    const auto fine = bessel_j_zero(BesselOrder::zero, 1, true);
    const double b = 3.0 * oracles::pi / 4.0;
    CHECK(fine.value == doctest::Approx(b + 1.0 / (8.0 * b)).epsilon(1e-15));

    const auto second = bessel_j_zero(BesselOrder::zero, 2, true);
    const double true_z2 = oracles::bisect([](double x) { return oracles::j0_series(x); }, 5.0, 6.0);
    CHECK(true_z2 == doctest::Approx(5.520078110286311).epsilon(1e-13));
    CHECK(std::abs(second.value - true_z2) < 4.6e-4);

    CHECK_THROWS_AS(bessel_j_zero(BesselOrder::zero, 0, false), std::domain_error);
}

TEST_CASE("zero bracketing and interlacing") {
    for (int n = 0; n <= 1; ++n) {
        const auto nu = n == 0 ? BesselOrder::zero : BesselOrder::one;
        double prev_value = 0.0;
        double prev_sign = 0.0;
        for (int k = 1; k <= 15; ++k) {
            const auto est = bessel_j_zero(nu, k, true);
            CHECK(est.value > prev_value);
            if (k >= 3) {
                const double spacing = est.value - prev_value;
                CHECK(std::abs(spacing - oracles::pi) < 0.05 * oracles::pi);
            }
            // J_nu at consecutive refined estimates alternates in sign: each
            // estimate lands on the same side of its true zero.
            const double s = bessel_j(nu, est.value);
            if (k > 1) CHECK(s * prev_sign < 0.0);
            prev_sign = s;
            prev_value = est.value;
        }
    }
}
