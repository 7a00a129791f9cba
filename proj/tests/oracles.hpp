// Test-only reference implementations, deliberately independent of the
// library code paths they are used to check.
#pragma once

#include <cmath>
#include <complex>
#include <functional>
#include <vector>

namespace oracles {

inline constexpr double pi = 3.14159265358979323846;

// Ascending series for J0, direct and self-contained.
inline double j0_series(double x) {
    const double w = 0.25 * x * x;
    double term = 1.0, sum = 1.0;
    for (int k = 1; k < 200; ++k) {
        term *= -w / (static_cast<double>(k) * k);
        sum += term;
        if (std::abs(term) < 1e-18) break;
    }
    return sum;
}

// First positive root of J0 by bisection on the ascending series.
inline double j0_first_zero() {
    double lo = 2.0, hi = 3.0;
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (j0_series(lo) * j0_series(mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Root of f by bisection in [lo, hi]; requires a sign change.
inline double bisect(const std::function<double(double)>& f, double lo, double hi) {
    for (int i = 0; i < 200; ++i) {
        const double mid = 0.5 * (lo + hi);
        if (f(lo) * f(mid) <= 0.0) hi = mid;
        else lo = mid;
    }
    return 0.5 * (lo + hi);
}

// Ascending series for I0 and I1 summed to machine convergence.
inline double i_series(int nu, double x) {
    const double w = 0.25 * x * x;
    double term = (nu == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 500; ++k) {
        term *= w / (static_cast<double>(k) * (k + nu));
        sum += term;
        if (term < 1e-18 * sum) break;
    }
    return sum;
}

// K_nu by Simpson's rule on the integral representation
//   K_nu(x) = int_0^inf exp(-x cosh t) cosh(nu t) dt.
// A fixed fine grid is plenty for the x = O(1) arguments the tests use.
inline double k_integral(int nu, double x) {
    const double t_end = std::acosh(750.0 / x);
    const int n = 40000; // even
    const double h = t_end / n;
    auto f = [&](double t) {
        const double c = std::cosh(t);
        const double e = x * c;
        if (e > 745.0) return 0.0;
        return std::exp(-e) * (nu == 0 ? 1.0 : c);
    };
    double s = f(0.0) + f(t_end);
    for (int i = 1; i < n; ++i) s += f(i * h) * ((i % 2) ? 4.0 : 2.0);
    return s * h / 3.0;
}

// log-Gamma by the Stirling series after shifting Re z up by recurrence.
// Coefficients are the exact rationals B_{2n} / (2n (2n-1)).
inline std::complex<double> log_gamma_stirling(std::complex<double> z) {
    static const double coeff[8] = {
        1.0 / 12.0,        -1.0 / 360.0,       1.0 / 1260.0,   -1.0 / 1680.0,
        1.0 / 1188.0,      -691.0 / 360360.0,  7.0 / 1560.0,   -3617.0 / 122400.0,
    };
    std::complex<double> shift_log = 0.0;
    int shifts = 0;
    while (std::abs(z) < 25.0 && shifts < 60) {
        shift_log += std::log(z);
        z += 1.0;
        ++shifts;
    }
    std::complex<double> s = (z - 0.5) * std::log(z) - z + 0.5 * std::log(2.0 * pi);
    std::complex<double> zp = z;
    const std::complex<double> z2 = z * z;
    for (int n = 0; n < 8; ++n) {
        s += coeff[n] / zp;
        zp *= z2;
    }
    return s - shift_log;
}

inline std::complex<double> gamma_stirling(std::complex<double> z) {
    return std::exp(log_gamma_stirling(z));
}

// Central finite difference with one step of Richardson extrapolation.
inline double derivative(const std::function<double(double)>& f, double x, double h = 1e-4) {
    const double d1 = (f(x + h) - f(x - h)) / (2.0 * h);
    const double d2 = (f(x + 0.5 * h) - f(x - 0.5 * h)) / h;
    return (4.0 * d2 - d1) / 3.0;
}

// Pairwise-compensated (Kahan) sum.
inline double kahan_sum(const std::vector<double>& xs) {
    double s = 0.0, c = 0.0;
    for (double x : xs) {
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        s = t;
    }
    return s;
}

// ln 2 from the alternating harmonic series: compensated sum of 1e7 terms,
// with the two-partial-sum average that cancels the leading truncation term.
inline double ln2_series() {
    const int n = 10000000;
    double s = 0.0, c = 0.0;
    double last = 0.0;
    for (int k = 0; k < n; ++k) {
        const double x = ((k % 2) ? -1.0 : 1.0) / (k + 1.0);
        const double y = x - c;
        const double t = s + y;
        c = (t - s) - y;
        last = s;
        s = t;
    }
    return 0.5 * (s + last);
}

// Log-spaced grid, inclusive of both ends.
inline std::vector<double> log_grid(double lo, double hi, int n) {
    std::vector<double> g(n);
    for (int i = 0; i < n; ++i)
        g[i] = lo * std::pow(hi / lo, static_cast<double>(i) / (n - 1));
    return g;
}

} // namespace oracles
