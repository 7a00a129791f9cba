// Bessel functions of the first kind, orders 0 and 1, and their zeros.
//
// Three regimes:
//   x < 8    ascending power series, summed to machine convergence;
//   8..25    Miller's downward recurrence with the standard normalization
//            1 = J0 + 2*(J2 + J4 + ...), which bridges the gap where the
//            series loses digits to cancellation and the asymptotic series
//            cannot yet reach 1e-12;
//   x >= 25  Hankel amplitude-phase expansion with adaptively truncated
//            P/Q series (smallest term < 1e-18 there).

#include "fraclap/specfun.hpp"

#include <cmath>
#include <limits>
#include <vector>

namespace fraclap::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;

double j_series(int nu, double x) {
    const double w = 0.25 * x * x;
    double term = (nu == 0) ? 1.0 : 0.5 * x;
    double sum = term;
    for (int k = 1; k < 80; ++k) {
        term *= -w / (static_cast<double>(k) * (k + nu));
        sum += term;
        if (std::abs(term) < 1e-17 * (std::abs(sum) + 1e-300)) break;
    }
    return sum;
}

// Downward recurrence J_{k-1} = (2k/x) J_k - J_{k+1} from a start order
// high enough that J_M(x) is negligible, normalized afterwards.
void j_miller(double x, double& out_j0, double& out_j1) {
    int m = static_cast<int>(x) + 48;
    if (m % 2 != 0) ++m;
    double jp = 0.0;           // J_{k+1}
    double jc = 1e-305;        // J_k (arbitrary seed, rescaled away)
    double v0 = 0.0, v1 = 0.0, norm = 0.0;
    for (int k = m; k >= 1; --k) {
        double jm = (2.0 * k / x) * jc - jp;
        jp = jc;
        jc = jm;
        if (k - 1 == 1) v1 = jp;
        if (k - 1 == 0) v0 = jc;
        if ((k - 1) % 2 == 0 && k - 1 >= 2) norm += 2.0 * jc;
        if (std::abs(jc) > 1e280) {
            jc *= 1e-280;
            jp *= 1e-280;
            norm *= 1e-280;
            v1 *= 1e-280;
        }
    }
    norm += v0;
    out_j0 = v0 / norm;
    out_j1 = v1 / norm;
}

// P and Q of the large-argument form J_nu = sqrt(2/(pi x)) (P cos X - Q sin X),
// X = x - (2 nu + 1) pi/4, generated term by term until they stop improving.
void jpq_asymptotic(int nu, double x, double& p, double& q) {
    const double mu = 4.0 * nu * nu;
    double term = 1.0;
    p = 1.0;
    q = 0.0;
    double prev = 1.0;
    for (int m = 1; m <= 40; ++m) {
        const double tm = 2.0 * m - 1.0;
        term *= (mu - tm * tm) / (8.0 * m * x);
        if (std::abs(term) >= prev) break;     // asymptotic tail turned
        const int r = m % 4;
        if (r == 1)      q += term;
        else if (r == 2) p -= term;
        else if (r == 3) q -= term;
        else             p += term;
        prev = std::abs(term);
        if (prev < 1e-18) break;
    }
}

double j_asymptotic(int nu, double x) {
    double p, q;
    jpq_asymptotic(nu, x, p, q);
    const double chi = x - (2 * nu + 1) * (kPi / 4.0);
    return std::sqrt(2.0 / (kPi * x)) * (p * std::cos(chi) - q * std::sin(chi));
}

} // namespace

double bessel_j(BesselOrder nu, double x) {
    if (!std::isfinite(x)) throw std::domain_error("bessel_j: non-finite argument");
    const int n = order_index(nu);
    double sign = 1.0;
    if (x < 0.0) {              // J0 even, J1 odd
        x = -x;
        if (n == 1) sign = -1.0;
    }
    if (x < 8.0) return sign * j_series(n, x);
    if (x < 25.0) {
        double v0, v1;
        j_miller(x, v0, v1);
        return sign * (n == 0 ? v0 : v1);
    }
    return sign * j_asymptotic(n, x);
}

ZeroEstimate bessel_j_zero(BesselOrder nu, int k, bool refined) {
    if (k < 1) throw std::domain_error("bessel_j_zero: zero index must be >= 1");
    const int n = order_index(nu);
    const double b = kPi * (k + 0.5 * n - 0.25);
    double value = b;
    if (refined) value = b - (4.0 * n * n - 1.0) / (8.0 * b);
    return ZeroEstimate{k, value, refined};
}

} // namespace fraclap::specfun
