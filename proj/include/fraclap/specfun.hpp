// Self-contained special functions: Bessel J/I/K of orders 0 and 1,
// the Gamma function on the complex plane, and asymptotic Bessel-J zeros.
//
// All routines are pure functions of their arguments and hold no global
// mutable state, so they can be called concurrently from any thread.
#pragma once

#include <complex>

#include "fraclap/errors.hpp"

namespace fraclap::specfun {

// Only the two orders the radial problem needs are representable.
enum class BesselOrder : int { zero = 0, one = 1 };

inline constexpr int order_index(BesselOrder nu) { return static_cast<int>(nu); }

// McMahon-type estimate of the k-th positive zero of J_nu.
struct ZeroEstimate {
    int k;          // one-based zero index
    double value;   // abscissa estimate, > 0
    bool refined;   // second-order correction applied
};

// Bessel function of the first kind, order 0 or 1. Accepts any finite x
// (extended to x < 0 by parity: J0 even, J1 odd).
// Relative error <= 1e-12 away from the zeros for x <= 1e4; absolute error
// <= 1e-12 against the amplitude-phase asymptotic beyond that.
double bessel_j(BesselOrder nu, double x);

// Modified Bessel function of the first kind, order 0 or 1, x >= 0.
// Overflows past x = bessel_i_max_arg and reports a range error instead of
// returning infinity.
double bessel_i(BesselOrder nu, double x);

// Largest argument accepted by bessel_i; I0(700) ~ 1.5e302 still fits in a
// double, I0(714) does not.
inline constexpr double bessel_i_max_arg = 700.0;

// Modified Bessel function of the second kind, order 0 or 1, x > 0 strictly
// (K0 and K1 diverge at the origin).
double bessel_k(BesselOrder nu, double x);

// Gamma function for complex z off the poles at 0, -1, -2, ...
// Lanczos rational approximation on Re z >= 0.5, reflection elsewhere.
std::complex<double> gamma(std::complex<double> z);

// Real-axis shortcut.
double gamma(double x);

// Estimate of the k-th positive zero of J_nu (k >= 1):
//   b = pi*(k + nu/2 - 1/4),  refined: b - (4 nu^2 - 1)/(8 b).
ZeroEstimate bessel_j_zero(BesselOrder nu, int k, bool refined);

// Short names used throughout the library.
inline double j0(double x) { return bessel_j(BesselOrder::zero, x); }
inline double j1(double x) { return bessel_j(BesselOrder::one, x); }
inline double i0(double x) { return bessel_i(BesselOrder::zero, x); }
inline double i1(double x) { return bessel_i(BesselOrder::one, x); }
inline double k0(double x) { return bessel_k(BesselOrder::zero, x); }
inline double k1(double x) { return bessel_k(BesselOrder::one, x); }

} // namespace fraclap::specfun
