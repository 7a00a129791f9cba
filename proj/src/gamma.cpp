// Gamma function on the complex plane.
//
// Lanczos rational approximation (g = 607/128, 15 terms, Godfrey's
// coefficient set) on Re z >= 0.5, continued to the left half-plane by the
// reflection formula. Good to ~1e-14 relative over the tested strip
// |Im z| <= 200.

#include "fraclap/specfun.hpp"

#include <cmath>

namespace fraclap::specfun {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kSqrtTwoPi = 2.50662827463100050242;
constexpr double kLanczosG = 4.7421875; // 607/128

constexpr double kLanczosCoeff[15] = {
    0.99999999999999709182,
    57.156235665862923517,
    -59.597960355475491248,
    14.136097974741747174,
    -0.49191381609762019978,
    0.33994649984811888699e-4,
    0.46523628927048575665e-4,
    -0.98374475304879564677e-4,
    0.15808870322491248884e-3,
    -0.21026444172410488319e-3,
    0.21743961811521264320e-3,
    -0.16431810653676389022e-3,
    0.84418223983852743293e-4,
    -0.26190838401581408670e-4,
    0.36899182659531622704e-5,
};

using cplx = std::complex<double>;

cplx gamma_right_half(cplx z) {
    cplx acc = kLanczosCoeff[0];
    for (int k = 1; k < 15; ++k) acc += kLanczosCoeff[k] / (z + static_cast<double>(k - 1));
    const cplx t = z + (kLanczosG - 0.5);
    return kSqrtTwoPi * std::pow(t, z - 0.5) * std::exp(-t) * acc;
}

// sin(pi z) with the real part reduced modulo 2, so the result stays
// accurate near the zeros even for large |Re z|.
cplx sinpi(cplx z) {
    const double n = std::round(z.real());
    const cplx w = z - n;
    const double parity = (std::fmod(std::abs(n), 2.0) < 0.5) ? 1.0 : -1.0;
    return parity * std::sin(kPi * w);
}

} // namespace

cplx gamma(cplx z) {
    if (z.imag() == 0.0 && z.real() <= 0.0 && z.real() == std::floor(z.real()))
        throw pole_error("gamma: pole at nonpositive integer", z);
    if (z.real() >= 0.5) return gamma_right_half(z);
    // Reflection: Gamma(z) = pi / (sin(pi z) Gamma(1 - z))
    return kPi / (sinpi(z) * gamma_right_half(1.0 - z));
}

double gamma(double x) {
    return gamma(cplx(x, 0.0)).real();
}

} // namespace fraclap::specfun
