// Mellin-Barnes machinery for the point-source solution.

#include "fraclap/mellin.hpp"

#include <cmath>
#include <sstream>

#include "fraclap/specfun.hpp"

namespace fraclap::mellin {

namespace {

constexpr double kPi = 3.14159265358979323846;

// sin(pi z) and cos(pi z) with the real part reduced modulo 2, accurate
// near the zeros of sin for any magnitude of Re z.
cplx sinpi(cplx z) {
    const double n = std::round(z.real());
    const cplx w = z - n;
    const double parity = (std::fmod(std::abs(n), 2.0) < 0.5) ? 1.0 : -1.0;
    return parity * std::sin(kPi * w);
}

cplx cospi(cplx z) {
    const double n = std::round(z.real());
    const cplx w = z - n;
    const double parity = (std::fmod(std::abs(n), 2.0) < 0.5) ? 1.0 : -1.0;
    return parity * std::cos(kPi * w);
}

void require_exponent(double a) {
    if (!(a > 1.0) || !(a <= 2.0))
        throw std::domain_error("mellin: exponent a must lie in (1, 2]");
}

} // namespace

cplx mellin_kernel_C(cplx s, double a, double q) {
    require_exponent(a);
    if (!(q > 0.0)) throw std::domain_error("mellin_kernel_C: q must be positive");

    const double tol = 1e-8;

    // Genuine poles on the nonpositive even integers (Gamma(s/2)^2 against a
    // single sin zero leaves a simple pole).
    if (std::abs(s.imag()) < tol) {
        const double m2 = 2.0 * std::round(0.5 * s.real());
        if (m2 <= 0.0 && std::abs(s.real() - m2) < tol)
            throw pole_error("mellin_kernel_C: pole of Gamma(s/2)", cplx(m2, 0.0));
    }

    // Zeros of the denominator sin(pi (2-s)/a) sit at s = 2 - a j, j integer.
    // Those coinciding with a nonnegative zero of sin(pi s/2) (s = 2m, m >= 1)
    // are removable; the rest are poles of C.
    bool removable_here = false;
    cplx nearest_den_zero;
    {
        const double j = std::round((2.0 - s.real()) / a);
        const double sj = 2.0 - a * j;
        if (std::abs(s.imag()) < tol && std::abs(s.real() - sj) < tol * (1.0 + std::abs(sj))) {
            nearest_den_zero = cplx(sj, 0.0);
            const double m2 = 2.0 * std::round(0.5 * sj);
            const bool coincident = (m2 >= 2.0) && (std::abs(sj - m2) < 1e-9);
            if (coincident)
                removable_here = true;
            else
                throw pole_error("mellin_kernel_C: pole of the Mellin kernel",
                                 nearest_den_zero);
        }
    }

    const cplx w2 = (2.0 - s) / a;
    cplx ratio; // sin(pi s / 2) / sin(pi (2-s)/a)
    if (removable_here && std::abs(s - nearest_den_zero) < 1e-9) {
        // Both factors vanish linearly; take the derivative ratio at the point.
        ratio = (0.5 * kPi * cospi(0.5 * nearest_den_zero)) /
                (-(kPi / a) * cospi((2.0 - nearest_den_zero) / a));
    } else {
        ratio = sinpi(0.5 * s) / sinpi(w2);
    }

    const cplx gam = specfun::gamma(0.5 * s);
    return std::pow(q, w2 - 1.0) * std::pow(2.0, s - 1.0) * gam * gam * ratio / a;
}

HKernelSpec hkernel_for_ca(double a) {
    require_exponent(a);
    HKernelSpec spec;
    spec.m = 2;
    spec.n = 1;
    spec.p = 1;
    spec.q_count = 3;
    const double ap = 1.0 - 2.0 / a;
    spec.upper = {{ap, 1.0 / a}};
    spec.lower = {{0.0, 0.5}, {ap, 1.0 / a}, {0.0, 0.5}};
    if (a == 2.0) {
        // Gamma(2/a - s/a) and Gamma(1 - s/2) cancel; the kernel collapses to
        // 2^{s-1} Gamma(s/2)^2, the Mellin pair of K0.
        spec.reduced_to_g = true;
        HKernelSpec::GSpec g;
        g.m = 2;
        g.n = 0;
        g.p = 0;
        g.q = 2;
        g.lower = {0.0, 0.0};
        spec.g_equivalent = g;
    }
    return spec;
}

cplx hkernel_gamma_product(const HKernelSpec& spec, cplx s) {
    cplx num = 1.0, den = 1.0;
    for (int j = 0; j < spec.m; ++j) {
        const auto& [b, B] = spec.lower[j];
        num *= specfun::gamma(b + B * s);
    }
    for (int j = spec.m; j < spec.q_count; ++j) {
        const auto& [b, B] = spec.lower[j];
        den *= specfun::gamma(1.0 - b - B * s);
    }
    for (int j = 0; j < spec.n; ++j) {
        const auto& [av, A] = spec.upper[j];
        num *= specfun::gamma(1.0 - av - A * s);
    }
    for (int j = spec.n; j < spec.p; ++j) {
        const auto& [av, A] = spec.upper[j];
        den *= specfun::gamma(av + A * s);
    }
    return num / den;
}

namespace {

double hfun_contour(double a, double q, double r, const ContourSpec* contour) {
    const double lo = 2.0 - a, hi = 2.0 / a;
    double c = 0.5 * (lo + hi);
    if (contour) {
        c = contour->c;
        if (!(c > lo) || !(c < hi))
            throw std::domain_error(
                "hfun_point_solution: contour abscissa outside the admissible "
                "strip (2-a, 2/a)");
    }

    const double lnr = std::log(r);
    auto f = [&](double t) {
        const cplx s(c, t);
        const cplx v = mellin_kernel_C(s, a, q) * std::exp(cplx(0.0, -t * lnr));
        return v.real();
    };

    // The integrand decays like exp(-pi t / a) times a small power, so a
    // truncation point with generous margin is cheap to find by scanning.
    double t_max = contour ? contour->t_max : 0.0;
    if (!contour) {
        t_max = 10.0;
        while (t_max < 400.0 && std::abs(f(t_max)) > 1e-17) t_max *= 1.3;
    }

    if (contour && contour->nodes > 0) {
        const double h = t_max / contour->nodes;
        double sum = 0.5 * f(0.0);
        for (int k = 1; k <= contour->nodes; ++k) sum += f(k * h);
        return std::pow(r, -c) / kPi * h * sum;
    }

    double h = 0.25;
    double prev = 0.0;
    bool have_prev = false;
    for (int level = 0; level < 14; ++level, h *= 0.5) {
        double sum = 0.5 * f(0.0);
        for (double t = h; t <= t_max; t += h) sum += f(t);
        const double val = std::pow(r, -c) / kPi * h * sum;
        if (have_prev && std::abs(val - prev) <= 1e-13 * std::max(1.0, std::abs(val)))
            return val;
        prev = val;
        have_prev = true;
    }
    std::ostringstream msg;
    msg << "hfun_point_solution: contour quadrature stalled (decay rate pi/a = "
        << kPi / a << ", t_max = " << t_max << ", last value " << prev << ")";
    throw eval_error(msg.str());
}

double hfun_residues(double a, double q, double r, int terms) {
    if (terms < 1) throw std::domain_error("hfun_point_solution: need at least one residue");
    double sum = 0.0;
    double prev_mag = 0.0;
    for (int k = 1; k <= terms; ++k) {
        const double g = specfun::gamma(1.0 + 0.5 * a * k);
        const double sgn = (k % 2 == 1) ? 1.0 : -1.0;
        const double sq = sinpi(cplx(0.5 * a * k, 0.0)).real();
        const double term = sgn * std::pow(q, -(k + 1.0)) * g * g *
                            std::pow(2.0, 1.0 + a * k) * sq /
                            (kPi * std::pow(r, 2.0 + a * k));
        if (k > 1 && std::abs(term) > prev_mag) {
            std::ostringstream msg;
            msg << "hfun_point_solution: residue series diverges at k = " << k
                << " for r = " << r << " (partial sum " << sum
                << "); the expansion is valid only for larger r";
            throw eval_error(msg.str());
        }
        sum += term;
        prev_mag = std::abs(term);
    }
    return sum;
}

} // namespace

double hfun_point_solution(double a, double q, double r, HfunStrategy strategy,
                           const ContourSpec* contour, int residue_terms) {
    require_exponent(a);
    if (!(q > 0.0)) throw std::domain_error("hfun_point_solution: q must be positive");
    if (!(r > 0.0)) throw std::domain_error("hfun_point_solution: r must be positive");
    if (strategy == HfunStrategy::contour) return hfun_contour(a, q, r, contour);
    return hfun_residues(a, q, r, residue_terms);
}

} // namespace fraclap::mellin
