// Double-exponential quadrature engines.
//
// Every engine is the same trapezoid-with-level-halving driver over a
// different variable change. Nodes are summed outward from t = 0 until the
// weighted term drops below abs_tol * 2^-6 (the standard DE truncation);
// an isolated non-finite integrand value at the far end of a direction is
// treated as the endpoint limit and contributes zero, provided the two
// neighboring terms were finite and decreasing.

#include "fraclap/dequad.hpp"

#include <cmath>
#include <limits>

#include "fraclap/specfun.hpp"

namespace fraclap::dequad {

namespace {

constexpr double kPi = 3.14159265358979323846;
constexpr double kHalfPi = 1.57079632679489661923;

// status codes from a node evaluation
enum NodeStatus { kOk = 0, kPastEnd = 1, kNonFinite = 2 };

struct LineSum {
    double value = 0.0;
    bool node_cap_hit = false;
};

// Sums h * sum_k term(t0 + k h) for k in Z, walking outward from k = 0.
// `term` returns the weighted integrand f(x(t)) x'(t) and sets the status.
template <typename TermFn>
LineSum sum_line(const TermFn& term, double h, double offset, double term_thresh,
                 long max_nodes, long& nodes_used, int streak_needed,
                 const char* engine_name) {
    LineSum out;
    double s = 0.0;

    auto run_direction = [&](int dir, bool include_center) -> bool {
        double prev1 = std::numeric_limits<double>::infinity();
        double prev2 = std::numeric_limits<double>::infinity();
        int streak = 0;
        for (long k = include_center ? 0 : 1;; ++k) {
            if (nodes_used >= max_nodes) {
                out.node_cap_hit = true;
                return false;
            }
            int status = kOk;
            const double t = offset + dir * k * h;
            const double v = term(t, status);
            ++nodes_used;
            if (status == kPastEnd) return true;
            if (status == kNonFinite) {
                // Endpoint-limit failure: accept as zero only when the tail
                // was already heading down; otherwise the integrand is bad.
                if (k >= 2 && std::isfinite(prev1) && std::isfinite(prev2) &&
                    std::abs(prev1) <= std::abs(prev2))
                    return true;
                throw eval_error(std::string(engine_name) +
                                 ": integrand returned a non-finite value");
            }
            s += v;
            if (std::abs(v) * h < term_thresh) {
                if (++streak >= streak_needed) return true;
            } else {
                streak = 0;
            }
            prev2 = prev1;
            prev1 = v;
        }
    };

    if (!run_direction(+1, true)) return out;
    run_direction(-1, false);
    out.value = s * h;
    return out;
}

// Shared level-halving driver.
template <typename LevelFn>
QuadratureResult run_levels(const LevelFn& level_value, const QuadratureConfig& cfg,
                            LevelTrace* trace) {
    QuadratureResult res;
    double prev = 0.0;
    bool have_prev = false;
    double h = cfg.h0;
    for (int level = 0; level < cfg.max_levels; ++level, h *= 0.5) {
        bool cap_hit = false;
        const double v = level_value(h, res.nodes_used, cap_hit);
        if (cap_hit) {
            res.converged = false;
            return res; // best previous estimate already stored
        }
        if (trace) trace->values.push_back(v);
        if (have_prev) {
            const double disc = std::abs(v - prev);
            if (trace) trace->discrepancies.push_back(disc);
            res.value = v;
            res.err_est = disc;
            if (disc <= std::max(cfg.abs_tol, cfg.rel_tol * std::abs(v))) {
                res.converged = true;
                return res;
            }
        } else {
            res.value = v;
            res.err_est = std::abs(v);
        }
        prev = v;
        have_prev = true;
    }
    res.converged = false;
    return res;
}

} // namespace

QuadratureResult de_semiinfinite(const Integrand& f, const QuadratureConfig& cfg,
                                 LevelTrace* trace) {
    const double thresh = cfg.abs_tol * 0.015625; // 2^-6
    auto level = [&](double h, long& nodes, bool& cap_hit) -> double {
        auto term = [&](double t, int& status) -> double {
            const double u = kHalfPi * std::sinh(t);
            if (u > 700.0 || u < -745.0) {
                status = kPastEnd; // abscissa over/underflows; f must decay
                return 0.0;
            }
            const double x = std::exp(u);
            const double w = kHalfPi * std::cosh(t) * x;
            if (!std::isfinite(w) || w == 0.0) {
                status = kPastEnd;
                return 0.0;
            }
            const double fx = f(x);
            if (!std::isfinite(fx)) {
                status = kNonFinite;
                return 0.0;
            }
            return fx * w;
        };
        const LineSum s = sum_line(term, h, 0.0, thresh, cfg.max_nodes, nodes, 2,
                                   "de_semiinfinite");
        cap_hit = s.node_cap_hit;
        return s.value;
    };
    return run_levels(level, cfg, trace);
}

QuadratureResult de_finite(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg, LevelTrace* trace) {
    if (!(a < b)) throw std::domain_error("de_finite: requires a < b");
    const double half = 0.5 * (b - a);
    const double thresh = cfg.abs_tol * 0.015625;
    auto level = [&](double h, long& nodes, bool& cap_hit) -> double {
        auto term = [&](double t, int& status) -> double {
            const double u = kHalfPi * std::sinh(t);
            if (std::abs(u) > 350.0) {
                status = kPastEnd; // weight underflows
                return 0.0;
            }
            const double ch = std::cosh(u);
            const double w = half * kHalfPi * std::cosh(t) / (ch * ch);
            if (!std::isfinite(w) || w == 0.0) {
                status = kPastEnd;
                return 0.0;
            }
            // Distance to the near endpoint, computed without cancellation.
            double x;
            if (u >= 0.0) {
                const double e = std::exp(-2.0 * u);
                x = b - half * (2.0 * e / (1.0 + e));
            } else {
                const double e = std::exp(2.0 * u);
                x = a + half * (2.0 * e / (1.0 + e));
            }
            const double fx = f(x);
            if (!std::isfinite(fx)) {
                status = kNonFinite;
                return 0.0;
            }
            return fx * w;
        };
        const LineSum s =
            sum_line(term, h, 0.0, thresh, cfg.max_nodes, nodes, 2, "de_finite");
        cap_hit = s.node_cap_hit;
        return s.value;
    };
    return run_levels(level, cfg, trace);
}

QuadratureResult de_oscillatory(const Integrand& g, OscKernel kind, double omega,
                                const QuadratureConfig& cfg, LevelTrace* trace) {
    if (!(omega > 0.0)) throw std::domain_error("de_oscillatory: omega must be positive");

    // Node offset parks the large-t nodes on the kernel's asymptotic zeros:
    // J0 ~ cos(y - pi/4), J1 ~ cos(y - 3pi/4).
    double delta = 0.0;
    switch (kind) {
        case OscKernel::sin: delta = 0.0; break;
        case OscKernel::cos: delta = -0.5; break;
        case OscKernel::bessel_j0: delta = -0.25; break;
        case OscKernel::bessel_j1: delta = 0.25; break;
    }

    auto kernel = [kind](double y) -> double {
        switch (kind) {
            case OscKernel::sin: return std::sin(y);
            case OscKernel::cos: return std::cos(y);
            case OscKernel::bessel_j0: return specfun::j0(y);
            default: return specfun::j1(y);
        }
    };

    const double thresh = cfg.abs_tol * 0.015625;
    auto level = [&](double h, long& nodes, bool& cap_hit) -> double {
        const double m_over_h = kPi / h; // kernel argument scale: M = pi/h
        auto term = [&](double t, int& status) -> double {
            // phi(t) = t / (1 - exp(-6 sinh t)), the oscillatory DE map.
            double phi, dphi;
            const double v = 6.0 * std::sinh(t);
            if (v > 700.0) {
                phi = t;
                dphi = 1.0;
            } else if (v < -700.0) {
                status = kPastEnd; // abscissa underflows to 0
                return 0.0;
            } else if (std::abs(t) < 1e-8) {
                phi = 1.0 / 6.0 + 0.5 * t;
                dphi = 0.5;
            } else {
                const double e = std::exp(-v);
                const double d = -std::expm1(-v);
                phi = t / d;
                dphi = 1.0 / d - t * 6.0 * std::cosh(t) * e / (d * d);
            }
            const double y = m_over_h * phi; // = omega * x
            const double x = y / omega;
            if (x <= 0.0 || !std::isfinite(x)) {
                status = kPastEnd;
                return 0.0;
            }
            const double gx = g(x);
            if (!std::isfinite(gx)) {
                status = kNonFinite;
                return 0.0;
            }
            return gx * kernel(y) * (m_over_h / omega) * dphi;
        };
        const LineSum s = sum_line(term, h, delta * h, thresh, cfg.max_nodes, nodes, 4,
                                   "de_oscillatory");
        cap_hit = s.node_cap_hit;
        return s.value;
    };
    return run_levels(level, cfg, trace);
}

} // namespace fraclap::dequad
