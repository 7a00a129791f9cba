// Double-exponential quadrature engines: tanh-sinh on finite intervals,
// the exp-sinh map on (0, inf), and the Ooura-Mori map for oscillatory
// semi-infinite integrals with sin/cos/J0/J1 kernels.
//
// All engines are trapezoid sums over a transformed line; the mesh h is
// halved until two successive levels agree within tolerance. The engines
// are pure; a caller-supplied integrand is invoked sequentially within one
// run, so it need not be reentrant.
#pragma once

#include <functional>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap::dequad {

struct QuadratureConfig {
    double h0 = 0.25;        // initial mesh
    int max_levels = 10;     // halvings of h
    double abs_tol = 1e-12;
    double rel_tol = 1e-10;
    long max_nodes = 4000000; // guard on total integrand evaluations
};

struct QuadratureResult {
    double value = 0.0;
    double err_est = 0.0;    // inter-level discrepancy (conservative)
    long nodes_used = 0;
    bool converged = false;  // err_est <= max(abs_tol, rel_tol*|value|)
};

// Optional per-level diagnostics for convergence-behavior tests.
struct LevelTrace {
    std::vector<double> values;         // one entry per level
    std::vector<double> discrepancies;  // |values[l] - values[l-1]|, l >= 1
};

using Integrand = std::function<double(double)>;

// Integral of f over (0, inf); f may have an algebraic singularity at 0 and
// must decay at infinity (not merely oscillate). Map x = exp((pi/2) sinh t).
QuadratureResult de_semiinfinite(const Integrand& f, const QuadratureConfig& cfg = {},
                                 LevelTrace* trace = nullptr);

// Integral of f over [a, b] with at-worst integrable endpoint singularities.
QuadratureResult de_finite(const Integrand& f, double a, double b,
                           const QuadratureConfig& cfg = {}, LevelTrace* trace = nullptr);

enum class OscKernel { bessel_j0, bessel_j1, sin, cos };

// Integral of g(x) * kernel(omega x) over (0, inf). Uses the map
// x = (pi/(omega h)) * t / (1 - exp(-6 sinh t)) with the node offset chosen
// so that nodes approach the kernel's asymptotic zeros (phase -pi/4 for J0,
// -3pi/4 for J1 in the cosine convention).
QuadratureResult de_oscillatory(const Integrand& g, OscKernel kind, double omega,
                                const QuadratureConfig& cfg = {}, LevelTrace* trace = nullptr);

} // namespace fraclap::dequad
