// Steady-state radial concentration profiles of the space-fractional
// reaction-diffusion system with cylindrical symmetry: a disk source of
// radius L and intensity sigma, first-order elimination at rate q, and a
// Riesz Laplacian of order alpha acting on the concentration.
//
// Solution paths:
//   solve_integer   closed form in I0/I1/K0/K1, alpha = 1 only;
//   solve_full      Hankel inversion of sigma L J0(rho r) J1(rho L) /
//                   (rho^{2 alpha} + q), any alpha in (0, 1];
//   solve_ring      fictitious delta ring source on r = L (asymptotic
//                   surrogate in the fractional case);
//   calibrate_ring  the ring intensity that matches solve_full at r = L;
//   solve_point     impulse source at the origin (large-r asymptote of the
//                   ring form);
//   asymptotic_tail leading algebraic large-r term of solve_point.
#pragma once

#include <vector>

#include "fraclap/dequad.hpp"
#include "fraclap/hankel.hpp"

namespace fraclap::model {

// Physical parameters. A diffusion constant D != 1 is folded in once at
// construction (sigma' = sigma/D, q' = q/D); evaluators never see D.
class ModelParams {
public:
    ModelParams(double sigma, double q, double D, double L, double alpha);

    double sigma() const { return sigma_; }  // effective source intensity
    double q() const { return q_; }          // effective elimination rate
    double D() const { return d_; }          // as supplied, for provenance
    double L() const { return len_; }
    double alpha() const { return alpha_; }
    double a() const { return 2.0 * alpha_; }
    double beta() const { return 2.0 * alpha_ - 1.0; }

private:
    double sigma_, q_, d_, len_, alpha_;
};

enum class SolveMethod {
    integer_closed,
    full_quadrature,
    ring,
    point_asymptotic,
    tail_asymptotic,
    hfun,
};

const char* method_name(SolveMethod m);

struct ProfileSample {
    double r;
    double c;
    double err_est; // 0 for closed-form methods
};

struct RadialProfile {
    SolveMethod method;
    ModelParams params;
    std::vector<ProfileSample> samples; // strictly increasing in r
};

enum class FullEngine { partitioned, oscillatory };

// Closed-form integer-order solution (alpha must be exactly 1):
//   r < L: sigma/q - (sigma L / sqrt q) K1(sqrt q L) I0(sqrt q r)
//   r > L: (sigma L / sqrt q) I1(sqrt q L) K0(sqrt q r)
// and the mean of the one-sided limits at r = L.
double solve_integer(const ModelParams& p, double r);

// Full fractional solution c(r) = sigma L int J0(rho r) J1(rho L) /
// (rho^{2 alpha} + q) d rho by the selected quadrature engine.
dequad::QuadratureResult solve_full(const ModelParams& p, double r,
                                    FullEngine engine = FullEngine::partitioned);

// Ring-source solution sigma_ring int J0(rho r) J0(rho L) rho /
// (rho^{2 alpha} + q) d rho, r > 0.
dequad::QuadratureResult solve_ring(const ModelParams& p, double sigma_ring, double r);

// The unique ring intensity sigma' with solve_ring(sigma', L) = solve_full(L):
// sigma' = sigma L I1 / I2 in terms of the two Bessel integrals at L.
double calibrate_ring(const ModelParams& p);

// Point-source solution c_a(r) = sigma int J0(rho r) rho / (rho^a + q) d rho,
// a = 2 alpha; diverges at r = 0 for a <= 2, so r must be positive.
dequad::QuadratureResult solve_point(const ModelParams& p, double r);

// Leading algebraic tail of solve_point, valid for a = 2 alpha in (1, 2]:
//   sigma Gamma(a/2 + 1)^2 2^{a+1} sin(pi a / 2) / (pi q^2 r^{a+2});
// identically zero at a = 2, where the decay is exponential instead.
double asymptotic_tail(const ModelParams& p, double r);

// Profile over a log-spaced grid [r_min, r_max] with n points; samples may
// be computed in parallel (threads = 0 picks the hardware default) and are
// assembled in deterministic r order.
RadialProfile profile(const ModelParams& p, SolveMethod method, double r_min,
                      double r_max, int n, int threads = 1);

} // namespace fraclap::model
