// Mellin-transform representation of the point-source solution: the
// closed-form kernel C(s), its Fox H parameterization, and desk-scale
// numerical evaluation by Bromwich-contour quadrature or by the truncated
// residue series over the right-half-plane poles.
#pragma once

#include <complex>
#include <optional>
#include <utility>
#include <vector>

#include "fraclap/errors.hpp"

namespace fraclap::mellin {

using cplx = std::complex<double>;

// Orders and parameter rows of a Fox H kernel
//   prod_{j<=m} Gamma(b_j + B_j s) prod_{j<=n} Gamma(1 - a_j - A_j s)
//   / ( prod_{j>m} Gamma(1 - b_j - B_j s) prod_{j>n} Gamma(a_j + A_j s) ).
struct HKernelSpec {
    int m = 0, n = 0, p = 0, q_count = 0;
    std::vector<std::pair<double, double>> upper; // (a_j, A_j), length p
    std::vector<std::pair<double, double>> lower; // (b_j, B_j), length q_count

    // Set when a canceling Gamma pair reduces the kernel to a Meijer G form.
    bool reduced_to_g = false;
    struct GSpec {
        int m = 0, n = 0, p = 0, q = 0;
        std::vector<double> upper;
        std::vector<double> lower;
    };
    std::optional<GSpec> g_equivalent;
};

// Vertical Bromwich line Re(s) = c, truncated at |Im s| = t_max with the
// given node count. When omitted, the evaluator picks the midpoint of the
// admissible strip and adapts t_max and the mesh itself.
struct ContourSpec {
    double c;
    double t_max;
    int nodes;
};

// Closed-form Mellin kernel of the point-source solution (per unit sigma):
//   C(s) = q^{(2-s)/a - 1} Gamma(1-(2-s)/a) Gamma((2-s)/a) Gamma(s/2) 2^{s-1}
//          / (a Gamma(1 - s/2)),
// evaluated through the reflection-reduced form
//   C(s) = q^{(2-s)/a - 1} 2^{s-1} Gamma(s/2)^2 sin(pi s/2)
//          / (a sin(pi (2-s)/a)),
// which makes the removable right-half-plane point s = 2 (and, at a = 2,
// the whole right pole family) explicit. Inputs within 1e-8 of a genuine
// pole raise pole_error carrying the pole location.
cplx mellin_kernel_C(cplx s, double a, double q);

// The Fox H parameterization of the point-source solution for a in (1, 2]:
// H^{2,1}_{1,3} with rows (1-2/a, 1/a) over (0,1/2), (1-2/a, 1/a), (0,1/2).
// At a = 2 the canceling pair is flagged and the equivalent G^{2,0}_{0,2}
// spec (lower parameters 0, 0) is attached.
HKernelSpec hkernel_for_ca(double a);

// Gamma product of the kernel spec at the point s (no argument powers).
cplx hkernel_gamma_product(const HKernelSpec& spec, cplx s);

enum class HfunStrategy { contour, residue_series };

// Point-source solution per unit sigma, c_a(r), from the Mellin side.
//
// contour:        (1/2 pi i) int C(s) r^{-s} ds along Re(s) = c with
//                 2 - a < c < 2/a (the admissible sub-strip between the two
//                 pole families); trapezoid with adaptive truncation and
//                 mesh halving. Throws eval_error with a decay diagnostic
//                 if the mesh refinement stalls.
// residue_series: sum over the poles s = 2 + a k, k = 1..terms, of
//                 (-1)^{k+1} q^{-k-1} Gamma(1+ak/2)^2 2^{1+ak}
//                 sin(pi a k/2) r^{-(2+ak)} / pi,
//                 valid for large argument; throws eval_error carrying the
//                 partial sum once the terms stop decreasing.
double hfun_point_solution(double a, double q, double r, HfunStrategy strategy,
                           const ContourSpec* contour = nullptr, int residue_terms = 3);

} // namespace fraclap::mellin
