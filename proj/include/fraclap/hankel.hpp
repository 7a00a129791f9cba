// Numerical Hankel transforms by partitioning the axis at asymptotic
// Bessel-J zeros, with Wynn epsilon-acceleration of the partial sums and
// the last sub-integral as tail error estimate.
#pragma once

#include <functional>
#include <vector>

#include "fraclap/dequad.hpp"
#include "fraclap/specfun.hpp"

namespace fraclap::hankel {

// Cumulative partial sums feeding the epsilon-algorithm.
class PartialSumTable {
public:
    explicit PartialSumTable(std::vector<double> sums) : sums_(std::move(sums)) {
        if (sums_.empty())
            throw std::domain_error("PartialSumTable: needs at least one partial sum");
    }
    const std::vector<double>& sums() const { return sums_; }
    int count() const { return static_cast<int>(sums_.size()); }

private:
    std::vector<double> sums_;
};

// Limit of the sequence by Wynn's epsilon recursion
//   eps_{k+1}^{(n)} = eps_{k-1}^{(n+1)} + 1 / (eps_k^{(n+1)} - eps_k^{(n)}).
// Only even columns are answer candidates; the deepest entry is returned,
// cut back by stagnation detection (a candidate whose step grows by more
// than 10x over the previous step ends the walk). A denominator below
// 1e-300 means the sequence converged exactly; that value is returned.
double wynn_epsilon(const PartialSumTable& table);

struct HankelConfig {
    int n_intervals = 15;                 // asymptotic zeros used
    specfun::BesselOrder nu = specfun::BesselOrder::zero;
    dequad::QuadratureConfig inner_cfg{}; // per sub-interval
    bool accelerate = true;
};

// int_0^inf F(rho) J_nu(rho z) d rho, evaluated between scaled zero
// estimates r_nu(k)/z with r_nu(0) = 0 adjoined; each sub-integral by
// tanh-sinh quadrature; cumulative sums epsilon-accelerated when enabled.
// err_est is the tail estimate |last sub-integral| (conservative); the
// converged flag reflects that bound, not the accelerated accuracy.
dequad::QuadratureResult hankel_partitioned(const std::function<double(double)>& F,
                                            double z, const HankelConfig& cfg = {});

// The partition method's error bound: magnitude of the last sub-integral.
double tail_estimate(double last_interval_value);

} // namespace fraclap::hankel
