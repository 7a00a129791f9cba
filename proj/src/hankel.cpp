// Partition-and-accelerate evaluation of Hankel transforms.

#include "fraclap/hankel.hpp"

#include <cmath>
#include <string>

namespace fraclap::hankel {

namespace {

// Answer candidates are the deepest entries of the even columns.
double pick_candidate(const std::vector<double>& cands) {
    if (cands.size() == 1) return cands[0];
    double answer = cands[1];
    double prev_step = std::abs(cands[1] - cands[0]);
    for (size_t j = 2; j < cands.size(); ++j) {
        const double step = std::abs(cands[j] - cands[j - 1]);
        if (step >= 10.0 * prev_step) break; // stagnation: deeper entries untrustworthy
        answer = cands[j];
        prev_step = step;
    }
    return answer;
}

} // namespace

double wynn_epsilon(const PartialSumTable& table) {
    const auto& s = table.sums();
    const int n = table.count();
    if (n < 3) throw std::domain_error("wynn_epsilon: needs at least three partial sums");

    // cols[k][i] = eps_k^{(i)}; col -1 (all zeros) is implicit.
    std::vector<std::vector<double>> cols;
    cols.push_back(s);
    std::vector<double> candidates{s.back()};

    for (int k = 1; k < n; ++k) {
        const auto& prev = cols.back();
        std::vector<double> cur(prev.size() - 1);
        for (size_t i = 0; i + 1 < prev.size(); ++i) {
            const double denom = prev[i + 1] - prev[i];
            if (std::abs(denom) < 1e-300) {
                // Exact convergence of the lower column: that value is the limit.
                if ((k - 1) % 2 == 0) return prev[i + 1];
                return cols[k - 2][i + 1];
            }
            const double lower = (k >= 2) ? cols[k - 2][i + 1] : 0.0;
            cur[i] = lower + 1.0 / denom;
        }
        cols.push_back(std::move(cur));
        if (k % 2 == 0) candidates.push_back(cols.back().back());
    }
    return pick_candidate(candidates);
}

double tail_estimate(double last_interval_value) { return std::abs(last_interval_value); }

dequad::QuadratureResult hankel_partitioned(const std::function<double(double)>& F,
                                            double z, const HankelConfig& cfg) {
    if (!(z > 0.0)) throw std::domain_error("hankel_partitioned: z must be positive");
    if (cfg.n_intervals < 2)
        throw std::domain_error("hankel_partitioned: need at least two intervals");

    auto integrand = [&](double rho) { return F(rho) * specfun::bessel_j(cfg.nu, rho * z); };

    dequad::QuadratureResult out;
    std::vector<double> sums;
    sums.reserve(cfg.n_intervals);
    double running = 0.0;
    double last = 0.0;
    bool all_converged = true;

    double lo = 0.0;
    for (int k = 0; k < cfg.n_intervals; ++k) {
        const double hi = specfun::bessel_j_zero(cfg.nu, k + 1, true).value / z;
        dequad::QuadratureResult piece;
        try {
            piece = dequad::de_finite(integrand, lo, hi, cfg.inner_cfg);
        } catch (const eval_error& e) {
            throw eval_error("hankel_partitioned: interval " + std::to_string(k) + ": " +
                             e.what());
        }
        all_converged = all_converged && piece.converged;
        out.nodes_used += piece.nodes_used;
        running += piece.value;
        last = piece.value;
        sums.push_back(running);
        lo = hi;
    }

    out.value = cfg.accelerate ? wynn_epsilon(PartialSumTable(sums)) : sums.back();
    out.err_est = tail_estimate(last);
    out.converged = all_converged &&
                    out.err_est <= std::max(cfg.inner_cfg.abs_tol,
                                            cfg.inner_cfg.rel_tol * std::abs(out.value));
    return out;
}

} // namespace fraclap::hankel
