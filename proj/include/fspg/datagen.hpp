#pragma once

#include <cstdint>
#include <vector>

#include "fspg/model.hpp"
#include "fspg/rng.hpp"

namespace fspg {

// Synthetic scenario description. Defaults mirror the full-scale synthetic
// setup; presets in the harness override dimensions.
struct ScenarioSpec {
    std::int64_t samples_per_client = 10;  // M
    std::int64_t num_clients = 20;         // L
    std::int64_t dim = 100;                // P
    double tau = 0.55;
    std::vector<int> active_set = {6, 12, 15, 20};  // 1-based coefficient indices
    int heteroscedastic_index = 1;                  // feature receiving the 0.7*eps multiplier
    double xi_sd = 1e-3;                            // sd of compressible coefficients
    double noise_scale = 1.0;  // scales both the heteroscedastic term and the client noise
    std::uint64_t seed = 0;

    void validate() const;
};

struct GroundTruth {
    ModelVector w_star;              // true tau-quantile coefficients + intercept
    std::vector<double> client_scales;  // Upsilon_l
    std::vector<int> active_set;     // metric active set: spec actives plus the
                                     // heteroscedastic feature when tau != 0.5
};

// Draws one row of the AR(1) process with cov 0.5^|p-q| (the closed-form
// lower-triangular factor of the covariance). Exposed for the covariance
// oracle test.
Vec draw_ar1_row(Rng& rng, std::size_t p);

// tau-quantile of the equal-weight mixture of N(0, scale_l^2): bisection on
// (1/L) sum_l Phi(Q/scale_l) = tau to |F(Q) - tau| <= 1e-12. Exact 0 at
// tau = 0.5.
double mixture_quantile(const std::vector<double>& scales, double tau);

std::pair<std::vector<ClientDataset>, GroundTruth> generate_scenario(const ScenarioSpec& spec);

}  // namespace fspg
