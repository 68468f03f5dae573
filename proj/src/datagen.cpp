#include "fspg/datagen.hpp"

#include <algorithm>
#include <cmath>
#include <string>

#include "fspg/errors.hpp"
#include "fspg/normal.hpp"
#include "fspg/smoothing.hpp"

namespace fspg {

void ScenarioSpec::validate() const {
    if (samples_per_client < 1 || num_clients < 1 || dim < 1)
        throw ConfigError("scenario requires M, L, P >= 1");
    validate_tau(tau);
    for (int a : active_set)
        if (a < 1 || a > dim)
            throw ConfigError("active index " + std::to_string(a) + " outside 1.." +
                              std::to_string(dim));
    if (heteroscedastic_index < 1 || heteroscedastic_index > dim)
        throw ConfigError("heteroscedastic index outside 1..P");
    if (xi_sd < 0.0 || noise_scale < 0.0)
        throw ConfigError("xi_sd and noise_scale must be >= 0");
}

Vec draw_ar1_row(Rng& rng, std::size_t p) {
    Vec x(p);
    if (p == 0) return x;
    x[0] = rng.normal();
    const double root = std::sqrt(0.75);  // sqrt(1 - 0.5^2), keeps unit variance
    for (std::size_t j = 1; j < p; ++j) x[j] = 0.5 * x[j - 1] + root * rng.normal();
    return x;
}

double mixture_quantile(const std::vector<double>& scales, double tau) {
    if (scales.empty()) throw ConfigError("mixture_quantile: empty scale list");
    validate_tau(tau);
    for (double s : scales)
        if (s < 0.0 || !std::isfinite(s)) throw ConfigError("mixture scales must be finite and >= 0");
    if (tau == 0.5) return 0.0;  // symmetric mixture
    double smax = *std::max_element(scales.begin(), scales.end());
    if (smax == 0.0) return 0.0;  // point mass at 0

    auto cdf = [&](double q) {
        KahanSum acc;
        for (double s : scales) {
            if (s == 0.0)
                acc.add(q < 0.0 ? 0.0 : 1.0);
            else
                acc.add(norm_cdf(q / s));
        }
        return acc.value() / static_cast<double>(scales.size());
    };

    double lo = -10.0 * smax, hi = 10.0 * smax;
    double mid = 0.0;
    // Bisection; the width floor guards degenerate plateaus of the mixture CDF.
    for (int it = 0; it < 500; ++it) {
        mid = 0.5 * (lo + hi);
        double f = cdf(mid);
        if (std::abs(f - tau) <= 1e-12) return mid;
        if (f < tau)
            lo = mid;
        else
            hi = mid;
        if (hi - lo <= 4.0 * std::numeric_limits<double>::epsilon() * smax) break;
    }
    return mid;
}

std::pair<std::vector<ClientDataset>, GroundTruth> generate_scenario(const ScenarioSpec& spec) {
    spec.validate();
    const auto m = static_cast<std::size_t>(spec.samples_per_client);
    const auto l_count = static_cast<std::size_t>(spec.num_clients);
    const auto p = static_cast<std::size_t>(spec.dim);
    const std::size_t h = static_cast<std::size_t>(spec.heteroscedastic_index) - 1;

    // True coefficients: compressible xi everywhere, +1 on the active set,
    // plus the quantile shift of the heteroscedastic term.
    Rng xi_rng(substream_seed(spec.seed, "xi"));
    Vec xi(p);
    for (auto& v : xi) v = spec.xi_sd * xi_rng.normal();

    GroundTruth truth;
    truth.w_star = ModelVector(p + 1);
    for (std::size_t j = 0; j < p; ++j) truth.w_star.values[j] = xi[j];
    for (int a : spec.active_set) truth.w_star.values[a - 1] += 1.0;
    const double quantile_shift = 0.7 * spec.noise_scale * (spec.tau == 0.5 ? 0.0 : norm_ppf(spec.tau));
    truth.w_star.values[h] += quantile_shift;

    truth.active_set = spec.active_set;
    if (spec.tau != 0.5 && spec.noise_scale > 0.0 &&
        std::find(truth.active_set.begin(), truth.active_set.end(), spec.heteroscedastic_index) ==
            truth.active_set.end())
        truth.active_set.push_back(spec.heteroscedastic_index);
    std::sort(truth.active_set.begin(), truth.active_set.end());

    std::vector<ClientDataset> datasets;
    datasets.reserve(l_count);
    for (std::size_t l = 0; l < l_count; ++l) {
        Rng feat_rng(substream_seed(spec.seed, "features", l));
        Rng noise_rng(substream_seed(spec.seed, "noise", l));
        Rng ups_rng(substream_seed(spec.seed, "upsilon", l));
        const double upsilon = spec.noise_scale * std::abs(ups_rng.normal());
        truth.client_scales.push_back(upsilon);

        ClientDataset ds;
        ds.client_id = static_cast<int>(l);
        ds.features.rows = m;
        ds.features.cols = p + 1;
        ds.features.data.resize(m * (p + 1));
        ds.responses.resize(m);

        for (std::size_t i = 0; i < m; ++i) {
            Vec xt = draw_ar1_row(feat_rng, p);
            Vec x = xt;
            x[0] = norm_cdf(xt[0]);
            double eps = noise_rng.normal();
            double nu = upsilon * noise_rng.normal();
            KahanSum y;
            for (std::size_t j = 0; j < p; ++j) y.add(xi[j] * x[j]);
            for (int a : spec.active_set) y.add(x[a - 1]);
            y.add(0.7 * spec.noise_scale * eps * x[h]);
            y.add(nu);
            ds.responses[i] = y.value();
            for (std::size_t j = 0; j < p; ++j) ds.features.at(i, j) = x[j];
            ds.features.at(i, p) = 1.0;
        }
        validate_client_dataset(ds);
        datasets.push_back(std::move(ds));
    }

    truth.w_star.values[p] = mixture_quantile(truth.client_scales, spec.tau);
    return {std::move(datasets), std::move(truth)};
}

}  // namespace fspg
