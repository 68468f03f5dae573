#include "fspg/coordinator.hpp"

#include <algorithm>
#include <cmath>
#include <cstdio>
#include <limits>
#include <sstream>

#include "fspg/errors.hpp"
#include "fspg/rng.hpp"
#include "fspg/smoothing.hpp"

namespace fspg {

std::string to_string(Algorithm a) {
    switch (a) {
        case Algorithm::FSPG: return "FSPG";
        case Algorithm::FHPG: return "FHPG";
        case Algorithm::SUB: return "SUB";
        case Algorithm::FPG: return "FPG";
        case Algorithm::NC: return "NC";
    }
    return "?";
}

Algorithm algorithm_from_string(const std::string& s) {
    if (s == "FSPG") return Algorithm::FSPG;
    if (s == "FHPG") return Algorithm::FHPG;
    if (s == "SUB") return Algorithm::SUB;
    if (s == "FPG") return Algorithm::FPG;
    if (s == "NC") return Algorithm::NC;
    throw ConfigError("unknown algorithm: " + s);
}

Coordinator::Coordinator(RoundTransport& transport, SolverOptions opts)
    : transport_(transport), opts_(opts) {
    opts_.penalty.validate();
    validate_tau(opts_.tau);
    if (transport_.clients().empty()) throw ConfigError("no clients registered");
    state_.n_total = transport_.total_samples();
    state_.w = ModelVector(transport_.model_dim());
    rho_ = weak_convexity_rho(opts_.penalty);
}

double Coordinator::spectral_bound(const Vec* start) {
    const std::size_t dim = transport_.model_dim();
    Vec v(dim);
    if (start) {
        if (start->size() != dim) throw ConfigError("spectral start vector dimension mismatch");
        v = *start;
    } else {
        Rng rng(substream_seed(0x5eedULL, "power-iteration"));
        for (auto& x : v) x = rng.normal();
    }
    double nrm = norm2(v);
    if (nrm == 0.0) throw ConfigError("spectral start vector is zero");
    for (auto& x : v) x /= nrm;

    double rayleigh_prev = 0.0;
    std::int64_t round = 0;
    for (; round < 500; ++round) {
        GramVecRequest req{round, v};
        auto responses = transport_.run_gram_round(req);
        KahanVec sum(dim);
        for (const auto& r : responses) {
            if (r.product.size() != dim) throw ProtocolError("gram product dimension mismatch");
            sum.add(r.product);
        }
        Vec gv = sum.value();
        double rayleigh = dot(v, gv);  // v is unit
        double gn = norm2(gv);
        if (gn == 0.0) {
            state_.spectral_bound = 0.0;
            return 0.0;
        }
        for (std::size_t i = 0; i < dim; ++i) v[i] = gv[i] / gn;
        if (round > 0) {
            double denom = std::max(std::abs(rayleigh), std::numeric_limits<double>::min());
            if (std::abs(rayleigh - rayleigh_prev) / denom < 1e-10) {
                rayleigh_prev = rayleigh;
                break;
            }
        }
        rayleigh_prev = rayleigh;
    }
    state_.spectral_bound = rayleigh_prev * (1.0 + 1e-6);
    return state_.spectral_bound;
}

void Coordinator::initialize(std::optional<double> c_explicit, double c_fraction) {
    if (state_.spectral_bound <= 0.0) spectral_bound();
    if (state_.spectral_bound <= 0.0)
        throw ConfigError("degenerate data: lambda_max(X^T X) is 0");
    if (c_explicit)
        opts_.schedule.c = *c_explicit;
    else
        opts_.schedule.c = c_fraction * state_.spectral_bound;
    opts_.schedule.validate();

    const double bc = opts_.schedule.beta * opts_.schedule.c;
    const double need = opts_.relax_beta_c ? state_.spectral_bound / 2.0 : state_.spectral_bound;
    // Tiny slack so c = lambda_max * fraction sitting exactly at the bound is
    // not rejected for the last-ulp of the power-iteration safety factor.
    if (bc < need * (1.0 - 1e-9)) {
        std::ostringstream os;
        os << "beta*c = " << bc << " violates the spectral condition (needs >= " << need
           << ", computed lambda_max = " << state_.spectral_bound
           << (opts_.relax_beta_c ? ", relaxed /2 form" : ", strict form") << ")";
        throw ConfigError(os.str());
    }
    state_.k = 0;
}

Vec Coordinator::aggregate_gradients(const std::vector<GradResponse>& responses, std::size_t dim) {
    std::vector<const GradResponse*> sorted;
    sorted.reserve(responses.size());
    for (const auto& r : responses) sorted.push_back(&r);
    std::sort(sorted.begin(), sorted.end(),
              [](const GradResponse* a, const GradResponse* b) { return a->client_id < b->client_id; });
    KahanVec sum(dim);
    for (const auto* r : sorted) {
        if (r->gradient.size() != dim) throw ProtocolError("gradient dimension mismatch");
        sum.add(r->gradient);
    }
    return sum.value();
}

double Coordinator::constant_sigma_fhpg() const {
    validate_mu(opts_.fhpg_mu);
    double n = static_cast<double>(state_.n_total);
    return 1.01 * std::max(n * rho_, state_.spectral_bound / (2.0 * opts_.fhpg_mu));
}

void Coordinator::apply_prox_update(const Vec& grad_sum) {
    const std::size_t dim = state_.w.dim();
    const std::size_t p = state_.w.num_coeffs();
    Vec a(dim);
    for (std::size_t i = 0; i < dim; ++i) a[i] = state_.w.values[i] - grad_sum[i] / state_.sigma;

    const double n = static_cast<double>(state_.n_total);
    const bool penalized = opts_.penalty.kind != PenaltyKind::None && opts_.penalty.lambda > 0.0;
    if (penalized && state_.sigma > n * rho_) {
        const double t = n / state_.sigma;
        for (std::size_t i = 0; i < p; ++i) a[i] = prox(a[i], opts_.penalty, t);
    } else if (penalized) {
        // sigma <= n*rho: the prox subproblem is not convex yet. Skip the
        // penalty (identity prox) until the schedule crosses n*rho.
        if (!warned_identity_prox_) {
            std::fprintf(stderr,
                         "[fspg] warning: sigma=%.6g <= n*rho=%.6g at k=%lld; "
                         "applying identity prox until the schedule crosses\n",
                         state_.sigma, n * rho_, static_cast<long long>(state_.k));
            warned_identity_prox_ = true;
        }
    }
    // intercept (last coordinate) always gets the identity update
    state_.w.values = std::move(a);
}

void Coordinator::apply_sub_update(const Vec& grad_sum) {
    const double eta0 = opts_.sub_eta0 > 0.0 ? opts_.sub_eta0 : 1.0 / state_.spectral_bound;
    const double eta = eta0 / std::sqrt(static_cast<double>(state_.k + 1));
    const double n = static_cast<double>(state_.n_total);
    const std::size_t p = state_.w.num_coeffs();
    for (std::size_t i = 0; i < state_.w.dim(); ++i) {
        double g = grad_sum[i];
        if (i < p) g += n * penalty_subgrad(state_.w.values[i], opts_.penalty);
        state_.w.values[i] -= eta * g;
    }
}

IterRecord Coordinator::step() {
    const std::int64_t k = state_.k;
    switch (opts_.algorithm) {
        case Algorithm::FSPG:
        case Algorithm::NC:
            state_.sigma = sigma_at(opts_.schedule, k);
            state_.mu = mu_at(opts_.schedule, k);
            break;
        case Algorithm::FPG:
            state_.sigma = sigma_at(opts_.schedule, k);
            state_.mu = 0.0;
            break;
        case Algorithm::FHPG:
            state_.sigma = constant_sigma_fhpg();
            state_.mu = opts_.fhpg_mu;
            break;
        case Algorithm::SUB:
            state_.sigma = 0.0;
            state_.mu = 0.0;
            break;
    }

    GradRequest req{k, state_.w.values, state_.mu, opts_.tau};
    auto responses = transport_.run_grad_round(req);
    if (responses.size() != transport_.clients().size())
        throw ProtocolError("missing client gradients: got " + std::to_string(responses.size()) +
                            " of " + std::to_string(transport_.clients().size()));
    Vec grad_sum = aggregate_gradients(responses, state_.w.dim());

    KahanSum loss_sum;
    for (const auto& r : responses) loss_sum.add(r.local_loss);
    const double n = static_cast<double>(state_.n_total);
    double merit = loss_sum.value() + n * penalty_total(state_.w.coeffs(), opts_.penalty);

    // kappa^(k) for the completed step w^(k-1) -> w^(k):
    //   sum grad(w^(k), mu^(k+1)) - sum grad(w^(k-1), mu^(k)) + sigma^(k) (w^(k-1) - w^(k))
    std::optional<double> kappa;
    if (have_prev_round_) {
        Vec kv(state_.w.dim());
        for (std::size_t i = 0; i < state_.w.dim(); ++i)
            kv[i] = grad_sum[i] - prev_grad_sum_[i] +
                    prev_sigma_ * (prev_w_[i] - state_.w.values[i]);
        double kn = norm2(kv);
        state_.kappa_history.push_back(kn);
        kappa = kn;
    }

    // Lemma-4 descent monitor for the completed step (uses the previous
    // round's sigma, which produced the current w).
    if (!state_.merit_history.empty() && have_prev_round_ &&
        (opts_.algorithm == Algorithm::FSPG || opts_.algorithm == Algorithm::NC) &&
        prev_sigma_ > n * rho_) {
        double drop = state_.merit_history.back() - merit;
        double dw_sq = norm2_sq_diff(state_.w.values, prev_w_);
        double eps_fp = 1e-8 * (1.0 + std::abs(state_.merit_history.back()));
        double required = (prev_sigma_ - n * rho_) * dw_sq - eps_fp;
        if (drop < required)
            descent_violations_.push_back(DescentViolation{k, drop, required});
    }
    state_.merit_history.push_back(merit);

    prev_w_ = state_.w.values;
    prev_grad_sum_ = grad_sum;
    prev_sigma_ = state_.sigma;
    have_prev_round_ = true;

    if (opts_.algorithm == Algorithm::SUB)
        apply_sub_update(grad_sum);
    else
        apply_prox_update(grad_sum);

    double dw_sq = norm2_sq_diff(state_.w.values, prev_w_);
    state_.dw_history.push_back(dw_sq);
    state_.k = k + 1;

    IterRecord rec;
    rec.k = k;
    rec.sigma = state_.sigma;
    rec.mu = state_.mu;
    rec.merit = merit;
    rec.dw_sq = dw_sq;
    rec.kappa = kappa;
    rec.w_next = &state_.w;
    return rec;
}

void Coordinator::run(std::int64_t iters, const std::function<void(const IterRecord&)>& on_iter) {
    for (std::int64_t i = 0; i < iters; ++i) {
        IterRecord rec = step();
        if (on_iter) on_iter(rec);
    }
}

StationarityCertificate Coordinator::stationarity_certificate() {
    GradRequest req{state_.k, state_.w.values, 0.0, opts_.tau};
    auto responses = transport_.run_grad_round(req);
    Vec g0 = aggregate_gradients(responses, state_.w.dim());

    const double n = static_cast<double>(state_.n_total);
    StationarityCertificate cert;
    cert.residual.resize(state_.w.dim());
    for (std::size_t i = 0; i < state_.w.dim(); ++i) {
        double lo = g0[i], hi = g0[i];
        if (i < state_.w.num_coeffs()) {
            auto [plo, phi] = penalty_subgrad_interval(state_.w.values[i], opts_.penalty);
            lo += n * plo;
            hi += n * phi;
        }
        cert.residual[i] = (lo > 0.0) ? lo : (hi < 0.0 ? -hi : 0.0);
        cert.max_residual = std::max(cert.max_residual, cert.residual[i]);
    }
    double final_kappa = state_.kappa_history.empty() ? 0.0 : state_.kappa_history.back();
    cert.tolerance = 10.0 * final_kappa;
    cert.certified = cert.max_residual <= cert.tolerance;
    return cert;
}

void Coordinator::finish() {
    transport_.broadcast_final_model(FinalModel{state_.w.values});
    transport_.shutdown();
}

double loglog_tail_slope(const std::vector<double>& series) {
    const std::size_t n = series.size();
    if (n == 0) return -std::numeric_limits<double>::infinity();
    const std::size_t k_min = std::max<std::size_t>(1, n / 10);
    KahanSum sx, sy, sxx, sxy;
    std::size_t m = 0;
    for (std::size_t k = k_min; k <= n; ++k) {
        double y = series[k - 1];
        if (!(y > 0.0)) continue;
        double lx = std::log(static_cast<double>(k));
        double ly = std::log(y);
        sx.add(lx);
        sy.add(ly);
        sxx.add(lx * lx);
        sxy.add(lx * ly);
        ++m;
    }
    if (m < 2) return -std::numeric_limits<double>::infinity();
    double mm = static_cast<double>(m);
    double denom = sxx.value() - sx.value() * sx.value() / mm;
    if (denom <= 0.0) return -std::numeric_limits<double>::infinity();
    return (sxy.value() - sx.value() * sy.value() / mm) / denom;
}

}  // namespace fspg
