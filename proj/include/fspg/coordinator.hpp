#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "fspg/model.hpp"
#include "fspg/penalty.hpp"
#include "fspg/schedule.hpp"
#include "fspg/transport.hpp"

namespace fspg {

enum class Algorithm { FSPG, FHPG, SUB, FPG, NC };

std::string to_string(Algorithm a);
Algorithm algorithm_from_string(const std::string& s);

struct SolverOptions {
    Algorithm algorithm = Algorithm::FSPG;
    PenaltyConfig penalty;
    Schedule schedule;       // c is resolved by the harness (explicit or lambda_max fraction)
    double tau = 0.5;
    double fhpg_mu = 1.0;    // FHPG only
    double sub_eta0 = 0.0;   // SUB only; <= 0 means 1/lambda_max
    bool relax_beta_c = false;  // accept beta*c >= lambda_max/2 instead of >= lambda_max
};

struct SolverState {
    ModelVector w;
    std::int64_t k = 0;
    double sigma = 0.0;
    double mu = 0.0;
    std::int64_t n_total = 0;
    double spectral_bound = 0.0;
    std::vector<double> merit_history;
    std::vector<double> dw_history;     // ||w^(k+1) - w^(k)||_2^2
    std::vector<double> kappa_history;  // ||kappa^(k)||_2, starts at k = 1
};

// Per-iteration view handed to the observer (after the model update of
// round k). kappa is absent at k = 0.
struct IterRecord {
    std::int64_t k = 0;
    double sigma = 0.0;
    double mu = 0.0;
    double merit = 0.0;
    double dw_sq = 0.0;
    std::optional<double> kappa;
    const ModelVector* w_next = nullptr;
};

struct DescentViolation {
    std::int64_t k;
    double merit_drop;      // merit^(k) - merit^(k+1)
    double required_drop;   // (sigma^(k+1) - n rho) ||dw||^2 - eps_fp
};

struct StationarityCertificate {
    Vec residual;      // per-coordinate distance of 0 to the subdifferential sum
    double max_residual = 0.0;
    double tolerance = 0.0;  // 10 * final kappa norm
    bool certified = false;
};

// Server-side solver. One instance drives one run over a RoundTransport.
class Coordinator {
public:
    Coordinator(RoundTransport& transport, SolverOptions opts);

    // Distributed power iteration for lambda_max(X^T X); result is cached in
    // the state and used to resolve c and validate beta*c. Deterministic
    // start vector unless `start` is given.
    double spectral_bound(const Vec* start = nullptr);

    // Resolves schedule.c (from an explicit value or fraction of lambda_max),
    // validates the beta*c condition, and prepares iteration 0.
    void initialize(std::optional<double> c_explicit, double c_fraction);

    // Runs one round (the update w^(k) -> w^(k+1)) and advances k.
    IterRecord step();

    // Runs `iters` rounds, invoking `on_iter` after each when set.
    void run(std::int64_t iters, const std::function<void(const IterRecord&)>& on_iter = {});

    // Evaluates the Theorem-3 residual at the current iterate via a mu = 0
    // gradient round plus the penalty subdifferential intervals.
    StationarityCertificate stationarity_certificate();

    // Sends FinalModel + Shutdown.
    void finish();

    const SolverState& state() const { return state_; }
    const std::vector<DescentViolation>& descent_violations() const { return descent_violations_; }
    double n_rho() const { return static_cast<double>(state_.n_total) * rho_; }

    // Aggregates a sorted response list with compensated summation in
    // ascending client_id order; exposed for tests.
    static Vec aggregate_gradients(const std::vector<GradResponse>& responses, std::size_t dim);

private:
    double constant_sigma_fhpg() const;
    void apply_prox_update(const Vec& grad_sum);
    void apply_sub_update(const Vec& grad_sum);

    RoundTransport& transport_;
    SolverOptions opts_;
    SolverState state_;
    double rho_ = 0.0;
    bool warned_identity_prox_ = false;

    // previous-round quantities for kappa and the descent monitor
    Vec prev_grad_sum_;
    Vec prev_w_;
    double prev_sigma_ = 0.0;
    bool have_prev_round_ = false;

    std::vector<DescentViolation> descent_violations_;
};

// Least-squares slope of log(y) vs log(k) over the tail k in
// [k_max/10, k_max] (1-based indices). Nonpositive entries are skipped; if
// fewer than two usable points remain the series is treated as converged and
// -infinity is returned.
double loglog_tail_slope(const std::vector<double>& series);

}  // namespace fspg
