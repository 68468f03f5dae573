#pragma once

#include <span>

namespace fspg {

// Check (pinball) loss u * (tau - 1{u<0}). Throws ConfigError for tau
// outside (0,1).
double check_loss(double u, double tau);

// Huber-style upper smoothing of |u| with width mu:
// |u| outside the tube, u^2/(2 mu) + mu/2 inside. Always >= |u|, C^1 at the
// boundary, gap at most mu/2.
double smooth_abs(double u, double mu);

// d/du smooth_abs: sgn(u) outside the tube, u/mu inside. Odd, bounded by 1.
double smooth_abs_grad(double u, double mu);

// h(z, mu) = 1/2 sum_i smooth_abs(z_i, mu) + (tau - 1/2) sum_i z_i.
// Converges to sum_i check_loss(z_i, tau) as mu -> 0; the gap lies in
// [0, M*mu/4] for M residuals.
double smoothed_local_loss(std::span<const double> residuals, double tau, double mu);

// Unsmoothed counterpart: sum_i check_loss(z_i, tau).
double check_loss_sum(std::span<const double> residuals, double tau);

void validate_tau(double tau);
void validate_mu(double mu);

}  // namespace fspg
