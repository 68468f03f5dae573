#include "fspg/smoothing.hpp"

#include <cmath>
#include <string>

#include "fspg/errors.hpp"
#include "fspg/linalg.hpp"

namespace fspg {

void validate_tau(double tau) {
    if (!(tau > 0.0 && tau < 1.0))
        throw ConfigError("tau must lie in (0,1), got " + std::to_string(tau));
}

void validate_mu(double mu) {
    if (!(mu > 0.0) || !std::isfinite(mu))
        throw ConfigError("mu must be > 0, got " + std::to_string(mu));
}

double check_loss(double u, double tau) {
    validate_tau(tau);
    return u * (tau - (u < 0.0 ? 1.0 : 0.0));
}

double smooth_abs(double u, double mu) {
    // Boundary |u| == mu belongs to the absolute branch; both branches agree
    // there (mu^2/(2mu) + mu/2 == mu).
    double a = std::abs(u);
    if (a >= mu) return a;
    return u * u / (2.0 * mu) + mu / 2.0;
}

double smooth_abs_grad(double u, double mu) {
    if (std::abs(u) >= mu) return u > 0.0 ? 1.0 : (u < 0.0 ? -1.0 : 0.0);
    return u / mu;
}

double smoothed_local_loss(std::span<const double> residuals, double tau, double mu) {
    validate_tau(tau);
    validate_mu(mu);
    KahanSum f_sum;
    KahanSum z_sum;
    for (double z : residuals) {
        f_sum.add(smooth_abs(z, mu));
        z_sum.add(z);
    }
    return 0.5 * f_sum.value() + (tau - 0.5) * z_sum.value();
}

double check_loss_sum(std::span<const double> residuals, double tau) {
    validate_tau(tau);
    KahanSum s;
    for (double z : residuals) s.add(check_loss(z, tau));
    return s.value();
}

}  // namespace fspg
