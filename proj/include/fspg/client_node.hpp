#pragma once

#include <span>
#include <utility>

#include "fspg/model.hpp"

namespace fspg {

// Holds one client's data and answers the coordinator's per-round requests.
// Read-only after construction, so one node may serve concurrent requests.
// Clients never see sigma, the penalty, or other clients' data.
class ClientNode {
public:
    ClientNode(ClientDataset ds);

    const ClientDataset& dataset() const { return ds_; }
    int client_id() const { return ds_.client_id; }
    std::size_t sample_count() const { return ds_.sample_count(); }
    std::size_t dim() const { return ds_.dim(); }

    // Gradient of the smoothed local loss at w:
    //   -sum_i x_i * (1/2 * smooth_abs_grad(z_i, mu) + (tau - 1/2)),
    // z = y - X w. mu == 0 selects the unsmoothed check-loss subgradient with
    // sign(0) := 0 (used by the FPG/SUB baselines and the stationarity
    // certificate).
    Vec local_gradient(std::span<const double> w, double mu, double tau) const;

    // Smoothed local loss h(y - Xw, mu); mu == 0 gives the exact check-loss sum.
    double local_loss(std::span<const double> w, double mu, double tau) const;

    // (X^T X) v as two matvecs; the Gram matrix is never formed.
    Vec gram_vector_product(std::span<const double> v) const;

    // Coordinate-wise subdifferential interval of the unsmoothed local loss
    // at w: rows with z_i == 0 contribute their full [tau-1, tau] factor
    // range, all other rows are differentiable points.
    std::pair<Vec, Vec> subgradient_interval(std::span<const double> w, double tau) const;

private:
    Vec residuals(std::span<const double> w) const;

    ClientDataset ds_;
};

}  // namespace fspg
