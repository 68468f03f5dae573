#include "fspg/client_node.hpp"

#include <cmath>
#include <string>
#include <utility>

#include "fspg/errors.hpp"
#include "fspg/smoothing.hpp"

namespace fspg {

ClientNode::ClientNode(ClientDataset ds) : ds_(std::move(ds)) { validate_shapes(ds_); }

Vec ClientNode::residuals(std::span<const double> w) const {
    if (w.size() != ds_.dim())
        throw ProtocolError("client " + std::to_string(client_id()) + ": model dimension " +
                            std::to_string(w.size()) + " != " + std::to_string(ds_.dim()));
    Vec z = matvec(ds_.features, w);
    for (std::size_t i = 0; i < z.size(); ++i) z[i] = ds_.responses[i] - z[i];
    return z;
}

Vec ClientNode::local_gradient(std::span<const double> w, double mu, double tau) const {
    validate_tau(tau);
    Vec z = residuals(w);
    KahanVec acc(ds_.dim());
    for (std::size_t i = 0; i < z.size(); ++i) {
        double s = mu > 0.0 ? smooth_abs_grad(z[i], mu)
                            : (z[i] > 0.0 ? 1.0 : (z[i] < 0.0 ? -1.0 : 0.0));
        acc.add_scaled(ds_.features.row(i), -(0.5 * s + (tau - 0.5)));
    }
    return acc.value();
}

double ClientNode::local_loss(std::span<const double> w, double mu, double tau) const {
    Vec z = residuals(w);
    if (mu > 0.0) return smoothed_local_loss(z, tau, mu);
    return check_loss_sum(z, tau);
}

Vec ClientNode::gram_vector_product(std::span<const double> v) const {
    if (v.size() != ds_.dim())
        throw ProtocolError("client " + std::to_string(client_id()) +
                            ": gram vector dimension mismatch");
    Vec xv = matvec(ds_.features, v);
    return matvec_transposed(ds_.features, xv);
}

std::pair<Vec, Vec> ClientNode::subgradient_interval(std::span<const double> w, double tau) const {
    validate_tau(tau);
    Vec z = residuals(w);
    // Midpoint selection (sign(0) := 0) plus a half-width that is nonzero
    // only for rows with z_i == 0, whose factor spans [tau-1, tau] around
    // the midpoint tau-1/2 with radius 1/2.
    KahanVec mid(ds_.dim());
    Vec halfwidth(ds_.dim(), 0.0);
    for (std::size_t i = 0; i < z.size(); ++i) {
        auto row = ds_.features.row(i);
        double s = z[i] > 0.0 ? 1.0 : (z[i] < 0.0 ? -1.0 : 0.0);
        mid.add_scaled(row, -(0.5 * s + (tau - 0.5)));
        if (z[i] == 0.0)
            for (std::size_t j = 0; j < row.size(); ++j) halfwidth[j] += 0.5 * std::abs(row[j]);
    }
    Vec lo = mid.value(), hi = mid.value();
    for (std::size_t j = 0; j < lo.size(); ++j) {
        lo[j] -= halfwidth[j];
        hi[j] += halfwidth[j];
    }
    return {lo, hi};
}

}  // namespace fspg
