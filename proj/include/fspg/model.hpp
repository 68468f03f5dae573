#pragma once

#include <cstddef>
#include <span>

#include "fspg/linalg.hpp"

namespace fspg {

// w = [beta_tau; q]: P coefficients followed by the intercept, stored as one
// flat (P+1)-vector so it can travel the wire unchanged.
struct ModelVector {
    Vec values;  // length P+1

    ModelVector() = default;
    explicit ModelVector(std::size_t p_plus_1) : values(p_plus_1, 0.0) {}

    std::size_t dim() const { return values.size(); }
    std::size_t num_coeffs() const { return values.empty() ? 0 : values.size() - 1; }
    std::span<const double> coeffs() const { return {values.data(), num_coeffs()}; }
    double intercept() const { return values.back(); }
};

// One client's local data: M_l x (P+1) design matrix whose last column is the
// all-ones bias column, plus the response vector.
struct ClientDataset {
    RowMatrix features;
    Vec responses;
    int client_id = 0;

    std::size_t sample_count() const { return features.rows; }
    std::size_t dim() const { return features.cols; }  // P+1
};

// Generation/ingestion-boundary checks: shapes consistent, entries finite,
// last feature column identically one. ClientNode itself only requires the
// shape/finiteness part (raw fixtures without a bias column are legal there).
void validate_client_dataset(const ClientDataset& ds);
void validate_shapes(const ClientDataset& ds);

}  // namespace fspg
