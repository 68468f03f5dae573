#include "fspg/model.hpp"

#include <cmath>
#include <string>

#include "fspg/errors.hpp"

namespace fspg {

void validate_shapes(const ClientDataset& ds) {
    if (ds.features.rows == 0 || ds.features.cols == 0)
        throw ConfigError("client dataset is empty");
    if (ds.features.data.size() != ds.features.rows * ds.features.cols)
        throw ConfigError("feature matrix storage size mismatch");
    if (ds.responses.size() != ds.features.rows)
        throw ConfigError("row count of features (" + std::to_string(ds.features.rows) +
                          ") != length of responses (" + std::to_string(ds.responses.size()) + ")");
    for (double v : ds.features.data)
        if (!std::isfinite(v)) throw ConfigError("non-finite feature entry");
    for (double v : ds.responses)
        if (!std::isfinite(v)) throw ConfigError("non-finite response entry");
}

void validate_client_dataset(const ClientDataset& ds) {
    validate_shapes(ds);
    for (std::size_t i = 0; i < ds.features.rows; ++i) {
        if (ds.features.at(i, ds.features.cols - 1) != 1.0)
            throw ConfigError("last feature column must be identically 1 (row " +
                              std::to_string(i) + ")");
    }
}

}  // namespace fspg
