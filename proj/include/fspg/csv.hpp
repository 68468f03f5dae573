#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "fspg/model.hpp"

namespace fspg {

struct CsvTable {
    std::vector<std::string> header;
    RowMatrix rows;  // numeric cells, header order
};

// Headered, comma-separated, UTF-8, finite decimal floats. Throws IngestError
// naming the offending row/column on non-numeric cells; a header-only file is
// an error.
CsvTable read_csv(const std::string& path);

// Shortest round-trip decimals, LF line endings.
void write_csv(const std::string& path, const std::vector<std::string>& header,
               const RowMatrix& rows);

enum class PartitionMode { Random, ByFile };

struct CsvLoadOptions {
    std::string response_column;
    PartitionMode partition = PartitionMode::Random;
    std::int64_t num_clients = 1;  // Random mode
    std::uint64_t seed = 0;
    double train_fraction = 0.8;
};

struct CsvSplit {
    std::vector<ClientDataset> train;
    ClientDataset test;
    std::vector<std::string> feature_names;
};

// Random mode: `path` is one CSV; rows are shuffled by seed, the first
// round(train_fraction * N) become training rows dealt round-robin over L
// clients, the rest form the test set. ByFile mode: `path` is a directory and
// each *.csv inside (sorted by name) becomes one client after a per-file
// seeded holdout of (1 - train_fraction). A ones column is appended either way.
CsvSplit load_csv(const std::string& path, const CsvLoadOptions& opts);

// One client's data as x1..xP,y — the ones column is re-appended on load.
void write_client_csv(const std::string& path, const ClientDataset& ds);
ClientDataset read_client_csv(const std::string& path, int client_id,
                              const std::string& response_column = "y");

std::string format_double(double v);

}  // namespace fspg
