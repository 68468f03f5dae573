#pragma once

#include <stdexcept>
#include <string>

namespace fspg {

// Bad user-supplied configuration (penalty parameters, tau range, schedules, ...).
class ConfigError : public std::runtime_error {
public:
    explicit ConfigError(const std::string& msg) : std::runtime_error(msg) {}
};

// The prox precondition t < gamma (MCP) / t < gamma-1 (SCAD) was violated,
// i.e. the caller passed a sigma that does not satisfy sigma > n*rho.
class ConvexityError : public std::runtime_error {
public:
    explicit ConvexityError(const std::string& msg) : std::runtime_error(msg) {}
};

// Wire/protocol violations: dimension mismatches, stale rounds, unknown
// message types, frame-cap violations, timeouts.
class ProtocolError : public std::runtime_error {
public:
    explicit ProtocolError(const std::string& msg) : std::runtime_error(msg) {}
};

// Message cannot be serialized (non-finite float).
class EncodeError : public std::runtime_error {
public:
    explicit EncodeError(const std::string& msg) : std::runtime_error(msg) {}
};

// CSV ingestion failures (non-numeric cell, empty file, ...).
class IngestError : public std::runtime_error {
public:
    explicit IngestError(const std::string& msg) : std::runtime_error(msg) {}
};

}  // namespace fspg
