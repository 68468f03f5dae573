#pragma once

#include <cstddef>
#include <cstdint>
#include <optional>
#include <string>
#include <variant>

#include "fspg/linalg.hpp"

namespace fspg {

// Frames larger than this are rejected on both ends.
inline constexpr std::size_t kFrameCapBytes = 64ull * 1024 * 1024;

struct Hello {
    int client_id = 0;
    std::int64_t sample_count = 0;  // M_l
    std::int64_t feature_dim = 0;   // P
};

struct GradRequest {
    std::int64_t k = 0;
    Vec w;
    double mu = 0.0;  // 0 selects the unsmoothed subgradient
    double tau = 0.5;
};

struct GradResponse {
    int client_id = 0;
    std::int64_t k = 0;
    Vec gradient;
    double local_loss = 0.0;
};

struct GramVecRequest {
    std::int64_t round = 0;
    Vec v;
};

struct GramVecResponse {
    int client_id = 0;
    std::int64_t round = 0;
    Vec product;
};

struct FinalModel {
    Vec w;
};

struct Shutdown {};

using RoundMessage = std::variant<Hello, GradRequest, GradResponse, GramVecRequest,
                                  GramVecResponse, FinalModel, Shutdown>;

// Serializes to a frame: 4-byte big-endian body length, then a UTF-8 JSON
// body with fields in the order documented in docs/protocol.md. Floats use
// shortest round-trip decimals. Throws EncodeError on non-finite floats.
std::string encode(const RoundMessage& msg);

struct DecodeResult {
    RoundMessage msg;
    std::size_t consumed = 0;  // bytes of the buffer eaten by this frame
};

// Decodes one complete frame from the head of `buf`. Returns nullopt when
// more bytes are needed (incomplete frame). Throws ProtocolError on a frame
// exceeding the cap, malformed JSON (with byte offset), unknown message type,
// or missing/mistyped fields.
std::optional<DecodeResult> decode(std::string_view buf);

}  // namespace fspg
