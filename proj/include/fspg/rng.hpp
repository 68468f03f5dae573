#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace fspg {

// Derives independent substream seeds from a master seed and a purpose tag,
// so the draw order of one consumer never shifts another's stream.
std::uint64_t substream_seed(std::uint64_t master, std::string_view tag, std::uint64_t index = 0);

// Deterministic RNG: mt19937_64 (engine output is pinned by the standard)
// combined with our own inverse-CDF normal, so sequences are identical across
// compilers and platforms for a given seed.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : engine_(seed) {}

    // Uniform on (0,1), 53-bit resolution, never exactly 0 or 1.
    double uniform();

    // Standard normal via norm_ppf(uniform()).
    double normal();

    std::uint64_t next_u64() { return engine_(); }

private:
    std::mt19937_64 engine_;
};

}  // namespace fspg
