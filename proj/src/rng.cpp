#include "fspg/rng.hpp"

#include "fspg/normal.hpp"

namespace fspg {

namespace {

std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9e3779b97f4a7c15ULL;
    x = (x ^ (x >> 30)) * 0xbf58476d1ce4e5b9ULL;
    x = (x ^ (x >> 27)) * 0x94d049bb133111ebULL;
    return x ^ (x >> 31);
}

// FNV-1a over the tag bytes.
std::uint64_t hash_tag(std::string_view tag) {
    std::uint64_t h = 0xcbf29ce484222325ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 0x100000001b3ULL;
    }
    return h;
}

}  // namespace

std::uint64_t substream_seed(std::uint64_t master, std::string_view tag, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ hash_tag(tag)) ^ index);
}

double Rng::uniform() {
    // 53 significant bits, centered inside (0,1).
    std::uint64_t v = engine_() >> 11;
    return (static_cast<double>(v) + 0.5) * 0x1.0p-53;
}

double Rng::normal() { return norm_ppf(uniform()); }

}  // namespace fspg
