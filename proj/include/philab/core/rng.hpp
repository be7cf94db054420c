#pragma once

#include <cstdint>
#include <random>
#include <string_view>

namespace philab {

/// Seeded generator used by every sampled check. Draws are taken straight
/// from mt19937_64 output so results do not depend on the standard
/// library's distribution implementations.
class SeededRng {
public:
    explicit SeededRng(std::uint64_t seed) : engine_(seed) {}

    std::uint64_t next() { return engine_(); }

    /// Uniform-ish integer in [0, bound).
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : engine_() % bound; }

    /// Integer in [lo, hi].
    std::int64_t between(std::int64_t lo, std::int64_t hi) {
        return lo + static_cast<std::int64_t>(below(static_cast<std::uint64_t>(hi - lo) + 1));
    }

private:
    std::mt19937_64 engine_;
};

/// Derives an independent stream seed from a base seed and a tag (ring label,
/// check name). FNV-1a over the tag, mixed with the base.
inline std::uint64_t split_seed(std::uint64_t base, std::string_view tag) {
    std::uint64_t h = 1469598103934665603ULL;
    for (char c : tag) {
        h ^= static_cast<unsigned char>(c);
        h *= 1099511628211ULL;
    }
    h ^= base + 0x9e3779b97f4a7c15ULL + (h << 6) + (h >> 2);
    return h;
}

}  // namespace philab
