#pragma once

#include <cstdint>
#include <optional>

#include "apd/detection.hpp"
#include "apd/profile.hpp"

namespace apd {

// splitmix64: tiny, stable across platforms, and fully determined by the
// seed, which the generator contract requires.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ULL);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ULL;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebULL;
        return z ^ (z >> 31);
    }
    std::uint64_t below(std::uint64_t bound) { return bound == 0 ? 0 : next() % bound; }
    bool flip() { return next() & 1; }

private:
    std::uint64_t state_;
};

struct GenParams {
    std::optional<std::size_t> max_vote_size;  // bound on s
    std::optional<std::size_t> max_degree;     // bound on d
    std::size_t spread = 24;                   // coordinate range for embeddings
};

struct GenSpec {
    // nullopt = unrestricted profile
    std::optional<StructureProperty> structure;
    std::size_t n = 1;
    std::size_t m = 1;
    std::uint64_t seed = 0;
    GenParams params;
};

// Deterministic seeded generator whose output is guaranteed to satisfy the
// requested structure. Supported: 2PART, PART, VEI, VI, CEI, CI, WSC, DUE
// and unrestricted; anything else throws std::invalid_argument.
ApprovalProfile generate(const GenSpec& spec);

}  // namespace apd
