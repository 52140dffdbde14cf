#pragma once

#include <cstdint>

#include "ulrich/field.hpp"

namespace ulrich {

/// SplitMix64 stream. Small, fully deterministic across platforms, which is
/// what makes reports reproducible bit-for-bit from a seed.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) noexcept : state_(seed) {}

    std::uint64_t next() noexcept {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform value in [0, n). Modulo bias is < n / 2^64, irrelevant here.
    std::uint64_t below(std::uint64_t n) noexcept { return next() % n; }

    std::uint32_t field_elem(const PrimeField& f) noexcept {
        return static_cast<std::uint32_t>(below(f.modulus()));
    }

    std::uint32_t nonzero_field_elem(const PrimeField& f) noexcept {
        return static_cast<std::uint32_t>(1 + below(f.modulus() - 1));
    }

private:
    std::uint64_t state_;
};

/// Derive an independent stream for a named sub-task of a run.
inline std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) noexcept {
    SplitMix64 g(seed ^ (0xa0761d6478bd642full + stream * 0xe7037ed1a0b428dbull));
    return g.next();
}

}  // namespace ulrich
