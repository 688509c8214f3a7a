#ifndef PITUNE_RNG_HPP
#define PITUNE_RNG_HPP

#include <cstdint>
#include <cstddef>
#include <vector>

namespace pitune {

/// SplitMix64 finalizer. Stable across platforms and compilers.
constexpr std::uint64_t mix64(std::uint64_t z) {
    z += 0x9e3779b97f4a7c15ull;
    z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
    z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
    return z ^ (z >> 31);
}

/// Derives an independent stream seed from (seed, stream). Equals the
/// (stream+1)-th output of SplitMix64 started at `seed`.
constexpr std::uint64_t derive_seed(std::uint64_t seed, std::uint64_t stream) {
    return mix64(seed + 0x9e3779b97f4a7c15ull * stream);
}

/// Fixed key domains so seeds derived for different purposes never collide.
/// Every random draw in the toolkit descends from the run seed through a
/// chain of derive_seed calls keyed below; scheduling order never matters.
namespace seed_domain {
inline constexpr std::uint64_t kTreeStream = 0x01;
inline constexpr std::uint64_t kTechniqueSplits = 0x02;
inline constexpr std::uint64_t kCellForest = 0x03;
inline constexpr std::uint64_t kActualGrid = 0x04;
inline constexpr std::uint64_t kMetaInner = 0x05;
inline constexpr std::uint64_t kBootstrapRetry = 0x06;
} // namespace seed_domain

/// Deterministic 64-bit generator (SplitMix64 sequence).
///
/// std::mt19937_64 is portable but the standard distributions are not; all
/// bounded draws and shuffles are implemented here so that a given seed
/// produces identical results on every platform.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        state_ += 0x9e3779b97f4a7c15ull;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    /// Uniform integer in [0, n). Multiply-shift bounding; bias is at most
    /// n / 2^64, far below anything observable here.
    std::size_t below(std::size_t n) {
        return static_cast<std::size_t>(
            (static_cast<unsigned __int128>(next()) * n) >> 64);
    }

    /// Uniform double in [0, 1), 53-bit resolution.
    double unit() {
        return static_cast<double>(next() >> 11) * 0x1.0p-53;
    }

    /// Fisher-Yates shuffle.
    template <typename T>
    void shuffle(std::vector<T>& v) {
        for (std::size_t i = v.size(); i > 1; --i) {
            std::size_t j = below(i);
            std::swap(v[i - 1], v[j]);
        }
    }

private:
    std::uint64_t state_;
};

} // namespace pitune

#endif
