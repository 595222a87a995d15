#pragma once

#include <cstdint>
#include <numbers>
#include <utility>
#include <vector>

#include "sphtet/tetra.hpp"

namespace sphtet {

// Portable 64-bit generator. State advances by the fixed increment
// 0x9e3779b97f4a7c15; output is the Stafford mix13 finalizer of the state.
// Integer path is bit-exact on every platform.
class SplitMix64 {
public:
    explicit SplitMix64(std::uint64_t seed) : state_(seed) {}

    std::uint64_t next() {
        std::uint64_t z = (state_ += 0x9e3779b97f4a7c15ull);
        z = (z ^ (z >> 30)) * 0xbf58476d1ce4e5b9ull;
        z = (z ^ (z >> 27)) * 0x94d049bb133111ebull;
        return z ^ (z >> 31);
    }

    // Uniform in (0, 1]: top 53 bits, shifted into (0, 1] so log() is safe.
    double next_unit() {
        return static_cast<double>((next() >> 11) + 1) * 0x1.0p-53;
    }

    // Box-Muller transform; consumes exactly two uniforms per pair, so the
    // draw count per sample attempt is fixed and the stream is reproducible.
    std::pair<double, double> next_normal_pair() {
        const double u1 = next_unit();
        const double u2 = next_unit();
        const double r = std::sqrt(-2.0 * std::log(u1));
        const double t = 2.0 * std::numbers::pi * u2;
        return {r * std::cos(t), r * std::sin(t)};
    }

private:
    std::uint64_t state_;
};

// Substream for sample `index`: generator state seeded with
// seed + (index + 1) * 0x9e3779b97f4a7c15, mixed once. Samples are therefore
// independent of evaluation order and safe to draw in parallel.
inline std::uint64_t substream_seed(std::uint64_t seed, std::uint64_t index) {
    return SplitMix64(seed + (index + 1) * 0x9e3779b97f4a7c15ull).next();
}

struct SampleConfig {
    std::uint64_t seed = 0;
    std::size_t count = 1;
    // Floor on the Gram determinant of accepted samples. The default admits
    // almost every random tetrahedron; finite-difference verification passes
    // 1e-2 explicitly, where central differences at step 1e-5 carry ~100x
    // headroom against the 1e-5 oracle tolerances.
    double min_margin = 1e-6;
    // Accepted edge-length band (open interval).
    double band_lo = 0.05;
    double band_hi = std::numbers::pi - 0.05;
};

// Redraws allowed per sample before ExhaustedError.
inline constexpr int kRejectionBudget = 10000;

struct SampleStats {
    std::uint64_t attempts = 0;  // total vertex draws including rejections
};

// Four unit 4-vectors of normalized standard normals, redrawn until the edge
// lengths fit the band and the Gram determinant clears min_margin. A pure
// function of (config.seed, index).
TetLengths sample_one(const SampleConfig& config, std::uint64_t index,
                      SampleStats* stats = nullptr);

std::vector<TetLengths> sample_tetrahedra(const SampleConfig& config,
                                          SampleStats* stats = nullptr);

// Adds independent uniform noise in [-magnitude, magnitude] to each length
// and re-validates. Deterministic in `seed`.
TetLengths perturb(const TetLengths& lengths, double magnitude, std::uint64_t seed);

}  // namespace sphtet
