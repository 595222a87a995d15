#include "sphtet/sampling.hpp"

#include <cmath>
#include <string>

namespace sphtet {

namespace {

bool try_draw(SplitMix64& rng, const SampleConfig& config, TetLengths& out) {
    TetVertices verts;
    for (int v = 0; v < 4; ++v) {
        const auto [x0, x1] = rng.next_normal_pair();
        const auto [x2, x3] = rng.next_normal_pair();
        const Vec4 p{x0, x1, x2, x3};
        const double norm = std::sqrt(p[0] * p[0] + p[1] * p[1] + p[2] * p[2] + p[3] * p[3]);
        if (!(norm > 1e-8)) return false;
        verts.v[v] = {p[0] / norm, p[1] / norm, p[2] / norm, p[3] / norm};
    }
    TetLengths lengths;
    try {
        lengths = lengths_from_vertices(verts);
    } catch (const DegenerateError&) {
        return false;
    }
    for (double l : lengths.values) {
        if (!(l > config.band_lo && l < config.band_hi)) return false;
    }
    if (!(gram_det(lengths) >= config.min_margin)) return false;
    if (!validate_lengths(lengths).ok()) return false;
    out = lengths;
    return true;
}

}  // namespace

TetLengths sample_one(const SampleConfig& config, std::uint64_t index,
                      SampleStats* stats) {
    if (!(config.band_lo > 0.0 && config.band_lo < config.band_hi &&
          config.band_hi < std::numbers::pi)) {
        throw DomainError("length band must be ordered inside (0, pi)");
    }
    SplitMix64 rng(substream_seed(config.seed, index));
    TetLengths lengths;
    for (int attempt = 0; attempt < kRejectionBudget; ++attempt) {
        if (stats != nullptr) ++stats->attempts;
        if (try_draw(rng, config, lengths)) return lengths;
    }
    throw ExhaustedError("no acceptable tetrahedron in " +
                         std::to_string(kRejectionBudget) + " redraws for sample " +
                         std::to_string(index));
}

std::vector<TetLengths> sample_tetrahedra(const SampleConfig& config,
                                          SampleStats* stats) {
    if (config.count < 1) {
        throw DomainError("sample count must be at least 1");
    }
    std::vector<TetLengths> out;
    out.reserve(config.count);
    for (std::size_t k = 0; k < config.count; ++k) {
        out.push_back(sample_one(config, k, stats));
    }
    return out;
}

TetLengths perturb(const TetLengths& lengths, double magnitude, std::uint64_t seed) {
    if (!(magnitude >= 0.0)) {
        throw DomainError("perturbation magnitude must be nonnegative");
    }
    SplitMix64 rng(seed);
    TetLengths out = lengths;
    for (double& v : out.values) {
        v += magnitude * (2.0 * rng.next_unit() - 1.0);
    }
    const Validity validity = validate_lengths(out);
    if (!validity.ok()) {
        throw NotRealizableError(std::string("perturbed lengths are ") +
                                 to_string(validity.code));
    }
    return out;
}

}  // namespace sphtet
