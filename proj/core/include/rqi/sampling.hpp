#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "rqi/domain.hpp"

namespace rqi {

enum class LawKind { Uniform, TruncatedNormal };

// Distribution of the sampling centers on a box. The truncated normal is
// isotropic; unset mean/stddev resolve against the domain: mean = box center,
// stddev = min extent / 4. Both laws have densities bounded away from zero on
// the box.
struct SamplingLaw {
    LawKind kind = LawKind::Uniform;
    std::optional<std::vector<double>> mean; // TruncatedNormal only
    std::optional<double> stddev;            // TruncatedNormal only

    static SamplingLaw uniform() { return {LawKind::Uniform, std::nullopt, std::nullopt}; }
    static SamplingLaw truncated_normal() {
        return {LawKind::TruncatedNormal, std::nullopt, std::nullopt};
    }
    static SamplingLaw truncated_normal(std::vector<double> m, double sd) {
        return {LawKind::TruncatedNormal, std::move(m), sd};
    }

    std::vector<double> effective_mean(const BoxDomain& domain) const;
    double effective_stddev(const BoxDomain& domain) const;

    // Normalized density w.r.t. Lebesgue measure on the box; used by the
    // convolution oracle. Zero outside the box.
    double density(const BoxDomain& domain, std::span<const double> t) const;

    // `uniform` / `truncnormal(mean=auto,stddev=auto)`
    std::string spec_string() const;
    static SamplingLaw parse(std::string_view spec);
};

// n i.i.d. draws from the law restricted to the domain, reproducible bit for
// bit from the seed. The truncated normal rejects whole d-vectors whose any
// coordinate leaves the box; 2e6 consecutive rejections (estimated acceptance
// below ~1e-6) raise PathologicalLaw.
PointSet sample_centers(const SamplingLaw& law, const BoxDomain& domain,
                        std::size_t n, std::uint64_t seed);

} // namespace rqi
