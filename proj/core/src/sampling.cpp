#include "rqi/sampling.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rqi/errors.hpp"
#include "rqi/rng.hpp"

namespace rqi {

std::vector<double> SamplingLaw::effective_mean(const BoxDomain& domain) const {
    if (mean) {
        if (mean->size() != domain.dim())
            throw ContractError("SamplingLaw: mean dimension does not match domain");
        if (!domain.contains(*mean))
            throw ContractError("SamplingLaw: mean must lie inside the domain");
        return *mean;
    }
    return domain.center();
}

double SamplingLaw::effective_stddev(const BoxDomain& domain) const {
    if (stddev) {
        if (!(*stddev > 0.0)) throw ContractError("SamplingLaw: stddev must be > 0");
        return *stddev;
    }
    return domain.min_extent() / 4.0;
}

double SamplingLaw::density(const BoxDomain& domain, std::span<const double> t) const {
    if (!domain.contains(t)) return 0.0;
    if (kind == LawKind::Uniform) return 1.0 / domain.volume();

    const auto m = effective_mean(domain);
    const double sd = effective_stddev(domain);
    // Componentwise truncation of an isotropic normal factorizes over axes.
    double dens = 1.0;
    for (std::size_t i = 0; i < domain.dim(); ++i) {
        const double z = (t[i] - m[i]) / sd;
        const double phi = std::exp(-0.5 * z * z) / (sd * std::sqrt(2.0 * std::numbers::pi));
        const double zl = (domain.lower[i] - m[i]) / sd;
        const double zu = (domain.upper[i] - m[i]) / sd;
        const double massi = 0.5 * (std::erf(zu / std::numbers::sqrt2) -
                                    std::erf(zl / std::numbers::sqrt2));
        dens *= phi / massi;
    }
    return dens;
}

std::string SamplingLaw::spec_string() const {
    if (kind == LawKind::Uniform) return "uniform";
    std::ostringstream os;
    os << "truncnormal(mean=";
    if (mean) {
        for (std::size_t i = 0; i < mean->size(); ++i)
            os << (i ? ";" : "") << (*mean)[i];
    } else {
        os << "auto";
    }
    os << ",stddev=";
    if (stddev)
        os << *stddev;
    else
        os << "auto";
    os << ")";
    return os.str();
}

SamplingLaw SamplingLaw::parse(std::string_view spec) {
    if (spec == "uniform") return SamplingLaw::uniform();
    if (spec.substr(0, 11) != "truncnormal")
        throw ConfigError("unrecognized law spec '" + std::string(spec) +
                          "' (expected uniform or truncnormal(mean=...,stddev=...))");
    std::string_view rest = spec.substr(11);
    if (rest.empty() || rest == "()") return SamplingLaw::truncated_normal();
    if (rest.front() != '(' || rest.back() != ')')
        throw ConfigError("malformed law spec '" + std::string(spec) + "'");
    rest = rest.substr(1, rest.size() - 2);

    SamplingLaw law = SamplingLaw::truncated_normal();
    std::string item;
    std::istringstream is{std::string(rest)};
    while (std::getline(is, item, ',')) {
        const auto eq = item.find('=');
        if (eq == std::string::npos)
            throw ConfigError("malformed law parameter '" + item + "'");
        const std::string key = item.substr(0, eq);
        const std::string val = item.substr(eq + 1);
        if (val == "auto") continue;
        try {
            if (key == "mean") {
                // scalar or semicolon-separated vector, broadcast later
                std::vector<double> m;
                std::istringstream ms(val);
                std::string c;
                while (std::getline(ms, c, ';')) m.push_back(std::stod(c));
                law.mean = std::move(m);
            } else if (key == "stddev") {
                law.stddev = std::stod(val);
            } else {
                throw ConfigError("unknown law parameter '" + key + "'");
            }
        } catch (const ConfigError&) {
            throw;
        } catch (const std::exception&) {
            throw ConfigError("bad numeric value in law spec '" + item + "'");
        }
    }
    return law;
}

PointSet sample_centers(const SamplingLaw& law, const BoxDomain& domain,
                        std::size_t n, std::uint64_t seed) {
    if (n == 0) throw ContractError("sample_centers: n must be >= 1");
    const std::size_t d = domain.dim();
    PointSet points(d);
    points.reserve(n);
    SplitMix64 rng(seed);

    if (law.kind == LawKind::Uniform) {
        for (std::size_t i = 0; i < n; ++i) {
            double* row = points.append_row();
            for (std::size_t j = 0; j < d; ++j)
                row[j] = domain.lower[j] + (domain.upper[j] - domain.lower[j]) * rng.next_double();
        }
        return points;
    }

    const auto mean = law.effective_mean(domain);
    const double sd = law.effective_stddev(domain);
    // Broadcast a scalar mean over all axes.
    std::vector<double> m = mean;
    if (m.size() == 1 && d > 1) m.assign(d, mean[0]);
    if (m.size() != d) throw ContractError("SamplingLaw: mean dimension does not match domain");

    constexpr std::uint64_t kRejectionBudget = 2'000'000;
    std::uint64_t consecutive_rejections = 0;
    std::vector<double> z(d);
    while (points.size() < n) {
        // Exactly ceil(d/2) Box-Muller pairs per attempt, spare draw discarded,
        // so the stream position is a pure function of the attempt count.
        for (std::size_t j = 0; j + 1 < d; j += 2) {
            auto [a, b] = rng.next_normal_pair();
            z[j] = a;
            z[j + 1] = b;
        }
        if (d % 2 == 1) z[d - 1] = rng.next_normal_pair().first;

        bool inside = true;
        for (std::size_t j = 0; j < d; ++j) {
            z[j] = m[j] + sd * z[j];
            if (z[j] < domain.lower[j] || z[j] > domain.upper[j]) inside = false;
        }
        if (inside) {
            points.push_back(z);
            consecutive_rejections = 0;
        } else if (++consecutive_rejections >= kRejectionBudget) {
            throw PathologicalLaw(
                "sample_centers: " + std::to_string(kRejectionBudget) +
                " consecutive rejections; the law barely intersects the domain");
        }
    }
    return points;
}

} // namespace rqi
