#include "rqi/targets.hpp"

#include <cmath>
#include <numbers>

#include "rqi/errors.hpp"

namespace rqi {

namespace {

constexpr double kTwoPi = 2.0 * std::numbers::pi;

// Modulus constants. absx is exactly 1-Lipschitz; trig3 has sup|grad| = 2 pi
// (attained, e.g. gradient at (0, 0, 1/4)). sine11 is not Lipschitz at the
// x11 = 1 face (the last factor behaves like (1 - x11)^(5/11) there), so its
// constant is an empirical bound on |f(x)-f(y)|/h valid for displacement
// scales h >= 0.05, with ~40% headroom over the measured supremum.
constexpr double kAbsLip = 1.0;
constexpr double kTrig3Lip = kTwoPi;
constexpr double kSine11Mod = 9.0;

} // namespace

TargetFunction::TargetFunction(TargetName id, BoxDomain domain, double L, double s)
    : id_(id), domain_(std::move(domain)), holder_L_(L), holder_s_(s) {}

TargetFunction TargetFunction::absx() {
    return TargetFunction(TargetName::AbsX, BoxDomain::cube(1, -1.0, 1.0), kAbsLip, 1.0);
}

TargetFunction TargetFunction::trig3() {
    return TargetFunction(TargetName::TrigProduct3D, BoxDomain::cube(3, 0.0, 1.0), kTrig3Lip, 1.0);
}

TargetFunction TargetFunction::sine11() {
    return TargetFunction(TargetName::SineProduct11D, BoxDomain::cube(11, 0.0, 1.0), kSine11Mod,
                          1.0);
}

TargetFunction TargetFunction::constant_one(std::size_t dim) {
    return TargetFunction(TargetName::ConstantOne, BoxDomain::cube(dim, 0.0, 1.0), 0.0, 1.0);
}

double TargetFunction::operator()(std::span<const double> x) const {
    if (x.size() != dim())
        throw ContractError("TargetFunction: point dimension mismatch");
    if (!domain_.contains(x))
        throw DomainError("TargetFunction: point outside the target's domain");

    switch (id_) {
    case TargetName::AbsX:
        return std::abs(x[0]);
    case TargetName::TrigProduct3D:
        return std::sin(kTwoPi * x[0]) * std::cos(kTwoPi * x[1]) * std::sin(kTwoPi * x[2]);
    case TargetName::SineProduct11D: {
        double prod = 1.0;
        for (std::size_t j = 1; j <= 11; ++j) {
            const double arg = 0.5 * std::numbers::pi *
                               (x[j - 1] + static_cast<double>(j) / 11.0);
            // The argument stays in (0, pi], so sin >= 0 mathematically;
            // clamp to guard against a tiny negative from rounding at pi.
            const double s = std::max(std::sin(arg), 0.0);
            prod *= std::pow(s, 5.0 / static_cast<double>(j));
        }
        return prod;
    }
    case TargetName::ConstantOne:
        return 1.0;
    }
    throw ContractError("TargetFunction: unreachable");
}

double TargetFunction::modulus_bound(double h) const {
    if (!(h > 0.0)) throw ContractError("modulus_bound: h must be > 0");
    return holder_L_ * std::pow(h, holder_s_);
}

std::string TargetFunction::name() const {
    switch (id_) {
    case TargetName::AbsX: return "absx";
    case TargetName::TrigProduct3D: return "trig3";
    case TargetName::SineProduct11D: return "sine11";
    case TargetName::ConstantOne: return "one";
    }
    return "?";
}

TargetFunction TargetFunction::parse(std::string_view name, std::size_t dim_for_one) {
    if (name == "absx") return absx();
    if (name == "trig3") return trig3();
    if (name == "sine11") return sine11();
    if (name == "one") return constant_one(dim_for_one);
    throw ConfigError("unrecognized target '" + std::string(name) +
                      "' (expected absx, trig3, sine11 or one)");
}

} // namespace rqi
