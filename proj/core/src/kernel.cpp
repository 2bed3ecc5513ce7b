#include "rqi/kernel.hpp"

#include <cmath>
#include <numbers>
#include <sstream>

#include "rqi/errors.hpp"

namespace rqi {

Kernel::Kernel(KernelFamily f, double sigma, double beta, std::size_t dim)
    : family_(f), sigma_(sigma), beta_(beta), dim_(dim) {
    if (dim == 0) throw ContractError("Kernel: dimension must be >= 1");
    if (f == KernelFamily::Gaussian && !(sigma > 0.0))
        throw ContractError("Kernel: sigma must be > 0");
    if (f == KernelFamily::CompactPower && !(beta > 0.0))
        throw ContractError("Kernel: beta must be > 0");
}

Kernel Kernel::gaussian(double sigma, std::size_t dim) {
    return Kernel(KernelFamily::Gaussian, sigma, 0.0, dim);
}

Kernel Kernel::compact_power(double beta, std::size_t dim) {
    return Kernel(KernelFamily::CompactPower, 0.0, beta, dim);
}

double Kernel::log_prefactor() const noexcept {
    if (family_ == KernelFamily::Gaussian)
        return -0.5 * static_cast<double>(dim_) *
               std::log(2.0 * std::numbers::pi * sigma_ * sigma_);
    return 0.0;
}

double Kernel::radial(double r) const noexcept {
    if (family_ == KernelFamily::Gaussian) {
        const double arg = log_prefactor() - r * r / (2.0 * sigma_ * sigma_);
        return arg < kExpUnderflow ? 0.0 : std::exp(arg);
    }
    const double t = 1.0 - r;
    return t > 0.0 ? std::pow(t, beta_) : 0.0;
}

double Kernel::operator()(std::span<const double> x) const {
    if (x.size() != dim_)
        throw ContractError("Kernel: point dimension does not match kernel dimension");
    double s = 0.0;
    for (double c : x) s += c * c;
    return radial(std::sqrt(s));
}

double Kernel::scaled(double h, std::span<const double> diff) const {
    if (!(h > 0.0)) throw InvalidBandwidth("Kernel::scaled: bandwidth h must be > 0");
    if (diff.size() != dim_)
        throw ContractError("Kernel: point dimension does not match kernel dimension");
    double s = 0.0;
    for (double c : diff) s += c * c;
    const double r = std::sqrt(s) / h;
    return std::pow(h, -static_cast<double>(dim_)) * radial(r);
}

std::string Kernel::spec_string() const {
    std::ostringstream os;
    if (family_ == KernelFamily::Gaussian)
        os << "gaussian(sigma=" << sigma_ << ")";
    else
        os << "compact(beta=" << beta_ << ")";
    return os.str();
}

namespace {

// Accepts `name`, `name()` or `name(param=value)`.
bool parse_call(std::string_view spec, std::string_view name, std::string_view param,
                double defval, double& out) {
    if (spec.substr(0, name.size()) != name) return false;
    std::string_view rest = spec.substr(name.size());
    if (rest.empty() || rest == "()") {
        out = defval;
        return true;
    }
    if (rest.front() != '(' || rest.back() != ')') return false;
    rest = rest.substr(1, rest.size() - 2);
    const auto eq = rest.find('=');
    if (eq == std::string_view::npos || rest.substr(0, eq) != param) return false;
    try {
        out = std::stod(std::string(rest.substr(eq + 1)));
    } catch (const std::exception&) {
        return false;
    }
    return true;
}

} // namespace

Kernel Kernel::parse(std::string_view spec, std::size_t dim) {
    double v = 0.0;
    if (parse_call(spec, "gaussian", "sigma", 1.0, v)) return Kernel::gaussian(v, dim);
    if (parse_call(spec, "compact", "beta", 3.0, v)) return Kernel::compact_power(v, dim);
    throw ConfigError("unrecognized kernel spec '" + std::string(spec) +
                      "' (expected gaussian(sigma=..) or compact(beta=..))");
}

std::optional<MassEstimate> kernel_mass(const Kernel& k, const QuadratureSpec& spec) {
    if (k.dim() > 3) return std::nullopt;

    const double half = k.family() == KernelFamily::Gaussian ? 8.0 * k.sigma() : 1.0;
    const BoxDomain box = BoxDomain::cube(k.dim(), -half, half);
    const auto integrand = [&k](std::span<const double> x) { return k(x); };

    // Panel count must be even so a panel boundary lands on the radial kink
    // at the origin; in 1-D that makes the compact-power integral exact.
    QuadratureSpec coarse = spec;
    if (coarse.panels_per_axis % 2 != 0) ++coarse.panels_per_axis;

    const double v0 = integrate_box(box, coarse, integrand);
    const double v1 = integrate_box(box, coarse.refined(), integrand);
    return MassEstimate{v1, std::abs(v1 - v0)};
}

} // namespace rqi
