#pragma once

#include <cstddef>
#include <limits>
#include <optional>
#include <span>
#include <string>
#include <string_view>

#include "rqi/quadrature.hpp"

namespace rqi {

enum class KernelFamily { Gaussian, CompactPower };

// Exponent below which exp() underflows to zero in double precision; weights
// whose (shifted) exponent falls under this are treated as exact zeros.
inline constexpr double kExpUnderflow = -745.0;

// Radial kernel on R^d. Two families:
//   Gaussian:     psi(x) = (2 pi sigma^2)^(-d/2) exp(-|x|^2 / (2 sigma^2))
//   CompactPower: psi(x) = max(1 - |x|, 0)^beta
// The compact family is used as-is, without rescaling to unit mass: the
// Shepard ratio is invariant under positive scaling of the kernel, so the
// normalization constant is irrelevant everywhere it is consumed.
// kernel_mass() exists to document the actual mass numerically.
class Kernel {
public:
    static Kernel gaussian(double sigma, std::size_t dim);
    static Kernel compact_power(double beta, std::size_t dim);

    KernelFamily family() const noexcept { return family_; }
    std::size_t dim() const noexcept { return dim_; }
    double sigma() const noexcept { return sigma_; }
    double beta() const noexcept { return beta_; }

    // psi(x); zero outside the unit ball for CompactPower.
    double operator()(std::span<const double> x) const;

    // Radial profile psi(r) for r = |x| >= 0.
    double radial(double r) const noexcept;

    // psi_h(diff) = h^{-d} psi(diff / h). Throws InvalidBandwidth for h <= 0.
    double scaled(double h, std::span<const double> diff) const;

    // 1 for CompactPower, +infinity for Gaussian.
    double support_radius() const noexcept {
        return family_ == KernelFamily::CompactPower
                   ? 1.0
                   : std::numeric_limits<double>::infinity();
    }

    // log of the Gaussian normalization (2 pi sigma^2)^(-d/2); 0 for CompactPower.
    double log_prefactor() const noexcept;

    // `gaussian(sigma=1.0)` / `compact(beta=3.0)`
    std::string spec_string() const;
    static Kernel parse(std::string_view spec, std::size_t dim);

private:
    Kernel(KernelFamily f, double sigma, double beta, std::size_t dim);

    KernelFamily family_;
    double sigma_;
    double beta_;
    std::size_t dim_;
};

struct MassEstimate {
    double value;
    double error_estimate; // |coarse - refined|
};

// Numerical integral of psi over R^d (support box for CompactPower, +-8 sigma
// for Gaussian). Validation-only; returns nullopt above dim 3 instead of
// failing, since nothing downstream depends on the value.
std::optional<MassEstimate> kernel_mass(const Kernel& k, const QuadratureSpec& spec = {});

} // namespace rqi
