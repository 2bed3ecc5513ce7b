#pragma once

#include <functional>
#include <span>
#include <vector>

#include "rqi/domain.hpp"

namespace rqi {

// Composite Gauss-Legendre rule: each axis is split into `panels_per_axis`
// equal panels carrying a `points_per_panel`-node rule. refined() doubles the
// panel count; the difference between the two levels is the error estimate.
struct QuadratureSpec {
    int points_per_panel = 32;
    int panels_per_axis = 8;

    QuadratureSpec refined() const { return {points_per_panel, panels_per_axis * 2}; }
};

// Nodes/weights of the n-point Gauss-Legendre rule on [-1, 1].
// Computed once per n (Newton iteration on the Legendre polynomial) and cached.
struct GaussLegendreRule {
    std::vector<double> nodes;
    std::vector<double> weights;
};
const GaussLegendreRule& gauss_legendre(int n);

// 1-D composite nodes/weights over [a, b].
struct Rule1D {
    std::vector<double> nodes;
    std::vector<double> weights;
};
Rule1D composite_rule(double a, double b, const QuadratureSpec& spec);

// Tensor-product integral of f over the box. Supports dim <= 3, which is all
// the validation paths need.
double integrate_box(const BoxDomain& box, const QuadratureSpec& spec,
                     const std::function<double(std::span<const double>)>& f);

} // namespace rqi
