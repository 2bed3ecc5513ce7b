#include "rqi/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>
#include <numbers>

#include "rqi/errors.hpp"

namespace rqi {

namespace {

GaussLegendreRule compute_gauss_legendre(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(n);
    rule.weights.resize(n);
    // Roots of P_n by Newton iteration from the Chebyshev-like initial guess.
    for (int i = 0; i < (n + 1) / 2; ++i) {
        double x = std::cos(std::numbers::pi * (i + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int iter = 0; iter < 100; ++iter) {
            // Evaluate P_n(x) and P'_n(x) by the three-term recurrence.
            double p0 = 1.0, p1 = x;
            for (int k = 2; k <= n; ++k) {
                const double p2 = ((2.0 * k - 1.0) * x * p1 - (k - 1.0) * p0) / k;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        rule.nodes[i] = -x;
        rule.nodes[n - 1 - i] = x;
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.weights[i] = w;
        rule.weights[n - 1 - i] = w;
    }
    if (n % 2 == 1) rule.nodes[n / 2] = 0.0;
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw ContractError("gauss_legendre: need n >= 1");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mtx;
    std::lock_guard lock(mtx);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_gauss_legendre(n)).first;
    return it->second;
}

Rule1D composite_rule(double a, double b, const QuadratureSpec& spec) {
    if (!(a < b)) throw ContractError("composite_rule: need a < b");
    const auto& base = gauss_legendre(spec.points_per_panel);
    const int panels = spec.panels_per_axis;
    Rule1D out;
    out.nodes.reserve(static_cast<std::size_t>(panels) * base.nodes.size());
    out.weights.reserve(out.nodes.capacity());
    const double w = (b - a) / panels;
    for (int p = 0; p < panels; ++p) {
        const double lo = a + p * w;
        const double mid = lo + 0.5 * w;
        for (std::size_t k = 0; k < base.nodes.size(); ++k) {
            out.nodes.push_back(mid + 0.5 * w * base.nodes[k]);
            out.weights.push_back(0.5 * w * base.weights[k]);
        }
    }
    return out;
}

double integrate_box(const BoxDomain& box, const QuadratureSpec& spec,
                     const std::function<double(std::span<const double>)>& f) {
    const std::size_t d = box.dim();
    if (d > 3) throw ContractError("integrate_box: tensor quadrature supports dim <= 3");

    std::vector<Rule1D> axes;
    axes.reserve(d);
    for (std::size_t i = 0; i < d; ++i)
        axes.push_back(composite_rule(box.lower[i], box.upper[i], spec));

    double sum = 0.0;
    double x[3];
    if (d == 1) {
        for (std::size_t i = 0; i < axes[0].nodes.size(); ++i) {
            x[0] = axes[0].nodes[i];
            sum += axes[0].weights[i] * f({x, 1});
        }
    } else if (d == 2) {
        for (std::size_t i = 0; i < axes[0].nodes.size(); ++i) {
            x[0] = axes[0].nodes[i];
            double inner = 0.0;
            for (std::size_t j = 0; j < axes[1].nodes.size(); ++j) {
                x[1] = axes[1].nodes[j];
                inner += axes[1].weights[j] * f({x, 2});
            }
            sum += axes[0].weights[i] * inner;
        }
    } else {
        for (std::size_t i = 0; i < axes[0].nodes.size(); ++i) {
            x[0] = axes[0].nodes[i];
            double mid = 0.0;
            for (std::size_t j = 0; j < axes[1].nodes.size(); ++j) {
                x[1] = axes[1].nodes[j];
                double inner = 0.0;
                for (std::size_t k = 0; k < axes[2].nodes.size(); ++k) {
                    x[2] = axes[2].nodes[k];
                    inner += axes[2].weights[k] * f({x, 3});
                }
                mid += axes[1].weights[j] * inner;
            }
            sum += axes[0].weights[i] * mid;
        }
    }
    return sum;
}

} // namespace rqi
