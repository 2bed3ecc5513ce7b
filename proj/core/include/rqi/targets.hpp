#pragma once

#include <span>
#include <string>
#include <string_view>

#include "rqi/domain.hpp"

namespace rqi {

enum class TargetName { AbsX, TrigProduct3D, SineProduct11D, ConstantOne };

// Test functions with their native domains and the smoothness data the
// convergence benchmarks rely on:
//   absx    |x|                                           on [-1, 1]
//   trig3   sin(2 pi x1) cos(2 pi x2) sin(2 pi x3)        on [0, 1]^3
//   sine11  prod_j sin((pi/2)(x_j + j/11))^(5/j)          on [0, 1]^11
//   one     1                                             on [0, 1]^d
class TargetFunction {
public:
    static TargetFunction absx();
    static TargetFunction trig3();
    static TargetFunction sine11();
    static TargetFunction constant_one(std::size_t dim = 1);

    TargetName id() const noexcept { return id_; }
    const BoxDomain& domain() const noexcept { return domain_; }
    std::size_t dim() const noexcept { return domain_.dim(); }

    // Smoothness exponent s used in the a-priori rate s/(2s+d).
    double holder_exponent() const noexcept { return holder_s_; }
    // Constant L in the modulus bound L * h^s.
    double holder_constant() const noexcept { return holder_L_; }

    // Throws DomainError if x is outside the domain.
    double operator()(std::span<const double> x) const;

    // Upper bound L * h^s on sup{|f(x)-f(y)| : |x-y| <= h}.
    double modulus_bound(double h) const;

    std::string name() const;
    static TargetFunction parse(std::string_view name, std::size_t dim_for_one = 1);

private:
    TargetFunction(TargetName id, BoxDomain domain, double L, double s);

    TargetName id_;
    BoxDomain domain_;
    double holder_L_;
    double holder_s_;
};

} // namespace rqi
