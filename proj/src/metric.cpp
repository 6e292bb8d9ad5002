#include "phinv/metric.hpp"

#include <cmath>

#include "phinv/core_arith.hpp"
#include "phinv/errors.hpp"

namespace phinv {

double rho(double h, double g, const MetricDomain& domain) {
    const double c = domain.c;
    if (!(c > 0)) throw domain_error("rho: c must be positive");
    if (h <= 0 || g <= 0) throw domain_error("rho: h and g must be positive");
    if (domain.side == MetricSide::Above) {
        if (h <= c || g <= c) throw domain_error("rho: h and g must exceed c on side Above");
    } else {
        if (h >= c || g >= c) throw domain_error("rho: h and g must be below c on side Below");
    }
    // ln(h(c-g)/(g(c-h))) = ln|h(c-g)| - ln|g(c-h)|; the split form makes
    // the symmetry rho(h,g) == rho(g,h) exact in floating point.
    const double a = std::fabs(h * (c - g));
    const double b = std::fabs(g * (c - h));
    return std::fabs(std::log(a) - std::log(b));
}

std::pair<double, double> eta_coordinates(const Natural& m) {
    unsigned e2 = valuation(2, m);
    unsigned e3 = valuation(3, m);
    if (e2 < 1 || e3 < 1)
        throw domain_error("eta_coordinates: m must be divisible by both 2 and 3");
    return {std::ldexp(1.0, static_cast<int>(e2)), std::pow(3.0, e3)};
}

}  // namespace phinv
