#pragma once

#include <utility>

#include "phinv/natural.hpp"

namespace phinv {

enum class MetricSide { Above, Below };

// Both arguments of rho must lie strictly on one side of the constant c.
struct MetricDomain {
    double c = 1.0;
    MetricSide side = MetricSide::Above;
};

// |ln( h (c - g) / (g (c - h)) )|. Symmetric, zero iff h == g, additive
// along monotone chains on one side of c.
double rho(double h, double g, const MetricDomain& domain = {});

// (2^eta_2(m), 3^eta_3(m)); both valuations must be >= 1.
std::pair<double, double> eta_coordinates(const Natural& m);

}  // namespace phinv
