#pragma once

#include <vector>

namespace slicereg {

struct GaussLegendreRule {
    std::vector<double> nodes;   // on [-1, 1]
    std::vector<double> weights; // sum to 2
};

/// n-point Gauss-Legendre rule on [-1, 1]; exact for degree <= 2n-1.
/// Rules are cached, so repeated requests are cheap.
const GaussLegendreRule& gauss_legendre(int n);

} // namespace slicereg
