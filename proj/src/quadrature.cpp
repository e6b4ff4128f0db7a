#include "slicereg/quadrature.hpp"

#include <cmath>
#include <map>
#include <mutex>

#include "slicereg/errors.hpp"

namespace slicereg {

namespace {

GaussLegendreRule compute_rule(int n) {
    GaussLegendreRule rule;
    rule.nodes.resize(static_cast<size_t>(n));
    rule.weights.resize(static_cast<size_t>(n));
    // Newton iteration on P_n from the Chebyshev-based initial guess.
    for (int k = 0; k < (n + 1) / 2; ++k) {
        double x = std::cos(M_PI * (k + 0.75) / (n + 0.5));
        double dp = 0.0;
        for (int it = 0; it < 100; ++it) {
            double p0 = 1.0, p1 = x;
            for (int j = 2; j <= n; ++j) {
                const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
                p0 = p1;
                p1 = p2;
            }
            dp = n * (x * p1 - p0) / (x * x - 1.0);
            const double dx = p1 / dp;
            x -= dx;
            if (std::abs(dx) < 1e-15) break;
        }
        const double w = 2.0 / ((1.0 - x * x) * dp * dp);
        rule.nodes[static_cast<size_t>(k)] = -x;
        rule.weights[static_cast<size_t>(k)] = w;
        rule.nodes[static_cast<size_t>(n - 1 - k)] = x;
        rule.weights[static_cast<size_t>(n - 1 - k)] = w;
    }
    if (n % 2 == 1) {
        // middle node is exactly 0
        double p0 = 1.0, x = 0.0, p1 = x;
        for (int j = 2; j <= n; ++j) {
            const double p2 = ((2.0 * j - 1.0) * x * p1 - (j - 1.0) * p0) / j;
            p0 = p1;
            p1 = p2;
        }
        const double dp = n * (x * p1 - p0) / (x * x - 1.0);
        rule.nodes[static_cast<size_t>(n / 2)] = 0.0;
        rule.weights[static_cast<size_t>(n / 2)] = 2.0 / (dp * dp);
    }
    return rule;
}

} // namespace

const GaussLegendreRule& gauss_legendre(int n) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "Gauss-Legendre rule needs n >= 1");
    static std::map<int, GaussLegendreRule> cache;
    static std::mutex mutex;
    std::lock_guard<std::mutex> lock(mutex);
    auto it = cache.find(n);
    if (it == cache.end()) it = cache.emplace(n, compute_rule(n)).first;
    return it->second;
}

} // namespace slicereg
