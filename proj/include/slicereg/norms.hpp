#pragma once

#include <cmath>
#include <cstdint>
#include <random>
#include <vector>

#include "slicereg/stem_polynomial.hpp"

namespace slicereg {

/// Closed form of the sphere average: int_S |f(x + v y)|^2 dsigma(v)
/// equals 4 pi |F(x + iota y)|^2.
double sphere_l2(const StemPolynomial& f, double x, double y);

/// Sample of the unit sphere of imaginary units with positive weights
/// summing to 4 pi (the sphere area).
struct SphereSample {
    std::vector<ImaginaryUnit> points;
    std::vector<double> weights;

    /// n uniform points, seeded; equal weights 4 pi / n.
    static SphereSample uniform_random(int n, std::uint64_t seed);
};

struct MonteCarloEstimate {
    double value = 0.0;
    double std_error = 0.0;
};

/// int_S |f(x + v y)|^2 dsigma estimated over a sphere sample.
MonteCarloEstimate sphere_l2_sampled(const StemPolynomial& f, double x, double y,
                                     const SphereSample& sample);

/// Monte-Carlo oracle for sphere_l2 with n uniform units (seeded).
MonteCarloEstimate sphere_l2_mc(const StemPolynomial& f, double x, double y, int n,
                                std::uint64_t seed);

/// L^2 norm of f over the disc of the given radius in the slice C_v;
/// independent of v. `nodes` controls the radial rule (angular = 4 * nodes).
double slice_l2(const StemPolynomial& f, const ImaginaryUnit& v, double radius, int nodes = 64);

/// L^2 norm over the 4-ball of the given radius, computed as the weighted
/// stem-plane integral 2 pi int_disc y^2 |F(x + iota y)|^2 dx dy (the y^2
/// Jacobian of the sphere fibration; every quaternion is counted once).
double bulk_l2(const StemPolynomial& f, double radius, int nodes = 64);

/// min_v |f(x+vy)| (Fibonacci-sphere scan), |F(x + iota y)|, and the closed
/// form of max_v |f(x+vy)|; the three are ordered.
struct NormSandwich {
    double min_sample = 0.0;
    double stem_norm = 0.0;
    double max_closed = 0.0;
};

NormSandwich norm_sandwich(const StemPolynomial& f, double x, double y, int grid = 4096);

/// Least-squares slope of log max_{|z|=R} |F| against log R; approaches the
/// degree for polynomials as the radii grow.
double degree_growth_estimate(const StemPolynomial& f, const std::vector<double>& radii);

/// Uniform point of the unit sphere of imaginary units (area-preserving
/// cylindrical construction).
template <typename Rng>
ImaginaryUnit random_unit(Rng& rng) {
    std::uniform_real_distribution<double> uni(0.0, 1.0);
    const double c = 1.0 - 2.0 * uni(rng);
    const double phi = 2.0 * 3.14159265358979323846 * uni(rng);
    const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
    return ImaginaryUnit(s * std::cos(phi), s * std::sin(phi), c);
}

} // namespace slicereg
