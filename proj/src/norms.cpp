#include "slicereg/norms.hpp"

#include <algorithm>
#include <limits>

#include "slicereg/quadrature.hpp"

namespace slicereg {

namespace {
constexpr double kPi = 3.14159265358979323846;
}

double sphere_l2(const StemPolynomial& f, double x, double y) {
    return 4.0 * kPi * f.eval_stem(Complex(x, y)).norm_sq();
}

SphereSample SphereSample::uniform_random(int n, std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "sphere sample needs n >= 1");
    std::mt19937_64 rng(seed);
    SphereSample sample;
    sample.points.reserve(static_cast<size_t>(n));
    sample.weights.reserve(static_cast<size_t>(n));
    const double w = 4.0 * kPi / n;
    double partial = 0.0;
    for (int k = 0; k < n; ++k) {
        sample.points.push_back(random_unit(rng));
        if (k + 1 < n) {
            sample.weights.push_back(w);
            partial += w;
        } else {
            // close the sum to exactly the sphere area
            sample.weights.push_back(4.0 * kPi - partial);
        }
    }
    return sample;
}

MonteCarloEstimate sphere_l2_sampled(const StemPolynomial& f, double x, double y,
                                     const SphereSample& sample) {
    const size_t n = sample.points.size();
    if (n == 0 || sample.weights.size() != n)
        throw Error(ErrorKind::invalid_argument, "malformed sphere sample");
    double sum = 0.0, sum_sq = 0.0;
    for (size_t k = 0; k < n; ++k) {
        const double g = f.eval_slice(slice_point(sample.points[k], x, y)).norm_sq();
        sum += sample.weights[k] * g;
        sum_sq += g * g;
    }
    MonteCarloEstimate est;
    est.value = sum;
    if (n > 1) {
        const double mean = sum / (4.0 * kPi);
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        est.std_error = 4.0 * kPi * std::sqrt(var / n);
    }
    return est;
}

MonteCarloEstimate sphere_l2_mc(const StemPolynomial& f, double x, double y, int n,
                                std::uint64_t seed) {
    if (n < 1) throw Error(ErrorKind::invalid_argument, "Monte Carlo needs n >= 1");
    std::mt19937_64 rng(seed);
    double sum = 0.0, sum_sq = 0.0;
    for (int k = 0; k < n; ++k) {
        const ImaginaryUnit v = random_unit(rng);
        const double g = f.eval_slice(slice_point(v, x, y)).norm_sq();
        sum += g;
        sum_sq += g * g;
    }
    const double mean = sum / n;
    MonteCarloEstimate est;
    est.value = 4.0 * kPi * mean;
    if (n > 1) {
        const double var = std::max(0.0, (sum_sq - n * mean * mean) / (n - 1.0));
        est.std_error = 4.0 * kPi * std::sqrt(var / n);
    }
    return est;
}

double slice_l2(const StemPolynomial& f, const ImaginaryUnit& v, double radius, int nodes) {
    if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "slice_l2 needs radius > 0");
    if (nodes < 2) throw Error(ErrorKind::invalid_argument, "slice_l2 needs nodes >= 2");
    const auto& rule = gauss_legendre(nodes);
    const int angular = 4 * nodes;
    double acc = 0.0;
    for (int ir = 0; ir < nodes; ++ir) {
        const double r = 0.5 * radius * (rule.nodes[static_cast<size_t>(ir)] + 1.0);
        const double wr = 0.5 * radius * rule.weights[static_cast<size_t>(ir)];
        double ring = 0.0;
        for (int ia = 0; ia < angular; ++ia) {
            const double th = 2.0 * kPi * ia / angular;
            const Quaternion s = slice_point(v, r * std::cos(th), r * std::sin(th));
            ring += f.eval_slice(s).norm_sq();
        }
        acc += ring * (2.0 * kPi / angular) * r * wr;
    }
    return acc;
}

double bulk_l2(const StemPolynomial& f, double radius, int nodes) {
    if (!(radius > 0.0)) throw Error(ErrorKind::invalid_argument, "bulk_l2 needs radius > 0");
    if (nodes < 2) throw Error(ErrorKind::invalid_argument, "bulk_l2 needs nodes >= 2");
    // int_ball |f|^2 = 4 pi int_{upper half disc} y^2 |F|^2, and the
    // integrand is even in y, so integrate the full disc with weight 2 pi.
    const auto& rule = gauss_legendre(nodes);
    const int angular = 4 * nodes;
    double acc = 0.0;
    for (int ir = 0; ir < nodes; ++ir) {
        const double r = 0.5 * radius * (rule.nodes[static_cast<size_t>(ir)] + 1.0);
        const double wr = 0.5 * radius * rule.weights[static_cast<size_t>(ir)];
        double ring = 0.0;
        for (int ia = 0; ia < angular; ++ia) {
            const double th = 2.0 * kPi * ia / angular;
            const double y = r * std::sin(th);
            ring += y * y * f.eval_stem(Complex(r * std::cos(th), y)).norm_sq();
        }
        acc += ring * (2.0 * kPi / angular) * r * wr;
    }
    return 2.0 * kPi * acc;
}

NormSandwich norm_sandwich(const StemPolynomial& f, double x, double y, int grid) {
    if (grid < 8) throw Error(ErrorKind::invalid_argument, "norm_sandwich needs grid >= 8");
    const ComplexQuad stem = f.eval_stem(Complex(x, y));
    const Quaternion alpha = stem.real_part();
    const Quaternion beta = stem.imag_part();

    NormSandwich out;
    out.stem_norm = stem.norm();
    // max_v |alpha + v beta|^2 = |alpha|^2 + |beta|^2 + 2 |vec(alpha conj beta)|
    const Quaternion cross = alpha * beta.conj();
    out.max_closed = std::sqrt(alpha.norm_sq() + beta.norm_sq() + 2.0 * cross.vec().norm());

    // Fibonacci sphere scan for the minimum (no closed form used).
    const double golden = kPi * (3.0 - std::sqrt(5.0));
    double min_sq = std::numeric_limits<double>::infinity();
    for (int k = 0; k < grid; ++k) {
        const double c = 1.0 - (2.0 * k + 1.0) / grid;
        const double s = std::sqrt(std::max(0.0, 1.0 - c * c));
        const double phi = golden * k;
        const ImaginaryUnit v(s * std::cos(phi), s * std::sin(phi), c);
        min_sq = std::min(min_sq, (alpha + v.quat() * beta).norm_sq());
    }
    out.min_sample = std::sqrt(min_sq);
    return out;
}

double degree_growth_estimate(const StemPolynomial& f, const std::vector<double>& radii) {
    if (radii.size() < 2)
        throw Error(ErrorKind::invalid_argument, "growth estimate needs at least two radii");
    for (size_t i = 1; i < radii.size(); ++i)
        if (!(radii[i] > radii[i - 1]) || !(radii[0] > 0.0))
            throw Error(ErrorKind::invalid_argument, "growth radii must be positive increasing");

    const int angles = 512;
    std::vector<double> lx, ly;
    for (double radius : radii) {
        double peak = 0.0;
        for (int k = 0; k < angles; ++k) {
            const double th = 2.0 * kPi * k / angles;
            peak = std::max(peak,
                            f.eval_stem(radius * Complex(std::cos(th), std::sin(th))).norm());
        }
        lx.push_back(std::log(radius));
        ly.push_back(std::log(std::max(peak, 1e-300)));
    }

    const double n = static_cast<double>(lx.size());
    double sx = 0.0, sy = 0.0, sxx = 0.0, sxy = 0.0;
    for (size_t i = 0; i < lx.size(); ++i) {
        sx += lx[i];
        sy += ly[i];
        sxx += lx[i] * lx[i];
        sxy += lx[i] * ly[i];
    }
    return (n * sxy - sx * sy) / (n * sxx - sx * sx);
}

} // namespace slicereg
