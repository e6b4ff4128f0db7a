#pragma once

#include <optional>
#include <vector>

#include "slicereg/contour.hpp"
#include "slicereg/stem_polynomial.hpp"

namespace slicereg {

/// Winding number (1/2 pi iota) * integral of P'/P along the contour.
/// Circles use adaptive trapezoid sums (doubled until two successive
/// estimates round to the same integer and differ by < 0.25); rectangles
/// use per-edge Gauss-Legendre, 64 nodes per edge, doubled the same way.
/// Throws boundary-zero when |P| vanishes at a quadrature node and
/// non-convergence past 2^20 points.
int winding_log_derivative(const RealPoly& p, const Contour& c);

/// Same for the rational function num/den.
int winding_log_derivative(const RealPoly& num, const RealPoly& den, const Contour& c);

struct RootCluster {
    Complex root;
    int multiplicity;
};

/// All complex roots of a real-coefficient polynomial of degree >= 1.
/// Companion-matrix eigenvalues are Newton-polished, clustered (tolerance
/// 1e-6 * scale), and each cluster's multiplicity is recovered by a winding
/// integral on a small enclosing circle. Conjugate symmetry is enforced by
/// pairing clusters with their mirror images.
std::vector<RootCluster> roots_with_multiplicity(const RealPoly& p);

enum class ZeroKind { real, isolated, spherical, pole };

const char* zero_kind_name(ZeroKind kind);

/// A classified zero or pole sphere. The stem point is the representative
/// with Im >= 0; `unit` is present only for isolated zeros and satisfies
/// f(x + unit * y) = 0 at the stem point x + iota y.
struct ZeroRecord {
    ZeroKind kind;
    Complex stem_point;
    std::optional<ImaginaryUnit> unit;
    int order;
};

/// Zeros of f with a stem point (either representative) inside the region,
/// classified as real / spherical / isolated via the stem values.
std::vector<ZeroRecord> find_zeros(const StemPolynomial& f, const Contour& region);

/// Zeros and poles of a rational stem. Common real factors between the
/// denominator and all numerator components are cancelled first (relative
/// tolerance `tol`), and at each sphere the zero and pole orders are
/// netted, so e.g. the star inverse of q^2+1 reports a single pole of
/// order 2 at iota.
std::vector<ZeroRecord> find_zeros(const StemRational& f, const Contour& region,
                                   double tol = 1e-8);

/// k + 2m over a real-axis-symmetric contour: half the winding of the
/// symmetrization, with k counting isolated (real or non-real) zeros and m
/// spherical zeros, all with multiplicity.
int weighted_zero_count(const StemPolynomial& f, const Contour& c);
int weighted_zero_count(const StemRational& f, const Contour& c);

/// Tallies of zero/pole species split by whether the conjugate stem point
/// lies in the region: winding = 2*k0 + k1 + 2*r + 4*m0 + 2*m1 - 2*p0 - p1.
struct CountReport {
    int k0 = 0, k1 = 0; // isolated non-real zeros: both / one stem point inside
    int m0 = 0, m1 = 0; // spherical zeros: both / one inside
    int r = 0;          // real zeros
    int p0 = 0, p1 = 0; // poles: both / one inside
    int winding = 0;    // quadrature value, computed independently

    int expected_winding() const {
        return 2 * k0 + k1 + 2 * r + 4 * m0 + 2 * m1 - 2 * p0 - p1;
    }
    bool consistent() const { return winding == expected_winding(); }
};

CountReport count_in_region(const StemPolynomial& f, const Contour& c);
CountReport count_in_region(const StemRational& f, const Contour& c, double tol = 1e-8);

/// Order of f on the sphere through q: the multiplicity of the
/// symmetrization at the stem point, halved on the real axis. Rational
/// stems return net order (zero minus pole), possibly negative.
int sphere_order(const StemPolynomial& f, const Quaternion& q);
int sphere_order(const StemRational& f, const Quaternion& q);

/// Sampled Rouche test: checks |PhiF - PhiG| < |PhiF| + |PhiG| at boundary
/// samples. `verified` implies the weighted counts agree; otherwise a
/// witness point is reported (the violating sample, or the sample of
/// minimal margin when counts disagree despite the sampled inequality).
struct RoucheResult {
    bool verified = false;
    std::optional<int> count_f;
    std::optional<int> count_g;
    std::optional<Complex> witness;
};

RoucheResult rouche_same_count(const StemPolynomial& f, const StemPolynomial& g,
                               const Contour& c, int samples = 256);

/// Both sides of the Jensen identity for radius R:
///   lhs = integral_0^R n_f(t)/t dt from the classified zero radii,
///   rhs = (1/4pi) int_0^{2pi} log|PhiF(R e^{i theta})| d theta
///         - (1/2) log|PhiF(0)|.
struct JensenResult {
    double lhs = 0.0;
    double rhs = 0.0;
};

JensenResult jensen_check(const StemPolynomial& f, double radius, int angular_nodes = 4096);

/// Weighted counts of a coefficient-convergent sequence and of its limit
/// over a symmetric contour; `eventually_matches` reports whether some tail
/// of the sequence has the limit's count.
struct HurwitzReport {
    std::vector<int> counts;
    int limit_count = 0;
    bool eventually_matches = false;
};

HurwitzReport hurwitz_probe(const std::vector<StemPolynomial>& fs, const StemPolynomial& limit,
                            const Contour& region);

/// Cancel real polynomial factors shared by the denominator and every
/// nonzero numerator component.
StemRational reduce_common_factors(const StemRational& h, double tol = 1e-8);

} // namespace slicereg
