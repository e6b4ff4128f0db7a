#pragma once

#include <utility>
#include <vector>

#include "slicereg/stem_polynomial.hpp"

namespace slicereg {

/// Boundary circle of a disc slice: {center + rho_v(R e^{i theta})} in C_v.
struct SliceCircle {
    ImaginaryUnit unit;
    double center = 0.0; // real center, so the domain is axially symmetric
    double radius = 1.0;
    int nodes = 256;

    SliceCircle(ImaginaryUnit v, double center_, double radius_, int nodes_)
        : unit(v), center(center_), radius(radius_), nodes(nodes_) {
        if (!(radius > 0.0))
            throw Error(ErrorKind::invalid_argument, "slice circle needs radius > 0");
        if (nodes < 8 || nodes % 2 != 0)
            throw Error(ErrorKind::invalid_argument, "slice circle needs >= 8 even nodes");
    }
};

/// Slice Cauchy kernel S_L^{-1}(q, s) = -(q^2 - 2 Re(s) q + |s|^2)^{-1} (q - conj s).
/// Throws singular-kernel when q lies on the sphere of s.
Quaternion cauchy_kernel(const Quaternion& q, const Quaternion& s);

/// Reproduce f(q) from one slice boundary:
///   f(q) = (1/2 pi) int_{bU cap C_v} S_L^{-1}(q, s) ds/v f(s),
/// by trapezoid quadrature on the circle. q may lie on any slice of the
/// axially symmetric solid bounded by the circle's sphere family.
Quaternion cauchy_eval(const StemPolynomial& f, const SliceCircle& circle, const Quaternion& q);

/// Finite kernel series K(z, w) = sum a_{nm} z^n w^m with real coefficients,
/// n >= 0, m in Z.
struct KernelSeries {
    struct Term {
        int n; // exponent of the evaluation variable, >= 0
        int m; // exponent of the boundary variable, any sign
        double coeff;
    };
    std::vector<Term> terms;
};

/// Quaternionic extension K_H f(q) = int K(q, s) (1/v) ds f(s) over the
/// slice circle. Agrees with applying the componentwise complex operator
/// int K(z, w) h(w) (dw / iota) to f_0..f_3 and reassembling through rho_v.
Quaternion kernel_extend_eval(const KernelSeries& kernel, const StemPolynomial& f,
                              const SliceCircle& circle, const Quaternion& q);

/// The componentwise route of the remark above, exposed for comparison.
Quaternion kernel_componentwise_eval(const KernelSeries& kernel, const StemPolynomial& f,
                                     const SliceCircle& circle, const Quaternion& q);

/// Slice-regular Bergman kernel of the unit ball:
///   K_U(q, s) = (1/pi) sum_{n>=0} (n+1) q^n conj(s)^n,
/// truncated so the series tail is below 1e-12. Requires |q| < 1, |s| < 1.
Quaternion bergman_kernel(const Quaternion& q, const Quaternion& s);

/// Reproduce f(q) = int_{U cap C_v} K_U(q, s) f(s) dmu by Gauss-Legendre
/// (radial) x trapezoid (angular) quadrature over the unit disc of C_v.
Quaternion bergman_reproduce(const StemPolynomial& f, const ImaginaryUnit& v,
                             const Quaternion& q, int radial_nodes, int angular_nodes);

/// Both sides of the commutation rho_v(p(z)/den(z)) = den(w)^{-1} p(w) at
/// w = rho_v(z), for a quaternion-coefficient numerator and real-coefficient
/// denominator. The two values agree; returned as (lhs, rhs) for testing.
std::pair<Quaternion, Quaternion> rho_commutes_with_rational(const StemPolynomial& p,
                                                             const RealPoly& den,
                                                             const ImaginaryUnit& v, Complex z);

} // namespace slicereg
