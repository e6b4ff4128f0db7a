#pragma once

#include <array>
#include <cmath>
#include <complex>

#include "slicereg/quaternion.hpp"

namespace slicereg {

using Complex = std::complex<double>;

/// Element of H (x) C identified with C^4 through the base {1, i, j, k}.
///
/// Carries the C-bilinear star product (the quaternion multiplication table
/// with a central imaginary unit iota) and the quadric form
/// Phi(z) = z0^2 + z1^2 + z2^2 + z3^2 whose zero locus is the variety Z.
struct ComplexQuad {
    std::array<Complex, 4> c{};

    ComplexQuad() = default;
    ComplexQuad(Complex c0, Complex c1, Complex c2, Complex c3) : c{c0, c1, c2, c3} {}

    /// Embed a quaternion as a real vector of C^4.
    explicit ComplexQuad(const Quaternion& q)
        : c{Complex(q.w), Complex(q.x), Complex(q.y), Complex(q.z)} {}

    static ComplexQuad one() { return {1.0, 0.0, 0.0, 0.0}; }
    /// Embed a complex scalar z as z * 1.
    static ComplexQuad scalar(Complex z) { return {z, 0.0, 0.0, 0.0}; }

    Complex operator[](int m) const { return c[static_cast<size_t>(m)]; }

    Quaternion real_part() const {
        return {c[0].real(), c[1].real(), c[2].real(), c[3].real()};
    }
    Quaternion imag_part() const {
        return {c[0].imag(), c[1].imag(), c[2].imag(), c[3].imag()};
    }

    /// Componentwise complex conjugation; realizes x+vy = x+(-v)(-y).
    ComplexQuad conj_components() const {
        return {std::conj(c[0]), std::conj(c[1]), std::conj(c[2]), std::conj(c[3])};
    }

    /// Euclidean norm of C^4.
    double norm_sq() const {
        return std::norm(c[0]) + std::norm(c[1]) + std::norm(c[2]) + std::norm(c[3]);
    }
    double norm() const { return std::sqrt(norm_sq()); }

    ComplexQuad operator-() const { return {-c[0], -c[1], -c[2], -c[3]}; }

    friend ComplexQuad operator+(const ComplexQuad& a, const ComplexQuad& b) {
        return {a.c[0] + b.c[0], a.c[1] + b.c[1], a.c[2] + b.c[2], a.c[3] + b.c[3]};
    }
    friend ComplexQuad operator-(const ComplexQuad& a, const ComplexQuad& b) {
        return {a.c[0] - b.c[0], a.c[1] - b.c[1], a.c[2] - b.c[2], a.c[3] - b.c[3]};
    }
    friend ComplexQuad operator*(const ComplexQuad& a, Complex s) {
        return {a.c[0] * s, a.c[1] * s, a.c[2] * s, a.c[3] * s};
    }
    friend ComplexQuad operator*(Complex s, const ComplexQuad& a) { return a * s; }
};

/// Star product: the quaternion product extended C-bilinearly to C^4.
inline ComplexQuad star(const ComplexQuad& a, const ComplexQuad& b) {
    return {a.c[0] * b.c[0] - a.c[1] * b.c[1] - a.c[2] * b.c[2] - a.c[3] * b.c[3],
            a.c[0] * b.c[1] + a.c[1] * b.c[0] + a.c[2] * b.c[3] - a.c[3] * b.c[2],
            a.c[0] * b.c[2] - a.c[1] * b.c[3] + a.c[2] * b.c[0] + a.c[3] * b.c[1],
            a.c[0] * b.c[3] + a.c[1] * b.c[2] - a.c[2] * b.c[1] + a.c[3] * b.c[0]};
}

/// Phi(z) = z0^2 + z1^2 + z2^2 + z3^2 (complex squares, no conjugation).
/// Multiplicative for the star product: Phi(a*b) = Phi(a)Phi(b).
inline Complex phi(const ComplexQuad& a) {
    return a.c[0] * a.c[0] + a.c[1] * a.c[1] + a.c[2] * a.c[2] + a.c[3] * a.c[3];
}

/// Quaternionic conjugation lifted to C^4: (c0, -c1, -c2, -c3).
/// Satisfies a (star) star_conjugate(a) = (Phi(a), 0, 0, 0).
inline ComplexQuad star_conjugate(const ComplexQuad& a) {
    return {a.c[0], -a.c[1], -a.c[2], -a.c[3]};
}

/// Realization map rho_v: sends x + iota*y to x + v*y componentwise, i.e.
/// rho_v(A) = Re(A) + v * Im(A) with quaternion arithmetic.
inline Quaternion rho(const ImaginaryUnit& v, const ComplexQuad& a) {
    return a.real_part() + v.quat() * a.imag_part();
}

inline Quaternion rho(const ImaginaryUnit& v, Complex z) {
    return Quaternion(z.real()) + v.quat() * z.imag();
}

/// Membership test for the translated variety Z(q) = {Phi(z - q) = 0},
/// with relative tolerance scaled by max(1, |a|^2) since Phi is quadratic.
inline bool in_variety(const ComplexQuad& a, const Quaternion& q, double tol = 1e-9) {
    if (tol <= 0)
        throw Error(ErrorKind::invalid_argument, "in_variety needs tol > 0");
    const ComplexQuad shifted = a - ComplexQuad(q);
    return std::abs(phi(shifted)) <= tol * std::max(1.0, a.norm_sq());
}

/// Recover the unique v with rho_v(a) = 0 for a point a of Z \ {0} with
/// nonzero imaginary part: writing a = alpha + iota*beta, v = -alpha*beta^-1.
inline ImaginaryUnit unit_from_zero(const ComplexQuad& a, double tol = 1e-9) {
    const double scale = a.norm();
    if (scale == 0.0)
        throw Error(ErrorKind::degenerate, "unit_from_zero at the origin of Z");
    if (!in_variety(a, Quaternion(), tol))
        throw Error(ErrorKind::not_on_variety, "point is not on the variety Z");
    const Quaternion alpha = a.real_part();
    const Quaternion beta = a.imag_part();
    if (beta.norm() == 0.0)
        throw Error(ErrorKind::degenerate, "real point of Z; no slice unit to recover");
    if (beta.norm() < 1e-12 * scale)
        throw Error(ErrorKind::not_on_variety, "imaginary part too small to recover a unit");
    const Quaternion raw = -(alpha * beta.inverse());
    const ImaginaryUnit v = ImaginaryUnit::from_direction(raw.x, raw.y, raw.z);
    if (rho(v, a).norm() > std::sqrt(tol) * std::max(1.0, scale))
        throw Error(ErrorKind::not_on_variety, "recovered unit does not annihilate the point");
    return v;
}

} // namespace slicereg
