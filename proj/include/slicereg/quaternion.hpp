#pragma once

#include <cmath>
#include <iosfwd>

#include "slicereg/errors.hpp"

namespace slicereg {

/// Quaternion q = w + x*i + y*j + z*k with double components.
/// Values are immutable in spirit: every operation returns a new value.
struct Quaternion {
    double w = 0.0;
    double x = 0.0;
    double y = 0.0;
    double z = 0.0;

    constexpr Quaternion() = default;
    constexpr Quaternion(double w_, double x_, double y_, double z_)
        : w(w_), x(x_), y(y_), z(z_) {}
    constexpr explicit Quaternion(double real) : w(real) {}

    static constexpr Quaternion unit_i() { return {0, 1, 0, 0}; }
    static constexpr Quaternion unit_j() { return {0, 0, 1, 0}; }
    static constexpr Quaternion unit_k() { return {0, 0, 0, 1}; }

    constexpr double real() const { return w; }
    constexpr Quaternion vec() const { return {0, x, y, z}; }

    constexpr double norm_sq() const { return w * w + x * x + y * y + z * z; }
    double norm() const { return std::sqrt(norm_sq()); }

    constexpr Quaternion conj() const { return {w, -x, -y, -z}; }

    Quaternion inverse() const {
        const double n2 = norm_sq();
        if (n2 == 0.0)
            throw Error(ErrorKind::division_undefined, "inverse of zero quaternion");
        return {w / n2, -x / n2, -y / n2, -z / n2};
    }

    constexpr Quaternion operator-() const { return {-w, -x, -y, -z}; }

    friend constexpr Quaternion operator+(const Quaternion& a, const Quaternion& b) {
        return {a.w + b.w, a.x + b.x, a.y + b.y, a.z + b.z};
    }
    friend constexpr Quaternion operator-(const Quaternion& a, const Quaternion& b) {
        return {a.w - b.w, a.x - b.x, a.y - b.y, a.z - b.z};
    }
    friend constexpr Quaternion operator*(const Quaternion& a, double s) {
        return {a.w * s, a.x * s, a.y * s, a.z * s};
    }
    friend constexpr Quaternion operator*(double s, const Quaternion& a) { return a * s; }
    friend constexpr Quaternion operator/(const Quaternion& a, double s) {
        return {a.w / s, a.x / s, a.y / s, a.z / s};
    }

    // Hamilton product.
    friend constexpr Quaternion operator*(const Quaternion& a, const Quaternion& b) {
        return {a.w * b.w - a.x * b.x - a.y * b.y - a.z * b.z,
                a.w * b.x + a.x * b.w + a.y * b.z - a.z * b.y,
                a.w * b.y - a.x * b.z + a.y * b.w + a.z * b.x,
                a.w * b.z + a.x * b.y - a.y * b.x + a.z * b.w};
    }

    friend constexpr bool operator==(const Quaternion& a, const Quaternion& b) {
        return a.w == b.w && a.x == b.x && a.y == b.y && a.z == b.z;
    }
};

inline double dot(const Quaternion& a, const Quaternion& b) {
    return a.w * b.w + a.x * b.x + a.y * b.y + a.z * b.z;
}

inline double abs_distance(const Quaternion& a, const Quaternion& b) {
    return (a - b).norm();
}

/// Point of the 2-sphere of imaginary units: v = a*i + b*j + c*k with
/// a^2 + b^2 + c^2 = 1, so v^2 = -1 as a quaternion.
///
/// Construction renormalizes inputs within 1e-6 of unit norm and rejects
/// anything farther.
class ImaginaryUnit {
public:
    ImaginaryUnit() : a_(1.0), b_(0.0), c_(0.0) {}

    ImaginaryUnit(double a, double b, double c) {
        const double n = std::sqrt(a * a + b * b + c * c);
        if (std::abs(n - 1.0) > 1e-6)
            throw Error(ErrorKind::invalid_unit,
                        "imaginary unit must have norm 1 (got " + std::to_string(n) + ")");
        a_ = a / n;
        b_ = b / n;
        c_ = c / n;
    }

    /// Build from an arbitrary nonzero direction (always normalizes).
    static ImaginaryUnit from_direction(double a, double b, double c) {
        const double n = std::sqrt(a * a + b * b + c * c);
        if (n < 1e-300)
            throw Error(ErrorKind::invalid_unit, "zero direction for imaginary unit");
        ImaginaryUnit v;
        v.a_ = a / n;
        v.b_ = b / n;
        v.c_ = c / n;
        return v;
    }

    static ImaginaryUnit i() { return {}; }
    static ImaginaryUnit j() { return ImaginaryUnit(0, 1, 0); }
    static ImaginaryUnit k() { return ImaginaryUnit(0, 0, 1); }

    double a() const { return a_; }
    double b() const { return b_; }
    double c() const { return c_; }

    Quaternion quat() const { return {0, a_, b_, c_}; }

    ImaginaryUnit operator-() const {
        ImaginaryUnit v;
        v.a_ = -a_;
        v.b_ = -b_;
        v.c_ = -c_;
        return v;
    }

private:
    double a_, b_, c_;
};

/// x + v*y, the point of the slice C_v over the complex coordinate x + iota*y.
inline Quaternion slice_point(const ImaginaryUnit& v, double x, double y) {
    return Quaternion(x, v.a() * y, v.b() * y, v.c() * y);
}

/// Decompose a quaternion as x + v*y with y = |vec q| >= 0.
/// For real q the unit defaults to i (any unit works, y = 0).
struct SliceDecomposition {
    double x;
    double y;
    ImaginaryUnit unit;
};

inline SliceDecomposition slice_decompose(const Quaternion& q) {
    const double y = std::sqrt(q.x * q.x + q.y * q.y + q.z * q.z);
    if (y < 1e-300) return {q.w, 0.0, ImaginaryUnit::i()};
    return {q.w, y, ImaginaryUnit::from_direction(q.x, q.y, q.z)};
}

} // namespace slicereg
