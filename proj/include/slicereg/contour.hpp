#pragma once

#include <algorithm>
#include <cmath>
#include <complex>
#include <variant>

#include "slicereg/errors.hpp"

namespace slicereg {

using Complex = std::complex<double>;

/// Oriented integration contour in the stem plane; always counterclockwise.
class Contour {
public:
    struct Circle {
        Complex center;
        double radius;
    };
    struct Rectangle {
        Complex corner_min; // lower-left
        Complex corner_max; // upper-right
    };

    static Contour circle(Complex center, double radius) {
        if (!(radius > 0))
            throw Error(ErrorKind::invalid_argument, "circle contour needs radius > 0");
        return Contour(Circle{center, radius});
    }

    static Contour rectangle(Complex corner_min, Complex corner_max) {
        if (!(corner_min.real() < corner_max.real() && corner_min.imag() < corner_max.imag()))
            throw Error(ErrorKind::invalid_argument,
                        "rectangle contour needs corner_min strictly below corner_max");
        return Contour(Rectangle{corner_min, corner_max});
    }

    bool is_circle() const { return std::holds_alternative<Circle>(shape_); }
    const Circle& as_circle() const { return std::get<Circle>(shape_); }
    const Rectangle& as_rectangle() const { return std::get<Rectangle>(shape_); }

    /// Characteristic size, used to scale proximity tolerances.
    double scale() const {
        if (is_circle()) return as_circle().radius;
        const auto& r = as_rectangle();
        return 0.5 * std::max(r.corner_max.real() - r.corner_min.real(),
                              r.corner_max.imag() - r.corner_min.imag());
    }

    bool contains(Complex z) const {
        if (is_circle()) return std::abs(z - as_circle().center) < as_circle().radius;
        const auto& r = as_rectangle();
        return z.real() > r.corner_min.real() && z.real() < r.corner_max.real() &&
               z.imag() > r.corner_min.imag() && z.imag() < r.corner_max.imag();
    }

    /// Distance from z to the contour curve.
    double boundary_distance(Complex z) const {
        if (is_circle())
            return std::abs(std::abs(z - as_circle().center) - as_circle().radius);
        const auto& r = as_rectangle();
        const double x0 = r.corner_min.real(), x1 = r.corner_max.real();
        const double y0 = r.corner_min.imag(), y1 = r.corner_max.imag();
        const double x = z.real(), y = z.imag();
        if (contains(z))
            return std::min(std::min(x - x0, x1 - x), std::min(y - y0, y1 - y));
        const double dx = std::max({x0 - x, 0.0, x - x1});
        const double dy = std::max({y0 - y, 0.0, y - y1});
        return std::hypot(dx, dy);
    }

    /// True when the contour equals its reflection across the real axis
    /// within 1e-12 * scale.
    bool is_symmetric() const {
        const double tol = 1e-12 * std::max(1.0, scale());
        if (is_circle()) return std::abs(as_circle().center.imag()) <= tol;
        const auto& r = as_rectangle();
        return std::abs(r.corner_min.imag() + r.corner_max.imag()) <= tol;
    }

private:
    explicit Contour(Circle c) : shape_(c) {}
    explicit Contour(Rectangle r) : shape_(r) {}

    std::variant<Circle, Rectangle> shape_;
};

} // namespace slicereg
