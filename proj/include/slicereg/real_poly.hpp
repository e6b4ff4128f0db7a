#pragma once

#include <complex>
#include <vector>

namespace slicereg {

using Complex = std::complex<double>;

/// Polynomial with real coefficients, evaluated at complex arguments.
/// coeffs[n] multiplies z^n; an empty coefficient list is the zero polynomial.
/// Roots therefore come in conjugate pairs.
class RealPoly {
public:
    RealPoly() = default;
    explicit RealPoly(std::vector<double> coeffs) : coeffs_(std::move(coeffs)) { trim(); }
    RealPoly(std::initializer_list<double> coeffs) : coeffs_(coeffs) { trim(); }

    static RealPoly constant(double c) { return RealPoly({c}); }
    static RealPoly identity() { return RealPoly({0.0, 1.0}); }

    const std::vector<double>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    /// Degree; -1 for the zero polynomial.
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    double max_coeff() const {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        return m;
    }

    Complex eval(Complex z) const {
        Complex acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * z + *it;
        return acc;
    }

    double eval(double x) const {
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = acc * x + *it;
        return acc;
    }

    /// Sum of |coeff| * |z|^n; the natural magnitude scale of eval(z).
    double eval_scale(Complex z) const {
        const double r = std::abs(z);
        double acc = 0.0;
        for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
            acc = acc * r + std::abs(*it);
        return acc;
    }

    RealPoly derivative() const {
        if (coeffs_.size() <= 1) return RealPoly();
        std::vector<double> d(coeffs_.size() - 1);
        for (size_t n = 1; n < coeffs_.size(); ++n)
            d[n - 1] = coeffs_[n] * static_cast<double>(n);
        return RealPoly(std::move(d));
    }

    friend RealPoly operator+(const RealPoly& a, const RealPoly& b) {
        std::vector<double> s(std::max(a.coeffs_.size(), b.coeffs_.size()), 0.0);
        for (size_t n = 0; n < a.coeffs_.size(); ++n) s[n] += a.coeffs_[n];
        for (size_t n = 0; n < b.coeffs_.size(); ++n) s[n] += b.coeffs_[n];
        return RealPoly(std::move(s));
    }

    friend RealPoly operator*(const RealPoly& a, const RealPoly& b) {
        if (a.is_zero() || b.is_zero()) return RealPoly();
        std::vector<double> p(a.coeffs_.size() + b.coeffs_.size() - 1, 0.0);
        for (size_t n = 0; n < a.coeffs_.size(); ++n)
            for (size_t m = 0; m < b.coeffs_.size(); ++m)
                p[n + m] += a.coeffs_[n] * b.coeffs_[m];
        return RealPoly(std::move(p));
    }

    friend RealPoly operator*(const RealPoly& a, double s) {
        std::vector<double> p = a.coeffs_;
        for (double& c : p) c *= s;
        return RealPoly(std::move(p));
    }

    /// Deflate by the linear factor (z - x); the remainder is discarded,
    /// so this is only meaningful when x is (numerically) a root.
    RealPoly deflate_linear(double x) const {
        if (coeffs_.size() <= 1) return RealPoly();
        std::vector<double> q(coeffs_.size() - 1, 0.0);
        double carry = coeffs_.back();
        for (size_t n = coeffs_.size() - 1; n-- > 0;) {
            q[n] = carry;
            carry = coeffs_[n] + carry * x;
        }
        return RealPoly(std::move(q));
    }

    /// Deflate by the real quadratic z^2 - 2*Re(w)*z + |w|^2 (the factor of
    /// the conjugate root pair w, conj(w)); remainder discarded.
    RealPoly deflate_quadratic(Complex w) const {
        if (coeffs_.size() <= 2) return RealPoly();
        const double b = -2.0 * w.real();
        const double c = std::norm(w);
        std::vector<double> q(coeffs_.size() - 2, 0.0);
        double hi = 0.0, lo = 0.0; // running quotient coefficients q[n+1], q[n+2]
        for (size_t n = coeffs_.size(); n-- > 2;) {
            const double qn = coeffs_[n] - b * hi - c * lo;
            q[n - 2] = qn;
            lo = hi;
            hi = qn;
        }
        return RealPoly(std::move(q));
    }

private:
    void trim() {
        double m = 0.0;
        for (double c : coeffs_) m = std::max(m, std::abs(c));
        const double tol = 1e-14 * m;
        while (!coeffs_.empty() && std::abs(coeffs_.back()) <= tol) coeffs_.pop_back();
        if (m == 0.0) coeffs_.clear();
    }

    std::vector<double> coeffs_;
};

} // namespace slicereg
