#pragma once

#include <array>
#include <complex>
#include <vector>

#include "slicereg/contour.hpp"
#include "slicereg/real_poly.hpp"

namespace slicereg {

/// Element of the Clifford algebra R_3 (three generators, e_i^2 = -1) in the
/// base {1, e0, e1, e2, e0e1, e0e2, e1e2, e0e1e2}.
struct Clifford3 {
    std::array<double, 8> c{};

    Clifford3() = default;
    explicit Clifford3(double real) { c[0] = real; }
    explicit Clifford3(const std::array<double, 8>& components) : c(components) {}

    static Clifford3 basis(int index) {
        Clifford3 out;
        out.c[static_cast<size_t>(index)] = 1.0;
        return out;
    }

    double norm_sq() const {
        double s = 0.0;
        for (double v : c) s += v * v;
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    friend Clifford3 operator+(const Clifford3& a, const Clifford3& b) {
        Clifford3 out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
        return out;
    }
    friend Clifford3 operator-(const Clifford3& a, const Clifford3& b) {
        Clifford3 out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] - b.c[i];
        return out;
    }
    friend Clifford3 operator*(const Clifford3& a, double s) {
        Clifford3 out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] * s;
        return out;
    }
};

/// Clifford product in the fixed base; associative.
Clifford3 cl3_mul(const Clifford3& a, const Clifford3& b);

/// Membership in the imaginary-unit set
/// S = {u : u0 = u7 = 0, sum u_l^2 = 1, u1 u6 - u2 u5 + u3 u4 = 0};
/// such u satisfy u^2 = -1 in the algebra.
bool in_S3(const Clifford3& u, double tol = 1e-9);

/// Complexified algebra C (x) R_3 identified with C^8.
struct ComplexOct {
    std::array<Complex, 8> c{};

    ComplexOct() = default;
    explicit ComplexOct(const Clifford3& a) {
        for (size_t i = 0; i < 8; ++i) c[i] = a.c[i];
    }

    Clifford3 real_part() const {
        Clifford3 out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = c[i].real();
        return out;
    }
    Clifford3 imag_part() const {
        Clifford3 out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = c[i].imag();
        return out;
    }

    double norm_sq() const {
        double s = 0.0;
        for (const Complex& v : c) s += std::norm(v);
        return s;
    }
    double norm() const { return std::sqrt(norm_sq()); }

    friend ComplexOct operator+(const ComplexOct& a, const ComplexOct& b) {
        ComplexOct out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] + b.c[i];
        return out;
    }
    friend ComplexOct operator*(const ComplexOct& a, Complex s) {
        ComplexOct out;
        for (size_t i = 0; i < 8; ++i) out.c[i] = a.c[i] * s;
        return out;
    }
};

/// C-bilinear extension of cl3_mul to C^8.
ComplexOct star8(const ComplexOct& a, const ComplexOct& b);

/// Phi(z) = z0^2 + ... + z7^2 (complex squares). Multiplicative against
/// star8 only under the hypothesis z in Z.
Complex phi8(const ComplexOct& z);

/// Membership in Z = {z : z0 z7 - z1 z6 + z2 z5 - z3 z4 = 0, Phi(z) = 0},
/// both relations scaled by max(1, |z|^2).
bool in_Z8(const ComplexOct& z, double tol = 1e-9);

/// Realization x + iota y -> x + u y extended to C^8.
Clifford3 rho8(const Clifford3& u, const ComplexOct& z);

/// Polynomial f(q) = sum q^n a_n with Clifford coefficients on the right.
class CliffordStemPolynomial {
public:
    CliffordStemPolynomial() = default;
    explicit CliffordStemPolynomial(std::vector<Clifford3> coeffs)
        : coeffs_(std::move(coeffs)) {}

    const std::vector<Clifford3>& coeffs() const { return coeffs_; }
    bool is_zero() const;

    ComplexOct eval_stem(Complex z) const;
    Clifford3 eval_slice(const Clifford3& q) const;

    /// The eight real-coefficient components of the stem.
    std::array<RealPoly, 8> components() const;

    /// Phi . F as a real polynomial.
    RealPoly symmetrize() const;

private:
    std::vector<Clifford3> coeffs_;
};

CliffordStemPolynomial star_product(const CliffordStemPolynomial& a,
                                    const CliffordStemPolynomial& b);

/// Winding of Phi . F along the contour. Over R_3 the argument principle
/// yields only an upper bound: the winding is at least twice the weighted
/// zero content inside, never an exact count.
int count_upper_bound(const CliffordStemPolynomial& f, const Contour& c);

} // namespace slicereg
