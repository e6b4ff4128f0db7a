#pragma once

#include <array>
#include <vector>

#include "slicereg/complex_quad.hpp"
#include "slicereg/real_poly.hpp"

namespace slicereg {

/// Polynomial f(q) = sum_n q^n a_n with quaternion coefficients on the right.
///
/// The associated stem map F(z) = sum_n z^n a_n is the unique holomorphic
/// C^4-valued map with F(conj z) = conj F(z) satisfying f = rho_v . F on
/// every slice. Its four components are real-coefficient polynomials.
class StemPolynomial {
public:
    StemPolynomial() = default;
    explicit StemPolynomial(std::vector<Quaternion> coeffs) : coeffs_(std::move(coeffs)) {
        trim();
    }
    StemPolynomial(std::initializer_list<Quaternion> coeffs) : coeffs_(coeffs) { trim(); }

    static StemPolynomial constant(const Quaternion& a) { return StemPolynomial({a}); }
    /// The identity polynomial f(q) = q.
    static StemPolynomial identity() {
        return StemPolynomial({Quaternion(), Quaternion(1.0)});
    }
    /// Lift a real-coefficient polynomial.
    static StemPolynomial from_real(const RealPoly& p) {
        std::vector<Quaternion> c;
        c.reserve(p.coeffs().size());
        for (double a : p.coeffs()) c.emplace_back(a);
        return StemPolynomial(std::move(c));
    }

    const std::vector<Quaternion>& coeffs() const { return coeffs_; }
    bool is_zero() const { return coeffs_.empty(); }
    int degree() const { return static_cast<int>(coeffs_.size()) - 1; }

    double max_coeff_norm() const {
        double m = 0.0;
        for (const auto& a : coeffs_) m = std::max(m, a.norm());
        return m;
    }

    /// The four real-coefficient component polynomials (f0, f1, f2, f3).
    std::array<RealPoly, 4> components() const;

    /// F(z) by Horner evaluation of the four components at once.
    ComplexQuad eval_stem(Complex z) const;

    /// f(q) = sum q^n a_n directly; agrees with rho_v(F(x + iota y)) for
    /// q = x + v y.
    Quaternion eval_slice(const Quaternion& q) const;

    /// Formal derivative of the stem (componentwise).
    StemPolynomial derivative() const;

    friend StemPolynomial operator+(const StemPolynomial& a, const StemPolynomial& b);
    friend StemPolynomial operator-(const StemPolynomial& a, const StemPolynomial& b);
    friend StemPolynomial operator*(const StemPolynomial& a, double s);

private:
    void trim();
    std::vector<Quaternion> coeffs_;
};

/// Star product: coefficient convolution c_n = sum_m a_m * b_{n-m} with
/// quaternion products taken in order. The stem of the result is the
/// pointwise star product of the factor stems.
StemPolynomial star_product(const StemPolynomial& a, const StemPolynomial& b);

/// Symmetrization Phi . F = f0^2 + f1^2 + f2^2 + f3^2 as a real polynomial.
RealPoly symmetrize(const StemPolynomial& p);

/// Quaternionic conjugate applied to every coefficient; satisfies
/// p (star) conj_coefficients(p) = symmetrize(p) * 1.
StemPolynomial conj_coefficients(const StemPolynomial& p);

/// Rebuild a quaternion-coefficient polynomial from four component polys.
StemPolynomial stem_from_components(const std::array<RealPoly, 4>& comps);

/// Stem data of a slice-meromorphic function: a quaternion-coefficient
/// numerator divided by a real-coefficient denominator. Any f^{-star} star g
/// is representable this way with den = symmetrize(f).
struct StemRational {
    StemPolynomial num;
    RealPoly den;

    StemRational() : den(RealPoly::constant(1.0)) {}
    StemRational(StemPolynomial n, RealPoly d);

    /// Lift a polynomial (denominator 1).
    static StemRational from_poly(StemPolynomial p) {
        return StemRational(std::move(p), RealPoly::constant(1.0));
    }

    ComplexQuad eval_stem(Complex z) const;

    /// den(q)^{-1} * num(q); the denominator inverse multiplies on the left,
    /// matching rho_v applied to the componentwise rational stem.
    Quaternion eval_slice(const Quaternion& q) const;
};

/// Star inverse f^{-star} = (conjugated coefficients, symmetrization).
/// Throws division-undefined for the zero polynomial.
StemRational star_inverse(const StemPolynomial& p);

StemRational star_product(const StemRational& a, const StemPolynomial& b);
StemRational star_product(const StemRational& a, const StemRational& b);

} // namespace slicereg
