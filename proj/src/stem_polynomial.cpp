#include "slicereg/stem_polynomial.hpp"

#include <algorithm>

#include "slicereg/errors.hpp"

namespace slicereg {

void StemPolynomial::trim() {
    double m = max_coeff_norm();
    const double tol = 1e-14 * m;
    while (!coeffs_.empty() && coeffs_.back().norm() <= tol) coeffs_.pop_back();
    if (m == 0.0) coeffs_.clear();
}

std::array<RealPoly, 4> StemPolynomial::components() const {
    std::array<std::vector<double>, 4> c;
    for (auto& v : c) v.resize(coeffs_.size());
    for (size_t n = 0; n < coeffs_.size(); ++n) {
        c[0][n] = coeffs_[n].w;
        c[1][n] = coeffs_[n].x;
        c[2][n] = coeffs_[n].y;
        c[3][n] = coeffs_[n].z;
    }
    return {RealPoly(std::move(c[0])), RealPoly(std::move(c[1])),
            RealPoly(std::move(c[2])), RealPoly(std::move(c[3]))};
}

ComplexQuad StemPolynomial::eval_stem(Complex z) const {
    ComplexQuad acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + ComplexQuad(*it);
    return acc;
}

Quaternion StemPolynomial::eval_slice(const Quaternion& q) const {
    Quaternion acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it) acc = q * acc + *it;
    return acc;
}

StemPolynomial StemPolynomial::derivative() const {
    if (coeffs_.size() <= 1) return {};
    std::vector<Quaternion> d(coeffs_.size() - 1);
    for (size_t n = 1; n < coeffs_.size(); ++n)
        d[n - 1] = coeffs_[n] * static_cast<double>(n);
    return StemPolynomial(std::move(d));
}

StemPolynomial operator+(const StemPolynomial& a, const StemPolynomial& b) {
    std::vector<Quaternion> s(std::max(a.coeffs_.size(), b.coeffs_.size()));
    for (size_t n = 0; n < a.coeffs_.size(); ++n) s[n] = s[n] + a.coeffs_[n];
    for (size_t n = 0; n < b.coeffs_.size(); ++n) s[n] = s[n] + b.coeffs_[n];
    return StemPolynomial(std::move(s));
}

StemPolynomial operator-(const StemPolynomial& a, const StemPolynomial& b) {
    return a + b * (-1.0);
}

StemPolynomial operator*(const StemPolynomial& a, double s) {
    std::vector<Quaternion> c = a.coeffs_;
    for (auto& q : c) q = q * s;
    return StemPolynomial(std::move(c));
}

StemPolynomial star_product(const StemPolynomial& a, const StemPolynomial& b) {
    if (a.is_zero() || b.is_zero()) return {};
    std::vector<Quaternion> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t n = 0; n < a.coeffs().size(); ++n)
        for (size_t m = 0; m < b.coeffs().size(); ++m)
            c[n + m] = c[n + m] + a.coeffs()[n] * b.coeffs()[m];
    return StemPolynomial(std::move(c));
}

RealPoly symmetrize(const StemPolynomial& p) {
    const auto f = p.components();
    RealPoly s;
    for (const auto& fm : f) s = s + fm * fm;
    return s;
}

StemPolynomial conj_coefficients(const StemPolynomial& p) {
    std::vector<Quaternion> c;
    c.reserve(p.coeffs().size());
    for (const auto& a : p.coeffs()) c.push_back(a.conj());
    return StemPolynomial(std::move(c));
}

StemPolynomial stem_from_components(const std::array<RealPoly, 4>& comps) {
    size_t len = 0;
    for (const auto& cm : comps) len = std::max(len, cm.coeffs().size());
    std::vector<Quaternion> c(len);
    for (size_t n = 0; n < len; ++n) {
        auto at = [&](int m) {
            const auto& v = comps[static_cast<size_t>(m)].coeffs();
            return n < v.size() ? v[n] : 0.0;
        };
        c[n] = Quaternion(at(0), at(1), at(2), at(3));
    }
    return StemPolynomial(std::move(c));
}

StemRational::StemRational(StemPolynomial n, RealPoly d) : num(std::move(n)), den(std::move(d)) {
    if (den.is_zero())
        throw Error(ErrorKind::division_undefined, "rational stem with zero denominator");
}

ComplexQuad StemRational::eval_stem(Complex z) const {
    const Complex d = den.eval(z);
    if (d == 0.0)
        throw Error(ErrorKind::singular_kernel, "stem evaluation at a pole of the denominator");
    return num.eval_stem(z) * (1.0 / d);
}

Quaternion StemRational::eval_slice(const Quaternion& q) const {
    // den has real coefficients, so den(q) lies in the slice of q and its
    // inverse goes on the left.
    Quaternion d;
    for (auto it = den.coeffs().rbegin(); it != den.coeffs().rend(); ++it)
        d = q * d + Quaternion(*it);
    if (d.norm_sq() == 0.0)
        throw Error(ErrorKind::singular_kernel, "slice evaluation on a pole sphere");
    return d.inverse() * num.eval_slice(q);
}

StemRational star_inverse(const StemPolynomial& p) {
    if (p.is_zero())
        throw Error(ErrorKind::division_undefined, "star inverse of the zero polynomial");
    return StemRational(conj_coefficients(p), symmetrize(p));
}

StemRational star_product(const StemRational& a, const StemPolynomial& b) {
    return StemRational(star_product(a.num, b), a.den);
}

StemRational star_product(const StemRational& a, const StemRational& b) {
    return StemRational(star_product(a.num, b.num), a.den * b.den);
}

} // namespace slicereg
