#include "slicereg/integral_kernels.hpp"

#include <array>
#include <cmath>
#include <vector>

#include "slicereg/quadrature.hpp"

namespace slicereg {

namespace {

constexpr double kPi = 3.14159265358979323846;

Quaternion circle_point(const SliceCircle& c, double theta) {
    return Quaternion(c.center) + slice_point(c.unit, std::cos(theta), std::sin(theta)) * c.radius;
}

// Number of series terms needed so the Bergman tail is below 1e-12.
int bergman_truncation(double x) {
    if (!(x < 1.0))
        throw Error(ErrorKind::out_of_domain, "Bergman series needs |q||s| < 1");
    int n = 0;
    double pow = x; // x^{n+1}
    const double denom = (1.0 - x) * (1.0 - x);
    while ((n + 2) * pow / denom >= 1e-12) {
        ++n;
        pow *= x;
        if (n > 2000000)
            throw Error(ErrorKind::non_convergence, "Bergman truncation did not terminate");
    }
    return n;
}

} // namespace

Quaternion cauchy_kernel(const Quaternion& q, const Quaternion& s) {
    const Quaternion denom = q * q - 2.0 * s.real() * q + Quaternion(s.norm_sq());
    const double scale = (q.norm() + s.norm()) * (q.norm() + s.norm());
    if (denom.norm() <= 1e-12 * std::max(scale, 1e-300))
        throw Error(ErrorKind::singular_kernel, "Cauchy kernel evaluated on the sphere of s");
    return -1.0 * (denom.inverse() * (q - s.conj()));
}

Quaternion cauchy_eval(const StemPolynomial& f, const SliceCircle& circle, const Quaternion& q) {
    const auto dec = slice_decompose(q);
    const Complex stem(dec.x, dec.y);
    if (std::abs(stem - Complex(circle.center, 0.0)) >= circle.radius * (1.0 - 1e-12))
        throw Error(ErrorKind::out_of_domain,
                    "Cauchy reproduction needs q strictly inside the sphere family");

    // ds/v = (s - center) d theta on the circle, so
    // f(q) = (1/2pi) int S_L^{-1}(q, s) (s - c) f(s) d theta.
    Quaternion acc;
    for (int k = 0; k < circle.nodes; ++k) {
        const double theta = 2.0 * kPi * k / circle.nodes;
        const Quaternion s = circle_point(circle, theta);
        acc = acc + cauchy_kernel(q, s) * (s - Quaternion(circle.center)) * f.eval_slice(s);
    }
    return acc / static_cast<double>(circle.nodes);
}

namespace {

// q^m for integer m; negative powers through the inverse.
Quaternion int_power(const Quaternion& q, int m) {
    if (m == 0) return Quaternion(1.0);
    Quaternion base = m > 0 ? q : q.inverse();
    int e = std::abs(m);
    Quaternion acc(1.0);
    while (e > 0) {
        if (e & 1) acc = acc * base;
        base = base * base;
        e >>= 1;
    }
    return acc;
}

Complex int_power(Complex z, int m) {
    if (m == 0) return 1.0;
    Complex base = m > 0 ? z : 1.0 / z;
    int e = std::abs(m);
    Complex acc = 1.0;
    while (e > 0) {
        if (e & 1) acc *= base;
        base *= base;
        e >>= 1;
    }
    return acc;
}

bool has_negative_powers(const KernelSeries& kernel) {
    for (const auto& t : kernel.terms)
        if (t.m < 0) return true;
    return false;
}

} // namespace

Quaternion kernel_extend_eval(const KernelSeries& kernel, const StemPolynomial& f,
                              const SliceCircle& circle, const Quaternion& q) {
    for (const auto& t : kernel.terms)
        if (t.n < 0)
            throw Error(ErrorKind::invalid_argument,
                        "kernel series needs n >= 0 in the evaluation variable");
    const bool negative = has_negative_powers(kernel);

    Quaternion acc;
    for (int k = 0; k < circle.nodes; ++k) {
        const double theta = 2.0 * kPi * k / circle.nodes;
        const Quaternion s = circle_point(circle, theta);
        if (negative && s.norm() <= 1e-12)
            throw Error(ErrorKind::singular_kernel,
                        "negative kernel power on a circle through the origin");
        Quaternion kq;
        for (const auto& t : kernel.terms)
            kq = kq + t.coeff * (int_power(q, t.n) * int_power(s, t.m));
        acc = acc + kq * (s - Quaternion(circle.center)) * f.eval_slice(s);
    }
    return acc * (2.0 * kPi / circle.nodes);
}

Quaternion kernel_componentwise_eval(const KernelSeries& kernel, const StemPolynomial& f,
                                     const SliceCircle& circle, const Quaternion& q) {
    const bool negative = has_negative_powers(kernel);
    const auto dec = slice_decompose(q);
    const Complex z0(dec.x, dec.y);

    const auto comps = f.components();
    std::array<Complex, 4> transformed{};
    for (int k = 0; k < circle.nodes; ++k) {
        const double theta = 2.0 * kPi * k / circle.nodes;
        const Complex w =
            Complex(circle.center, 0.0) + circle.radius * Complex(std::cos(theta), std::sin(theta));
        if (negative && std::abs(w) <= 1e-12)
            throw Error(ErrorKind::singular_kernel,
                        "negative kernel power on a circle through the origin");
        Complex kz = 0.0;
        for (const auto& t : kernel.terms)
            kz += t.coeff * int_power(z0, t.n) * int_power(w, t.m);
        // dw/iota = (w - c) d theta on the circle
        const Complex measure = (w - Complex(circle.center, 0.0)) * (2.0 * kPi / circle.nodes);
        for (size_t m = 0; m < 4; ++m) transformed[m] += kz * comps[m].eval(w) * measure;
    }

    const ComplexQuad assembled(transformed[0], transformed[1], transformed[2], transformed[3]);
    return rho(dec.unit, assembled);
}

Quaternion bergman_kernel(const Quaternion& q, const Quaternion& s) {
    if (q.norm() >= 1.0 || s.norm() >= 1.0)
        throw Error(ErrorKind::out_of_domain, "Bergman kernel needs |q| < 1 and |s| < 1");
    const int n_terms = bergman_truncation(q.norm() * s.norm());
    const Quaternion sc = s.conj();
    Quaternion qp(1.0), sp(1.0), acc;
    for (int n = 0; n <= n_terms; ++n) {
        acc = acc + (n + 1.0) * (qp * sp);
        qp = qp * q;
        sp = sp * sc;
    }
    return acc / kPi;
}

Quaternion bergman_reproduce(const StemPolynomial& f, const ImaginaryUnit& v,
                             const Quaternion& q, int radial_nodes, int angular_nodes) {
    if (q.norm() >= 1.0)
        throw Error(ErrorKind::out_of_domain, "Bergman reproduction needs |q| < 1");
    if (radial_nodes < 2 || angular_nodes < 8)
        throw Error(ErrorKind::invalid_argument, "Bergman quadrature grid too small");

    const int n_terms = bergman_truncation(q.norm());
    std::vector<Quaternion> qpow(static_cast<size_t>(n_terms) + 1);
    qpow[0] = Quaternion(1.0);
    for (int n = 1; n <= n_terms; ++n) qpow[static_cast<size_t>(n)] = qpow[static_cast<size_t>(n - 1)] * q;

    const auto& rule = gauss_legendre(radial_nodes);

    Quaternion acc;
    for (int ir = 0; ir < radial_nodes; ++ir) {
        const double r = 0.5 * (rule.nodes[static_cast<size_t>(ir)] + 1.0);
        const double wr = 0.5 * rule.weights[static_cast<size_t>(ir)];
        for (int ia = 0; ia < angular_nodes; ++ia) {
            const double theta = 2.0 * kPi * ia / angular_nodes;
            const Quaternion s = slice_point(v, r * std::cos(theta), r * std::sin(theta));
            const Quaternion sc = s.conj();
            Quaternion kernel, sp(1.0);
            for (int n = 0; n <= n_terms; ++n) {
                kernel = kernel + (n + 1.0) * (qpow[static_cast<size_t>(n)] * sp);
                sp = sp * sc;
            }
            kernel = kernel / kPi;
            acc = acc + kernel * f.eval_slice(s) * (r * wr * (2.0 * kPi / angular_nodes));
        }
    }
    return acc;
}

std::pair<Quaternion, Quaternion> rho_commutes_with_rational(const StemPolynomial& p,
                                                             const RealPoly& den,
                                                             const ImaginaryUnit& v, Complex z) {
    const Complex dz = den.eval(z);
    if (std::abs(dz) <= 1e-300)
        throw Error(ErrorKind::singular_kernel, "denominator vanishes at z");
    const Quaternion lhs = rho(v, p.eval_stem(z) * (1.0 / dz));

    const Quaternion w = rho(v, z);
    Quaternion dw;
    for (auto it = den.coeffs().rbegin(); it != den.coeffs().rend(); ++it)
        dw = w * dw + Quaternion(*it);
    if (dw.norm_sq() <= 1e-300)
        throw Error(ErrorKind::singular_kernel, "denominator not invertible at rho_v(z)");
    const Quaternion rhs = dw.inverse() * p.eval_slice(w);
    return {lhs, rhs};
}

} // namespace slicereg
