#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "test_support.hpp"

using namespace slicereg;
using testutil::Rng;

namespace {
const Complex kIota(0.0, 1.0);
}

TEST_CASE("components split coefficients into real polynomials") {
    const StemPolynomial f = testutil::linear_factor(Quaternion::unit_i()); // q - i
    const auto c = f.components();
    CHECK(c[0].coeffs() == std::vector<double>{0.0, 1.0});
    CHECK(c[1].coeffs() == std::vector<double>{-1.0});
    CHECK(c[2].is_zero());
    CHECK(c[3].is_zero());

    const auto cs = testutil::sphere_poly().components(); // q^2 + 1
    CHECK(cs[0].coeffs() == std::vector<double>{1.0, 0.0, 1.0});
    CHECK(cs[1].is_zero());

    const auto cp = testutil::isolated_poly().components(); // (q-i)(star)(q-j)
    CHECK(cp[0].coeffs() == std::vector<double>{0.0, 0.0, 1.0});
    CHECK(cp[1].coeffs() == std::vector<double>{0.0, -1.0});
    CHECK(cp[2].coeffs() == std::vector<double>{0.0, -1.0});
    CHECK(cp[3].coeffs() == std::vector<double>{1.0});
}

TEST_CASE("stem evaluation fixtures") {
    CHECK(testutil::sphere_poly().eval_stem(kIota).norm() <= 1e-15);

    const ComplexQuad a = testutil::linear_factor(Quaternion::unit_i()).eval_stem(kIota);
    CHECK(std::abs(a[0] - kIota) <= 1e-15);
    CHECK(std::abs(a[1] + 1.0) <= 1e-15);

    const ComplexQuad b = testutil::isolated_poly().eval_stem(kIota);
    CHECK(std::abs(b[0] + 1.0) <= 1e-15);
    CHECK(std::abs(b[1] + kIota) <= 1e-15);
    CHECK(std::abs(b[2] + kIota) <= 1e-15);
    CHECK(std::abs(b[3] - 1.0) <= 1e-15);
}

TEST_CASE("slice evaluation fixtures") {
    const Quaternion qi = Quaternion::unit_i();
    const Quaternion qj = Quaternion::unit_j();

    CHECK(testutil::sphere_poly().eval_slice(qi).norm() <= 1e-15);
    CHECK(testutil::isolated_poly().eval_slice(qi).norm() <= 1e-15);
    CHECK(abs_distance(testutil::isolated_poly().eval_slice(qj), 2.0 * Quaternion::unit_k()) <=
          1e-15);
    CHECK(abs_distance(testutil::linear_factor(qi).eval_slice(qj), qj - qi) <= 1e-15);
}

TEST_CASE("stems conjugate under z -> conj z") {
    Rng rng(21);
    for (int t = 0; t < 100; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 4);
        const Complex z = testutil::random_complex(rng, 2.0);
        const ComplexQuad a = f.eval_stem(std::conj(z));
        const ComplexQuad b = f.eval_stem(z).conj_components();
        CHECK((a - b).norm() <= 1e-12 * (1.0 + b.norm()));
    }
}

TEST_CASE("the commuting diagram: slice evaluation matches rho of the stem") {
    Rng rng(22);
    for (int t = 0; t < 200; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 5);
        const ImaginaryUnit v = random_unit(rng);
        const double x = testutil::uniform(rng, -2.0, 2.0);
        const double y = testutil::uniform(rng, -2.0, 2.0);
        const Quaternion direct = f.eval_slice(slice_point(v, x, y));
        const Quaternion via_stem = rho(v, f.eval_stem(Complex(x, y)));
        CHECK(abs_distance(direct, via_stem) <= 1e-12 * (1.0 + direct.norm()));
    }
}

TEST_CASE("slice evaluation respects x+vy = x+(-v)(-y) exactly") {
    Rng rng(23);
    for (int t = 0; t < 50; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 4);
        const ImaginaryUnit v = random_unit(rng);
        const double x = testutil::uniform(rng, -2.0, 2.0);
        const double y = testutil::uniform(rng, -2.0, 2.0);
        const Quaternion a = f.eval_slice(slice_point(v, x, y));
        const Quaternion b = f.eval_slice(slice_point(-v, x, -y));
        CHECK(a == b);
    }
}

TEST_CASE("star product convolution fixtures") {
    const StemPolynomial prod = testutil::isolated_poly();
    REQUIRE(prod.degree() == 2);
    CHECK(abs_distance(prod.coeffs()[0], Quaternion::unit_k()) <= 1e-15);
    CHECK(abs_distance(prod.coeffs()[1], Quaternion(0, -1, -1, 0)) <= 1e-15);
    CHECK(abs_distance(prod.coeffs()[2], Quaternion(1.0)) <= 1e-15);

    const StemPolynomial one = StemPolynomial::constant(Quaternion(1.0));
    Rng rng(24);
    const StemPolynomial p = testutil::random_poly(rng, 5);
    const StemPolynomial pu = star_product(p, one);
    REQUIRE(pu.degree() == p.degree());
    for (size_t n = 0; n < p.coeffs().size(); ++n)
        CHECK(abs_distance(pu.coeffs()[n], p.coeffs()[n]) <= 1e-15);

    const StemPolynomial sym = star_product(testutil::linear_factor(Quaternion::unit_i()),
                                            testutil::linear_factor(-Quaternion::unit_i()));
    CHECK(abs_distance(sym.coeffs()[0], Quaternion(1.0)) <= 1e-15);
    CHECK(sym.coeffs()[1].norm() <= 1e-15);
    CHECK(abs_distance(sym.coeffs()[2], Quaternion(1.0)) <= 1e-15);
}

TEST_CASE("star product evaluates through the stem star") {
    Rng rng(25);
    for (int t = 0; t < 100; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 4);
        const StemPolynomial g = testutil::random_poly(rng, 3);
        const StemPolynomial h = star_product(f, g);
        const Complex z = testutil::random_complex(rng, 1.5);
        const ComplexQuad lhs = h.eval_stem(z);
        const ComplexQuad rhs = star(f.eval_stem(z), g.eval_stem(z));
        CHECK((lhs - rhs).norm() <= 1e-10 * (1.0 + rhs.norm()));

        const ImaginaryUnit v = random_unit(rng);
        const Quaternion q = slice_point(v, z.real(), z.imag());
        CHECK(abs_distance(h.eval_slice(q), rho(v, rhs)) <= 1e-10 * (1.0 + rhs.norm()));
    }
}

TEST_CASE("symmetrize fixtures") {
    CHECK(symmetrize(testutil::sphere_poly()).coeffs() ==
          std::vector<double>{1.0, 0.0, 2.0, 0.0, 1.0});
    CHECK(symmetrize(testutil::linear_factor(Quaternion::unit_i())).coeffs() ==
          std::vector<double>{1.0, 0.0, 1.0});
    CHECK(symmetrize(testutil::isolated_poly()).coeffs() ==
          std::vector<double>{1.0, 0.0, 2.0, 0.0, 1.0});
}

TEST_CASE("symmetrize agrees with phi of the stem pointwise") {
    Rng rng(26);
    for (int t = 0; t < 100; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 5);
        const RealPoly s = symmetrize(f);
        const Complex z = testutil::random_complex(rng, 1.5);
        const Complex lhs = s.eval(z);
        const Complex rhs = phi(f.eval_stem(z));
        CHECK(std::abs(lhs - rhs) <= 1e-11 * (1.0 + std::abs(rhs)));
    }
}

TEST_CASE("symmetrize coefficients match DFT interpolation of phi of the stem") {
    // independent route: recover the coefficients of z -> phi(F(z)) by
    // discrete Fourier interpolation on a circle and compare coefficientwise
    Rng rng(31);
    for (int t = 0; t < 20; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 4);
        const RealPoly s = symmetrize(f);
        const int n = s.degree() + 1;
        const double radius = 1.3;

        std::vector<Complex> samples(static_cast<size_t>(n));
        for (int k = 0; k < n; ++k) {
            const double th = 2.0 * M_PI * k / n;
            samples[static_cast<size_t>(k)] =
                phi(f.eval_stem(radius * Complex(std::cos(th), std::sin(th))));
        }
        for (int c = 0; c < n; ++c) {
            Complex acc = 0.0;
            for (int k = 0; k < n; ++k) {
                const double th = -2.0 * M_PI * c * k / n;
                acc += samples[static_cast<size_t>(k)] * Complex(std::cos(th), std::sin(th));
            }
            acc /= static_cast<double>(n) * std::pow(radius, c);
            CHECK(std::abs(acc.imag()) <= 1e-10 * std::max(1.0, s.max_coeff()));
            CHECK(std::abs(acc.real() - s.coeffs()[static_cast<size_t>(c)]) <=
                  1e-10 * std::max(1.0, s.max_coeff()));
        }
    }
}

TEST_CASE("symmetrize is multiplicative across the star product") {
    Rng rng(27);
    for (int t = 0; t < 100; ++t) {
        const StemPolynomial f = testutil::random_poly(rng, 4);
        const StemPolynomial g = testutil::random_poly(rng, 3);
        const RealPoly lhs = symmetrize(star_product(f, g));
        const RealPoly rhs = symmetrize(f) * symmetrize(g);
        REQUIRE(lhs.degree() == rhs.degree());
        double scale = rhs.max_coeff();
        for (size_t n = 0; n < lhs.coeffs().size(); ++n)
            CHECK(std::abs(lhs.coeffs()[n] - rhs.coeffs()[n]) <= 1e-12 * scale);
    }
}

TEST_CASE("star inverse") {
    const StemPolynomial f = testutil::sphere_poly();
    const StemRational inv = star_inverse(f);
    CHECK(inv.num.coeffs().size() == 3);
    CHECK(inv.den.coeffs() == std::vector<double>{1.0, 0.0, 2.0, 0.0, 1.0});

    const StemRational invl = star_inverse(testutil::linear_factor(Quaternion::unit_i()));
    CHECK(abs_distance(invl.num.coeffs()[0], Quaternion::unit_i()) <= 1e-15);
    CHECK(abs_distance(invl.num.coeffs()[1], Quaternion(1.0)) <= 1e-15);
    CHECK(invl.den.coeffs() == std::vector<double>{1.0, 0.0, 1.0});

    // p star p^{-star} evaluates to 1 away from the zero set
    Rng rng(28);
    for (int t = 0; t < 50; ++t) {
        const StemPolynomial p = testutil::random_poly(rng, 3);
        const StemRational pi = star_inverse(p);
        const StemRational prod(star_product(p, pi.num), pi.den);
        const Quaternion val = prod.eval_slice(Quaternion(2.0));
        CHECK(abs_distance(val, Quaternion(1.0)) <= 1e-10);
    }

    CHECK_THROWS_AS(star_inverse(StemPolynomial()), Error);
}

TEST_CASE("rational stems evaluate consistently on slices and stems") {
    Rng rng(29);
    for (int t = 0; t < 100; ++t) {
        const StemPolynomial num = testutil::random_poly(rng, 3);
        const RealPoly den = symmetrize(testutil::random_poly(rng, 2));
        const StemRational h(num, den);
        const ImaginaryUnit v = random_unit(rng);
        const double x = testutil::uniform(rng, -2.0, 2.0);
        const double y = testutil::uniform(rng, -2.0, 2.0);
        if (std::abs(den.eval(Complex(x, y))) < 1e-3) continue;
        const Quaternion direct = h.eval_slice(slice_point(v, x, y));
        const Quaternion via_stem = rho(v, h.eval_stem(Complex(x, y)));
        CHECK(abs_distance(direct, via_stem) <= 1e-9 * (1.0 + direct.norm()));
    }
}

TEST_CASE("derivatives") {
    const RealPoly p({1.0, 0.0, 1.0}); // z^2 + 1
    CHECK(p.derivative().coeffs() == std::vector<double>{0.0, 2.0});
    const RealPoly p2 = p * p;
    CHECK(p2.derivative().coeffs() == std::vector<double>{0.0, 4.0, 0.0, 4.0});
    CHECK(RealPoly::constant(3.0).derivative().is_zero());
}

TEST_CASE("a zero sphere of either factor survives in the product symmetrization") {
    Rng rng(30);
    for (int t = 0; t < 50; ++t) {
        const StemPolynomial g = testutil::random_poly(rng, 3);
        const RealPoly s1 = symmetrize(star_product(testutil::sphere_poly(), g));
        const RealPoly s2 = symmetrize(star_product(g, testutil::sphere_poly()));
        CHECK(std::abs(s1.eval(kIota)) <= 1e-10 * std::max(1.0, s1.max_coeff()));
        CHECK(std::abs(s2.eval(kIota)) <= 1e-10 * std::max(1.0, s2.max_coeff()));
    }
}

TEST_CASE("degenerate polynomials") {
    CHECK(StemPolynomial().is_zero());
    CHECK(StemPolynomial({Quaternion()}).is_zero());
    const StemPolynomial padded({Quaternion(1.0), Quaternion(), Quaternion()});
    CHECK(padded.degree() == 0);
    CHECK_THROWS_AS(StemRational(StemPolynomial::identity(), RealPoly()), Error);
}
