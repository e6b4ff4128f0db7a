#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include "slicereg/complex_quad.hpp"
#include "test_support.hpp"

using namespace slicereg;
using testutil::Rng;

TEST_CASE("Hamilton product basics") {
    const Quaternion i = Quaternion::unit_i();
    const Quaternion j = Quaternion::unit_j();
    const Quaternion k = Quaternion::unit_k();

    CHECK(i * j == k);
    CHECK(j * i == -k);
    CHECK((Quaternion(1) + i) * (Quaternion(1) + j) == Quaternion(1, 1, 1, 1));

    const Quaternion a(1, 2, 3, 4), b(4, 3, 2, 1);
    CHECK((a * b).norm() == doctest::Approx(30.0).epsilon(1e-14));
    CHECK(a.norm() * b.norm() == doctest::Approx(30.0).epsilon(1e-14));
}

TEST_CASE("norm is multiplicative and conjugation gives the norm") {
    Rng rng(11);
    for (int t = 0; t < 200; ++t) {
        const Quaternion a = testutil::random_quaternion(rng, 3.0);
        const Quaternion b = testutil::random_quaternion(rng, 3.0);
        CHECK((a * b).norm() ==
              doctest::Approx(a.norm() * b.norm()).epsilon(1e-12));
        const Quaternion qq = a * a.conj();
        CHECK(qq.w == doctest::Approx(a.norm_sq()).epsilon(1e-12));
        CHECK(qq.vec().norm() <= 1e-12 * a.norm_sq());
    }
}

TEST_CASE("imaginary units square to -1 and reject non-units") {
    const ImaginaryUnit v(0.6, 0.8, 0.0);
    const Quaternion sq = v.quat() * v.quat();
    CHECK(sq.w == doctest::Approx(-1.0));
    CHECK(sq.vec().norm() <= 1e-15);

    // renormalizes within 1e-6
    const ImaginaryUnit w(1.0 + 5e-7, 0.0, 0.0);
    CHECK(w.a() == doctest::Approx(1.0));

    CHECK_THROWS_AS(ImaginaryUnit(1.1, 0.0, 0.0), Error);
    CHECK_THROWS_AS(ImaginaryUnit(0.0, 0.0, 0.0), Error);
}

TEST_CASE("rho realizes stem values on slices") {
    const ImaginaryUnit i = ImaginaryUnit::i();
    const ImaginaryUnit j = ImaginaryUnit::j();
    const Complex iota(0.0, 1.0);

    CHECK(abs_distance(rho(i, ComplexQuad(iota, 0, 0, 0)), Quaternion::unit_i()) <= 1e-15);

    const Complex z(0.3, -1.7);
    CHECK(abs_distance(rho(j, ComplexQuad(z, 0, 0, 0)), Quaternion(0.3, 0, -1.7, 0)) <= 1e-15);

    // stem value of (q-i) star (q-j) at iota realizes to zero on the i slice
    const ComplexQuad a(Complex(-1, 0), Complex(0, -1), Complex(0, -1), Complex(1, 0));
    CHECK(rho(i, a).norm() <= 1e-15);
}

TEST_CASE("rho is real-linear and multiplicative against central scalars") {
    Rng rng(12);
    for (int t = 0; t < 100; ++t) {
        const ImaginaryUnit v = random_unit(rng);
        const ComplexQuad a = testutil::random_quad(rng, 2.0);
        const ComplexQuad b = testutil::random_quad(rng, 2.0);
        const double s = testutil::uniform(rng, -2.0, 2.0);

        CHECK(abs_distance(rho(v, a + b), rho(v, a) + rho(v, b)) <= 1e-12 * (a.norm() + b.norm()));
        CHECK(abs_distance(rho(v, a * Complex(s, 0.0)), rho(v, a) * s) <= 1e-12 * a.norm() * (1 + std::abs(s)));

        const Complex z = testutil::random_complex(rng, 2.0);
        const Quaternion lhs = rho(v, star(ComplexQuad::scalar(z), a));
        const Quaternion rhs = rho(v, z) * rho(v, a);
        CHECK(abs_distance(lhs, rhs) <= 1e-12 * (1.0 + std::abs(z)) * (1.0 + a.norm()));
    }
}

TEST_CASE("star product: multiplication table, unit, associativity") {
    const ComplexQuad e1(1, 0, 0, 0), ei(0, 1, 0, 0), ej(0, 0, 1, 0), ek(0, 0, 0, 1);
    const Complex iota(0.0, 1.0);

    CHECK(star(ei, ej).c == ek.c);
    CHECK(star(ej, ei).c == (-ek).c);

    const ComplexQuad s = ComplexQuad::scalar(iota);
    const ComplexQuad ss = star(s, s);
    CHECK(std::abs(ss[0] - Complex(-1.0, 0.0)) <= 1e-15);

    Rng rng(13);
    for (int t = 0; t < 200; ++t) {
        const ComplexQuad a = testutil::random_quad(rng, 2.0);
        const ComplexQuad b = testutil::random_quad(rng, 2.0);
        const ComplexQuad c = testutil::random_quad(rng, 2.0);
        CHECK((star(a, e1) - a).norm() <= 1e-15 * a.norm());
        const ComplexQuad lhs = star(star(a, b), c);
        const ComplexQuad rhs = star(a, star(b, c));
        CHECK((lhs - rhs).norm() <= 1e-12 * (1.0 + lhs.norm()));
    }
}

TEST_CASE("phi values and multiplicativity") {
    CHECK(std::abs(phi(ComplexQuad(Complex(1, 0), Complex(0, 1), 0, 0))) <= 1e-15);
    CHECK(std::abs(phi(ComplexQuad(1, 2, 3, 4)) - Complex(30, 0)) <= 1e-13);

    // the worked pair: A = (1, iota, 0, 0) in Z, B = (2, 0, iota, 0)
    const ComplexQuad a(Complex(1, 0), Complex(0, 1), 0, 0);
    const ComplexQuad b(Complex(2, 0), 0, Complex(0, 1), 0);
    CHECK(std::abs(phi(b) - Complex(3, 0)) <= 1e-14);
    CHECK(std::abs(phi(star(a, b))) <= 1e-13);

    Rng rng(14);
    for (int t = 0; t < 500; ++t) {
        const ComplexQuad u = testutil::random_quad(rng, 2.0);
        const ComplexQuad v = testutil::random_quad(rng, 2.0);
        const Complex lhs = phi(star(u, v));
        const Complex rhs = phi(u) * phi(v);
        CHECK(std::abs(lhs - rhs) <= 1e-12 * std::max(1.0, std::abs(rhs)));
    }
}

TEST_CASE("star conjugate recovers phi") {
    const ComplexQuad a(Complex(1, 0), Complex(0, 1), 0, 0);
    const ComplexQuad ac = star_conjugate(a);
    CHECK(std::abs(ac[1] - Complex(0, -1)) <= 1e-15);
    CHECK(star(a, ac).norm() <= 1e-14); // phi(a) = 0

    const ComplexQuad b(0, 1, 0, 0);
    const ComplexQuad prod = star(b, star_conjugate(b));
    CHECK(std::abs(prod[0] - Complex(1, 0)) <= 1e-15);

    Rng rng(15);
    for (int t = 0; t < 200; ++t) {
        const ComplexQuad u = testutil::random_quad(rng, 2.0);
        const ComplexQuad p = star(u, star_conjugate(u));
        CHECK(std::abs(p[0] - phi(u)) <= 1e-12 * (1.0 + std::abs(phi(u))));
        CHECK(std::abs(p[1]) + std::abs(p[2]) + std::abs(p[3]) <= 1e-12 * (1.0 + u.norm_sq()));
    }
}

TEST_CASE("variety membership") {
    CHECK(in_variety(ComplexQuad(Complex(1, 0), Complex(0, 1), 0, 0), Quaternion()));
    CHECK_FALSE(in_variety(ComplexQuad(1, 2, 3, 4), Quaternion()));

    // A = (1+i, -1+i, 0, 0) is not on Z(1 - i)
    const ComplexQuad a(Complex(1, 1), Complex(-1, 1), 0, 0);
    CHECK_FALSE(in_variety(a, Quaternion(1, -1, 0, 0)));

    // translate a point of Z by q = 2: lands on Z(2)
    const ComplexQuad b(Complex(3, 0), Complex(0, 1), 0, 0);
    CHECK(in_variety(b, Quaternion(2.0)));
    CHECK_FALSE(in_variety(b, Quaternion()));

    CHECK_THROWS_AS(in_variety(b, Quaternion(), -1.0), Error);
}

TEST_CASE("unit recovery from points of Z") {
    const ComplexQuad a(Complex(0, 1), Complex(-1, 0), 0, 0); // stem of q-i at iota
    const ImaginaryUnit va = unit_from_zero(a);
    CHECK(std::abs(va.a() - 1.0) <= 1e-14);
    CHECK(std::abs(va.b()) + std::abs(va.c()) <= 1e-14);

    const ComplexQuad b(Complex(-1, 0), Complex(0, -1), Complex(0, -1), Complex(1, 0));
    const ImaginaryUnit vb = unit_from_zero(b);
    CHECK(std::abs(vb.a() - 1.0) <= 1e-14);

    // conjugated input recovers -v
    const ImaginaryUnit vc = unit_from_zero(b.conj_components());
    CHECK(std::abs(vc.a() + 1.0) <= 1e-14);

    CHECK_THROWS_AS(unit_from_zero(ComplexQuad(1, 2, 3, 4)), Error);
    CHECK_THROWS_AS(unit_from_zero(ComplexQuad()), Error);
    CHECK_THROWS_AS(unit_from_zero(ComplexQuad(1, 0, 0, 0)), Error);
}

TEST_CASE("unit recovery round-trips on random kernel points") {
    Rng rng(16);
    for (int t = 0; t < 200; ++t) {
        const ImaginaryUnit v = random_unit(rng);
        Quaternion beta = testutil::random_quaternion(rng, 2.0);
        while (beta.norm() < 0.1) beta = testutil::random_quaternion(rng, 2.0);
        const Quaternion alpha = -1.0 * (v.quat() * beta);
        ComplexQuad a;
        for (size_t m = 0; m < 4; ++m) a.c[m] = Complex(0.0);
        a.c[0] = Complex(alpha.w, beta.w);
        a.c[1] = Complex(alpha.x, beta.x);
        a.c[2] = Complex(alpha.y, beta.y);
        a.c[3] = Complex(alpha.z, beta.z);

        const ImaginaryUnit rec = unit_from_zero(a);
        CHECK(abs_distance(rec.quat(), v.quat()) <= 1e-12);
        CHECK(rho(rec, a).norm() <= 1e-10 * a.norm());
        CHECK(std::abs(rec.quat().norm() - 1.0) <= 1e-14);
    }
}

TEST_CASE("real points of Z are trivial") {
    Rng rng(17);
    for (int t = 0; t < 100; ++t) {
        const Quaternion q = testutil::random_quaternion(rng, 2.0);
        const ComplexQuad a(q);
        CHECK(std::abs(phi(a) - Complex(q.norm_sq(), 0.0)) <= 1e-13 * (1.0 + q.norm_sq()));
    }
}
