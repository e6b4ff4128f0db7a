#include "slicereg/variety_geometry.hpp"

#include <Eigen/Dense>
#include <Eigen/SVD>
#include <cmath>

namespace slicereg {

namespace {

Eigen::Matrix4cd to_eigen(const UnitMatrix& m) {
    Eigen::Matrix4cd a;
    for (int r = 0; r < 4; ++r)
        for (int c = 0; c < 4; ++c)
            a(r, c) = m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)];
    return a;
}

ComplexQuad from_column(const Eigen::Vector4cd& col) {
    return {col(0), col(1), col(2), col(3)};
}

} // namespace

UnitMatrix unit_matrix(const ImaginaryUnit& v) {
    const Complex mi(0.0, -1.0);
    const double a = v.a(), b = v.b(), c = v.c();
    UnitMatrix m;
    m.entries = {{{mi, a, b, c},
                  {-a, mi, c, -b},
                  {-b, -c, mi, a},
                  {-c, b, -a, mi}}};
    return m;
}

ComplexQuad apply(const UnitMatrix& m, const ComplexQuad& z) {
    ComplexQuad out;
    for (int r = 0; r < 4; ++r) {
        Complex acc = 0.0;
        for (int c = 0; c < 4; ++c)
            acc += m.entries[static_cast<size_t>(r)][static_cast<size_t>(c)] * z[c];
        out.c[static_cast<size_t>(r)] = acc;
    }
    return out;
}

int numerical_rank(const UnitMatrix& m, double tol) {
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(to_eigen(m));
    const auto& sv = svd.singularValues();
    const double cutoff = tol * sv(0);
    int rank = 0;
    for (int i = 0; i < 4; ++i)
        if (sv(i) > cutoff) ++rank;
    return rank;
}

std::pair<ComplexQuad, ComplexQuad> zv_basis(const ImaginaryUnit& v) {
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(to_eigen(unit_matrix(v)), Eigen::ComputeFullV);
    // rank is 2, so the kernel is spanned by the last two right singular vectors
    return {from_column(svd.matrixV().col(2)), from_column(svd.matrixV().col(3))};
}

std::pair<ComplexQuad, ComplexQuad> zv_perp_basis(const ImaginaryUnit& v) {
    // range of the conjugate transpose = span of the leading right singular vectors
    Eigen::JacobiSVD<Eigen::Matrix4cd> svd(to_eigen(unit_matrix(v)), Eigen::ComputeFullV);
    return {from_column(svd.matrixV().col(0)), from_column(svd.matrixV().col(1))};
}

PlueckerPoint pluecker(const ComplexQuad& z1, const ComplexQuad& z2) {
    auto minor = [&](int r, int s) { return z1[r] * z2[s] - z1[s] * z2[r]; };
    PlueckerPoint p;
    p.w = {minor(0, 1), minor(0, 2), minor(0, 3), minor(1, 2), minor(1, 3), minor(2, 3)};

    double biggest = 0.0;
    size_t arg = 0;
    for (size_t i = 0; i < 6; ++i)
        if (std::abs(p.w[i]) > biggest) {
            biggest = std::abs(p.w[i]);
            arg = i;
        }
    const double input_scale = z1.norm() * z2.norm();
    if (biggest <= 1e-12 * std::max(input_scale, 1e-300))
        throw Error(ErrorKind::invalid_argument,
                    "Pluecker coordinates of linearly dependent vectors");
    const Complex pivot = p.w[arg];
    for (auto& w : p.w) w /= pivot;
    return p;
}

double grassmann_residual(const PlueckerPoint& p) {
    return std::abs(p.w[0] * p.w[5] - p.w[1] * p.w[4] + p.w[2] * p.w[3]);
}

bool on_conic_S(const PlueckerPoint& p, double tol) {
    return std::abs(p.w[0] - p.w[5]) <= tol && std::abs(p.w[1] + p.w[4]) <= tol &&
           std::abs(p.w[2] - p.w[3]) <= tol && grassmann_residual(p) <= tol;
}

ImaginaryUnit unit_from_plane(const ComplexQuad& z1, const ComplexQuad& z2) {
    // either basis vector determines v; prefer the one with the larger
    // imaginary part for conditioning
    const ComplexQuad& z = z1.imag_part().norm() >= z2.imag_part().norm() ? z1 : z2;
    return unit_from_zero(z, 1e-6);
}

} // namespace slicereg
