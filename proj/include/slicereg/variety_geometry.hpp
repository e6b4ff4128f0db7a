#pragma once

#include <array>
#include <utility>

#include "slicereg/complex_quad.hpp"

namespace slicereg {

/// The 4x4 complex matrix A_v whose kernel is the plane
/// Z_v = {z in C^4 : rho_v(z) = 0}, built from v = a i + b j + c k:
///
///   ( -iota   a      b      c   )
///   ( -a     -iota   c     -b   )
///   ( -b     -c     -iota   a   )
///   ( -c      b     -a     -iota)
///
/// Has complex rank 2 for every unit v.
struct UnitMatrix {
    std::array<std::array<Complex, 4>, 4> entries;
};

UnitMatrix unit_matrix(const ImaginaryUnit& v);

/// Matrix-vector product A_v * z.
ComplexQuad apply(const UnitMatrix& m, const ComplexQuad& z);

/// Numerical rank with threshold tol * sigma_max (SVD based).
int numerical_rank(const UnitMatrix& m, double tol = 1e-10);

/// Two orthonormal kernel vectors of A_v; each satisfies rho_v(z) = 0 and
/// Phi(z) = 0.
std::pair<ComplexQuad, ComplexQuad> zv_basis(const ImaginaryUnit& v);

/// Orthonormal basis of the orthogonal complement Z_v^perp, the range of
/// the conjugate transpose of A_v.
std::pair<ComplexQuad, ComplexQuad> zv_perp_basis(const ImaginaryUnit& v);

/// Point of the Pluecker embedding of Gr(4,2) into CP^5, normalized so the
/// largest-modulus coordinate is 1. Satisfies the Grassmannian relation
/// w0 w5 - w1 w4 + w2 w3 = 0.
struct PlueckerPoint {
    std::array<Complex, 6> w;
};

/// The six 2x2 minors of the 4x2 matrix [z1 z2], in the row-pair order
/// (01, 02, 03, 12, 13, 23). Throws for (numerically) dependent inputs.
PlueckerPoint pluecker(const ComplexQuad& z1, const ComplexQuad& z2);

double grassmann_residual(const PlueckerPoint& p);

/// Membership in the conic S: the three linear relations
/// w0 - w5 = w1 + w4 = w2 - w3 = 0 together with the Grassmannian quadric,
/// all within tol after projective normalization.
bool on_conic_S(const PlueckerPoint& p, double tol = 1e-9);

/// Recover v from the plane Z_v: solves rho_v(z) = 0 over a kernel vector.
/// Round-trips with zv_basis to machine precision.
ImaginaryUnit unit_from_plane(const ComplexQuad& z1, const ComplexQuad& z2);

} // namespace slicereg
