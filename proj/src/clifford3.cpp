#include "slicereg/clifford3.hpp"

#include <cmath>

#include "slicereg/zero_analysis.hpp"

namespace slicereg {

namespace {

// Base blades as generator bitmasks: bit i set = e_i present.
// Order: {1, e0, e1, e2, e0e1, e0e2, e1e2, e0e1e2}.
constexpr std::array<unsigned, 8> kBladeMask = {0b000, 0b001, 0b010, 0b100,
                                                0b011, 0b101, 0b110, 0b111};

constexpr std::array<int, 8> mask_to_index_init() {
    std::array<int, 8> idx{};
    for (int i = 0; i < 8; ++i) idx[kBladeMask[static_cast<size_t>(i)]] = i;
    return idx;
}
constexpr std::array<int, 8> kMaskToIndex = mask_to_index_init();

// Sign of e_S e_T: reordering swaps plus e_i^2 = -1 for shared generators.
constexpr int blade_sign(unsigned s, unsigned t) {
    int swaps = 0;
    for (unsigned bit = 0; bit < 3; ++bit) {
        if (!(t & (1u << bit))) continue;
        for (unsigned higher = bit + 1; higher < 3; ++higher)
            if (s & (1u << higher)) ++swaps;
    }
    int sign = (swaps % 2 == 0) ? 1 : -1;
    unsigned shared = s & t;
    while (shared) {
        sign = -sign; // e_i^2 = -1
        shared &= shared - 1;
    }
    return sign;
}

struct Table {
    // product of basis blades: index and sign
    std::array<std::array<int, 8>, 8> index;
    std::array<std::array<double, 8>, 8> sign;
};

Table build_table() {
    Table t;
    for (int i = 0; i < 8; ++i)
        for (int j = 0; j < 8; ++j) {
            const unsigned s = kBladeMask[static_cast<size_t>(i)];
            const unsigned u = kBladeMask[static_cast<size_t>(j)];
            t.index[static_cast<size_t>(i)][static_cast<size_t>(j)] = kMaskToIndex[s ^ u];
            t.sign[static_cast<size_t>(i)][static_cast<size_t>(j)] = blade_sign(s, u);
        }
    return t;
}

const Table& table() {
    static const Table t = build_table();
    return t;
}

} // namespace

Clifford3 cl3_mul(const Clifford3& a, const Clifford3& b) {
    const Table& t = table();
    Clifford3 out;
    for (size_t i = 0; i < 8; ++i) {
        if (a.c[i] == 0.0) continue;
        for (size_t j = 0; j < 8; ++j) {
            if (b.c[j] == 0.0) continue;
            out.c[static_cast<size_t>(t.index[i][j])] += t.sign[i][j] * a.c[i] * b.c[j];
        }
    }
    return out;
}

bool in_S3(const Clifford3& u, double tol) {
    if (std::abs(u.c[0]) > tol || std::abs(u.c[7]) > tol) return false;
    double norm_mid = 0.0;
    for (size_t i = 1; i <= 6; ++i) norm_mid += u.c[i] * u.c[i];
    if (std::abs(norm_mid - 1.0) > tol) return false;
    const double relation = u.c[1] * u.c[6] - u.c[2] * u.c[5] + u.c[3] * u.c[4];
    return std::abs(relation) <= tol;
}

ComplexOct star8(const ComplexOct& a, const ComplexOct& b) {
    const Table& t = table();
    ComplexOct out;
    for (size_t i = 0; i < 8; ++i) {
        if (a.c[i] == Complex(0.0)) continue;
        for (size_t j = 0; j < 8; ++j) {
            if (b.c[j] == Complex(0.0)) continue;
            out.c[static_cast<size_t>(t.index[i][j])] += t.sign[i][j] * a.c[i] * b.c[j];
        }
    }
    return out;
}

Complex phi8(const ComplexOct& z) {
    Complex acc = 0.0;
    for (const Complex& v : z.c) acc += v * v;
    return acc;
}

bool in_Z8(const ComplexOct& z, double tol) {
    const double scale = tol * std::max(1.0, z.norm_sq());
    const Complex pfaffian =
        z.c[0] * z.c[7] - z.c[1] * z.c[6] + z.c[2] * z.c[5] - z.c[3] * z.c[4];
    return std::abs(pfaffian) <= scale && std::abs(phi8(z)) <= scale;
}

Clifford3 rho8(const Clifford3& u, const ComplexOct& z) {
    return z.real_part() + cl3_mul(u, z.imag_part());
}

bool CliffordStemPolynomial::is_zero() const {
    for (const auto& a : coeffs_)
        if (a.norm_sq() != 0.0) return false;
    return true;
}

ComplexOct CliffordStemPolynomial::eval_stem(Complex z) const {
    ComplexOct acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = acc * z + ComplexOct(*it);
    return acc;
}

Clifford3 CliffordStemPolynomial::eval_slice(const Clifford3& q) const {
    Clifford3 acc;
    for (auto it = coeffs_.rbegin(); it != coeffs_.rend(); ++it)
        acc = cl3_mul(q, acc) + *it;
    return acc;
}

std::array<RealPoly, 8> CliffordStemPolynomial::components() const {
    std::array<std::vector<double>, 8> c;
    for (auto& v : c) v.resize(coeffs_.size());
    for (size_t n = 0; n < coeffs_.size(); ++n)
        for (size_t m = 0; m < 8; ++m) c[m][n] = coeffs_[n].c[m];
    std::array<RealPoly, 8> out;
    for (size_t m = 0; m < 8; ++m) out[m] = RealPoly(std::move(c[m]));
    return out;
}

RealPoly CliffordStemPolynomial::symmetrize() const {
    RealPoly s;
    for (const auto& fm : components()) s = s + fm * fm;
    return s;
}

CliffordStemPolynomial star_product(const CliffordStemPolynomial& a,
                                    const CliffordStemPolynomial& b) {
    if (a.coeffs().empty() || b.coeffs().empty()) return {};
    std::vector<Clifford3> c(a.coeffs().size() + b.coeffs().size() - 1);
    for (size_t n = 0; n < a.coeffs().size(); ++n)
        for (size_t m = 0; m < b.coeffs().size(); ++m)
            c[n + m] = c[n + m] + cl3_mul(a.coeffs()[n], b.coeffs()[m]);
    return CliffordStemPolynomial(std::move(c));
}

int count_upper_bound(const CliffordStemPolynomial& f, const Contour& c) {
    if (f.is_zero())
        throw Error(ErrorKind::invalid_argument, "counting bound for the zero function");
    const RealPoly sym = f.symmetrize();
    if (sym.degree() < 1) return 0;
    return winding_log_derivative(sym, c);
}

} // namespace slicereg
