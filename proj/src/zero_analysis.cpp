#include "slicereg/zero_analysis.hpp"

#include <Eigen/Eigenvalues>
#include <algorithm>
#include <array>
#include <cmath>
#include <functional>
#include <limits>
#include <map>
#include <numeric>

#include "slicereg/quadrature.hpp"

namespace slicereg {

namespace {

constexpr double kPi = 3.14159265358979323846;

// Logarithmic derivative num'/num - den'/den of a rational function.
// With `guard` set, a vanishing factor at a quadrature node raises
// boundary-zero instead of polluting the integral.
class LogDerivative {
public:
    LogDerivative(const RealPoly& num, const RealPoly* den, bool guard)
        : num_(num), num_d_(num.derivative()), guard_(guard) {
        if (den && den->degree() >= 1) {
            den_ = *den;
            den_d_ = den_.derivative();
            has_den_ = true;
        }
    }

    Complex operator()(Complex z) const {
        const Complex nv = num_.eval(z);
        if (guard_ && std::abs(nv) <= 1e-13 * num_.eval_scale(z))
            throw Error(ErrorKind::boundary_zero, "zero of the integrand on the contour");
        if (nv == 0.0)
            throw Error(ErrorKind::boundary_zero, "exact zero on the contour");
        Complex g = num_d_.eval(z) / nv;
        if (has_den_) {
            const Complex dv = den_.eval(z);
            if (guard_ && std::abs(dv) <= 1e-13 * den_.eval_scale(z))
                throw Error(ErrorKind::boundary_zero, "pole of the integrand on the contour");
            if (dv == 0.0)
                throw Error(ErrorKind::boundary_zero, "exact pole on the contour");
            g -= den_d_.eval(z) / dv;
        }
        return g;
    }

private:
    RealPoly num_;
    RealPoly num_d_;
    RealPoly den_;
    RealPoly den_d_;
    bool has_den_ = false;
    bool guard_;
};

int round_checked(double est) { return static_cast<int>(std::lround(est)); }

int winding_circle(const LogDerivative& ld, Complex center, double radius) {
    Complex sum = 0.0;
    int have = 0;
    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int nodes = 64; nodes <= (1 << 20); nodes *= 2) {
        if (have == 0) {
            for (int k = 0; k < nodes; ++k) {
                const double th = 2.0 * kPi * k / nodes;
                const Complex z = center + radius * Complex(std::cos(th), std::sin(th));
                sum += ld(z) * (z - center);
            }
        } else {
            // refine: new nodes sit between the previous ones
            for (int k = 0; k < have; ++k) {
                const double th = 2.0 * kPi * (2 * k + 1) / nodes;
                const Complex z = center + radius * Complex(std::cos(th), std::sin(th));
                sum += ld(z) * (z - center);
            }
        }
        have = nodes;
        const double est = (sum / static_cast<double>(nodes)).real();
        if (!std::isnan(prev) && std::lround(est) == std::lround(prev) &&
            std::abs(est - prev) < 0.25)
            return round_checked(est);
        prev = est;
    }
    throw Error(ErrorKind::non_convergence, "circle winding quadrature did not converge");
}

int winding_rectangle(const LogDerivative& ld, const Contour::Rectangle& r) {
    const Complex a(r.corner_min.real(), r.corner_min.imag());
    const Complex b(r.corner_max.real(), r.corner_min.imag());
    const Complex c(r.corner_max.real(), r.corner_max.imag());
    const Complex d(r.corner_min.real(), r.corner_max.imag());
    const std::array<std::pair<Complex, Complex>, 4> edges{
        {{a, b}, {b, c}, {c, d}, {d, a}}};

    double prev = std::numeric_limits<double>::quiet_NaN();
    for (int per_edge = 64; per_edge <= (1 << 18); per_edge *= 2) {
        const auto& rule = gauss_legendre(per_edge);
        Complex total = 0.0;
        for (const auto& [p, q] : edges) {
            const Complex mid = 0.5 * (p + q);
            const Complex half = 0.5 * (q - p);
            for (size_t k = 0; k < rule.nodes.size(); ++k)
                total += ld(mid + half * rule.nodes[k]) * rule.weights[k] * half;
        }
        const double est = (total / Complex(0.0, 2.0 * kPi)).real();
        if (!std::isnan(prev) && std::lround(est) == std::lround(prev) &&
            std::abs(est - prev) < 0.25)
            return round_checked(est);
        prev = est;
    }
    throw Error(ErrorKind::non_convergence, "rectangle winding quadrature did not converge");
}

int winding_impl(const RealPoly& num, const RealPoly* den, const Contour& c, bool guard) {
    if (num.is_zero())
        throw Error(ErrorKind::invalid_argument, "winding of the zero function");
    if (num.degree() < 1 && (!den || den->degree() < 1)) return 0;
    const LogDerivative ld(num, den, guard);
    if (c.is_circle()) return winding_circle(ld, c.as_circle().center, c.as_circle().radius);
    return winding_rectangle(ld, c.as_rectangle());
}

struct Cluster {
    Complex centroid;
    double spread = 0.0;
    int members = 0;
    int multiplicity = 0;
};

// Union-find clustering of polished eigenvalues.
std::vector<Cluster> cluster_points(const std::vector<Complex>& pts, double merge_tol) {
    const size_t n = pts.size();
    std::vector<size_t> parent(n);
    std::iota(parent.begin(), parent.end(), size_t{0});
    std::function<size_t(size_t)> find = [&](size_t i) {
        while (parent[i] != i) i = parent[i] = parent[parent[i]];
        return i;
    };
    for (size_t i = 0; i < n; ++i)
        for (size_t j = i + 1; j < n; ++j)
            if (std::abs(pts[i] - pts[j]) <= merge_tol) parent[find(i)] = find(j);

    std::map<size_t, std::vector<Complex>> groups;
    for (size_t i = 0; i < n; ++i) groups[find(i)].push_back(pts[i]);

    std::vector<Cluster> out;
    for (auto& [root, members] : groups) {
        Cluster cl;
        Complex sum = 0.0;
        for (const Complex& z : members) sum += z;
        cl.centroid = sum / static_cast<double>(members.size());
        for (const Complex& z : members)
            cl.spread = std::max(cl.spread, std::abs(z - cl.centroid));
        cl.members = static_cast<int>(members.size());
        out.push_back(cl);
    }
    return out;
}

double min_centroid_distance(const std::vector<Cluster>& cls, size_t i) {
    double d = std::numeric_limits<double>::infinity();
    for (size_t j = 0; j < cls.size(); ++j)
        if (j != i) d = std::min(d, std::abs(cls[i].centroid - cls[j].centroid));
    return d;
}

double winding_radius(const std::vector<Cluster>& cls, size_t i) {
    const Cluster& cl = cls[i];
    const double local = std::max(1.0, std::abs(cl.centroid));
    double radius = 1e-2 * local;
    const double dmin = min_centroid_distance(cls, i);
    if (std::isfinite(dmin)) radius = std::min(radius, 0.25 * dmin);
    return std::max(radius, 4.0 * cl.spread + 1e-13 * local);
}

// A winding circle is usable only where |p| clears the evaluation noise
// floor; around a multiple root that fails when the circle is too small.
bool circle_above_noise(const RealPoly& p, Complex center, double radius) {
    for (int k = 0; k < 16; ++k) {
        const double th = 2.0 * kPi * k / 16;
        const Complex z = center + radius * Complex(std::cos(th), std::sin(th));
        if (std::abs(p.eval(z)) <= 3e-14 * p.eval_scale(z)) return false;
    }
    return true;
}

void merge_pair(std::vector<Cluster>& cls, size_t i, size_t j) {
    Cluster& a = cls[i];
    Cluster& b = cls[j];
    const double wa = a.members, wb = b.members;
    Cluster c;
    c.centroid = (a.centroid * wa + b.centroid * wb) / (wa + wb);
    c.spread = std::max(std::abs(a.centroid - c.centroid) + a.spread,
                        std::abs(b.centroid - c.centroid) + b.spread);
    c.members = a.members + b.members;
    cls[std::min(i, j)] = c;
    cls.erase(cls.begin() + static_cast<std::ptrdiff_t>(std::max(i, j)));
}

size_t nearest_cluster(const std::vector<Cluster>& cls, size_t i) {
    size_t j = i;
    double best = std::numeric_limits<double>::infinity();
    for (size_t k = 0; k < cls.size(); ++k) {
        if (k == i) continue;
        const double dk = std::abs(cls[i].centroid - cls[k].centroid);
        if (dk < best) {
            best = dk;
            j = k;
        }
    }
    return j;
}

// Merge clusters whose multiplicity circles cannot be separated, either
// geometrically or because the polynomial is below the noise floor on the
// largest circle a neighbour allows (the signature of one multiple root
// split across clusters by eigenvalue perturbation).
void merge_crowded(std::vector<Cluster>& cls, const RealPoly& p) {
    bool merged = true;
    while (merged && cls.size() > 1) {
        merged = false;
        for (size_t i = 0; i < cls.size() && !merged; ++i) {
            const double dmin = min_centroid_distance(cls, i);
            if (4.0 * cls[i].spread > 0.25 * dmin) {
                merge_pair(cls, i, nearest_cluster(cls, i));
                merged = true;
                break;
            }
            const double local = std::max(1.0, std::abs(cls[i].centroid));
            const double radius = winding_radius(cls, i);
            if (radius < 1e-2 * local && !circle_above_noise(p, cls[i].centroid, radius)) {
                merge_pair(cls, i, nearest_cluster(cls, i));
                merged = true;
            }
        }
    }
}

} // namespace

int winding_log_derivative(const RealPoly& p, const Contour& c) {
    return winding_impl(p, nullptr, c, true);
}

int winding_log_derivative(const RealPoly& num, const RealPoly& den, const Contour& c) {
    return winding_impl(num, &den, c, true);
}

std::vector<RootCluster> roots_with_multiplicity(const RealPoly& p) {
    if (p.degree() < 1)
        throw Error(ErrorKind::invalid_argument,
                    "root extraction needs a polynomial of degree >= 1");
    const int deg = p.degree();

    Eigen::MatrixXd companion = Eigen::MatrixXd::Zero(deg, deg);
    const double lead = p.coeffs().back();
    for (int i = 1; i < deg; ++i) companion(i, i - 1) = 1.0;
    for (int i = 0; i < deg; ++i) companion(i, deg - 1) = -p.coeffs()[static_cast<size_t>(i)] / lead;
    Eigen::EigenSolver<Eigen::MatrixXd> solver(companion, false);
    if (solver.info() != Eigen::Success)
        throw Error(ErrorKind::internal, "companion eigenvalue computation failed");

    std::vector<Complex> roots(static_cast<size_t>(deg));
    for (int i = 0; i < deg; ++i) roots[static_cast<size_t>(i)] = solver.eigenvalues()(i);

    // Newton polish (multiple roots stay clustered; the winding pass below
    // restores their multiplicity).
    const RealPoly dp = p.derivative();
    for (Complex& z : roots) {
        const Complex z0 = z;
        for (int it = 0; it < 16; ++it) {
            const Complex f = p.eval(z);
            const Complex df = dp.eval(z);
            if (std::abs(df) < 1e-300) break;
            const Complex step = f / df;
            z -= step;
            if (std::abs(step) < 1e-15 * std::max(1.0, std::abs(z))) break;
        }
        if (!(std::abs(p.eval(z)) <= std::abs(p.eval(z0)))) z = z0;
    }

    double scale = 1.0;
    for (const Complex& z : roots) scale = std::max(scale, std::abs(z));
    const double merge_tol = 1e-6 * scale;

    auto clusters = cluster_points(roots, merge_tol);
    merge_crowded(clusters, p);

    // Conjugate pairing: a cluster equal to its own mirror is real.
    std::vector<int> mate(clusters.size(), -1);
    for (size_t i = 0; i < clusters.size(); ++i) {
        double best = std::numeric_limits<double>::infinity();
        size_t j_best = i;
        for (size_t j = 0; j < clusters.size(); ++j) {
            const double d = std::abs(clusters[j].centroid - std::conj(clusters[i].centroid));
            if (d < best) {
                best = d;
                j_best = j;
            }
        }
        mate[i] = static_cast<int>(j_best);
    }
    for (size_t i = 0; i < clusters.size(); ++i)
        if (mate[static_cast<size_t>(mate[i])] != static_cast<int>(i))
            throw Error(ErrorKind::internal, "conjugate pairing of root clusters failed");

    for (size_t i = 0; i < clusters.size(); ++i) {
        if (mate[i] == static_cast<int>(i))
            clusters[i].centroid = Complex(clusters[i].centroid.real(), 0.0);
        else if (clusters[i].centroid.imag() < 0.0)
            clusters[i].centroid = std::conj(clusters[static_cast<size_t>(mate[i])].centroid);
    }

    // Multiplicity of each cluster by winding on a small enclosing circle.
    std::vector<int> mult(clusters.size(), 0);
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (mate[i] != static_cast<int>(i) && clusters[i].centroid.imag() < 0.0)
            continue; // mirrored from the mate
        const double radius = winding_radius(clusters, i);
        int m;
        try {
            m = winding_impl(p, nullptr, Contour::circle(clusters[i].centroid, radius), false);
        } catch (const Error&) {
            m = clusters[i].members;
        }
        if (m <= 0) m = clusters[i].members;
        mult[i] = m;
        if (mate[i] != static_cast<int>(i)) mult[static_cast<size_t>(mate[i])] = m;
    }

    int total = 0;
    for (size_t i = 0; i < clusters.size(); ++i) total += mult[i];
    if (total != deg) {
        // quadrature multiplicities disagree with the degree; eigenvalue
        // counts are always consistent, fall back to them
        for (size_t i = 0; i < clusters.size(); ++i) mult[i] = clusters[i].members;
    }

    // Polish multiple roots by Newton on the (m-1)-th derivative, where the
    // root is simple and the iteration reaches machine precision.
    for (size_t i = 0; i < clusters.size(); ++i) {
        if (mult[i] < 2) continue;
        if (mate[i] != static_cast<int>(i) && clusters[i].centroid.imag() < 0.0) continue;
        RealPoly dm = p;
        for (int k = 1; k < mult[i]; ++k) dm = dm.derivative();
        if (dm.degree() < 1) continue;
        const RealPoly dmd = dm.derivative();
        Complex z = clusters[i].centroid;
        const double local = std::max(1.0, std::abs(z));
        bool ok = true;
        for (int it = 0; it < 12 && ok; ++it) {
            const Complex f = dm.eval(z);
            const Complex df = dmd.eval(z);
            if (std::abs(df) < 1e-300) {
                ok = false;
                break;
            }
            const Complex step = f / df;
            z -= step;
            if (std::abs(step) < 1e-15 * local) break;
        }
        // accept only a nearby improvement of the derivative root
        if (!ok || std::abs(z - clusters[i].centroid) >
                       std::max(16.0 * clusters[i].spread, 1e-2 * local) ||
            !(std::abs(dm.eval(z)) <= std::abs(dm.eval(clusters[i].centroid))))
            continue;
        if (mate[i] == static_cast<int>(i)) z = Complex(z.real(), 0.0);
        clusters[i].centroid = z;
        if (mate[i] != static_cast<int>(i))
            clusters[static_cast<size_t>(mate[i])].centroid = std::conj(z);
    }

    std::vector<RootCluster> out;
    out.reserve(clusters.size());
    for (size_t i = 0; i < clusters.size(); ++i)
        out.push_back({clusters[i].centroid, mult[i]});
    std::sort(out.begin(), out.end(), [](const RootCluster& a, const RootCluster& b) {
        if (a.root.real() != b.root.real()) return a.root.real() < b.root.real();
        return a.root.imag() < b.root.imag();
    });
    return out;
}

const char* zero_kind_name(ZeroKind kind) {
    switch (kind) {
        case ZeroKind::real: return "real";
        case ZeroKind::isolated: return "isolated";
        case ZeroKind::spherical: return "spherical";
        case ZeroKind::pole: return "pole";
    }
    return "unknown";
}

namespace {

double stem_eval_scale(const StemPolynomial& p, Complex w) {
    const double r = std::abs(w);
    double acc = 0.0;
    for (auto it = p.coeffs().rbegin(); it != p.coeffs().rend(); ++it)
        acc = acc * r + it->norm();
    return acc;
}

struct SpherePoint {
    Complex w; // Im >= 0 representative
    int z_ord = 0;
    int p_ord = 0;
};

struct Classified {
    std::vector<ZeroRecord> records;
    RealPoly sym;  // symmetrization of the (reduced) numerator
    RealPoly den;  // reduced denominator
};

Classified classify_all(const StemRational& input, double tol = 1e-8) {
    if (input.num.is_zero())
        throw Error(ErrorKind::invalid_argument, "zero analysis of the identically-zero function");

    const StemRational h =
        input.den.degree() >= 1 ? reduce_common_factors(input, tol) : input;
    Classified out;
    out.sym = symmetrize(h.num);
    out.den = h.den;

    std::vector<SpherePoint> pts;
    if (out.sym.degree() >= 1)
        for (const auto& cl : roots_with_multiplicity(out.sym)) {
            if (cl.root.imag() < 0.0) continue;
            pts.push_back({cl.root, cl.multiplicity, 0});
        }
    if (out.den.degree() >= 1)
        for (const auto& cl : roots_with_multiplicity(out.den)) {
            if (cl.root.imag() < 0.0) continue;
            const double tol = 1e-6 * std::max(1.0, std::abs(cl.root));
            bool found = false;
            for (auto& pt : pts)
                if (std::abs(pt.w - cl.root) <= tol) {
                    pt.p_ord = 2 * cl.multiplicity;
                    found = true;
                    break;
                }
            if (!found) pts.push_back({cl.root, 0, 2 * cl.multiplicity});
        }

    for (const auto& pt : pts) {
        const int net = pt.z_ord - pt.p_ord;
        if (net == 0) continue;
        const bool real_sphere = pt.w.imag() == 0.0;
        ZeroRecord rec;
        rec.stem_point = pt.w;
        if (net < 0) {
            rec.kind = ZeroKind::pole;
            rec.order = real_sphere ? (-net) / 2 : -net;
            if (real_sphere && (-net) % 2 != 0)
                throw Error(ErrorKind::internal, "odd net order at a real pole");
        } else if (real_sphere) {
            if (net % 2 != 0)
                throw Error(ErrorKind::internal, "odd symmetrization order at a real zero");
            rec.kind = ZeroKind::real;
            rec.order = net / 2;
        } else {
            const ComplexQuad value = h.num.eval_stem(pt.w);
            const double scale = std::max(stem_eval_scale(h.num, pt.w), 1e-300);
            if (pt.p_ord == 0 && value.norm() <= 1e-8 * scale) {
                if (net % 2 != 0)
                    throw Error(ErrorKind::internal, "odd symmetrization order at a spherical zero");
                rec.kind = ZeroKind::spherical;
                rec.order = net / 2;
            } else {
                rec.kind = ZeroKind::isolated;
                rec.order = net;
                rec.unit = unit_from_zero(value, 1e-6);
            }
        }
        out.records.push_back(rec);
    }

    std::sort(out.records.begin(), out.records.end(),
              [](const ZeroRecord& a, const ZeroRecord& b) {
                  const double ra = std::abs(a.stem_point), rb = std::abs(b.stem_point);
                  if (ra != rb) return ra < rb;
                  if (a.stem_point.real() != b.stem_point.real())
                      return a.stem_point.real() < b.stem_point.real();
                  return a.stem_point.imag() < b.stem_point.imag();
              });
    return out;
}

std::vector<ZeroRecord> filter_region(std::vector<ZeroRecord> records, const Contour& region) {
    std::vector<ZeroRecord> out;
    for (auto& rec : records)
        if (region.contains(rec.stem_point) || region.contains(std::conj(rec.stem_point)))
            out.push_back(std::move(rec));
    return out;
}

CountReport count_impl(const StemRational& h, const Contour& c, double tol) {
    const Classified cls = classify_all(h, tol);

    const double guard = 1e-6 * std::max(1.0, c.scale());
    for (const auto& rec : cls.records) {
        const double d = std::min(c.boundary_distance(rec.stem_point),
                                  c.boundary_distance(std::conj(rec.stem_point)));
        if (d < guard)
            throw Error(ErrorKind::boundary_zero,
                        "zero or pole too close to the contour for reliable counting");
    }

    CountReport report;
    if (cls.den.degree() >= 1) {
        const RealPoly den2 = cls.den * cls.den;
        report.winding = winding_log_derivative(cls.sym, den2, c);
    } else {
        report.winding = cls.sym.degree() >= 1 ? winding_log_derivative(cls.sym, c) : 0;
    }

    for (const auto& rec : cls.records) {
        const bool in0 = c.contains(rec.stem_point);
        const bool in1 = c.contains(std::conj(rec.stem_point));
        if (!in0 && !in1) continue;
        const bool both = in0 && in1;
        switch (rec.kind) {
            case ZeroKind::real:
                report.r += rec.order;
                break;
            case ZeroKind::isolated:
                (both ? report.k0 : report.k1) += rec.order;
                break;
            case ZeroKind::spherical:
                (both ? report.m0 : report.m1) += rec.order;
                break;
            case ZeroKind::pole:
                if (rec.stem_point.imag() == 0.0)
                    report.p0 += rec.order;
                else
                    (both ? report.p0 : report.p1) += rec.order;
                break;
        }
    }
    return report;
}

} // namespace

std::vector<ZeroRecord> find_zeros(const StemPolynomial& f, const Contour& region) {
    return filter_region(classify_all(StemRational::from_poly(f)).records, region);
}

std::vector<ZeroRecord> find_zeros(const StemRational& f, const Contour& region, double tol) {
    return filter_region(classify_all(f, tol).records, region);
}

int weighted_zero_count(const StemPolynomial& f, const Contour& c) {
    return weighted_zero_count(StemRational::from_poly(f), c);
}

int weighted_zero_count(const StemRational& f, const Contour& c) {
    if (!c.is_symmetric())
        throw Error(ErrorKind::invalid_argument,
                    "weighted zero count needs a contour symmetric about the real axis");
    if (f.num.is_zero())
        throw Error(ErrorKind::invalid_argument, "weighted zero count of the zero function");
    const RealPoly sym = symmetrize(f.num);
    int w;
    if (f.den.degree() >= 1)
        w = winding_log_derivative(sym, f.den * f.den, c);
    else
        w = sym.degree() >= 1 ? winding_log_derivative(sym, c) : 0;
    if (w % 2 != 0)
        throw Error(ErrorKind::internal, "odd winding over a symmetric contour");
    return w / 2;
}

CountReport count_in_region(const StemPolynomial& f, const Contour& c) {
    return count_impl(StemRational::from_poly(f), c, 1e-8);
}

CountReport count_in_region(const StemRational& f, const Contour& c, double tol) {
    return count_impl(f, c, tol);
}

namespace {

int multiplicity_at(const RealPoly& p, Complex w) {
    if (p.degree() < 1) return 0;
    const double tol = 1e-6 * std::max(1.0, std::abs(w));
    for (const auto& cl : roots_with_multiplicity(p))
        if (std::abs(cl.root - w) <= tol) return cl.multiplicity;
    return 0;
}

} // namespace

int sphere_order(const StemPolynomial& f, const Quaternion& q) {
    return sphere_order(StemRational::from_poly(f), q);
}

int sphere_order(const StemRational& f, const Quaternion& q) {
    if (f.num.is_zero())
        throw Error(ErrorKind::invalid_argument, "sphere order of the zero function");
    const auto dec = slice_decompose(q);
    const Complex w(dec.x, dec.y);
    const int z_ord = multiplicity_at(symmetrize(f.num), w);
    const int p_ord = f.den.degree() >= 1 ? 2 * multiplicity_at(f.den, w) : 0;
    const int net = z_ord - p_ord;
    return dec.y == 0.0 ? net / 2 : net;
}

RoucheResult rouche_same_count(const StemPolynomial& f, const StemPolynomial& g,
                               const Contour& c, int samples) {
    if (!c.is_symmetric())
        throw Error(ErrorKind::invalid_argument, "Rouche test needs a symmetric contour");
    if (samples < 4)
        throw Error(ErrorKind::invalid_argument, "Rouche test needs at least 4 samples");

    const RealPoly sf = symmetrize(f);
    const RealPoly sg = symmetrize(g);

    std::vector<Complex> pts;
    pts.reserve(static_cast<size_t>(samples));
    if (c.is_circle()) {
        const auto& circ = c.as_circle();
        for (int k = 0; k < samples; ++k) {
            const double th = 2.0 * kPi * k / samples;
            pts.push_back(circ.center + circ.radius * Complex(std::cos(th), std::sin(th)));
        }
    } else {
        const auto& r = c.as_rectangle();
        const Complex corners[4] = {r.corner_min,
                                    Complex(r.corner_max.real(), r.corner_min.imag()),
                                    r.corner_max,
                                    Complex(r.corner_min.real(), r.corner_max.imag())};
        double lengths[4], total = 0.0;
        for (int e = 0; e < 4; ++e) {
            lengths[e] = std::abs(corners[(e + 1) % 4] - corners[e]);
            total += lengths[e];
        }
        for (int e = 0; e < 4; ++e) {
            const int ne = std::max(1, static_cast<int>(std::lround(samples * lengths[e] / total)));
            for (int k = 0; k < ne; ++k) {
                const double t = (k + 0.5) / ne;
                pts.push_back(corners[e] + t * (corners[(e + 1) % 4] - corners[e]));
            }
        }
    }

    RoucheResult result;
    double min_margin = std::numeric_limits<double>::infinity();
    Complex min_point = pts.front();
    for (const Complex& z : pts) {
        const Complex a = sf.eval(z);
        const Complex b = sg.eval(z);
        const double margin = (1.0 - 1e-12) * (std::abs(a) + std::abs(b)) - std::abs(a - b);
        if (margin < min_margin) {
            min_margin = margin;
            min_point = z;
        }
        if (margin <= 0.0) {
            result.witness = z;
            return result; // inconclusive: inequality violated at a sample
        }
    }

    try {
        result.count_f = weighted_zero_count(f, c);
        result.count_g = weighted_zero_count(g, c);
    } catch (const Error&) {
        result.witness = min_point;
        return result;
    }
    if (*result.count_f == *result.count_g) {
        result.verified = true;
    } else {
        // sampled inequality missed a violation between nodes
        result.witness = min_point;
    }
    return result;
}

JensenResult jensen_check(const StemPolynomial& f, double radius, int angular_nodes) {
    if (!(radius > 0.0))
        throw Error(ErrorKind::invalid_argument, "Jensen check needs radius > 0");
    if (angular_nodes < 8)
        throw Error(ErrorKind::invalid_argument, "Jensen check needs at least 8 angular nodes");

    const Classified cls = classify_all(StemRational::from_poly(f));
    const double s0 = std::abs(cls.sym.eval(Complex(0.0, 0.0)));
    if (s0 <= 1e-13 * std::max(cls.sym.eval_scale(0.0), 1e-300))
        throw Error(ErrorKind::undefined_at_origin, "symmetrization vanishes at the origin");

    JensenResult out;
    for (const auto& rec : cls.records) {
        const double rho = std::abs(rec.stem_point);
        if (std::abs(rho - radius) < 1e-9 * std::max(1.0, radius))
            throw Error(ErrorKind::boundary_zero, "zero on the Jensen circle");
        if (rho >= radius) continue;
        const double weight =
            rec.kind == ZeroKind::spherical ? 2.0 * rec.order : static_cast<double>(rec.order);
        out.lhs += weight * std::log(radius / rho);
    }

    double sum = 0.0;
    for (int k = 0; k < angular_nodes; ++k) {
        const double th = 2.0 * kPi * k / angular_nodes;
        const Complex z = radius * Complex(std::cos(th), std::sin(th));
        sum += std::log(std::abs(cls.sym.eval(z)));
    }
    out.rhs = sum / (2.0 * angular_nodes) - 0.5 * std::log(s0);
    return out;
}

HurwitzReport hurwitz_probe(const std::vector<StemPolynomial>& fs, const StemPolynomial& limit,
                            const Contour& region) {
    HurwitzReport report;
    report.counts.reserve(fs.size());
    for (const auto& fn : fs) report.counts.push_back(weighted_zero_count(fn, region));
    report.limit_count = weighted_zero_count(limit, region);
    report.eventually_matches =
        !report.counts.empty() && report.counts.back() == report.limit_count;
    return report;
}

namespace {

int root_order_probe(RealPoly p, Complex w, bool real_root, double tol) {
    int ord = 0;
    while (p.degree() >= (real_root ? 1 : 2)) {
        const double scale = std::max(p.eval_scale(w), 1e-300);
        if (std::abs(p.eval(w)) > tol * scale) break;
        p = real_root ? p.deflate_linear(w.real()) : p.deflate_quadratic(w);
        ++ord;
    }
    return ord;
}

} // namespace

StemRational reduce_common_factors(const StemRational& h, double tol) {
    if (h.den.degree() < 1 || h.num.is_zero()) return h;

    auto comps = h.num.components();
    RealPoly den = h.den;

    for (const auto& cl : roots_with_multiplicity(h.den)) {
        if (cl.root.imag() < 0.0) continue;
        const bool real_root = cl.root.imag() == 0.0;
        int shared = cl.multiplicity;
        for (const auto& cm : comps) {
            if (cm.is_zero()) continue;
            shared = std::min(shared, root_order_probe(cm, cl.root, real_root, tol));
            if (shared == 0) break;
        }
        for (int k = 0; k < shared; ++k) {
            den = real_root ? den.deflate_linear(cl.root.real()) : den.deflate_quadratic(cl.root);
            for (auto& cm : comps) {
                if (cm.is_zero()) continue;
                cm = real_root ? cm.deflate_linear(cl.root.real()) : cm.deflate_quadratic(cl.root);
            }
        }
    }
    return StemRational(stem_from_components(comps), std::move(den));
}

} // namespace slicereg
