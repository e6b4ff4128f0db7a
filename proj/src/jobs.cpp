#include "slicereg/jobs.hpp"

#include <json.hpp>
#include <sstream>

#include "slicereg/clifford3.hpp"
#include "slicereg/integral_kernels.hpp"
#include "slicereg/norms.hpp"
#include "slicereg/zero_analysis.hpp"

namespace slicereg {

namespace {

using json = nlohmann::ordered_json;

constexpr int kSchemaVersion = 1;

[[noreturn]] void bad(const std::string& detail) { throw Error(ErrorKind::bad_input, detail); }

const json& field(const json& j, const char* name) {
    if (!j.is_object() || !j.contains(name)) bad(std::string("missing field '") + name + "'");
    return j.at(name);
}

double number(const json& j, const char* what) {
    if (!j.is_number()) bad(std::string(what) + " must be a number");
    return j.get<double>();
}

int integer(const json& j, const char* what) {
    if (!j.is_number_integer()) bad(std::string(what) + " must be an integer");
    return j.get<int>();
}

double opt_number(const json& j, const char* name, double fallback) {
    if (!j.is_object() || !j.contains(name)) return fallback;
    return number(j.at(name), name);
}

int opt_integer(const json& j, const char* name, int fallback) {
    if (!j.is_object() || !j.contains(name)) return fallback;
    return integer(j.at(name), name);
}

Complex parse_complex(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 2) bad(std::string(what) + " must be [re, im]");
    return {number(j.at(0), what), number(j.at(1), what)};
}

Quaternion parse_quaternion(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 4) bad(std::string(what) + " must be [w, x, y, z]");
    return {number(j.at(0), what), number(j.at(1), what), number(j.at(2), what),
            number(j.at(3), what)};
}

ImaginaryUnit parse_unit(const json& j) {
    if (!j.is_array() || j.size() != 3) bad("unit must be [a, b, c]");
    try {
        return ImaginaryUnit(number(j.at(0), "unit"), number(j.at(1), "unit"),
                             number(j.at(2), "unit"));
    } catch (const Error& e) {
        bad(e.detail());
    }
}

StemPolynomial parse_poly(const json& j, const char* what) {
    const json& coeffs = field(j, "coeffs");
    if (!coeffs.is_array()) bad(std::string(what) + ".coeffs must be an array");
    std::vector<Quaternion> c;
    c.reserve(coeffs.size());
    for (const auto& item : coeffs) c.push_back(parse_quaternion(item, "coefficient"));
    return StemPolynomial(std::move(c));
}

RealPoly parse_real_poly(const json& j, const char* what) {
    if (!j.is_array()) bad(std::string(what) + " must be an array of reals");
    std::vector<double> c;
    c.reserve(j.size());
    for (const auto& item : j) c.push_back(number(item, what));
    return RealPoly(std::move(c));
}

StemRational parse_function(const json& j) {
    if (!j.is_object()) bad("f must be an object");
    if (j.contains("num")) {
        StemPolynomial num = parse_poly(field(j, "num"), "num");
        RealPoly den = parse_real_poly(field(j, "den"), "den");
        if (den.is_zero()) bad("den must not be the zero polynomial");
        return StemRational(std::move(num), std::move(den));
    }
    return StemRational::from_poly(parse_poly(j, "f"));
}

Contour parse_contour(const json& j) {
    const std::string kind = field(j, "kind").get<std::string>();
    if (kind == "circle")
        return Contour::circle(parse_complex(field(j, "center"), "center"),
                               number(field(j, "radius"), "radius"));
    if (kind == "rectangle")
        return Contour::rectangle(parse_complex(field(j, "min"), "min"),
                                  parse_complex(field(j, "max"), "max"));
    bad("contour.kind must be 'circle' or 'rectangle'");
}

json dump_quaternion(const Quaternion& q) { return json::array({q.w, q.x, q.y, q.z}); }

json dump_complex(Complex z) { return json::array({z.real(), z.imag()}); }

json dump_records(const std::vector<ZeroRecord>& records) {
    json arr = json::array();
    for (const auto& rec : records) {
        json r;
        r["kind"] = zero_kind_name(rec.kind);
        r["stem"] = dump_complex(rec.stem_point);
        r["unit"] = rec.unit ? json::array({rec.unit->a(), rec.unit->b(), rec.unit->c()})
                             : json(nullptr);
        r["order"] = rec.order;
        arr.push_back(std::move(r));
    }
    return arr;
}

json cmd_eval(json& payload) {
    const StemRational f = parse_function(field(payload, "f"));
    json result;
    if (payload.contains("q")) {
        const Quaternion q = parse_quaternion(payload.at("q"), "q");
        result["value"] = dump_quaternion(f.eval_slice(q));
    } else if (payload.contains("z")) {
        const Complex z = parse_complex(payload.at("z"), "z");
        const ComplexQuad v = f.eval_stem(z);
        result["stem_value"] =
            json::array({dump_complex(v[0]), dump_complex(v[1]), dump_complex(v[2]),
                         dump_complex(v[3])});
    } else {
        bad("eval needs 'q' (quaternion) or 'z' (stem point)");
    }
    return result;
}

json cmd_star(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const StemPolynomial g = parse_poly(field(payload, "g"), "g");
    const StemPolynomial h = star_product(f, g);
    json coeffs = json::array();
    for (const auto& a : h.coeffs()) coeffs.push_back(dump_quaternion(a));
    return json{{"coeffs", std::move(coeffs)}};
}

json cmd_symmetrize(json& payload) {
    const RealPoly s = symmetrize(parse_poly(field(payload, "f"), "f"));
    return json{{"coeffs", s.coeffs()}};
}

json cmd_zeros(json& payload) {
    const StemRational f = parse_function(field(payload, "f"));
    const Contour contour = parse_contour(field(payload, "contour"));
    const double tol = opt_number(payload, "tol", 1e-8);
    payload["tol"] = tol;
    return json{{"zeros", dump_records(find_zeros(f, contour, tol))}};
}

json cmd_count(json& payload) {
    const StemRational f = parse_function(field(payload, "f"));
    const Contour contour = parse_contour(field(payload, "contour"));
    const double tol = opt_number(payload, "tol", 1e-8);
    payload["tol"] = tol;
    const CountReport rep = count_in_region(f, contour, tol);
    json tallies;
    tallies["k0"] = rep.k0;
    tallies["k1"] = rep.k1;
    tallies["m0"] = rep.m0;
    tallies["m1"] = rep.m1;
    tallies["r"] = rep.r;
    tallies["p0"] = rep.p0;
    tallies["p1"] = rep.p1;
    return json{{"tallies", std::move(tallies)},
                {"winding", rep.winding},
                {"consistent", rep.consistent()}};
}

json cmd_rouche(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const StemPolynomial g = parse_poly(field(payload, "g"), "g");
    const Contour contour = parse_contour(field(payload, "contour"));
    const int samples = opt_integer(payload, "samples", 256);
    payload["samples"] = samples;
    const RoucheResult res = rouche_same_count(f, g, contour, samples);
    json out;
    out["verified"] = res.verified;
    out["count_f"] = res.count_f ? json(*res.count_f) : json(nullptr);
    out["count_g"] = res.count_g ? json(*res.count_g) : json(nullptr);
    out["witness"] = res.witness ? dump_complex(*res.witness) : json(nullptr);
    return out;
}

json cmd_jensen(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const double radius = number(field(payload, "radius"), "radius");
    const int nodes = opt_integer(payload, "nodes", 4096);
    payload["nodes"] = nodes;
    const JensenResult res = jensen_check(f, radius, nodes);
    return json{{"lhs", res.lhs}, {"rhs", res.rhs}};
}

json cmd_cauchy(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const ImaginaryUnit unit = parse_unit(field(payload, "unit"));
    const double center = opt_number(payload, "center", 0.0);
    const double radius = number(field(payload, "radius"), "radius");
    const int nodes = opt_integer(payload, "nodes", 512);
    const Quaternion q = parse_quaternion(field(payload, "q"), "q");
    payload["center"] = center;
    payload["nodes"] = nodes;
    const SliceCircle circle(unit, center, radius, nodes);
    const Quaternion value = cauchy_eval(f, circle, q);
    const Quaternion direct = f.eval_slice(q);
    return json{{"value", dump_quaternion(value)},
                {"direct", dump_quaternion(direct)},
                {"abs_error", (value - direct).norm()}};
}

json cmd_bergman(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const ImaginaryUnit unit = parse_unit(field(payload, "unit"));
    const Quaternion q = parse_quaternion(field(payload, "q"), "q");
    const int radial = opt_integer(payload, "radial_nodes", 64);
    const int angular = opt_integer(payload, "angular_nodes", 512);
    payload["radial_nodes"] = radial;
    payload["angular_nodes"] = angular;
    const Quaternion value = bergman_reproduce(f, unit, q, radial, angular);
    const Quaternion direct = f.eval_slice(q);
    return json{{"value", dump_quaternion(value)},
                {"direct", dump_quaternion(direct)},
                {"abs_error", (value - direct).norm()}};
}

json cmd_norms(json& payload) {
    const StemPolynomial f = parse_poly(field(payload, "f"), "f");
    const double x = number(field(payload, "x"), "x");
    const double y = number(field(payload, "y"), "y");
    const double radius = opt_number(payload, "radius", 1.0);
    const int nodes = opt_integer(payload, "nodes", 64);
    const int grid = opt_integer(payload, "grid", 4096);
    const int mc_samples = opt_integer(payload, "mc_samples", 0);
    const auto seed = static_cast<std::uint64_t>(opt_integer(payload, "seed", 12345));
    payload["radius"] = radius;
    payload["nodes"] = nodes;
    payload["grid"] = grid;
    payload["mc_samples"] = mc_samples;
    payload["seed"] = seed;

    json out;
    out["sphere_l2"] = sphere_l2(f, x, y);
    if (mc_samples > 0) {
        const MonteCarloEstimate mc = sphere_l2_mc(f, x, y, mc_samples, seed);
        out["sphere_l2_mc"] = json{{"value", mc.value}, {"std_error", mc.std_error}};
    } else {
        out["sphere_l2_mc"] = nullptr;
    }
    out["slice_l2"] = slice_l2(f, ImaginaryUnit::i(), radius, nodes);
    out["bulk_l2"] = bulk_l2(f, radius, nodes);
    const NormSandwich sw = norm_sandwich(f, x, y, grid);
    out["sandwich"] = json{{"min_sample", sw.min_sample},
                           {"stem_norm", sw.stem_norm},
                           {"max_closed", sw.max_closed}};
    if (payload.contains("growth_radii")) {
        std::vector<double> radii;
        for (const auto& r : payload.at("growth_radii")) radii.push_back(number(r, "radius"));
        out["growth_slope"] = degree_growth_estimate(f, radii);
    }
    return out;
}

Clifford3 parse_clifford(const json& j, const char* what) {
    if (!j.is_array() || j.size() != 8) bad(std::string(what) + " must be an array of 8 reals");
    Clifford3 a;
    for (size_t i = 0; i < 8; ++i) a.c[i] = number(j.at(i), what);
    return a;
}

json dump_clifford(const Clifford3& a) {
    json arr = json::array();
    for (double v : a.c) arr.push_back(v);
    return arr;
}

json cmd_clifford(json& payload) {
    const std::string op = field(payload, "op").get<std::string>();
    if (op == "mul") {
        const Clifford3 a = parse_clifford(field(payload, "a"), "a");
        const Clifford3 b = parse_clifford(field(payload, "b"), "b");
        return json{{"value", dump_clifford(cl3_mul(a, b))}};
    }
    if (op == "in_s") {
        const Clifford3 u = parse_clifford(field(payload, "u"), "u");
        const double tol = opt_number(payload, "tol", 1e-9);
        payload["tol"] = tol;
        return json{{"value", in_S3(u, tol)}};
    }
    if (op == "count_bound") {
        const json& fj = field(payload, "f");
        if (!fj.is_array()) bad("clifford f must be an array of coefficient arrays");
        std::vector<Clifford3> coeffs;
        for (const auto& item : fj) coeffs.push_back(parse_clifford(item, "coefficient"));
        const CliffordStemPolynomial f(std::move(coeffs));
        const Contour contour = parse_contour(field(payload, "contour"));
        const int winding = count_upper_bound(f, contour);
        return json{{"winding", winding}, {"weighted_upper_bound", winding / 2}};
    }
    bad("clifford.op must be one of 'mul', 'in_s', 'count_bound'");
}

void flatten_csv(const json& j, const std::string& prefix, std::ostringstream& out) {
    if (j.is_object()) {
        for (const auto& [key, value] : j.items())
            flatten_csv(value, prefix.empty() ? key : prefix + "." + key, out);
    } else if (j.is_array()) {
        size_t i = 0;
        for (const auto& value : j) {
            flatten_csv(value, prefix + "[" + std::to_string(i) + "]", out);
            ++i;
        }
    } else {
        out << prefix << "," << j.dump() << "\n";
    }
}

} // namespace

JobResult run_job(const std::string& request_json) {
    json request;
    std::string command;
    std::string format = "json";
    try {
        try {
            request = json::parse(request_json);
        } catch (const nlohmann::json::exception& e) {
            bad(std::string("invalid JSON: ") + e.what());
        }
        if (!request.is_object()) bad("request must be a JSON object");
        command = field(request, "command").get<std::string>();
        if (request.contains("format")) {
            format = request.at("format").get<std::string>();
            if (format != "json" && format != "csv") bad("format must be 'json' or 'csv'");
        }
        json payload = request.contains("payload") ? request.at("payload") : json::object();

        json result;
        if (command == "eval") result = cmd_eval(payload);
        else if (command == "star") result = cmd_star(payload);
        else if (command == "symmetrize") result = cmd_symmetrize(payload);
        else if (command == "zeros") result = cmd_zeros(payload);
        else if (command == "count") result = cmd_count(payload);
        else if (command == "rouche") result = cmd_rouche(payload);
        else if (command == "jensen") result = cmd_jensen(payload);
        else if (command == "cauchy") result = cmd_cauchy(payload);
        else if (command == "bergman") result = cmd_bergman(payload);
        else if (command == "norms") result = cmd_norms(payload);
        else if (command == "clifford") result = cmd_clifford(payload);
        else bad("unknown command '" + command + "'");

        json report;
        report["schema_version"] = kSchemaVersion;
        report["command"] = command;
        report["params"] = payload;
        report["result"] = std::move(result);

        JobResult out;
        if (format == "csv") {
            std::ostringstream csv;
            csv << "key,value\n";
            flatten_csv(report["result"], "", csv);
            out.report = csv.str();
        } else {
            out.report = report.dump(2) + "\n";
        }
        return out;
    } catch (const Error& e) {
        json report;
        report["schema_version"] = kSchemaVersion;
        report["error"] = json{{"kind", error_kind_name(e.kind())}, {"detail", e.detail()}};
        JobResult out;
        out.exit_code = e.kind() == ErrorKind::bad_input ? 1 : 2;
        out.report = report.dump(2) + "\n";
        return out;
    } catch (const nlohmann::json::exception& e) {
        json report;
        report["schema_version"] = kSchemaVersion;
        report["error"] = json{{"kind", "bad-input"}, {"detail", e.what()}};
        return {1, report.dump(2) + "\n"};
    } catch (const std::exception& e) {
        json report;
        report["schema_version"] = kSchemaVersion;
        report["error"] = json{{"kind", "internal"}, {"detail", e.what()}};
        return {2, report.dump(2) + "\n"};
    }
}

} // namespace slicereg
