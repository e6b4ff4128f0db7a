#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <json.hpp>

#include "slicereg/jobs.hpp"

using slicereg::JobResult;
using slicereg::run_job;
using json = nlohmann::json;

namespace {

json run_ok(const std::string& request) {
    const JobResult res = run_job(request);
    REQUIRE(res.exit_code == 0);
    return json::parse(res.report);
}

// f = q^2 + 1
const char* kSphere = R"({"coeffs": [[1,0,0,0],[0,0,0,0],[1,0,0,0]]})";
// f = (q-i) star (q-j) = q^2 - q(i+j) + k
const char* kIsolated = R"({"coeffs": [[0,0,0,1],[0,-1,-1,0],[1,0,0,0]]})";

} // namespace

TEST_CASE("eval command") {
    const json rep = run_ok(std::string(R"({"command":"eval","payload":{"f":)") + kSphere +
                            R"(,"q":[0,1,0,0]}})");
    CHECK(rep["schema_version"] == 1);
    CHECK(rep["command"] == "eval");
    const auto v = rep["result"]["value"];
    for (int m = 0; m < 4; ++m) CHECK(std::abs(v[m].get<double>()) <= 1e-14);

    // stem evaluation at z = iota
    const json stem = run_ok(std::string(R"({"command":"eval","payload":{"f":)") + kIsolated +
                             R"(,"z":[0,1]}})");
    const auto sv = stem["result"]["stem_value"];
    CHECK(sv[0][0].get<double>() == doctest::Approx(-1.0));
    CHECK(sv[1][1].get<double>() == doctest::Approx(-1.0));
    CHECK(sv[3][0].get<double>() == doctest::Approx(1.0));

    // rational input at q = 2
    const json rational = run_ok(
        R"({"command":"eval","payload":{"f":{"num":{"coeffs":[[1,0,0,0]]},"den":[1,0,1]},"q":[2,0,0,0]}})");
    CHECK(rational["result"]["value"][0].get<double>() == doctest::Approx(0.2));
}

TEST_CASE("zeros command reproduces the classification fixture") {
    const json rep = run_ok(std::string(R"({"command":"zeros","payload":{"f":)") + kIsolated +
                            R"(,"contour":{"kind":"circle","center":[0,0],"radius":2}}})");
    const auto zeros = rep["result"]["zeros"];
    REQUIRE(zeros.size() == 1);
    CHECK(zeros[0]["kind"] == "isolated");
    CHECK(zeros[0]["order"] == 2);
    CHECK(zeros[0]["stem"][0].get<double>() == doctest::Approx(0.0));
    CHECK(zeros[0]["stem"][1].get<double>() == doctest::Approx(1.0));
    CHECK(zeros[0]["unit"][0].get<double>() == doctest::Approx(1.0).epsilon(1e-9));
    CHECK(std::abs(zeros[0]["unit"][1].get<double>()) <= 1e-9);
}

TEST_CASE("count command over the half rectangle") {
    const json rep = run_ok(std::string(R"({"command":"count","payload":{"f":)") + kSphere +
                            R"(,"contour":{"kind":"rectangle","min":[-2,-0.5],"max":[2,2]}}})");
    CHECK(rep["result"]["tallies"]["m1"] == 1);
    CHECK(rep["result"]["tallies"]["m0"] == 0);
    CHECK(rep["result"]["winding"] == 2);
    CHECK(rep["result"]["consistent"] == true);
}

TEST_CASE("star and symmetrize commands") {
    const json star = run_ok(
        R"({"command":"star","payload":{"f":{"coeffs":[[0,-1,0,0],[1,0,0,0]]},"g":{"coeffs":[[0,0,-1,0],[1,0,0,0]]}}})");
    const auto coeffs = star["result"]["coeffs"];
    REQUIRE(coeffs.size() == 3);
    CHECK(coeffs[0][3].get<double>() == doctest::Approx(1.0)); // k
    CHECK(coeffs[1][1].get<double>() == doctest::Approx(-1.0));
    CHECK(coeffs[1][2].get<double>() == doctest::Approx(-1.0));

    const json sym = run_ok(std::string(R"({"command":"symmetrize","payload":{"f":)") + kSphere +
                            "}}");
    CHECK(sym["result"]["coeffs"] == json::parse("[1.0,0.0,2.0,0.0,1.0]"));
}

TEST_CASE("rouche, jensen, cauchy, bergman, norms commands") {
    const json rouche = run_ok(std::string(R"({"command":"rouche","payload":{"f":)") + kSphere +
                               R"(,"g":{"coeffs":[[1.1,0,0,0],[0,0,0,0],[1,0,0,0]]},)" +
                               R"("contour":{"kind":"circle","center":[0,0],"radius":2}}})");
    CHECK(rouche["result"]["verified"] == true);
    CHECK(rouche["result"]["count_f"] == 2);

    const json jensen = run_ok(std::string(R"({"command":"jensen","payload":{"f":)") + kSphere +
                               R"(,"radius":2}})");
    CHECK(jensen["result"]["lhs"].get<double>() ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-10));
    CHECK(jensen["result"]["rhs"].get<double>() ==
          doctest::Approx(2.0 * std::log(2.0)).epsilon(1e-7));

    const json cauchy = run_ok(std::string(R"({"command":"cauchy","payload":{"f":)") + kSphere +
                               R"(,"unit":[0,1,0],"radius":2,"q":[0.3,0.2,0,0.1]}})");
    CHECK(cauchy["result"]["abs_error"].get<double>() <= 1e-9);

    const json bergman = run_ok(std::string(R"({"command":"bergman","payload":{"f":)") + kSphere +
                                R"(,"unit":[0,0,1],"q":[0.3,0,0.2,0],)" +
                                R"("radial_nodes":32,"angular_nodes":128}})");
    CHECK(bergman["result"]["abs_error"].get<double>() <= 1e-8);

    const json norms = run_ok(std::string(R"({"command":"norms","payload":{"f":)") + kSphere +
                              R"(,"x":0.3,"y":0.7,"mc_samples":20000,"seed":5}})");
    CHECK(norms["result"]["sphere_l2"].get<double>() > 0.0);
    CHECK(norms["result"]["sandwich"]["min_sample"].get<double>() <=
          norms["result"]["sandwich"]["max_closed"].get<double>());
}

TEST_CASE("clifford command") {
    const json mul = run_ok(
        R"({"command":"clifford","payload":{"op":"mul","a":[0,1,0,0,0,0,0,0],"b":[0,0,1,0,0,0,0,0]}})");
    CHECK(mul["result"]["value"][4].get<double>() == doctest::Approx(1.0));

    const json ins = run_ok(
        R"({"command":"clifford","payload":{"op":"in_s","u":[0,1,0,0,0,0,0,0]}})");
    CHECK(ins["result"]["value"] == true);

    const json bound = run_ok(
        R"({"command":"clifford","payload":{"op":"count_bound","f":[[1,0,0,0,0,0,0,0],[0,0,0,0,0,0,0,0],[1,0,0,0,0,0,0,0]],"contour":{"kind":"circle","center":[0,0],"radius":2}}})");
    CHECK(bound["result"]["winding"] == 4);
    CHECK(bound["result"]["weighted_upper_bound"] == 2);
}

TEST_CASE("reports are deterministic and re-parse") {
    const std::string request = std::string(R"({"command":"zeros","payload":{"f":)") + kIsolated +
                                R"(,"contour":{"kind":"circle","center":[0,0],"radius":2}}})";
    const JobResult a = run_job(request);
    const JobResult b = run_job(request);
    CHECK(a.exit_code == 0);
    CHECK(a.report == b.report);
    CHECK_NOTHROW(json::parse(a.report));
}

TEST_CASE("csv format flattens the result") {
    const std::string request = std::string(R"({"command":"count","payload":{"f":)") + kSphere +
                                R"(,"contour":{"kind":"circle","center":[0,0],"radius":2}},)" +
                                R"("format":"csv"})";
    const JobResult res = run_job(request);
    CHECK(res.exit_code == 0);
    CHECK(res.report.rfind("key,value\n", 0) == 0);
    CHECK(res.report.find("tallies.m0,1") != std::string::npos);
    CHECK(res.report.find("winding,4") != std::string::npos);
}

TEST_CASE("error handling and exit codes") {
    // malformed JSON
    CHECK(run_job("{not json").exit_code == 1);

    // unknown command
    const JobResult unknown = run_job(R"({"command":"frobnicate","payload":{}})");
    CHECK(unknown.exit_code == 1);
    CHECK(json::parse(unknown.report)["error"]["kind"] == "bad-input");

    // schema violation
    CHECK(run_job(R"({"command":"eval","payload":{"q":[0,0,0,0]}})").exit_code == 1);

    // boundary zero: contract violation, exit 2
    const JobResult boundary = run_job(
        std::string(R"({"command":"count","payload":{"f":)") + kSphere +
        R"(,"contour":{"kind":"circle","center":[0,0],"radius":1}}})");
    CHECK(boundary.exit_code == 2);
    CHECK(json::parse(boundary.report)["error"]["kind"] == "boundary-zero");

    // singular kernel: evaluating a rational on its pole sphere
    const JobResult singular = run_job(
        R"({"command":"eval","payload":{"f":{"num":{"coeffs":[[1,0,0,0]]},"den":[1,0,1]},"q":[0,1,0,0]}})");
    CHECK(singular.exit_code == 2);
}
