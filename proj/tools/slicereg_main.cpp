// Batch CLI: reads a JSON job from a file or stdin, runs it through the
// slicereg shared library, prints the report to stdout.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include <CLI11.hpp>
#include <json.hpp>

#include "slicereg/capi.h"

namespace {

using json = nlohmann::ordered_json;

int fail_input(const std::string& detail) {
    json report;
    report["schema_version"] = 1;
    report["error"] = json{{"kind", "bad-input"}, {"detail", detail}};
    std::cout << report.dump(2) << "\n";
    return 1;
}

} // namespace

int main(int argc, char** argv) {
    CLI::App app{"slice-regular function toolbox (slicereg)"};
    app.set_version_flag("--version", std::string(slicereg_version()));

    std::string command;
    std::string input_path;
    std::string format = "json";
    long long seed = -1;
    int nodes = -1;
    double tol = -1.0;

    app.add_option("--command", command,
                   "job command (eval, star, symmetrize, zeros, count, rouche, jensen, "
                   "cauchy, bergman, norms, clifford); overrides the input document");
    app.add_option("--input", input_path, "input JSON file (payload or full job); default stdin");
    app.add_option("--seed", seed, "override payload field 'seed'");
    app.add_option("--nodes", nodes, "override payload field 'nodes'");
    app.add_option("--tol", tol, "override payload field 'tol'");
    app.add_option("--format", format, "report format: json or csv")
        ->check(CLI::IsMember({"json", "csv"}));

    CLI11_PARSE(app, argc, argv);

    std::string text;
    if (!input_path.empty()) {
        std::ifstream in(input_path);
        if (!in) return fail_input("cannot open input file: " + input_path);
        std::ostringstream buf;
        buf << in.rdbuf();
        text = buf.str();
    } else {
        std::ostringstream buf;
        buf << std::cin.rdbuf();
        text = buf.str();
    }

    json request;
    if (text.find_first_not_of(" \t\r\n") == std::string::npos) {
        request = json::object();
    } else {
        try {
            request = json::parse(text);
        } catch (const nlohmann::json::exception& e) {
            return fail_input(std::string("invalid JSON: ") + e.what());
        }
    }
    if (!request.is_object()) return fail_input("input must be a JSON object");

    // Inputs may be a full job document or a bare payload.
    json job;
    if (request.contains("command") || request.contains("payload")) {
        job = std::move(request);
    } else {
        job["payload"] = std::move(request);
    }
    if (!command.empty()) job["command"] = command;
    job["format"] = format;

    json& payload = job["payload"];
    if (!payload.is_object()) payload = json::object();
    if (seed >= 0) payload["seed"] = seed;
    if (nodes >= 0) payload["nodes"] = nodes;
    if (tol >= 0.0) payload["tol"] = tol;

    char* response = nullptr;
    const slicereg_status rc = slicereg_run_job(job.dump().c_str(), &response);
    if (response) {
        std::cout << response;
        slicereg_string_free(response);
    } else {
        std::cerr << "slicereg: " << slicereg_last_error() << "\n";
    }
    return static_cast<int>(rc) > 2 ? 2 : static_cast<int>(rc);
}
