#pragma once

#include <string>

namespace slicereg {

/// Outcome of one batch job. `exit_code` follows the CLI contract:
/// 0 success, 1 malformed input, 2 contract violation during computation.
struct JobResult {
    int exit_code = 0;
    std::string report;
};

/// Run one job given the JSON envelope
///   {"command": <name>, "payload": {...}, "format": "json"|"csv"}.
/// Reports are deterministic for identical requests (seeds are explicit
/// payload fields). Errors are reported as {"error": {"kind", "detail"}}.
JobResult run_job(const std::string& request_json);

} // namespace slicereg
