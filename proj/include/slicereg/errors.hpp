#pragma once

#include <stdexcept>
#include <string>

namespace slicereg {

// Error taxonomy shared by the library, the C API and the CLI.
// `bad_input` means a malformed request (CLI exit code 1); everything
// else is a contract violation detected during computation (exit code 2).
enum class ErrorKind {
    bad_input,
    invalid_argument,
    invalid_unit,
    not_on_variety,
    degenerate,
    boundary_zero,
    singular_kernel,
    division_undefined,
    undefined_at_origin,
    out_of_domain,
    non_convergence,
    internal,
};

const char* error_kind_name(ErrorKind kind);

class Error : public std::runtime_error {
public:
    Error(ErrorKind kind, const std::string& detail)
        : std::runtime_error(std::string(error_kind_name(kind)) + ": " + detail),
          kind_(kind),
          detail_(detail) {}

    ErrorKind kind() const noexcept { return kind_; }
    const std::string& detail() const noexcept { return detail_; }

private:
    ErrorKind kind_;
    std::string detail_;
};

inline const char* error_kind_name(ErrorKind kind) {
    switch (kind) {
        case ErrorKind::bad_input: return "bad-input";
        case ErrorKind::invalid_argument: return "invalid-argument";
        case ErrorKind::invalid_unit: return "invalid-unit";
        case ErrorKind::not_on_variety: return "not-on-variety";
        case ErrorKind::degenerate: return "degenerate";
        case ErrorKind::boundary_zero: return "boundary-zero";
        case ErrorKind::singular_kernel: return "singular-kernel";
        case ErrorKind::division_undefined: return "division-undefined";
        case ErrorKind::undefined_at_origin: return "undefined-at-origin";
        case ErrorKind::out_of_domain: return "out-of-domain";
        case ErrorKind::non_convergence: return "non-convergence";
        case ErrorKind::internal: return "internal";
    }
    return "unknown";
}

} // namespace slicereg
