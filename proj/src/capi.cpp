#include "slicereg/capi.h"

#include <cstring>
#include <new>
#include <string>

#include "slicereg/jobs.hpp"
#include "slicereg/stem_polynomial.hpp"

struct slicereg_poly {
    slicereg::StemPolynomial value;
};

namespace {

thread_local std::string g_last_error;

char* dup_string(const std::string& s) {
    char* out = new (std::nothrow) char[s.size() + 1];
    if (out) std::memcpy(out, s.c_str(), s.size() + 1);
    return out;
}

slicereg_status classify(const slicereg::Error& e) {
    return e.kind() == slicereg::ErrorKind::bad_input ? SLICEREG_ERR_BAD_INPUT
                                                      : SLICEREG_ERR_CONTRACT;
}

template <typename Fn>
slicereg_status guarded(Fn&& fn) {
    try {
        fn();
        g_last_error.clear();
        return SLICEREG_OK;
    } catch (const slicereg::Error& e) {
        g_last_error = e.what();
        return classify(e);
    } catch (const std::exception& e) {
        g_last_error = e.what();
        return SLICEREG_ERR_INTERNAL;
    } catch (...) {
        g_last_error = "unknown error";
        return SLICEREG_ERR_INTERNAL;
    }
}

} // namespace

extern "C" {

const char* slicereg_version(void) { return "0.1.0"; }

const char* slicereg_last_error(void) { return g_last_error.c_str(); }

slicereg_status slicereg_run_job(const char* request_json, char** response) {
    if (!request_json || !response) {
        g_last_error = "null argument";
        return SLICEREG_ERR_BAD_INPUT;
    }
    *response = nullptr;
    slicereg::JobResult result;
    const slicereg_status rc = guarded([&] { result = slicereg::run_job(request_json); });
    if (rc != SLICEREG_OK) return rc;
    *response = dup_string(result.report);
    if (!*response) {
        g_last_error = "out of memory";
        return SLICEREG_ERR_INTERNAL;
    }
    if (result.exit_code == 1) return SLICEREG_ERR_BAD_INPUT;
    if (result.exit_code == 2) return SLICEREG_ERR_CONTRACT;
    return SLICEREG_OK;
}

void slicereg_string_free(char* s) { delete[] s; }

slicereg_status slicereg_poly_new(const double* coeffs, size_t n, slicereg_poly** out) {
    if ((!coeffs && n > 0) || !out) {
        g_last_error = "null argument";
        return SLICEREG_ERR_BAD_INPUT;
    }
    *out = nullptr;
    return guarded([&] {
        std::vector<slicereg::Quaternion> c;
        c.reserve(n);
        for (size_t i = 0; i < n; ++i)
            c.emplace_back(coeffs[4 * i], coeffs[4 * i + 1], coeffs[4 * i + 2],
                           coeffs[4 * i + 3]);
        *out = new slicereg_poly{slicereg::StemPolynomial(std::move(c))};
    });
}

void slicereg_poly_free(slicereg_poly* p) { delete p; }

int slicereg_poly_degree(const slicereg_poly* p) { return p ? p->value.degree() : -1; }

slicereg_status slicereg_poly_eval(const slicereg_poly* p, const double q[4], double out[4]) {
    if (!p || !q || !out) {
        g_last_error = "null argument";
        return SLICEREG_ERR_BAD_INPUT;
    }
    return guarded([&] {
        const slicereg::Quaternion v =
            p->value.eval_slice(slicereg::Quaternion(q[0], q[1], q[2], q[3]));
        out[0] = v.w;
        out[1] = v.x;
        out[2] = v.y;
        out[3] = v.z;
    });
}

slicereg_status slicereg_poly_star(const slicereg_poly* a, const slicereg_poly* b,
                                   slicereg_poly** out) {
    if (!a || !b || !out) {
        g_last_error = "null argument";
        return SLICEREG_ERR_BAD_INPUT;
    }
    *out = nullptr;
    return guarded([&] {
        *out = new slicereg_poly{slicereg::star_product(a->value, b->value)};
    });
}

slicereg_status slicereg_poly_symmetrize(const slicereg_poly* p, double* coeffs, size_t cap,
                                         size_t* len) {
    if (!p || !len) {
        g_last_error = "null argument";
        return SLICEREG_ERR_BAD_INPUT;
    }
    return guarded([&] {
        const slicereg::RealPoly s = slicereg::symmetrize(p->value);
        *len = s.coeffs().size();
        if (coeffs) {
            const size_t count = std::min(cap, s.coeffs().size());
            for (size_t i = 0; i < count; ++i) coeffs[i] = s.coeffs()[i];
        }
    });
}

} // extern "C"
