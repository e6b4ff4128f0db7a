#ifndef SLICEREG_CAPI_H
#define SLICEREG_CAPI_H

/* C interface of the slicereg shared library.
 *
 * The heavy lifting goes through slicereg_run_job, which consumes and
 * produces JSON documents (the same schema the CLI speaks). A small
 * handle-based surface is provided for embedding polynomial evaluation
 * without JSON round-trips.
 */

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum slicereg_status {
    SLICEREG_OK = 0,
    SLICEREG_ERR_BAD_INPUT = 1,  /* malformed request */
    SLICEREG_ERR_CONTRACT = 2,   /* boundary zeros, singular kernels, ... */
    SLICEREG_ERR_INTERNAL = 3
} slicereg_status;

const char* slicereg_version(void);

/* Message describing the last failing call on this thread ("" if none). */
const char* slicereg_last_error(void);

/* Run one batch job. request_json follows
 *   {"command": <name>, "payload": {...}, "format": "json"|"csv"}.
 * *response receives a heap-allocated report (JSON or CSV) that must be
 * released with slicereg_string_free; a report is produced on errors too.
 * The return value mirrors the CLI exit code. */
slicereg_status slicereg_run_job(const char* request_json, char** response);

void slicereg_string_free(char* s);

/* Opaque quaternion-coefficient polynomial f(q) = sum q^n a_n. */
typedef struct slicereg_poly slicereg_poly;

/* coeffs: n quadruples [w, x, y, z], lowest degree first. */
slicereg_status slicereg_poly_new(const double* coeffs, size_t n, slicereg_poly** out);

void slicereg_poly_free(slicereg_poly* p);

/* Degree after trimming; -1 for the zero polynomial. */
int slicereg_poly_degree(const slicereg_poly* p);

slicereg_status slicereg_poly_eval(const slicereg_poly* p, const double q[4], double out[4]);

slicereg_status slicereg_poly_star(const slicereg_poly* a, const slicereg_poly* b,
                                   slicereg_poly** out);

/* Coefficients of the symmetrization (a real polynomial). Writes at most
 * cap values and stores the true count in *len; pass coeffs = NULL to query
 * the length first. */
slicereg_status slicereg_poly_symmetrize(const slicereg_poly* p, double* coeffs, size_t cap,
                                         size_t* len);

#ifdef __cplusplus
}
#endif

#endif /* SLICEREG_CAPI_H */
