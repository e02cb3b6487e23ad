/* Sparse superposition codes workbench: C API.
 *
 * All functions return ssc_status; output strings are heap-allocated and
 * must be released with ssc_string_free().  On error, ssc_last_error()
 * returns a thread-local message describing the failure.
 */
#ifndef SSC_H
#define SSC_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum ssc_status {
    SSC_OK = 0,
    SSC_ERR_DOMAIN = 1,    /* invalid parameter / domain error */
    SSC_ERR_RESOURCE = 2,  /* cap exceeded (codebook or dictionary size) */
    SSC_ERR_CONFIG = 3,    /* malformed config JSON */
    SSC_ERR_INTERNAL = 4
} ssc_status;

const char* ssc_version(void);
const char* ssc_last_error(void);
void ssc_string_free(char* s);

/* Elementary information quantities (nats). */
ssc_status ssc_capacity(double v, double* nats_out);
ssc_status ssc_c_alpha(double alpha, double v, double* nats_out);

/* Full analytic bound report (Gaussian and Bernoulli dictionaries) for one
 * configuration.
 * config_json uses the same schema as the simulate config (see README).
 * json_out receives the report; csv_out (optional, may be NULL) receives
 * the per-l bound table. */
ssc_status ssc_bounds_report(const char* config_json, char** json_out, char** csv_out);

/* Monte Carlo run.  Outputs: summary JSON, per-trial CSV, mistake-count
 * histogram CSV.  Any output pointer may be NULL if not wanted. */
ssc_status ssc_simulate(const char* config_json, char** summary_json_out,
                        char** trials_csv_out, char** histogram_csv_out);

/* Lemma verification sweeps.  suite: phi|quad1d|quad2d|quad3d|em|all.
 * violations_out receives the number of violated cases. */
ssc_status ssc_verify_lemmas(const char* suite, int64_t lmax, char** json_out,
                             int64_t* violations_out);

/* Tables as CSV strings. */
ssc_status ssc_phi_table(int64_t lmin, int64_t lmax, int64_t step, char** csv_out);
ssc_status ssc_iota_table(const char* L_list_csv, double alpha0, double v,
                          char** csv_out);

#ifdef __cplusplus
}
#endif

#endif /* SSC_H */
