/* lindblock.h — C API of the lindblock shared library.
 *
 * Invariant-subspace decomposition, constants of motion, and stationary-state
 * prediction for open quantum systems relaxing under a thermal reservoir.
 *
 * All functions return lb_status; LB_OK means success. On failure a
 * thread-local message is available through lb_last_error(). Strings written
 * through char** output parameters are heap-allocated and must be released
 * with lb_string_free().
 */

#ifndef LINDBLOCK_H
#define LINDBLOCK_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum lb_status {
    LB_OK = 0,
    LB_ERR_PARSE = 1,      /* document could not be understood */
    LB_ERR_VALIDATION = 2, /* model or state violates an invariant */
    LB_ERR_ARGUMENT = 3,   /* bad argument (null pointer, size guard, range) */
    LB_ERR_IO = 4,         /* file could not be read or written */
    LB_ERR_INTERNAL = 5
} lb_status;

/* Opaque validated model handle. */
typedef struct lb_model lb_model;

const char* lb_version(void);

/* Message describing the most recent failure on this thread. Never NULL. */
const char* lb_last_error(void);

void lb_string_free(char* s);

lb_status lb_model_from_json(const char* json_text, lb_model** out);
lb_status lb_model_from_file(const char* path, lb_model** out);
void lb_model_free(lb_model* model);

/* Dimension of the state space, or 0 for a null handle. */
int lb_model_dim(const lb_model* model);

/* Validation report. Returns LB_ERR_VALIDATION when any check fails; the
 * report is still written in that case. */
lb_status lb_verify_report(const lb_model* model, char** json_out);

/* Invariant-subspace partition report. epsilon_s < 0 selects the default
 * threshold (1e-12 times the largest coupling-matrix magnitude). */
lb_status lb_partition_report(const lb_model* model, double epsilon_s, char** json_out);

/* Constants-of-motion report: block projectors, invariance residuals, and,
 * when with_brute_force is nonzero and the dimension allows it (N <= 16), the
 * exhaustive cross-check against the partition. */
lb_status lb_com_report(const lb_model* model, double epsilon_s, int with_brute_force,
                        char** json_out);

/* Stationary-state report for the initial state given as a JSON document
 * (either the model matrix encoding under "matrix" or a diagonal shorthand
 * under "populations"; eigenbasis components). */
lb_status lb_stationary_report(const lb_model* model, const char* initial_json,
                               double epsilon_s, char** json_out);

/* Integrate the master equation on a uniform grid of `samples` steps up to
 * t_max. Writes the trajectory CSV and a JSON summary. */
lb_status lb_evolve(const lb_model* model, const char* initial_json, double t_max,
                    int samples, int with_coherences, double epsilon_s,
                    char** csv_out, char** summary_json_out);

/* Builtin generator: two two-level systems with transition frequencies
 * omega1, omega2, rotating-wave interaction rabi, reservoir coupling
 * asymmetry, overall coupling strength lambda, temperature, and a flat
 * KMS-completed reservoir at level g0. Writes the model document and a
 * companion closed-form analytics document. */
lb_status lb_two_tls_example(double omega1, double omega2, double rabi, double asymmetry,
                             double lambda, double temperature, double g0,
                             char** model_json_out, char** analytics_json_out);

#ifdef __cplusplus
}
#endif

#endif /* LINDBLOCK_H */
