/*
 * g2s - exact verification engine for the canonical G2 structure of
 * 7-dimensional 3-Sasakian geometry.
 *
 * C interface of the shared library. All functions are thread-safe; any
 * returned string must be released with g2s_string_free(). On error a
 * human-readable message is available from g2s_last_error() (thread-local).
 */
#ifndef G2S_H
#define G2S_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum g2s_status {
    G2S_OK = 0,             /* operation succeeded, all checks passed        */
    G2S_CHECKS_FAILED = 1,  /* operation ran; one or more checks failed      */
    G2S_ERR_CONFIG = 2,     /* invalid configuration or arguments           */
    G2S_ERR_PARSE = 3,      /* malformed input file or JSON                 */
    G2S_ERR_INTERNAL = 4    /* unexpected internal failure                  */
} g2s_status;

/* Library version, static storage. */
const char* g2s_version(void);

/* Message describing the most recent error on this thread, static storage. */
const char* g2s_last_error(void);

void g2s_string_free(char* s);

/*
 * Runs the verification suite. config_json is a JSON object with optional
 * fields:
 *   mode       "exact" | "float"           (default "exact")
 *   t          rational string, e.g. "1/5" (default "1"; the deformation
 *                                           parameter t = s^2)
 *   tolerance  positive number             (default 1e-9, float mode)
 *   sections   array from {2,...,7}        (default all)
 *   format     "text" | "json"             (default "text")
 *
 * *report_out receives the formatted report; *failures_out (optional) the
 * number of failed checks. Returns G2S_OK or G2S_CHECKS_FAILED when the
 * suite ran, G2S_ERR_CONFIG otherwise.
 */
g2s_status g2s_verify(const char* config_json, char** report_out, int* failures_out);

/*
 * Evaluates curvature and spinor eigendata on an inclusive grid of steps+1
 * rational points between t_from and t_to. format is "csv" or "json".
 */
g2s_status g2s_sweep(const char* t_from, const char* t_to, int steps, const char* format,
                     char** out);

/* Opaque handle to the built model at a fixed deformation parameter. */
typedef struct g2s_model g2s_model;

g2s_status g2s_model_create(const char* t_rational, g2s_model** out);
void g2s_model_free(g2s_model* m);

/*
 * Serializes a model object as JSON:
 *   omega | torsion | gammas | phi | coset | psi0
 */
g2s_status g2s_model_dump(const g2s_model* m, const char* object, char** json_out);

/*
 * Validates a coset-space description (the schema emitted by dumping
 * "coset"): {basis, brackets, h_indices, metric_weights, orientation}.
 * *report_out receives a JSON summary with any violated invariants.
 * Returns G2S_OK when valid, G2S_CHECKS_FAILED when invariants are violated,
 * G2S_ERR_PARSE on malformed input.
 */
g2s_status g2s_ingest(const char* json_text, char** report_out);

#ifdef __cplusplus
}
#endif

#endif /* G2S_H */
