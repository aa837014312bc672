/*
 * Copyright 2026 The conemm authors
 *
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at
 *
 *     http://www.apache.org/licenses/LICENSE-2.0
 *
 * Unless required by applicable law or agreed to in writing, software
 * distributed under the License is distributed on an "AS IS" BASIS,
 * WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
 * See the License for the specific language governing permissions and
 * limitations under the License.
 */

/*
 * conemm -- exact-rational hypothesis checks, lexicographical-minimax
 * weights, nefness certificates and positive partitions for families of
 * divisor classes given by non-negative coordinates over nef generators.
 *
 * All functions are thread-safe and deterministic for fixed inputs and
 * seeds. Documents cross the boundary as JSON text; rationals appear as
 * strings "p" or "p/q", never as floating point. Strings returned through
 * char** out-parameters are heap-allocated and must be released with
 * conemm_free(). On any status other than CONEMM_OK, conemm_last_error()
 * returns a thread-local description of what went wrong.
 */

#ifndef CONEMM_H
#define CONEMM_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum conemm_status {
    CONEMM_OK = 0,           /* success / verdict is "pass" */
    CONEMM_FAIL = 1,         /* checked negative verdict (hypothesis or verification) */
    CONEMM_ERR_PARSE = 2,    /* malformed JSON or rational text */
    CONEMM_ERR_ARGUMENT = 3, /* invalid parameters or mismatched shapes */
    CONEMM_ERR_BUDGET = 4,   /* a retry budget was exhausted */
    CONEMM_ERR_GUARD = 5,    /* an oracle size guard was violated */
    CONEMM_ERR_INTERNAL = 6  /* invariant breakage; report a bug */
} conemm_status;

/* Opaque handle for a parsed instance (the q x r coefficient matrix). */
typedef struct conemm_instance conemm_instance;

conemm_status conemm_instance_parse(const char* json_text, conemm_instance** out);
char* conemm_instance_dump(const conemm_instance* inst);
void conemm_instance_free(conemm_instance* inst);

/* Dimension n recorded in the document, or 0 when it was omitted. */
int conemm_instance_n(const conemm_instance* inst);
int conemm_instance_r(const conemm_instance* inst);
int conemm_instance_q(const conemm_instance* inst);

/*
 * Hypothesis and threshold report: validation, support condition,
 * genericity and the four (n, r, q) threshold verdicts. Returns CONEMM_FAIL
 * when validation or the support condition fails; the report is produced
 * either way.
 */
conemm_status conemm_check(const conemm_instance* inst, int n, int cohen_macaulay, char** out_json);

/*
 * Lexicographical-minimax weights. kappa is the perturbation scale as a
 * rational string (NULL: "1/16"); max_iterations caps the balancing loop
 * (0: q*q*r). The report carries the weights and the counts on both the
 * perturbed and the original matrix.
 */
conemm_status conemm_solve(const conemm_instance* inst, uint64_t seed, const char* kappa,
                           long max_iterations, char** out_json);

/*
 * Builds the (A, c_1..c_q, delta) certificate for dimension n. Fails with
 * CONEMM_FAIL when the instance misses the support condition or the
 * certificate threshold.
 */
conemm_status conemm_certify(const conemm_instance* inst, int n, uint64_t seed, const char* kappa,
                             long max_iterations, char** out_json);

/*
 * Re-checks a certificate document against the instance, exactly and
 * independently of how it was built. CONEMM_OK: verified; CONEMM_FAIL: the
 * report carries the first violated inequality.
 */
conemm_status conemm_verify(const conemm_instance* inst, int n, const char* certificate_json,
                            char** out_json);

/* Positive partition into floor(q/r) blocks of size r. */
conemm_status conemm_partition(const conemm_instance* inst, char** out_json);

/* Block sums of the partition plus the regrouped divisor-count verdicts. */
conemm_status conemm_regroup(const conemm_instance* inst, int n, char** out_json);

/* Exhaustive small-case oracles (guarded; see the library documentation). */
conemm_status conemm_oracle_minimax(const conemm_instance* inst, int denominator_bound,
                                    char** out_json);
conemm_status conemm_oracle_partition(const conemm_instance* inst, char** out_json);

/* Threshold verdicts for bare (n, r, q) without an instance. */
conemm_status conemm_threshold_check(int n, int r, long q, int cohen_macaulay, char** out_json);

/* Instance generators; each emits an instance document. */
conemm_status conemm_gen_conjbex(int n, int s, char** out_json);
conemm_status conemm_gen_conjaex(int n, int r, char** out_json);
conemm_status conemm_gen_appex(int n, uint64_t seed, char** out_json);
conemm_status conemm_gen_random(int n, int r, int q, uint64_t seed, const char* bound,
                                char** out_json);

void conemm_free(char* text);
const char* conemm_last_error(void);
const char* conemm_version(void);

#ifdef __cplusplus
}
#endif

#endif /* CONEMM_H */
