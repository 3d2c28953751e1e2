// Copyright 2026 The unot Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/* C interface to the unot library. Every function returns a unot_status;
 * on failure unot_last_error() describes the problem in one line. Strings
 * returned through char** are owned by the caller and released with
 * unot_string_free. */
#ifndef UNOT_UNOT_H
#define UNOT_UNOT_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(UNOT_BUILDING_LIBRARY)
#define UNOT_API __attribute__((visibility("default")))
#else
#define UNOT_API
#endif

typedef enum unot_status {
    UNOT_OK = 0,
    UNOT_ERR_ARGUMENT = 1,
    UNOT_ERR_VALIDATION = 2,
    UNOT_ERR_PARSE = 3,
    UNOT_ERR_INTERNAL = 4
} unot_status;

typedef struct unot_gate unot_gate;
typedef struct unot_chain unot_chain;

UNOT_API const char *unot_version(void);

/* Message of the last failed call on this thread, "" if none. */
UNOT_API const char *unot_last_error(void);
UNOT_API void unot_string_free(char *s);

typedef struct unot_constants {
    double k, p, q, r;
    int case_number; /* 1..4 */
} unot_constants;

UNOT_API unot_status unot_belt_constants(double theta1, double theta2, int m, unot_constants *out);
UNOT_API unot_status unot_constants_json(double theta1, double theta2, int m, char **out);

typedef struct unot_optimum {
    double f_bar;      /* global maximum of the belt-averaged fidelity */
    double dual_bound; /* certified upper bound */
    double case_f_bar; /* closed-form family value */
    double a_star;
    int case_number;
    int boundary_hit;
    int case_formula_optimal;
} unot_optimum;

UNOT_API unot_status unot_optimize(double theta1, double theta2, int m, unot_optimum *out);
UNOT_API unot_status unot_optimize_json(double theta1, double theta2, int m, char **out);

/* *consistent is 0 when the realized gates or tied case branches disagree. */
UNOT_API unot_status unot_case_consistency_json(double theta1, double theta2, int m, char **out, int *consistent);

UNOT_API unot_status unot_gate_realize_optimal(double theta1, double theta2, int m, unot_gate **out);
UNOT_API unot_status unot_gate_realize_case(double theta1, double theta2, int m, int case_number, unot_gate **out);
/* Malformed text or fields give UNOT_ERR_PARSE; the isometry conditions are
 * not checked here. */
UNOT_API unot_status unot_gate_from_json(const char *text, unot_gate **out);
UNOT_API unot_status unot_gate_to_json(const unot_gate *gate, char **out);
/* Report is always written; *valid is 1 when every residual is below 1e-12. */
UNOT_API unot_status unot_gate_validate(const unot_gate *gate, char **report, int *valid);
UNOT_API int unot_gate_copies(const unot_gate *gate);
UNOT_API void unot_gate_free(unot_gate *gate);

UNOT_API unot_status unot_fidelity_sim(const unot_gate *gate, double theta, double phi, double *out);
UNOT_API unot_status unot_fidelity_phi_average(const unot_gate *gate, double theta, int phi_nodes, double *out);
UNOT_API unot_status unot_fidelity_formula(const unot_gate *gate, double theta, double *out);
/* UNOT_ERR_VALIDATION for a gate that is not an isometry. */
UNOT_API unot_status unot_avg_fidelity_closed(const unot_gate *gate, double theta1, double theta2, double *out);
UNOT_API unot_status unot_avg_fidelity_quadrature(const unot_gate *gate, double theta1, double theta2, int nodes,
                                                  int phi_nodes, double *out);
UNOT_API unot_status unot_fidelity_report_json(const unot_gate *gate, double theta1, double theta2, double theta,
                                               double phi, int nodes, int phi_nodes, char **out);
/* Output state, single-copy reduced density matrix and fidelity for one input. */
UNOT_API unot_status unot_simulate_json(const unot_gate *gate, double theta, double phi, char **out);

typedef struct unot_oracle_options {
    double resolution;  /* grid step, default 0.01 */
    double refine_step; /* smallest ascent step, default 1e-6 */
    int paranoid;       /* also sweep a coupling factor per pair */
} unot_oracle_options;

UNOT_API void unot_oracle_default_options(unot_oracle_options *out);
UNOT_API unot_status unot_oracle_json(double theta1, double theta2, int m, const unot_oracle_options *options,
                                      char **out, double *best_f, double *analytic_f_bar);

UNOT_API unot_status unot_chain_exemplar(int m, double gamma, unot_chain **out);
UNOT_API unot_status unot_exemplar_state_json(int m, double gamma, char **out);
UNOT_API unot_status unot_exemplar_schmidt_json(int m, double gamma, char **out);
/* Sequential SVD of a state document (full state, JointState, or {"state": ...}). */
UNOT_API unot_status unot_chain_from_state_json(const char *text, unot_chain **out);
UNOT_API unot_status unot_chain_from_json(const char *text, unot_chain **out);
UNOT_API unot_status unot_chain_to_json(const unot_chain *chain, char **out);
UNOT_API int unot_chain_sites(const unot_chain *chain);
/* Writes up to `capacity` bond dimensions (sites + 1 values); *count gets the full length. */
UNOT_API unot_status unot_chain_bond_dims(const unot_chain *chain, int *dims, int capacity, int *count);
/* Certificate is written whenever shapes agree; UNOT_ERR_VALIDATION if it fails. */
UNOT_API unot_status unot_chain_verify(const unot_chain *chain, const char *reference_json, char **certificate);
UNOT_API void unot_chain_free(unot_chain *chain);

#ifdef __cplusplus
}
#endif

#endif
