/* Copyright 2026 The qwalk authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */

/* C interface to the qwalk library.
 *
 * Every call returns a qwalk_status. Results are JSON documents returned via
 * char** out-parameters; release them with qwalk_string_free. After a failing
 * call, qwalk_last_error() describes the failure on the calling thread.
 * Large integers are encoded as decimal strings, rationals as "p/q".
 */
#ifndef QWALK_QWALK_H
#define QWALK_QWALK_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define QWALK_API __declspec(dllexport)
#else
#define QWALK_API __attribute__((visibility("default")))
#endif

typedef enum qwalk_status {
  QWALK_OK = 0,
  QWALK_E_INVALID_ARGUMENT = 1,
  QWALK_E_NON_UNIT_DENOMINATOR = 2,
  QWALK_E_ZERO_SUBSTITUTION_IMAGE = 3,
  QWALK_E_NOT_INVERTIBLE = 4,
  QWALK_E_RESIDUE_OBSTRUCTION = 5,
  QWALK_E_SUBSTITUTION_NOT_VANISHING = 6,
  QWALK_E_NON_UNIT_BASE = 7,
  QWALK_E_GROUP_ORDER_EXCEEDED = 8,
  QWALK_E_RESIDUAL_NONZERO = 9,
  QWALK_E_DIMENSION_UNSUPPORTED = 10,
  QWALK_E_DEPTH_INSUFFICIENT = 11,
  QWALK_E_INSUFFICIENT_TERMS = 12,
  QWALK_E_NO_OPERATOR_FOUND = 13,
  QWALK_E_SINGULAR_INDEX = 14,
  QWALK_E_VALIDATION_FAILED = 15,
  QWALK_E_BAD_PARAMETERS = 16,
  QWALK_E_ARGUMENT_OUT_OF_RANGE = 17,
  QWALK_E_QUADRATURE_NO_CONVERGENCE = 18,
  QWALK_E_IDENTITY_FAILED = 19,
  QWALK_E_IO = 20,
  QWALK_E_NOT_FOUND = 21,
  QWALK_E_INTERNAL = 99
} qwalk_status;

typedef struct qwalk_registry qwalk_registry;

QWALK_API const char* qwalk_version(void);
QWALK_API const char* qwalk_status_name(qwalk_status s);
QWALK_API const char* qwalk_last_error(void);
QWALK_API void qwalk_string_free(char* s);

/* model data */
QWALK_API qwalk_status qwalk_registry_open_bundled(qwalk_registry** out);
QWALK_API qwalk_status qwalk_registry_open_file(const char* path, qwalk_registry** out);
QWALK_API void qwalk_registry_free(qwalk_registry* reg);
QWALK_API qwalk_status qwalk_registry_validate(const qwalk_registry* reg, int order, char** json_out, int* ok);
QWALK_API qwalk_status qwalk_registry_models(const qwalk_registry* reg, char** json_out);

/* result cache: dir NULL selects QWALK_CACHE or the platform default; enabled 0 disables */
QWALK_API qwalk_status qwalk_registry_set_cache(qwalk_registry* reg, const char* dir, int enabled);

/* walks of length <= n; either model > 0 or steps = "dx,dy;dx,dy;..." */
QWALK_API qwalk_status qwalk_enumerate(const qwalk_registry* reg, int model, const char* steps, int n, int endpoints,
                                       char** json_out);
/* Q(alpha, beta; t) through t^order, spec "00" | "10" | "01" | "11" */
QWALK_API qwalk_status qwalk_series(const qwalk_registry* reg, int model, const char* spec, int order, char** json_out);

/* suite: kernel | eq29 | residue | lemma9 | identities | closedforms | operators | guess; order < 0 for the default */
QWALK_API qwalk_status qwalk_verify(const qwalk_registry* reg, const char* suite, int order, const int* models,
                                    int nmodels, int jobs, char** json_out, int* all_pass);

/* r < 0 searches the smallest (order, degree) up to (10, 60) */
QWALK_API qwalk_status qwalk_guess(const qwalk_registry* reg, int model, const char* spec, int r, int d, int terms,
                                   int guard, char** json_out);

/* kappa check per residue class; models/specs NULL for all */
QWALK_API qwalk_status qwalk_asym(const qwalk_registry* reg, const int* models, int nmodels, const char* spec, int nmax,
                                  double tol, int jobs, char** json_out, int* all_pass);

/* which = 7 or 5 */
QWALK_API qwalk_status qwalk_integral(int which, int prec, char** json_out, int* matches);
QWALK_API qwalk_status qwalk_conjecture_report(const qwalk_registry* reg, int prec, int nmax, char** json_out);

/* name NULL lists the built-in closed forms; t_value (decimal or p/q) optionally adds a numeric evaluation */
QWALK_API qwalk_status qwalk_closed_form(const char* name, int order, const char* t_value, int prec, char** json_out);

#ifdef __cplusplus
}
#endif

#endif /* QWALK_QWALK_H */
