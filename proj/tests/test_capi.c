/*
 * Copyright 2026 The qwalk authors
 * Licensed under the Apache License, Version 2.0 (the "License");
 * you may not use this file except in compliance with the License.
 * You may obtain a copy of the License at http://www.apache.org/licenses/LICENSE-2.0
 */

/* Exercises the C interface only; linked against the shared library. */

#include <stdio.h>
#include <stdlib.h>
#include <string.h>

#include "qwalk/qwalk.h"

static int failures = 0;

#define EXPECT(cond)                                                  \
  do {                                                                \
    if (!(cond)) {                                                    \
      fprintf(stderr, "%s:%d: expected %s\n", __FILE__, __LINE__, #cond); \
      ++failures;                                                     \
    }                                                                 \
  } while (0)

static int contains(const char* hay, const char* needle) { return hay && strstr(hay, needle) != NULL; }

int main(void) {
  qwalk_registry* reg = NULL;
  char* out = NULL;
  int ok = 0;

  EXPECT(strlen(qwalk_version()) > 0);
  EXPECT(strcmp(qwalk_status_name(QWALK_E_NOT_FOUND), "NotFound") == 0);
  EXPECT(qwalk_registry_open_bundled(&reg) == QWALK_OK);
  EXPECT(reg != NULL);
  EXPECT(qwalk_registry_set_cache(reg, NULL, 0) == QWALK_OK);

  EXPECT(qwalk_registry_validate(reg, 6, &out, &ok) == QWALK_OK);
  EXPECT(ok == 1);
  qwalk_string_free(out);

  EXPECT(qwalk_enumerate(reg, 4, NULL, 8, 0, &out) == QWALK_OK);
  EXPECT(contains(out, "1564080"));
  qwalk_string_free(out);

  EXPECT(qwalk_enumerate(reg, 0, "1,1;-1,0;0,-1", 6, 1, &out) == QWALK_OK);
  EXPECT(contains(out, "\"125\""));
  qwalk_string_free(out);

  EXPECT(qwalk_series(reg, 17, "11", 6, &out) == QWALK_OK);
  EXPECT(contains(out, "\"51\""));
  qwalk_string_free(out);

  {
    int models[2] = {1, 18};
    EXPECT(qwalk_verify(reg, "eq29", 10, models, 2, 2, &out, &ok) == QWALK_OK);
    EXPECT(ok == 1);
    qwalk_string_free(out);
  }

  EXPECT(qwalk_guess(reg, 4, "11", 3, 6, 120, 10, &out) == QWALK_OK);
  EXPECT(contains(out, "king"));
  qwalk_string_free(out);

  {
    int models[1] = {3};
    EXPECT(qwalk_asym(reg, models, 1, "11", 4000, 1e-4, 1, &out, &ok) == QWALK_OK);
    EXPECT(ok == 1);
    qwalk_string_free(out);
  }

  EXPECT(qwalk_closed_form("case17_11", 10, "1/100", 96, &out) == QWALK_OK);
  EXPECT(contains(out, "\"value\""));
  qwalk_string_free(out);

  /* errors */
  out = NULL;
  EXPECT(qwalk_enumerate(reg, 99, NULL, 4, 0, &out) == QWALK_E_NOT_FOUND);
  EXPECT(out == NULL);
  EXPECT(strlen(qwalk_last_error()) > 0);
  EXPECT(qwalk_enumerate(reg, 0, "2,0", 4, 0, &out) == QWALK_E_INVALID_ARGUMENT);
  EXPECT(qwalk_enumerate(NULL, 1, NULL, 4, 0, &out) == QWALK_E_INVALID_ARGUMENT);
  EXPECT(qwalk_series(reg, 1, "12", 4, &out) == QWALK_E_INVALID_ARGUMENT);
  EXPECT(qwalk_integral(6, 128, &out, &ok) == QWALK_E_INVALID_ARGUMENT);
  EXPECT(qwalk_closed_form("nothing", 10, NULL, 64, &out) == QWALK_E_NOT_FOUND);
  EXPECT(qwalk_verify(reg, "nothing", -1, NULL, 0, 1, &out, &ok) == QWALK_E_INVALID_ARGUMENT);
  EXPECT(qwalk_registry_open_file("/nonexistent/models.json", &reg) != QWALK_OK);
  EXPECT(reg != NULL); /* untouched on failure */

  qwalk_registry_free(reg);
  qwalk_registry_free(NULL);
  qwalk_string_free(NULL);

  if (failures) {
    fprintf(stderr, "%d C API check(s) failed\n", failures);
    return 1;
  }
  printf("C API checks passed\n");
  return 0;
}
