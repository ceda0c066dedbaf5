/* Compiled as C to keep the public header C-clean. */
#include <stdio.h>
#include <string.h>

#include "knotcode.h"

int main(void) {
  kc_diagram* d = NULL;
  kc_field* f = NULL;
  kc_code* c = NULL;
  long dist = 0;
  char* s = NULL;
  int rc = 1;

  if (kc_diagram_builtin("trefoil", &d) != KC_OK) goto done;
  if (kc_field_parse("3", "", &f) != KC_OK) goto done;
  if (kc_code_from_diagram(d, f, 2, KC_FOX, &c) != KC_OK) goto done;
  if (kc_code_dimension(c) != 2) goto done;
  if (kc_code_min_distance(c, 0, &dist) != KC_OK || dist != 2) goto done;
  if (kc_report_invariants(d, &s) != KC_OK || strstr(s, "\"determinant\":\"3\"") == NULL) goto done;
  rc = 0;

done:
  if (rc) fprintf(stderr, "capi_c_smoke: %s\n", kc_last_error());
  kc_string_free(s);
  kc_code_free(c);
  kc_field_free(f);
  kc_diagram_free(d);
  return rc;
}
