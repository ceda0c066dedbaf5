/* C interface to the knotcode library.
 *
 * Objects are opaque handles released with their *_free function. Every call
 * that can fail returns a kc_status; on failure kc_last_error() describes the
 * problem (thread local, valid until the next call on the same thread).
 * Strings returned through char** are owned by the caller and released with
 * kc_string_free. Report strings are JSON objects of the form
 *   {"outputs": {...}, "warnings": [...], "status": 0|1|4}
 */
#ifndef KNOTCODE_H
#define KNOTCODE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define KC_API __declspec(dllexport)
#elif defined(__GNUC__)
#define KC_API __attribute__((visibility("default")))
#else
#define KC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum kc_status {
  KC_OK = 0,
  KC_ERR_ARGUMENT = 1,         /* bad parameter, malformed input */
  KC_ERR_INVALID_DIAGRAM = 2,  /* diagram fails validation */
  KC_ERR_BUDGET = 3,           /* enumeration budget exceeded */
  KC_ERR_INTERNAL = 4
} kc_status;

typedef enum kc_matrix_kind { KC_FOX = 0, KC_DEHN = 1 } kc_matrix_kind;

typedef struct kc_diagram kc_diagram;
typedef struct kc_field kc_field;
typedef struct kc_code kc_code;

KC_API const char* kc_version(void);
KC_API const char* kc_last_error(void);
KC_API void kc_string_free(char* s);

/* Diagrams */
KC_API kc_status kc_diagram_from_json(const char* json, kc_diagram** out);
KC_API kc_status kc_diagram_to_json(const kc_diagram* d, char** out);
KC_API kc_status kc_diagram_builtin(const char* name, kc_diagram** out);
KC_API kc_status kc_diagram_torus(long a, long b, kc_diagram** out);
KC_API kc_status kc_diagram_pretzel(const long* twists, size_t count, kc_diagram** out);
KC_API kc_status kc_diagram_connected_sum(const kc_diagram* d1, size_t arc1, const kc_diagram* d2, size_t arc2,
                                          kc_diagram** out);
/* Adds a twist on edge `edge`; side 0 = left, 1 = right. */
KC_API kc_status kc_diagram_r1(const kc_diagram* d, size_t edge, int side, int first_over, kc_diagram** out);
KC_API kc_status kc_diagram_mirror(const kc_diagram* d, kc_diagram** out);
/* Returns KC_OK even for invalid diagrams; *valid reports the verdict and
 * *report (may be NULL) receives {"ok":..,"violations":[..],...}. */
KC_API kc_status kc_diagram_validate(const kc_diagram* d, int* valid, char** report);
KC_API size_t kc_diagram_crossings(const kc_diagram* d);
KC_API void kc_diagram_free(kc_diagram* d);

/* Fields: modulus is NULL (len 0) for a prime field, otherwise ascending
 * coefficients of a monic irreducible polynomial. */
KC_API kc_status kc_field_new(uint64_t p, const uint64_t* modulus, size_t len, kc_field** out);
/* Command line grammar: q = "p", "q" or "p^a"; modulus = "c0,c1,...,1" or "". */
KC_API kc_status kc_field_parse(const char* q, const char* modulus, kc_field** out);
/* Element from "-1", "3", "alpha" or "c0,c1,...". Elements are returned as
 * opaque codes valid for this field. */
KC_API kc_status kc_field_parse_element(const kc_field* f, const char* text, uint64_t* out);
KC_API uint64_t kc_field_size(const kc_field* f);
KC_API kc_status kc_field_element_to_json(const kc_field* f, uint64_t elem, char** out);
KC_API void kc_field_free(kc_field* f);

/* Codes */
KC_API kc_status kc_code_from_diagram(const kc_diagram* d, const kc_field* f, uint64_t t, kc_matrix_kind kind,
                                      kc_code** out);
/* Row-major parity check matrix of element codes. */
KC_API kc_status kc_code_from_parity(const kc_field* f, const uint64_t* entries, size_t rows, size_t cols,
                                     kc_code** out);
KC_API size_t kc_code_length(const kc_code* c);
KC_API size_t kc_code_dimension(const kc_code* c);
/* *out: distance, or -1 for the zero code (infinite). KC_ERR_BUDGET when the
 * message count exceeds budget (0 selects the default budget). */
KC_API kc_status kc_code_min_distance(const kc_code* c, uint64_t budget, long* out);
/* counts[w] for w = 0..n as decimal strings in a JSON array. */
KC_API kc_status kc_code_weights(const kc_code* c, uint64_t budget, char** out);
KC_API kc_status kc_code_sum(const kc_code* c1, size_t pos1, const kc_code* c2, size_t pos2, kc_code** out);
KC_API kc_status kc_code_dual(const kc_code* c, kc_code** out);
KC_API kc_status kc_code_contains(const kc_code* c, const uint64_t* word, size_t len, int* out);
KC_API void kc_code_free(kc_code* c);

/* Reports. budget 0 selects the default (env KNOTCODE_BUDGET or 10^7). */
KC_API kc_status kc_report_invariants(const kc_diagram* d, char** out);
KC_API kc_status kc_report_alexander(const kc_diagram* d, char** out);
/* at: decimal integer to evaluate T at, or NULL. */
KC_API kc_status kc_report_matrix(const kc_diagram* d, kc_matrix_kind kind, int restrict_outer, const char* at,
                                  char** out);
KC_API kc_status kc_report_code(const kc_diagram* d, const kc_field* f, uint64_t t, kc_matrix_kind kind,
                                int min_dist, int weights, uint64_t budget, char** out);
KC_API kc_status kc_report_sum(const kc_diagram* d1, size_t arc1, const kc_diagram* d2, size_t arc2,
                               const kc_field* f, uint64_t t, int min_dist, int weights, uint64_t budget,
                               char** out);
/* matrix_json: array of rows; ring "Z" or "F_p[T]". */
KC_API kc_status kc_report_snf(const char* matrix_json, const char* ring, char** out);
/* Exactly one of modulus (decimal) and poly_modulus ("p:c0,c1,...") is set;
 * t is an integer or an ascending coefficient list. */
KC_API kc_status kc_report_colorings(const kc_diagram* d, const char* modulus, const char* poly_modulus,
                                     const char* t, char** out);
/* base NULL means the unknot; pairs holds a1,b1,a2,b2,... */
KC_API kc_status kc_report_cable(const kc_diagram* base, const kc_field* f, uint64_t t, const long* pairs,
                                 size_t pair_count, char** out);
KC_API kc_status kc_report_check(const kc_diagram* d, char** out);

#ifdef __cplusplus
}
#endif

#endif
