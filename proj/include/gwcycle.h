/* C interface to the gwcycle library.
 *
 * All computations run behind opaque handles and return status codes;
 * structured results come back as JSON strings allocated by the library
 * (release them with gw_string_free).  Numeric output is exact: integers
 * and rationals are serialized as decimal strings, never floating point.
 */

#ifndef GWCYCLE_H
#define GWCYCLE_H

#ifdef __cplusplus
extern "C" {
#endif

typedef enum gw_status {
    GW_OK = 0,
    GW_ERR_PARSE = 1,    /* malformed input text */
    GW_ERR_DOMAIN = 2,   /* valid syntax, invalid mathematics */
    GW_ERR_INTERNAL = 3  /* invariant violation inside the engine */
} gw_status;

typedef struct gw_space gw_space;

/* "P3", "Q5", "Q6", ... (case-insensitive). NULL on error. */
gw_space* gw_space_create(const char* name);
void gw_space_free(gw_space* space);

/* Thread-local message describing the most recent failure. */
const char* gw_last_error(void);

void gw_string_free(char* s);

/* Worker count for the class computations; 1 (sequential) by default. */
void gw_set_threads(int threads);

/* Small quantum product of two class expressions ("H1", "q^2*H3", lists
 * multiply term by term is not supported here: one class token each). */
gw_status gw_qh_mult(const gw_space* space, const char* a, const char* b, char** out_json);

/* Codimension-0 n-point number; insertions is a comma-separated class list. */
gw_status gw_npoint(const gw_space* space, int degree, const char* insertions, long long* out);

/* 4-point codimension-1 degree. */
gw_status gw_fourpoint(const gw_space* space, int degree, const char* insertions, long long* out);

/* Degree against an F-curve "F{1|2|3|4,5,6}". */
gw_status gw_fcurve_degree(const gw_space* space, int degree, const char* insertions,
                           const char* fcurve, long long* out);

/* Divisor class in the nonadjacent basis (n = 5 or 6 insertions). */
gw_status gw_divisor_class(const gw_space* space, int degree, const char* insertions,
                           char** out_json);

/* Pushforward of a codimension-2 class dropping the last marking. */
gw_status gw_pushforward(const gw_space* space, int degree, const char* insertions, int forget,
                         char** out_json);

/* Nef check and ray decomposition of a class vector (JSON, as produced by
 * gw_divisor_class); rays_json may be NULL for the built-in table. */
gw_status gw_nef_check(const char* class_json, const char* rays_json, char** out_json);

/* Full verification sweep of the quoted example values; *failures receives
 * the number of failing checks. */
gw_status gw_verify(char** report_json, int* failures);

#ifdef __cplusplus
}
#endif

#endif /* GWCYCLE_H */
