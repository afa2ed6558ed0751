#ifndef IDEMSPEC_H
#define IDEMSPEC_H

/* C interface to the idemspec core: finite idempotent semirings, their
 * congruences, localizations, spectra and schemes. Documents are opaque
 * handles; every operation returns a status code and hands results back
 * as heap-allocated strings (free them with ids_string_free). The message
 * of the most recent failure on the calling thread is available through
 * ids_last_error. */

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  IDS_OK = 0,
  IDS_ERR_VIOLATION = 1, /* a law, check or verification failed */
  IDS_ERR_USAGE = 2      /* parse error, bad argument or guard exceeded */
} ids_status;

typedef struct ids_document ids_document;

const char* ids_version(void);
const char* ids_last_error(void);
void ids_string_free(char* s);

/* ---- documents -------------------------------------------------------- */

ids_status ids_parse(const char* text, ids_document** out);
void ids_document_free(ids_document* doc);
ids_status ids_emit(const ids_document* doc, char** out);

/* per-block validation report as JSON */
ids_status ids_check(const ids_document* doc, char** json_out);

/* ---- operations (block = name, or "" for the first of a fitting kind) - */

/* prime spectrum of a semiring block; text summary or DOT when as_dot */
ids_status ids_spec(const ids_document* doc, const char* block, int as_dot,
                    char** out);

/* top block -> closed-set semiring; semiring block -> spectrum space */
ids_status ids_dual(const ids_document* doc, const char* block, char** out);

ids_status ids_soberify(const ids_document* doc, const char* block, char** out);

/* mode: "element" | "sigma" | "prime"; arg: an element name, or a comma
 * separated list for "sigma" */
ids_status ids_localize(const ids_document* doc, const char* block,
                        const char* mode, const char* arg, char** out);

ids_status ids_radical(const ids_document* doc, const char* block,
                       const char* of_elem, char** out);

/* pairs: "(a,b);(c,d)" over element names */
ids_status ids_quotient(const ids_document* doc, const char* block,
                        const char* pairs, char** out);

/* parts: "s1:f1;s2:f2"; each f_i is a base element read as its class in
 * the localization at s_i */
ids_status ids_glue(const ids_document* doc, const char* block, const char* s,
                    const char* parts, char** out);

ids_status ids_tensor(const ids_document* doc, const char* m, const char* n,
                      char** out);

/* kind: "ring" | "monoid" | "semiring" */
ids_status ids_scheme(const ids_document* doc, const char* block,
                      const char* kind, int with_sections, int with_checks,
                      char** json_out);

/* ---- verification and enumeration ------------------------------------- */

/* suite: one of ids_suites(); doc may be NULL; bound <= 0 picks defaults */
ids_status ids_verify(const char* suite, const ids_document* doc, int bound,
                      char** json_out);
ids_status ids_suites(char** json_out);

/* what: "posets" | "lattices" | "semirings" */
ids_status ids_enumerate(const char* what, int n, int count_only, char** out);

/* ---- guards ------------------------------------------------------------ */

int ids_max_carrier(void);
void ids_set_max_carrier(int n);

#ifdef __cplusplus
}
#endif

#endif /* IDEMSPEC_H */
