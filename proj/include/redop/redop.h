/* redop — exact engine for reduction operators over a finite ordered basis.
 *
 * C interface of the shared library. All objects are opaque handles created
 * and destroyed here; every function that can fail returns a redop_status
 * and, where an `err` buffer is given, writes a diagnostic into it.
 *
 * Reports carry their result twice: as structured JSON and as rendered text.
 * The strings returned by the accessors are owned by the report handle and
 * stay valid until redop_report_free.
 */
#ifndef REDOP_H
#define REDOP_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum redop_status {
    REDOP_OK = 0,
    REDOP_ERR_ARGUMENT = 1, /* null handle or out-of-range argument */
    REDOP_ERR_PARSE = 2,    /* malformed input text */
    REDOP_ERR_DOCUMENT = 3, /* well-formed input violating a contract */
    REDOP_ERR_INTERNAL = 4
} redop_status;

typedef struct redop_family redop_family;
typedef struct redop_report redop_report;

const char *redop_version(void);

/* Family documents: JSON with an ordered "basis" array and an "operators"
 * array; each operator is {"name", "action": {gen: {gen: "p/q", ...}}} or
 * {"name", "matrix": [[...], ...]} with columns over the basis. */
redop_status redop_family_parse(const char *json_text, redop_family **out,
                                char *err, size_t err_cap);
void redop_family_free(redop_family *family);
int redop_family_operator_count(const redop_family *family);
int redop_family_generator_count(const redop_family *family);
/* Canonical sparse-action serialization; free with redop_text_free. */
redop_status redop_family_to_json(const redop_family *family, char **out_text);

/* Pipelines over a loaded family. */
redop_status redop_confluence(const redop_family *family, redop_report **out);
redop_status redop_syzygies(const redop_family *family, redop_report **out);
redop_status redop_completion(const redop_family *family, redop_report **out);

/* Truncated commutative Groebner front end. `system_text` holds one
 * polynomial per line ('#' starts a comment); `variables_csv` lists the
 * variables in increasing precedence, e.g. "t,z,y,x". */
redop_status redop_groebner(const char *system_text, const char *variables_csv,
                            int degree_bound, redop_report **out, char *err,
                            size_t err_cap);

const char *redop_report_json(const redop_report *report);
const char *redop_report_text(const redop_report *report);
/* 0 on success; the confluence report uses 1 for "not confluent". */
int redop_report_exit_code(const redop_report *report);
void redop_report_free(redop_report *report);

void redop_text_free(char *text);

#ifdef __cplusplus
}
#endif

#endif /* REDOP_H */
