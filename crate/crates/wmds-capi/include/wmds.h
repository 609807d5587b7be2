/* C interface for the wmds library.
 *
 * Parse a TOML document describing a fan/weight matrix pair (optionally
 * with torsion, relations, an irrelevant ideal, or explicit maximal cones),
 * then run commands against the opaque handle. Reports come back as JSON
 * strings; the plot command returns SVG text.
 *
 * Maintained by hand to match crates/wmds-capi/src/lib.rs.
 */

#ifndef WMDS_H
#define WMDS_H

#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

typedef enum WmdsStatus {
  WMDS_OK = 0,
  WMDS_DOMAIN_ERROR = 1,
  WMDS_INPUT_ERROR = 2,
  WMDS_BUDGET_EXCEEDED = 3,
  WMDS_NULL_POINTER = 4,
  WMDS_INVALID_UTF8 = 5,
} WmdsStatus;

/* Opaque parsed document. */
typedef struct WmdsDocument WmdsDocument;

/* Version string of the library; static storage, do not free. */
const char *wmds_version(void);

/* Message of the most recent error on this thread; valid until the next
 * failing call on the same thread, do not free. */
const char *wmds_last_error(void);

/* Parses a TOML document into an opaque handle. On WMDS_OK the handle must
 * be released with wmds_document_free. */
WmdsStatus wmds_document_parse(const char *text, WmdsDocument **out_document);

/* Releases a document handle. NULL is a no-op. */
void wmds_document_free(WmdsDocument *document);

/* Runs a command: one of "gale", "classify", "cones", "gkz", "chambers",
 * "fans", "fillable", "complete", "mmp", "sqm", "anticanonical", "report",
 * "plot". chamber is 1-based (0 = unset); divisor_class is "a,b,..." or
 * NULL; mov_only restricts gkz to the moving cone. On WMDS_OK *out_json
 * holds the JSON report (SVG text for plot) and must be released with
 * wmds_string_free; *out_negative (when non-NULL) is set to 1 for
 * domain-negative verdicts such as "not fillable". */
WmdsStatus wmds_run(const WmdsDocument *document, const char *command,
                    unsigned int chamber, const char *divisor_class,
                    int mov_only, char **out_json, int *out_negative);

/* Releases a string returned by this library. NULL is a no-op. */
void wmds_string_free(char *s);

#ifdef __cplusplus
}
#endif

#endif /* WMDS_H */
