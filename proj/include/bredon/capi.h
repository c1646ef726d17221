#ifndef BREDON_CAPI_H
#define BREDON_CAPI_H

#include <stddef.h>

#ifdef __cplusplus
extern "C" {
#endif

/* Exit-style status codes shared with the command line tool. */
#define BREDON_OK 0
#define BREDON_ERR_VALIDATION 2
#define BREDON_ERR_VIOLATION 3
#define BREDON_ERR_INTERNAL 4
#define BREDON_ERR_ARGUMENT 5

typedef struct bredon_workspace bredon_workspace;

const char* bredon_version(void);

/* Load and validate a JSON manifest.  NULL on failure; the reason is
 * available from bredon_last_error(). */
bredon_workspace* bredon_workspace_open(const char* manifest_path);
void bredon_workspace_close(bredon_workspace* ws);

/* Run one command ("orbitcat", "homology", "fp0", "good", "brown", "tor",
 * "resolve", "equiv", "indres") with flags given as a JSON object, e.g.
 * {"k": 1, "reduced": true, "json": false, "n": 2, "subgroup": 0,
 *  "module": "name"} -- all keys optional.  On success *report_out receives
 * a malloc'd report that must be released with bredon_string_free().
 * Returns one of the status codes above. */
int bredon_run(bredon_workspace* ws, const char* command,
               const char* flags_json, char** report_out);

/* Message for the most recent failure on this thread; empty string if none. */
const char* bredon_last_error(void);

void bredon_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* BREDON_CAPI_H */
