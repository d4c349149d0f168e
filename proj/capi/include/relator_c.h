/* C interface to the relator library: verification, invariants, logged
 * rewrites, scripted reproductions, and the stored relation set.
 *
 * All entry points are thread-compatible: distinct contexts may be used from
 * distinct threads, a single context must not be shared without locking.
 */
#ifndef RELATOR_C_H
#define RELATOR_C_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#define RLT_ABI_VERSION 1u

typedef struct rlt_ctx rlt_ctx;

/* Status codes; the command line tool maps them to exit codes. */
typedef enum rlt_status {
  RLT_OK = 0,           /* success, and any requested check passed */
  RLT_CHECK_FAILED = 1, /* ran to completion but a check failed */
  RLT_USAGE = 2,        /* malformed input: spec, word text, script, id */
  RLT_INTERNAL = 3      /* unexpected internal failure */
} rlt_status;

uint32_t rlt_abi_version(void);

/* Copies the library version ("major.minor.patch") into buffer, always
 * NUL-terminated when buffer_size > 0.  Returns the full length. */
size_t rlt_version(char* buffer, size_t buffer_size);

rlt_ctx* rlt_ctx_new(void);
void rlt_ctx_free(rlt_ctx* ctx);

/* Copies the last error message recorded on ctx into buffer, always
 * NUL-terminated when buffer_size > 0.  Returns the full message length. */
size_t rlt_last_error(const rlt_ctx* ctx, char* buffer, size_t buffer_size);

/* spec_json selects a relator, either by family:
 *   {"family": "B", "genus": 2, "n": 1}
 * or by word text over the standard chain curves of a genus:
 *   {"word": "(c1 c2 c3 c4 c5)^6", "genus": 2}
 *
 * Every out parameter receives a heap-allocated NUL-terminated JSON or
 * JSON-lines document; release it with rlt_string_free.  On failure the out
 * string is set to NULL and the message is available via rlt_last_error. */

/* Checks the word's image in the integer symplectic representation.
 * RLT_OK: trivial; RLT_CHECK_FAILED: not trivial (out carries the matrix). */
rlt_status rlt_verify(rlt_ctx* ctx, const char* spec_json, char** out_json);

/* Fiber counts and e, sigma, c1^2, chi; blowdown != 0 removes nullhomotopic
 * cycles as (-1)-spheres first. */
rlt_status rlt_invariants(rlt_ctx* ctx, const char* spec_json, int blowdown,
                          char** out_json);

/* Replays a rewrite script against the relator and emits the full hashed
 * derivation log (JSON lines).  script_json is a JSON array of operations,
 * optionally carrying pre/post hashes, or a previously emitted log.
 * RLT_CHECK_FAILED: a hash check failed or a step was illegal. */
rlt_status rlt_rewrite(rlt_ctx* ctx, const char* spec_json,
                       const char* script_json, char** out_log);

/* Runs a named reproduction pipeline; out carries a JSON object with the
 * derivation log lines, stage checks, and final invariants.
 * RLT_CHECK_FAILED: some stage check did not match. */
rlt_status rlt_reproduce(rlt_ctx* ctx, const char* id, char** out_json);

/* The stored relation set as a versioned JSON document. */
rlt_status rlt_library(rlt_ctx* ctx, char** out_json);

void rlt_string_free(char* s);

#ifdef __cplusplus
}
#endif

#endif /* RELATOR_C_H */
