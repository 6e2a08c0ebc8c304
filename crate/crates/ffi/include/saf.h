/* Generated by cbindgen from crates/ffi. Do not edit. */

#ifndef SAF_H
#define SAF_H

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

typedef enum SafStatus {
  SAF_STATUS_OK = 0,
  SAF_STATUS_NULL_POINTER = 1,
  SAF_STATUS_INVALID_UTF8 = 2,
  SAF_STATUS_PARSE_ERROR = 3,
  SAF_STATUS_UNKNOWN_ARGUMENT = 4,
  SAF_STATUS_UNKNOWN_NAME = 5,
  SAF_STATUS_NOT_ADMISSIBLE = 6,
  SAF_STATUS_INVALID_INPUT = 7,
  SAF_STATUS_PANIC = 8,
} SafStatus;

// Opaque framework handle.
typedef struct SafFramework SafFramework;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

// Parses `text` in `format` (`"tgf"`, `"apx"` or `"json"`) into a new
// handle stored in `*out`.
//
// # Safety
// `text` and `format` must be NUL-terminated strings; `out` must be
// writable.
enum SafStatus saf_framework_parse(const char *text, const char *format, struct SafFramework **out);

// # Safety
// `fw` must be null or a handle from [`saf_framework_parse`] not yet freed.
void saf_framework_free(struct SafFramework *fw);

// Number of arguments, or 0 for a null handle.
//
// # Safety
// `fw` must be null or a live handle.
size_t saf_framework_num_arguments(const struct SafFramework *fw);

// Extensions of a preset (`"ad"`, `"co"`, `"gr"`, `"st"`, `"pr"`, `"sa"`,
// `"uc"`) as a JSON array of `{extension, witness}` objects.
//
// # Safety
// `fw` must be a live handle, `semantics` a NUL-terminated string and
// `out` writable.
enum SafStatus saf_extensions_json(const struct SafFramework *fw,
                                   const char *semantics,
                                   char **out);

// Classified initial sets as a JSON array of `{set, class, conflicts, scc}`.
//
// # Safety
// `fw` must be a live handle and `out` writable.
enum SafStatus saf_initial_sets_json(const struct SafFramework *fw, char **out);

// Canonical serialisation sequence of the admissible set given as
// comma-separated labels.
//
// # Safety
// `fw` must be a live handle, `set` a NUL-terminated string and `out`
// writable.
enum SafStatus saf_decompose_json(const struct SafFramework *fw, const char *set, char **out);

// Answers a decision task such as `"VER-IS-CH"`, `"EXISTS-IS-UC"` or
// `"DS-IS"`. `subject` is a comma-separated set for VER, an argument label
// for DC/DS and ignored (may be null) otherwise.
//
// # Safety
// `fw` must be a live handle, `task` a NUL-terminated string, `subject`
// null or NUL-terminated, and `answer` writable.
enum SafStatus saf_decide(const struct SafFramework *fw,
                          const char *task,
                          const char *subject,
                          bool *answer);

// Message for the last failed call on this thread, or null. The pointer
// stays valid until the next call into this library on the same thread.
const char *saf_last_error_message(void);

// # Safety
// `s` must be null or a string returned by this library not yet freed.
void saf_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* SAF_H */
