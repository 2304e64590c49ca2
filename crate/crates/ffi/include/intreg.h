#ifndef INTREG_H
#define INTREG_H

/* Generated by cbindgen from crates/ffi/src/lib.rs; do not edit. */

#include <stdarg.h>
#include <stdbool.h>
#include <stddef.h>
#include <stdint.h>
#include <stdlib.h>

/**
 * Result codes of the C API.
 */
typedef enum IntregStatus {
  INTREG_STATUS_OK = 0,
  INTREG_STATUS_NULL_ARGUMENT = 1,
  INTREG_STATUS_INVALID_UTF8 = 2,
  INTREG_STATUS_PARSE_ERROR = 3,
  INTREG_STATUS_INVALID_AUTOMATON = 4,
  INTREG_STATUS_UNKNOWN_PROBLEM = 5,
  INTREG_STATUS_UNSUPPORTED = 6,
  INTREG_STATUS_SEARCH_LIMIT = 7,
  INTREG_STATUS_INTERNAL = 8,
} IntregStatus;

/**
 * An automaton over the encoding alphabet.
 */
typedef struct IntregAutomaton IntregAutomaton;

/**
 * The outcome of [`intreg_decide`].
 */
typedef struct IntregDecision IntregDecision;

#ifdef __cplusplus
extern "C" {
#endif // __cplusplus

/**
 * Compiles a regular expression into an automaton.
 *
 * # Safety
 * `pattern` is a nul-terminated string and `out` a writable pointer.
 */
enum IntregStatus intreg_automaton_from_regex(const char *pattern, struct IntregAutomaton **out);

/**
 * Reads an automaton from its JSON form.
 *
 * # Safety
 * `json` is a nul-terminated string and `out` a writable pointer.
 */
enum IntregStatus intreg_automaton_from_json(const char *json, struct IntregAutomaton **out);

/**
 * Number of states, or 0 for a null handle.
 *
 * # Safety
 * `automaton` is null or a live handle.
 */
size_t intreg_automaton_num_states(const struct IntregAutomaton *automaton);

/**
 * Whether the automaton accepts `word`. Writes the answer to `out`.
 *
 * # Safety
 * `automaton` is a live handle, `word` a nul-terminated string and `out`
 * a writable pointer.
 */
enum IntregStatus intreg_automaton_accepts(const struct IntregAutomaton *automaton,
                                           const char *word,
                                           bool *out);

/**
 * # Safety
 * `automaton` is null or a handle not yet freed.
 */
void intreg_automaton_free(struct IntregAutomaton *automaton);

/**
 * Decides whether the automaton's language contains a positive instance
 * of `problem`. `max_search` bounds the configurations explored; 0 selects
 * the default.
 *
 * # Safety
 * `automaton` is a live handle, `problem` a nul-terminated string and `out`
 * a writable pointer.
 */
enum IntregStatus intreg_decide(const struct IntregAutomaton *automaton,
                                const char *problem,
                                uint64_t max_search,
                                struct IntregDecision **out);

/**
 * # Safety
 * `decision` is null or a live handle.
 */
bool intreg_decision_is_nonempty(const struct IntregDecision *decision);

/**
 * The witness word, or null when the language is empty. Free with
 * [`intreg_string_free`].
 *
 * # Safety
 * `decision` is null or a live handle.
 */
char *intreg_decision_witness(const struct IntregDecision *decision);

/**
 * The decision as JSON. Free with [`intreg_string_free`].
 *
 * # Safety
 * `decision` is null or a live handle.
 */
char *intreg_decision_to_json(const struct IntregDecision *decision);

/**
 * # Safety
 * `decision` is null or a handle not yet freed.
 */
void intreg_decision_free(struct IntregDecision *decision);

/**
 * Checks a witness word independently of the decision procedure.
 *
 * # Safety
 * `automaton` is a live handle, `problem` and `word` nul-terminated strings
 * and `out` a writable pointer.
 */
enum IntregStatus intreg_verify_witness(const struct IntregAutomaton *automaton,
                                        const char *problem,
                                        const char *word,
                                        bool *out);

/**
 * The last error message on this thread, or null. Free with
 * [`intreg_string_free`].
 */
char *intreg_last_error(void);

/**
 * # Safety
 * `s` is null or a string returned by this library and not yet freed.
 */
void intreg_string_free(char *s);

#ifdef __cplusplus
}  // extern "C"
#endif  // __cplusplus

#endif  /* INTREG_H */
