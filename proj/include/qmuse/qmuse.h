/*
 * qmuse — quantum-circuit generative music engines behind a C interface.
 *
 * Three generators share a small statevector simulator:
 *   - walk1d:        one-qubit quantum-die random walk over a 12-tone series
 *   - cubewalk:      five-qubit walk over pitch and rhythm cubes
 *   - basak-miranda: Grover-interference Markov-chain note selection
 *
 * Every function that can fail returns a qmuse_status; on failure
 * qmuse_last_error() carries a message for the calling thread. Handles are
 * opaque and freed with their _destroy function. Rendered buffers are
 * binary-safe and released with qmuse_buffer_free().
 *
 * All randomness is derived from the 64-bit seed in the parameter structs;
 * identical parameters produce byte-identical artifacts, independent of the
 * thread count.
 */
#ifndef QMUSE_H
#define QMUSE_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define QMUSE_API __declspec(dllexport)
#else
#define QMUSE_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum qmuse_status {
  QMUSE_OK = 0,
  QMUSE_ERROR_ARGUMENT = 1, /* invalid parameter or malformed input file */
  QMUSE_ERROR_IO = 2,       /* file could not be read or written */
  QMUSE_ERROR_INTERNAL = 3  /* violated internal invariant */
} qmuse_status;

typedef enum qmuse_format {
  QMUSE_FORMAT_TEXT = 0,
  QMUSE_FORMAT_CSV = 1,
  QMUSE_FORMAT_JSON = 2,
  QMUSE_FORMAT_MIDI = 3
} qmuse_format;

typedef struct qmuse_rules qmuse_rules;
typedef struct qmuse_dictionary qmuse_dictionary;
typedef struct qmuse_result qmuse_result;

QMUSE_API const char* qmuse_version(void);

/* Message describing the last failure on this thread; empty when none. */
QMUSE_API const char* qmuse_last_error(void);

QMUSE_API void qmuse_buffer_free(char* data);

/* ---- sequencing rules ------------------------------------------------- */

/* The built-in twelve-tone successor table. */
QMUSE_API qmuse_status qmuse_rules_create_default(qmuse_rules** out);

/* JSON table: {"alphabet": [12 names], "rules": {"E": ["F", "D#"], ...}} */
QMUSE_API qmuse_status qmuse_rules_load_file(const char* path, qmuse_rules** out);

QMUSE_API void qmuse_rules_destroy(qmuse_rules* rules);

/* Index of a note name (ASCII or Unicode accidentals), or -1. */
QMUSE_API int qmuse_rules_note_index(const qmuse_rules* rules, const char* name);

/* Label for an index in [0, 12), or NULL. */
QMUSE_API const char* qmuse_rules_note_name(const qmuse_rules* rules, int index);

/* ---- pitch/rhythm dictionaries ---------------------------------------- */

/* Persian scale on C for pitches, standard figures for rhythms. */
QMUSE_API qmuse_status qmuse_dictionary_create_default(qmuse_dictionary** out);

/* JSON overrides: {"pitch": {"000": "C4", ...}, "rhythm": {"000": 4, ...}} */
QMUSE_API qmuse_status qmuse_dictionary_load_file(const char* path,
                                                  qmuse_dictionary** out);

QMUSE_API void qmuse_dictionary_destroy(qmuse_dictionary* dictionary);

/* ---- engines ----------------------------------------------------------- */

typedef struct qmuse_walk1d_params {
  uint64_t seed;
  int steps;               /* die throws; the walk emits steps + 1 notes */
  const char* start_note;  /* e.g. "C#" */
  double duration_beats;   /* <= 0 selects the default of 1 */
  double tempo_bpm;        /* <= 0 selects the default of 120 */
} qmuse_walk1d_params;

QMUSE_API qmuse_status qmuse_walk1d_run(const qmuse_walk1d_params* params,
                                        qmuse_result** out);

typedef struct qmuse_cubewalk_params {
  uint64_t seed;
  int steps;
  int shots;   /* <= 0 selects the default of 40 */
  int threads; /* <= 0 selects 1 */
  const char* start_pitch;  /* three binary digits, q0 first: "000" */
  const char* start_rhythm; /* e.g. "100" */
  const qmuse_dictionary* dictionary; /* NULL selects the defaults */
  double tempo_bpm;
} qmuse_cubewalk_params;

QMUSE_API qmuse_status qmuse_cubewalk_run(const qmuse_cubewalk_params* params,
                                          qmuse_result** out);

typedef struct qmuse_basak_miranda_params {
  uint64_t seed;
  int length; /* selection cycles; the result has length + 1 notes */
  int shots;
  int threads;
  const char* start_note;
  const qmuse_rules* rules; /* NULL selects the built-in table */
  double duration_beats;
  double tempo_bpm;
} qmuse_basak_miranda_params;

QMUSE_API qmuse_status qmuse_basak_miranda_run(
    const qmuse_basak_miranda_params* params, qmuse_result** out);

/* Two-qubit interference walkthrough: the amplitude chain, the delta
 * diagnostics and a sampled histogram for the |01> target. */
QMUSE_API qmuse_status qmuse_grover_demo_run(int shots, uint64_t seed,
                                             qmuse_result** out);

/* ---- results ----------------------------------------------------------- */

/* Number of notes in the rendered score (0 for the Grover demo). */
QMUSE_API size_t qmuse_result_note_count(const qmuse_result* result);

/* MIDI note number of note i, or -1 when out of range. */
QMUSE_API int qmuse_result_midi_note(const qmuse_result* result, size_t index);

/* Renders an artifact into a fresh buffer (NUL-terminated, but may contain
 * embedded zeros for MIDI; use *size). */
QMUSE_API qmuse_status qmuse_result_render(const qmuse_result* result,
                                           qmuse_format format, char** data,
                                           size_t* size);

QMUSE_API qmuse_status qmuse_result_write_file(const qmuse_result* result,
                                               qmuse_format format,
                                               const char* path);

QMUSE_API void qmuse_result_destroy(qmuse_result* result);

#ifdef __cplusplus
} /* extern "C" */
#endif

#endif /* QMUSE_H */
