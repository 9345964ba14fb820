/* C interface to the symbolic-dynamics engine. Objects are opaque handles;
 * every call returns a status code and leaves a message for sd_last_error()
 * on failure. Strings returned through char** are owned by the caller and
 * released with sd_string_free. */
#ifndef SYMDYN_H
#define SYMDYN_H

#include <stddef.h>
#include <stdint.h>

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define SD_API __declspec(dllexport)
#else
#define SD_API __attribute__((visibility("default")))
#endif

typedef struct sd_ca sd_ca;
typedef struct sd_shift sd_shift;
typedef struct sd_report sd_report;

typedef enum sd_status {
  SD_OK = 0,
  SD_ERR_PARSE = 1,
  SD_ERR_DOMAIN = 2,
  SD_ERR_RESOURCE = 3,
  SD_ERR_RANGE = 4,
  SD_ERR_ARG = 5,
  SD_ERR_INTERNAL = 6
} sd_status;

typedef struct sd_budgets {
  uint32_t max_power;   /* constant-power prover */
  uint32_t max_period;  /* witness prover */
  uint32_t chain_steps; /* chain prover and limitset N */
  uint32_t jobs;
  uint64_t pattern_cap;
  uint64_t state_cap;
} sd_budgets;

SD_API void sd_budgets_default(sd_budgets* out);

/* Cellular automata: rule-file text, a file path, or a Wolfram number. */
SD_API sd_status sd_ca_parse(const char* text, const char* source_name, sd_ca** out);
SD_API sd_status sd_ca_load(const char* path, sd_ca** out);
SD_API sd_status sd_ca_elementary(unsigned number, sd_ca** out);
SD_API sd_status sd_ca_serialize(const sd_ca* ca, char** out);
SD_API void sd_ca_free(sd_ca* ca);

/* Subshifts: SFT or graph text, a file path, or a preset ("full",
 * "golden") over the alphabet of a rule. */
SD_API sd_status sd_shift_parse(const char* text, const char* source_name, sd_shift** out);
SD_API sd_status sd_shift_load(const char* path, sd_shift** out);
SD_API sd_status sd_shift_preset(const char* name, const sd_ca* ca, sd_shift** out);
SD_API void sd_shift_free(sd_shift* shift);

/* Analyses. Budgets may be NULL for the defaults. */
SD_API sd_status sd_nilpotency(const sd_shift* shift, const sd_ca* ca, const sd_budgets* budgets, sd_report** out);
/* Uses the directory in LIMITSET_CACHE_DIR, when set, as a presentation cache. */
SD_API sd_status sd_limit_set(const sd_shift* shift, const sd_ca* ca, uint32_t n, sd_report** out);
SD_API sd_status sd_image(const sd_shift* shift, const sd_ca* ca, sd_report** out);
/* terminal may be NULL to skip the starred grid. */
SD_API sd_status sd_spacetime_check(const sd_shift* shift, const sd_ca* ca, int32_t i_max, int32_t j_max,
                                    const char* terminal, sd_report** out);
SD_API sd_status sd_periodic(const sd_shift* shift, const sd_ca* ca, uint32_t period, sd_report** out);
/* point: symbol names of one period separated by spaces; entourage [lo, hi]. */
SD_API sd_status sd_chainrec(const sd_shift* shift, const sd_ca* ca, const char* point, int64_t lo, int64_t hi,
                             uint32_t max_period, sd_report** out);
SD_API sd_status sd_mixing(const sd_shift* shift, sd_report** out);
SD_API sd_status sd_example(const char* name, sd_report** out);
/* Newline-separated example names. */
SD_API sd_status sd_example_names(char** out);

/* Reports. outcome: 0 decisive, 2 inconclusive (Unknown, Truncated, Exhausted). */
SD_API sd_status sd_report_json(const sd_report* report, char** out);
SD_API sd_status sd_report_text(const sd_report* report, char** out);
SD_API sd_status sd_report_parse_json(const char* json, sd_report** out);
SD_API int sd_report_outcome(const sd_report* report);
SD_API double sd_report_seconds(const sd_report* report);
SD_API void sd_report_free(sd_report* report);

SD_API void sd_string_free(char* s);
/* Message of the last failed call on this thread; empty when none. */
SD_API const char* sd_last_error(void);

#ifdef __cplusplus
}
#endif

#endif
