// Copyright 2026 The schubert-chain Authors.
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//     http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.

/*
 * C interface to the schubert-chain library.
 *
 * Every fallible call returns an sc_status. On failure the message is
 * available from sc_context_last_error() until the next call on the same
 * context. Strings returned through `char** out` are owned by the caller and
 * released with sc_string_free().
 */
#ifndef SCHUBERT_CHAIN_H
#define SCHUBERT_CHAIN_H

#include <stddef.h>
#include <stdint.h>

#if defined(SCHUBERT_CHAIN_BUILDING)
#define SC_API __attribute__((visibility("default")))
#else
#define SC_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sc_status {
  SC_OK = 0,
  SC_CONJECTURE_FAILED = 1, /* output is valid, but some check failed */
  SC_INVALID_ARGUMENT = 2,
  SC_INVARIANT_VIOLATION = 3,
  SC_CAP_EXCEEDED = 4,
  SC_IO_ERROR = 5,
  SC_INTERNAL_ERROR = 6
} sc_status;

typedef struct sc_context sc_context;
typedef struct sc_zeta sc_zeta;

SC_API const char* sc_version(void);
SC_API const char* sc_status_string(sc_status status);
SC_API void sc_string_free(char* s);

SC_API sc_context* sc_context_create(void);
SC_API void sc_context_destroy(sc_context* ctx);
SC_API const char* sc_context_last_error(const sc_context* ctx);
/* Non-fatal problems, e.g. a cache entry that could not be written. Empty
 * when there are none; cleared at the start of each call. */
SC_API const char* sc_context_last_warning(const sc_context* ctx);

/* NULL or "" selects $SCHUBERT_CHAIN_CACHE_DIR, then ".schubert-chain-cache". */
SC_API sc_status sc_context_set_cache_dir(sc_context* ctx, const char* dir);
SC_API sc_status sc_context_set_cache_enabled(sc_context* ctx, int enabled);
/* Largest n computed symbolically; `force` additionally admits n = 7. */
SC_API sc_status sc_context_set_limits(sc_context* ctx, int max_n, int force);
/* 0 uses the hardware concurrency. */
SC_API sc_status sc_context_set_threads(sc_context* ctx, unsigned threads);
/* "trailing" (default), "cyclic" or "linear". */
SC_API sc_status sc_context_set_adjacency(sc_context* ctx, const char* reading);
SC_API sc_status sc_context_set_rank_trials(sc_context* ctx, int trials, uint64_t seed);

/* Stationary vector for S_n, from the context memo, the disk cache, or a
 * fresh computation (in that order). */
SC_API sc_status sc_zeta_compute(sc_context* ctx, int n, sc_zeta** out);
SC_API void sc_zeta_destroy(sc_zeta* zeta);
SC_API int sc_zeta_n(const sc_zeta* zeta);
SC_API int sc_zeta_is_polynomial(const sc_zeta* zeta);
/* zeta(w) as a polynomial string in x1, x2, ... */
SC_API sc_status sc_zeta_value(sc_context* ctx, const sc_zeta* zeta, const char* perm, char** out);
/* format: "text", "json" or "latex"; reps: "all" or "cyclic". */
SC_API sc_status sc_zeta_render(sc_context* ctx, const sc_zeta* zeta, const char* format,
                                const char* reps, char** out);

/* which: "all", "main", "monomial-factor", "special-value",
 * "special-factors" or "propositions"; format: "text" or "json".
 * Returns SC_CONJECTURE_FAILED (with *out set) when any check fails. */
SC_API sc_status sc_check(sc_context* ctx, int n, const char* which, const char* format,
                          char** out);
/* format: "text" or "json". */
SC_API sc_status sc_matrix(sc_context* ctx, int n, const char* format, char** out);
/* Schubert polynomial of a permutation; letters != 0 names variables a..d. */
SC_API sc_status sc_schubert(sc_context* ctx, const char* perm, int letters, char** out);
/* Schubert-basis expansion of a polynomial; format "text" or "json". */
SC_API sc_status sc_expand(sc_context* ctx, const char* poly, const char* format, char** out);

typedef struct sc_simulation_config {
  int n;
  const char* const* x; /* n-1 values, integers, p/q or decimals */
  size_t x_count;
  uint64_t steps;
  uint64_t seed;
  const char* start;    /* NULL: identity */
  double burn_in;       /* fraction of steps discarded, in [0, 1) */
  unsigned trajectories;
  int compare_exact;    /* also report the TV distance to the exact law */
} sc_simulation_config;

/* Fills in the defaults: n = 3, 10^5 steps, seed 0, burn-in 0.1, one trajectory. */
SC_API void sc_simulation_config_init(sc_simulation_config* config);
/* JSON {n, steps, seed, burn_in, trajectories, freqs: {w: f}, tv_to_exact?}. */
SC_API sc_status sc_simulate(sc_context* ctx, const sc_simulation_config* config, char** out);

/* JSON rank report. Returns SC_CONJECTURE_FAILED when some rank is short. */
SC_API sc_status sc_rank(sc_context* ctx, int n, int trials, uint64_t seed, char** out);
/* Exact stationary law at a point, JSON {w: "p/q"}. */
SC_API sc_status sc_stationary_numeric(sc_context* ctx, int n, const char* const* x,
                                       size_t x_count, char** out);

#ifdef __cplusplus
}
#endif

#endif /* SCHUBERT_CHAIN_H */
