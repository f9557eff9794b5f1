// Copyright 2026 The sdmw Authors
//
// Licensed under the Apache License, Version 2.0 (the "License");
// you may not use this file except in compliance with the License.
// You may obtain a copy of the License at
//
//      http://www.apache.org/licenses/LICENSE-2.0
//
// Unless required by applicable law or agreed to in writing, software
// distributed under the License is distributed on an "AS IS" BASIS,
// WITHOUT WARRANTIES OR CONDITIONS OF ANY KIND, either express or implied.
// See the License for the specific language governing permissions and
// limitations under the License.
/* C interface to the sdm core. Every call takes a context; results are
 * JSON text owned by the context and valid until the next call on it. */
#ifndef SDM_SDM_H
#define SDM_SDM_H

#if defined(_WIN32)
#define SDM_API __declspec(dllexport)
#else
#define SDM_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sdm_status {
  SDM_OK = 0,       /* success, positive verdict */
  SDM_NEGATIVE = 1, /* rejected proof, failed check, countermodel, not found */
  SDM_EINPUT = 2,   /* malformed input or bad arguments */
  SDM_EINTERNAL = 3
} sdm_status;

typedef struct sdm_context sdm_context;
typedef struct sdm_algebra sdm_algebra; /* validated SMA or heterogeneous */
typedef struct sdm_proof sdm_proof;

SDM_API sdm_context* sdm_context_new(void);
SDM_API void sdm_context_free(sdm_context* ctx);
/* JSON produced by the last successful or negative call. */
SDM_API const char* sdm_result(const sdm_context* ctx);
/* Message for the last SDM_EINPUT / SDM_EINTERNAL, else "". */
SDM_API const char* sdm_error(const sdm_context* ctx);
SDM_API const char* sdm_status_name(sdm_status s);

/* "(seq X Y)" or a formula/structure of either sort. */
SDM_API sdm_status sdm_parse(sdm_context* ctx, const char* text);
/* Single-type formula, or "(seq A B)" of single-type formulas. */
SDM_API sdm_status sdm_translate(sdm_context* ctx, const char* text);

/* Loads and validates algebra JSON. On SDM_NEGATIVE the result holds the
 * failing report and *out is NULL. */
SDM_API sdm_status sdm_algebra_load(sdm_context* ctx, const char* json,
                            sdm_algebra** out);
SDM_API void sdm_algebra_free(sdm_algebra* a);
/* Report and flags of a loaded algebra. */
SDM_API sdm_status sdm_algebra_describe(sdm_context* ctx, const sdm_algebra* a);
SDM_API sdm_status sdm_algebra_kernel(sdm_context* ctx, const sdm_algebra* a);
SDM_API sdm_status sdm_algebra_heterogenize(sdm_context* ctx, const sdm_algebra* a);
/* Validity of a sequent; heterogenizes an SMA first. */
SDM_API sdm_status sdm_validate(sdm_context* ctx, const sdm_algebra* a,
                        const char* sequent);
/* All SMAs up to max_size, optionally restricted to a variety list such
 * as "DPL WSA" (NULL or "" for all). */
SDM_API sdm_status sdm_enumerate(sdm_context* ctx, int max_size, const char* variety);

/* system: sm lqm uqm dp ap ws. max_visited <= 0 uses the default. */
SDM_API sdm_status sdm_prove(sdm_context* ctx, const char* sequent,
                     const char* system, int max_depth, long max_visited,
                     sdm_proof** out);
SDM_API sdm_status sdm_proof_load(sdm_context* ctx, const char* json,
                          sdm_proof** out);
SDM_API void sdm_proof_free(sdm_proof* p);
SDM_API sdm_status sdm_proof_json(sdm_context* ctx, const sdm_proof* p);
SDM_API sdm_status sdm_proof_check(sdm_context* ctx, const sdm_proof* p,
                           const char* system);
/* path: premise indices from the root, e.g. "0.1"; "" is the root. */
SDM_API sdm_status sdm_reduce_cut(sdm_context* ctx, const sdm_proof* p,
                          const char* path, sdm_proof** out);

/* "(seq lhs rhs)" of one sort. */
SDM_API sdm_status sdm_classify(sdm_context* ctx, const char* sequent);

/* profile: "quick" or "full"; criterion 0 runs all. */
SDM_API sdm_status sdm_suite(sdm_context* ctx, const char* profile, int criterion);

#ifdef __cplusplus
}
#endif

#endif
