// Copyright 2026 The weylruns Authors
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

/* C interface to weylruns. All objects are opaque handles; every fallible
 * call returns a wr_status and leaves a message for wr_last_error(). */

#ifndef WEYLRUNS_H
#define WEYLRUNS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#if defined(WR_BUILDING_LIBRARY)
#define WR_API __declspec(dllexport)
#else
#define WR_API __declspec(dllimport)
#endif
#else
#define WR_API __attribute__((visibility("default")))
#endif

typedef enum {
  WR_OK = 0,
  WR_ERR_DOMAIN = 1,    /* bad arguments or flag combination */
  WR_ERR_INTEGRITY = 2, /* exactness contract broken */
  WR_ERR_INTERNAL = 3
} wr_status;

typedef enum { WR_GROUP_A = 0, WR_GROUP_B = 1, WR_GROUP_D = 2, WR_GROUP_BMD = 3 } wr_group;
typedef enum { WR_SIGN_NONE = 0, WR_SIGN_INV_A = 1, WR_SIGN_INV_B = 2, WR_SIGN_INV_D = 3 } wr_sign;
typedef enum { WR_PARITY_ALL = 0, WR_PARITY_PLUS = 1, WR_PARITY_MINUS = 2 } wr_parity;
/* End directions and first-letter signs; WR_UNSET leaves them free. */
enum { WR_UNSET = -1, WR_ASCENT = 0, WR_DESCENT = 1, WR_FIRST_POSITIVE = 0, WR_FIRST_NEGATIVE = 1 };
typedef enum { WR_FORMAT_JSON = 0, WR_FORMAT_CSV = 1, WR_FORMAT_LATEX = 2, WR_FORMAT_TEXT = 3 } wr_format;

typedef struct wr_context wr_context;
typedef struct wr_poly wr_poly;
typedef struct wr_report wr_report;

typedef struct {
  int group;     /* wr_group */
  int n;
  int sign;      /* wr_sign */
  int end_first; /* type A only */
  int end_last;
  int first_sign; /* types B/D only */
  int parity;     /* wr_parity */
  int bivariate;  /* nonzero: polynomial in p (peaks) and q (valleys) */
} wr_dist_request;

WR_API const char* wr_version(void);
/* Message for the last failure on this thread; empty after success. */
WR_API const char* wr_last_error(void);
WR_API void wr_string_free(char* s);
/* Fills a request with the unrestricted distribution over S_1. */
WR_API void wr_dist_request_init(wr_dist_request* req);

/* threads = 0 takes WEYLRUNS_THREADS or the hardware concurrency. */
WR_API wr_status wr_context_new(unsigned threads, wr_context** out);
WR_API void wr_context_free(wr_context* ctx);
/* Largest n enumerated per family; 0 keeps the current value. */
WR_API wr_status wr_context_set_caps(wr_context* ctx, int cap_a, int cap_bd);

WR_API wr_status wr_dist(wr_context* ctx, const wr_dist_request* req, wr_poly** out);
WR_API wr_status wr_poly_render(const wr_poly* p, int format, char** out);
WR_API wr_status wr_poly_parse_json(const char* text, wr_poly** out);
WR_API int wr_poly_equal(const wr_poly* a, const wr_poly* b);
WR_API void wr_poly_free(wr_poly* p);

WR_API int wr_theorem_count(void);
WR_API const char* wr_theorem_id(int i);
WR_API int wr_is_theorem_id(const char* id);
/* id may be "all". */
WR_API wr_status wr_verify(wr_context* ctx, const char* id, int n_min, int n_max, wr_report** out);
WR_API wr_status wr_report_render(const wr_report* r, int format, char** out);
WR_API int wr_report_passed(const wr_report* r);
WR_API void wr_report_free(wr_report* r);

/* format is WR_FORMAT_CSV or WR_FORMAT_JSON. */
WR_API wr_status wr_table(wr_context* ctx, const char* family, int n_min, int n_max, int format, char** out);

#ifdef __cplusplus
}
#endif

#endif /* WEYLRUNS_H */
