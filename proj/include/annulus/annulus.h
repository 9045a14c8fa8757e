/* C interface to the annulus map library.  Strings returned through
 * `char** out` are owned by the caller and released with annulus_string_free;
 * maps are released with annulus_map_free.  Rationals are passed as "p" or
 * "p/q" strings. */
#ifndef ANNULUS_ANNULUS_H
#define ANNULUS_ANNULUS_H

#ifdef __cplusplus
extern "C" {
#endif

#if defined(_WIN32)
#define ANNULUS_API __declspec(dllexport)
#else
#define ANNULUS_API __attribute__((visibility("default")))
#endif

typedef struct annulus_map annulus_map;

typedef enum annulus_status {
  ANNULUS_OK = 0,
  ANNULUS_ERR_PARSE = 1,
  ANNULUS_ERR_INVALID_ARGUMENT = 2,
  ANNULUS_ERR_NOT_CERTIFIED = 3,
  ANNULUS_ERR_PRECONDITION = 4,
  ANNULUS_ERR_CONTRADICTION = 5,
  ANNULUS_ERR_INTERNAL = 6
} annulus_status;

typedef struct annulus_kf_options {
  unsigned trials;
  unsigned long long seed;
  unsigned threads;
  int exact; /* nonzero: symbolic hyperplane */
} annulus_kf_options;

ANNULUS_API void annulus_kf_options_default(annulus_kf_options* options);

/* Message of the last failing call on this thread ("" if none). */
ANNULUS_API const char* annulus_last_error(void);
ANNULUS_API void annulus_string_free(char* s);

/* Map document text; declared sphere pairs are re-certified. */
ANNULUS_API annulus_status annulus_map_parse(const char* text, annulus_map** out);
ANNULUS_API annulus_status annulus_map_from_json(const char* json_text, annulus_map** out);
ANNULUS_API void annulus_map_free(annulus_map* map);
ANNULUS_API unsigned annulus_map_source_dim(const annulus_map* map);
ANNULUS_API unsigned annulus_map_target_dim(const annulus_map* map);
ANNULUS_API annulus_status annulus_map_serialize(const annulus_map* map, char** out);
ANNULUS_API annulus_status annulus_map_to_json(const annulus_map* map, char** out);
ANNULUS_API int annulus_map_equal(const annulus_map* a, const annulus_map* b);

ANNULUS_API annulus_status annulus_map_homogeneous(unsigned n, unsigned d, annulus_map** out);
ANNULUS_API annulus_status annulus_map_juxtapose(const annulus_map* f, const annulus_map* g, const char* t,
                                                 annulus_map** out);
ANNULUS_API annulus_status annulus_map_affine_embedding(unsigned n, unsigned N, const char* s, const char* t,
                                                        annulus_map** out);
ANNULUS_API annulus_status annulus_map_pad(const annulus_map* f, unsigned N, const char* c, annulus_map** out);

/* Reports: JSON when `json` is nonzero, otherwise text. */
ANNULUS_API annulus_status annulus_invariants(const annulus_map* map, const annulus_kf_options* options, int json,
                                              char** out);
ANNULUS_API annulus_status annulus_verify(const annulus_map* map, const char* s, const char* t, int json, char** out);
ANNULUS_API annulus_status annulus_classify(const annulus_map* map, const char* s, const char* t,
                                            const annulus_kf_options* options, int json, char** out);
ANNULUS_API annulus_status annulus_classify_2_3(const annulus_map* map, const char* s, const char* t, int json,
                                                char** out);
ANNULUS_API annulus_status annulus_orbit(const annulus_map* map, const char* s, const char* t, unsigned k,
                                         const annulus_kf_options* options, int json, char** out);

/* Re-verifies every witness in a JSON report.  ANNULUS_OK when all pass,
 * ANNULUS_ERR_NOT_CERTIFIED otherwise; `out` receives a summary. */
ANNULUS_API annulus_status annulus_check_json(const char* json_text, char** out);

#ifdef __cplusplus
}
#endif

#endif
