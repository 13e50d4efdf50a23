#ifndef SMASHKIT_H
#define SMASHKIT_H

#include <stddef.h>
#include <stdint.h>

#if defined(_WIN32)
#define SK_API __declspec(dllexport)
#else
#define SK_API __attribute__((visibility("default")))
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum sk_status {
  SK_OK = 0,
  SK_MISMATCH = 1,          /* a mathematical check failed; any report is still returned */
  SK_ERR_INVALID_ARGUMENT = 2,
  SK_ERR_PARSE = 3,
  SK_ERR_CAP_EXCEEDED = 4,
  SK_ERR_NOT_FACTORIZED = 5,
  SK_ERR_NOT_FROBENIUS = 6,
  SK_ERR_ALGEBRA = 7,       /* non-semisimple, non-split, non-nilpotent and similar */
  SK_ERR_INTERNAL = 8
} sk_status;

typedef struct sk_config {
  uint64_t seed;
  uint64_t oracle_dim_cap;
  uint64_t hopf_dim_cap;
  uint64_t algebra_dim_cap;
  uint64_t order_cap;
  uint64_t enumeration_cap;
} sk_config;

typedef struct sk_group sk_group;
typedef struct sk_factorized sk_factorized;
typedef struct sk_algebra sk_algebra;

/* Defaults: seed 0, oracle 256, Hopf 64, algebra 2000, order 10^6, enumeration 10^5. */
SK_API void sk_config_init(sk_config* cfg);

SK_API const char* sk_version(void);
SK_API const char* sk_status_name(sk_status status);
/* Message of the last failure on the calling thread; never NULL. */
SK_API const char* sk_last_error(void);
/* Frees strings returned through char** out-parameters. */
SK_API void sk_string_free(char* s);

/* Groups from 1-based cycle strings such as "(1 2 3)(4 5)". */
SK_API sk_status sk_group_create(size_t degree, const char* const* generators, size_t count, const sk_config* cfg,
                                 sk_group** out);
SK_API void sk_group_free(sk_group* g);
SK_API sk_status sk_group_order(const sk_group* g, uint64_t* out);
SK_API sk_status sk_group_contains(const sk_group* g, const char* cycles, int* out);

SK_API sk_status sk_factorize(const sk_group* g, const sk_group* l, const sk_group* f, sk_factorized** out);
SK_API void sk_factorized_free(sk_factorized* fg);
/* Writes up to capacity dimensions (ascending); *count receives the total. */
SK_API sk_status sk_kmm_dimensions(const sk_factorized* fg, uint64_t* dims, size_t capacity, size_t* count);

SK_API sk_status sk_build_algebra(const sk_factorized* fg, const sk_config* cfg, sk_algebra** out);
SK_API sk_status sk_algebra_from_json(const char* json, sk_algebra** out);
SK_API sk_status sk_algebra_to_json(const sk_algebra* a, char** out);
SK_API sk_status sk_algebra_dim(const sk_algebra* a, uint64_t* out);
SK_API void sk_algebra_free(sk_algebra* a);
SK_API sk_status sk_decompose(const sk_algebra* a, uint64_t seed, uint64_t* degrees, size_t capacity, size_t* count);

/* Command runners. On SK_OK or SK_MISMATCH *report holds the JSON report. */
SK_API sk_status sk_run_pgl(uint64_t q, const sk_config* cfg, char** report);
SK_API sk_status sk_run_bismash(const char* spec_json, const sk_config* cfg, char** report);
SK_API sk_status sk_run_frobenius(const char* name, const sk_config* cfg, char** report);
SK_API sk_status sk_run_frobenius_spec(const char* spec_json, const sk_config* cfg, char** report);
SK_API sk_status sk_run_screen(uint64_t q_from, uint64_t q_to, const sk_config* cfg, char** report);
SK_API sk_status sk_run_singer(unsigned n, const sk_config* cfg, char** report);
SK_API sk_status sk_run_decompose(const char* algebra_json, const sk_config* cfg, char** report);
SK_API sk_status sk_export_pgl_algebra(uint64_t q, const sk_config* cfg, char** json);
SK_API sk_status sk_export_spec_algebra(const char* spec_json, const sk_config* cfg, char** json);
SK_API sk_status sk_render_table(const char* report_json, char** out);

#ifdef __cplusplus
}
#endif

#endif
