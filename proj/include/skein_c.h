/* C interface to the skein library. Strings returned through out-parameters
   are owned by the caller and released with skein_string_free; handles are
   released with their own free function. */
#ifndef SKEIN_C_H
#define SKEIN_C_H

#if defined(_WIN32)
#define SKEIN_API __declspec(dllexport)
#elif defined(__GNUC__)
#define SKEIN_API __attribute__((visibility("default")))
#else
#define SKEIN_API
#endif

#ifdef __cplusplus
extern "C" {
#endif

typedef enum {
  SKEIN_OK = 0,
  SKEIN_ERR_USAGE = 1,
  SKEIN_NO_RESULT = 2, /* not reducible, or no certificate */
  SKEIN_ERR_PARSE = 3,
  SKEIN_ERR_DOMAIN = 4,
  SKEIN_ERR_NULL = 5,
  SKEIN_ERR_INTERNAL = 6
} skein_status;

typedef struct skein_result skein_result;
typedef struct skein_fg_element skein_fg_element;

SKEIN_API const char* skein_version(void);
/* message of the last failed call on this thread, "" if none */
SKEIN_API const char* skein_last_error(void);
SKEIN_API void skein_string_free(char* s);

/* request_json: {"subcommand": ..., "args": {...}}; cache_dir may be NULL.
   SKEIN_NO_RESULT still fills *out. */
SKEIN_API skein_status skein_run(const char* request_json, const char* cache_dir, skein_result** out);
SKEIN_API const char* skein_result_text(const skein_result* r);
SKEIN_API const char* skein_result_envelope(const skein_result* r); /* compact JSON */
SKEIN_API int skein_result_exit_code(const skein_result* r);
SKEIN_API int skein_result_cache_hit(const skein_result* r);
SKEIN_API void skein_result_free(skein_result* r);

/* torus skein algebra elements, e.g. "(1,0) + A^2*(0,1)" */
SKEIN_API skein_status skein_fg_parse(const char* text, skein_fg_element** out);
SKEIN_API skein_status skein_fg_multiply(const skein_fg_element* a, const skein_fg_element* b, skein_fg_element** out);
SKEIN_API skein_status skein_fg_add(const skein_fg_element* a, const skein_fg_element* b, skein_fg_element** out);
SKEIN_API int skein_fg_equal(const skein_fg_element* a, const skein_fg_element* b);
SKEIN_API skein_status skein_fg_to_string(const skein_fg_element* a, char** out);
SKEIN_API void skein_fg_free(skein_fg_element* a);

#ifdef __cplusplus
}
#endif

#endif
