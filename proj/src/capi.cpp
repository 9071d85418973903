#include "skein_c.h"

#include <cstdlib>
#include <cstring>
#include <new>
#include <string>

#include "command.hpp"
#include "skein/torus_skein.hpp"

struct skein_result {
  std::string text, envelope;
  int exit_code = 0;
  bool cache_hit = false;
};

struct skein_fg_element {
  skein::FGElement e;
};

namespace {

thread_local std::string g_last_error;

skein_status fail(skein_status s, const std::string& msg) {
  g_last_error = msg;
  return s;
}

char* dup(const std::string& s) {
  char* p = static_cast<char*>(std::malloc(s.size() + 1));
  if (p) std::memcpy(p, s.c_str(), s.size() + 1);
  return p;
}

// maps the core exceptions onto status codes
template <class F>
skein_status guarded(F&& f) {
  g_last_error.clear();
  try {
    return f();
  } catch (const skein::cmd::UsageError& e) {
    return fail(SKEIN_ERR_USAGE, e.what());
  } catch (const nlohmann::json::exception& e) {
    return fail(SKEIN_ERR_PARSE, e.what());
  } catch (const skein::ParseError& e) {
    return fail(SKEIN_ERR_PARSE, e.what());
  } catch (const skein::DomainError& e) {
    return fail(SKEIN_ERR_DOMAIN, e.what());
  } catch (const std::bad_alloc&) {
    return fail(SKEIN_ERR_INTERNAL, "out of memory");
  } catch (const std::exception& e) {
    return fail(SKEIN_ERR_INTERNAL, e.what());
  }
}

}  // namespace

extern "C" {

const char* skein_version(void) { return SKEIN_VERSION; }
const char* skein_last_error(void) { return g_last_error.c_str(); }
void skein_string_free(char* s) { std::free(s); }

skein_status skein_run(const char* request_json, const char* cache_dir, skein_result** out) {
  if (!request_json || !out) return fail(SKEIN_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    auto req = nlohmann::json::parse(request_json);
    std::optional<std::string> dir;
    if (cache_dir && *cache_dir) dir = cache_dir;
    auto o = skein::cmd::run(req, dir);
    auto* r = new skein_result{o.text, o.envelope.dump(), o.exit_code, o.cache_hit};
    *out = r;
    return o.exit_code == 2 ? SKEIN_NO_RESULT : SKEIN_OK;
  });
}

const char* skein_result_text(const skein_result* r) { return r ? r->text.c_str() : ""; }
const char* skein_result_envelope(const skein_result* r) { return r ? r->envelope.c_str() : ""; }
int skein_result_exit_code(const skein_result* r) { return r ? r->exit_code : 1; }
int skein_result_cache_hit(const skein_result* r) { return r && r->cache_hit ? 1 : 0; }
void skein_result_free(skein_result* r) { delete r; }

skein_status skein_fg_parse(const char* text, skein_fg_element** out) {
  if (!text || !out) return fail(SKEIN_ERR_NULL, "null argument");
  *out = nullptr;
  return guarded([&] {
    *out = new skein_fg_element{skein::parse_fg(text)};
    return SKEIN_OK;
  });
}

skein_status skein_fg_multiply(const skein_fg_element* a, const skein_fg_element* b, skein_fg_element** out) {
  if (!a || !b || !out) return fail(SKEIN_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new skein_fg_element{skein::fg_multiply(a->e, b->e)};
    return SKEIN_OK;
  });
}

skein_status skein_fg_add(const skein_fg_element* a, const skein_fg_element* b, skein_fg_element** out) {
  if (!a || !b || !out) return fail(SKEIN_ERR_NULL, "null argument");
  return guarded([&] {
    *out = new skein_fg_element{a->e + b->e};
    return SKEIN_OK;
  });
}

int skein_fg_equal(const skein_fg_element* a, const skein_fg_element* b) { return a && b && a->e == b->e ? 1 : 0; }

skein_status skein_fg_to_string(const skein_fg_element* a, char** out) {
  if (!a || !out) return fail(SKEIN_ERR_NULL, "null argument");
  return guarded([&] {
    *out = dup(a->e.str());
    return *out ? SKEIN_OK : fail(SKEIN_ERR_INTERNAL, "out of memory");
  });
}

void skein_fg_free(skein_fg_element* a) { delete a; }

}  // extern "C"
