#pragma once
#include <optional>
#include <stdexcept>
#include <string>

#include "json.hpp"

namespace skein::cmd {

using nlohmann::json;

// message names the offending flag
struct UsageError : std::invalid_argument {
  using std::invalid_argument::invalid_argument;
};

struct Outcome {
  int exit_code = 0;  // 0 ok, 2 not reducible / no certificate
  json envelope;
  std::string text;  // plain rendering of the result
  bool cache_hit = false;
};

// request: {"subcommand": name, "args": {...}}; fills defaults, rejects unknown args
json canonical_request(const json& request);
std::string cache_key(const json& canonical);

// the cache directory, when given, is read before and written after the computation
Outcome run(const json& request, const std::optional<std::string>& cache_dir = std::nullopt);

std::optional<Outcome> cache_load(const std::string& dir, const json& canonical);
void cache_store(const std::string& dir, const json& canonical, const Outcome& o);

}  // namespace skein::cmd
