#include "command.hpp"

#include <algorithm>
#include <chrono>
#include <cmath>
#include <cstdio>
#include <filesystem>
#include <fstream>
#include <iostream>
#include <limits>
#include <set>
#include <sstream>

#include "serialize.hpp"
#include "skein/boundary_rewrite.hpp"
#include "skein/handlebody.hpp"
#include "skein/ratfunc.hpp"
#include "skein/torus_skein.hpp"

#ifndef SKEIN_VERSION
#define SKEIN_VERSION "0.0.0"
#endif

namespace skein::cmd {

namespace {

namespace fs = std::filesystem;

struct ArgSpec {
  std::string name;
  enum Kind { Int, Str, Bool, IntList, StrList, PairList } kind;
  json fallback;  // null = required
  long min = std::numeric_limits<long>::min();
};

const std::map<std::string, std::vector<ArgSpec>>& schemas() {
  static const std::map<std::string, std::vector<ArgSpec>> s = {
      {"torus-mul", {{"elements", ArgSpec::StrList, nullptr}}},
      {"chebyshev", {{"family", ArgSpec::Str, "T"}, {"n", ArgSpec::Int, nullptr, -1}}},
      {"gamma", {{"p", ArgSpec::Int, nullptr, 1}, {"prime", ArgSpec::Bool, false}}},
      {"lens-quotient",
       {{"p", ArgSpec::Int, nullptr, 2}, {"degree", ArgSpec::Int, nullptr, 0}, {"grading", ArgSpec::Str, "ee"}}},
      {"jprime-check", {{"p", ArgSpec::Int, nullptr, 2}}},
      {"f12-reduce",
       {{"element", ArgSpec::Str, nullptr},
        {"slopes", ArgSpec::IntList, nullptr},
        {"single-step", ArgSpec::Bool, false},
        {"max-steps", ArgSpec::Int, 100000, 1}}},
      {"algebra-closure", {{"matrix", ArgSpec::StrList, nullptr}}},
      {"seifert-certify",
       {{"genus", ArgSpec::Int, nullptr},
        {"boundary", ArgSpec::Int, 0, 0},
        {"fiber", ArgSpec::PairList, json::array()},
        {"word-length", ArgSpec::Int, 4, 1}}},
      {"homology",
       {{"genus", ArgSpec::Int, nullptr}, {"boundary", ArgSpec::Int, 0, 0}, {"fiber", ArgSpec::PairList, json::array()}}},
  };
  return s;
}

void check_kind(const ArgSpec& a, const json& v) {
  auto bad = [&](const char* what) { throw UsageError("--" + a.name + ": expected " + what); };
  switch (a.kind) {
    case ArgSpec::Int:
      if (!v.is_number_integer()) bad("an integer");
      if (v.get<long>() < a.min) bad(("an integer >= " + std::to_string(a.min)).c_str());
      break;
    case ArgSpec::Str:
      if (!v.is_string()) bad("a string");
      break;
    case ArgSpec::Bool:
      if (!v.is_boolean()) bad("a boolean");
      break;
    case ArgSpec::IntList:
      if (!v.is_array()) bad("a list of integers");
      for (auto& x : v)
        if (!x.is_number_integer()) bad("a list of integers");
      break;
    case ArgSpec::StrList:
      if (!v.is_array() || v.empty()) bad("at least one value");
      for (auto& x : v)
        if (!x.is_string()) bad("strings");
      break;
    case ArgSpec::PairList:
      if (!v.is_array()) bad("a list of b,a pairs");
      for (auto& x : v)
        if (!x.is_array() || x.size() != 2 || !x[0].is_number_integer() || !x[1].is_number_integer())
          bad("pairs b,a");
      break;
  }
}

SeifertData seifert_of(const json& a) {
  SeifertData d;
  d.g = a["genus"].get<long>();
  d.n = a["boundary"].get<long>();
  for (auto& f : a["fiber"]) d.fibers.push_back({f[0].get<long>(), f[1].get<long>()});
  try {
    d.validate();
  } catch (const DomainError& e) {
    throw UsageError(std::string("--fiber/--boundary: ") + e.what());
  }
  return d;
}

Mat2 parse_matrix(const std::string& s) {
  std::vector<Rational> v;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    tok.erase(std::remove_if(tok.begin(), tok.end(), ::isspace), tok.end());
    Rational q;
    if (tok.empty() || q.set_str(tok, 10) != 0) throw UsageError("--matrix: bad entry '" + tok + "'");
    q.canonicalize();
    v.push_back(q);
  }
  if (v.size() != 4) throw UsageError("--matrix: expected four entries a,b,c,d");
  return Mat2::of(v[0], v[1], v[2], v[3]);
}

struct Computed {
  json result;
  json verified = nullptr;
  std::string text;
  int exit_code = 0;
};

Computed compute(const std::string& sub, const json& a) {
  Computed c;
  if (sub == "torus-mul") {
    FGElement prod;
    bool first = true;
    for (auto& e : a["elements"]) {
      FGElement x = parse_fg(e.get<std::string>());
      prod = first ? x : fg_multiply(prod, x);
      first = false;
    }
    c.text = prod.str();
    c.result = {{"product", c.text}};
  } else if (sub == "chebyshev") {
    std::string fam = a["family"];
    long n = a["n"];
    if (fam != "T" && fam != "S") throw UsageError("--family: expected T or S");
    IntPoly p = fam == "T" ? chebyshev_T(n) : chebyshev_S(n);
    c.text = p.str("x");
    c.result = {{"family", fam}, {"n", n}, {"poly", c.text}};
  } else if (sub == "gamma") {
    long p = a["p"];
    bool prime = a["prime"];
    if (p < 1) throw UsageError("--p: expected p >= 1");
    Poly3Z g = prime ? gamma_prime_p(p) : gamma_p(p);
    Poly3G at = at_i(g), closed = prime ? gamma_prime_closed_form(p) : gamma_closed_form(p);
    c.text = str(g);
    c.result = {{"p", p}, {"prime", prime}, {"polynomial", c.text}, {"at_i", str(at)}, {"closed_form", str(closed)},
                {"matches_closed_form", at == closed}};
    c.verified = at == closed;
  } else if (sub == "lens-quotient") {
    long p = a["p"], deg = a["degree"];
    if (p < 1) throw UsageError("--p: expected p >= 1");
    if (deg < 0) throw UsageError("--degree: expected a nonnegative degree");
    auto g = parse_grading(a["grading"].get<std::string>());
    if (!g) throw UsageError("--grading: expected ee, eo, oe or oo");
    long dim = truncated_quotient_dimension(p, deg, *g);
    bool cert = p % 2 == 0 && verify_Jprime_containment(p).contained;
    // z^(2n), 2n <= degree, stay independent in the (even,even) class for even p
    json lower = p % 2 == 0 && g->a == 0 && g->b == 0 ? json(deg / 2 + 1) : json(nullptr);
    c.result = {{"p", p},           {"degree", deg},           {"grading", g->str()},
                {"dimension", dim}, {"lower_bound", lower}, {"jprime_certified", cert}};
    c.verified = cert;
    c.text = c.result.dump(2);
  } else if (sub == "jprime-check") {
    long p = a["p"];
    if (p < 2 || p % 2) throw UsageError("--p: expected an even p >= 2");
    auto r = verify_Jprime_containment(p);
    c.result = io::to_json(r);
    c.result["p"] = p;
    c.verified = r.contained;
    c.text = c.result.dump(2);
  } else if (sub == "f12-reduce") {
    auto sl = a["slopes"].get<std::vector<long>>();
    if (sl.size() != 4) throw UsageError("--slopes: expected a1,b1,a2,b2");
    SlopeData s{sl[0], sl[1], sl[2], sl[3]};
    try {
      s.validate();
    } catch (const DomainError& e) {
      throw UsageError(std::string("--slopes: ") + e.what());
    }
    ModuleElement e = parse_module_element(a["element"].get<std::string>());
    if (a["single-step"].get<bool>()) {
      if (e.terms().size() != 1) throw UsageError("--single-step: element must be a single term");
      auto& [key, coeff] = *e.terms().begin();
      try {
        auto st = reduce_step_detail(key.first, key.second, s);
        ModuleElement out;
        for (auto& t : st.terms) out.add(t.label, t.gen, coeff * t.coeff);
        c.text = out.str();
        c.result = {{"reducible", true},
                    {"rule", st.rule},
                    {"relation", st.relation},
                    {"multiplier", st.multiplier.str()},
                    {"input_complexity", complexity(key.first, s).str()},
                    {"output", c.text}};
      } catch (const NotReducible& ex) {
        c.result = {{"reducible", false}, {"reason", ex.what()}};
        c.text = ex.what();
        c.exit_code = 2;
      }
    } else {
      auto r = normalize(e, s, a["max-steps"].get<long>());
      long bound = 0;
      for (auto& [k, v] : e.terms()) bound = std::max(bound, complexity_values_below(k.first, s));
      bool boxed = true;
      for (auto& [k, v] : r.element.terms()) boxed = boxed && !is_reducible(k.first, s);
      c.result = io::to_json(r);
      c.result["round_bound"] = bound;
      c.result["in_box"] = boxed;
      c.verified = r.complete && boxed && r.rounds <= bound;
      c.text = r.element.str();
    }
  } else if (sub == "algebra-closure") {
    std::vector<Mat2> gens;
    for (auto& m : a["matrix"]) gens.push_back(parse_matrix(m.get<std::string>()));
    auto cl = algebra_closure(gens);
    c.result = io::to_json(cl);
    c.text = tag_str(cl.tag) + " dim " + std::to_string(cl.dim());
  } else if (sub == "seifert-certify") {
    SeifertData d = seifert_of(a);
    CertifyOptions opt;
    opt.word_length = static_cast<int>(a["word-length"].get<long>());
    auto cert = certify(d, opt);
    c.result = io::to_json(cert);
    c.verified = cert.verified;
    if (cert.kind == CertKind::none) c.exit_code = 2;
    c.text = c.result.dump(2);
  } else if (sub == "homology") {
    auto h = homology(seifert_of(a));
    c.result = {{"invariant_factors", io::to_json(h)}};
    c.text = c.result["invariant_factors"].dump();
  }
  return c;
}

std::uint64_t fnv1a(const std::string& s) {
  std::uint64_t h = 1469598103934665603ull;
  for (unsigned char ch : s) {
    h ^= ch;
    h *= 1099511628211ull;
  }
  return h;
}

}  // namespace

json canonical_request(const json& request) {
  if (!request.is_object() || !request.contains("subcommand") || !request["subcommand"].is_string())
    throw UsageError("request needs a subcommand");
  std::string sub = request["subcommand"];
  auto it = schemas().find(sub);
  if (it == schemas().end()) throw UsageError("unknown subcommand '" + sub + "'");
  json args = request.value("args", json::object());
  if (!args.is_object()) throw UsageError("args must be an object");
  std::set<std::string> known;
  for (auto& spec : it->second) known.insert(spec.name);
  for (auto& [k, v] : args.items())
    if (!known.count(k)) throw UsageError("--" + k + " is not a flag of " + sub);
  json out = json::object();
  for (auto& spec : it->second) {
    if (args.contains(spec.name) && !args[spec.name].is_null()) {
      check_kind(spec, args[spec.name]);
      out[spec.name] = args[spec.name];
    } else if (spec.fallback.is_null()) {
      throw UsageError("--" + spec.name + " is required for " + sub);
    } else {
      out[spec.name] = spec.fallback;
    }
  }
  return {{"subcommand", sub}, {"args", out}};
}

std::string cache_key(const json& canonical) {
  char buf[17];
  std::snprintf(buf, sizeof buf, "%016llx",
                static_cast<unsigned long long>(fnv1a(std::string(SKEIN_VERSION) + "\n" + canonical.dump())));
  return buf;
}

std::optional<Outcome> cache_load(const std::string& dir, const json& canonical) {
  fs::path p = fs::path(dir) / (cache_key(canonical) + ".json");
  std::ifstream in(p);
  if (!in) return std::nullopt;
  try {
    json j = json::parse(in);
    if (j.at("version") != SKEIN_VERSION || j.at("request") != canonical) {
      std::cerr << "warning: cache entry " << p.string() << " does not match the request, recomputing\n";
      return std::nullopt;
    }
    Outcome o;
    o.exit_code = j.at("exit_code").get<int>();
    o.text = j.at("text").get<std::string>();
    o.envelope = j.at("envelope");
    o.cache_hit = true;
    return o;
  } catch (const std::exception& e) {
    std::cerr << "warning: corrupt cache entry " << p.string() << " skipped (" << e.what() << ")\n";
    return std::nullopt;
  }
}

void cache_store(const std::string& dir, const json& canonical, const Outcome& o) {
  std::error_code ec;
  fs::create_directories(dir, ec);
  fs::path p = fs::path(dir) / (cache_key(canonical) + ".json");
  fs::path tmp = p;
  tmp += ".tmp";
  {
    std::ofstream out(tmp);
    if (!out) {
      std::cerr << "warning: cannot write cache entry " << p.string() << "\n";
      return;
    }
    json j = {{"version", SKEIN_VERSION},
              {"request", canonical},
              {"exit_code", o.exit_code},
              {"text", o.text},
              {"envelope", o.envelope}};
    out << j.dump() << "\n";
  }
  fs::rename(tmp, p, ec);
  if (ec) std::cerr << "warning: cannot move cache entry into place: " << ec.message() << "\n";
}

Outcome run(const json& request, const std::optional<std::string>& cache_dir) {
  json canon = canonical_request(request);
  if (cache_dir && !cache_dir->empty())
    if (auto hit = cache_load(*cache_dir, canon)) return *hit;
  auto t0 = std::chrono::steady_clock::now();
  Computed c;
  try {
    c = compute(canon["subcommand"], canon["args"]);
  } catch (const ParseError& e) {
    throw UsageError(std::string("parse error: ") + e.what());
  }
  double ms = std::chrono::duration<double, std::milli>(std::chrono::steady_clock::now() - t0).count();
  Outcome o;
  o.exit_code = c.exit_code;
  o.text = c.text;
  o.envelope = {{"schema", io::kSchema},
                {"version", SKEIN_VERSION},
                {"subcommand", canon["subcommand"]},
                {"inputs", canon["args"]},
                {"result", c.result},
                {"verified", c.verified},
                {"timing_ms", std::round(ms * 1000.0) / 1000.0}};
  if (cache_dir && !cache_dir->empty()) cache_store(*cache_dir, canon, o);
  return o;
}

}  // namespace skein::cmd
