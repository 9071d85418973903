#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <sys/wait.h>

#include <cstdio>
#include <cstdlib>
#include <filesystem>
#include <fstream>

#include "command.hpp"
#include "skein_c.h"

using namespace skein;
using nlohmann::json;
namespace fs = std::filesystem;

namespace {

json req(const std::string& sub, json args) { return {{"subcommand", sub}, {"args", std::move(args)}}; }

json strip_timing(json e) {
  e.erase("timing_ms");
  return e;
}

struct TempDir {
  fs::path p;
  TempDir() {
    p = fs::temp_directory_path() / ("skein_test_" + std::to_string(::getpid()) + "_" + std::to_string(rand()));
    fs::create_directories(p);
  }
  ~TempDir() { fs::remove_all(p); }
};

struct Proc {
  int code;
  std::string out;
};

Proc sh(const std::string& args, const std::string& env = "") {
  std::string cmd = env + " " + std::string(SKEINCTL_PATH) + " " + args + " 2>/dev/null";
  FILE* f = ::popen(cmd.c_str(), "r");
  std::string out;
  char buf[4096];
  std::size_t n;
  while ((n = std::fread(buf, 1, sizeof buf, f)) > 0) out.append(buf, n);
  int st = ::pclose(f);
  return {WIFEXITED(st) ? WEXITSTATUS(st) : -1, out};
}

}  // namespace

TEST_CASE("run dispatch and envelopes") {
  auto o = cmd::run(req("chebyshev", {{"family", "T"}, {"n", 2}}));
  CHECK(o.exit_code == 0);
  CHECK(o.text == "x^2 - 2");
  CHECK(o.envelope["schema"] == 1);
  CHECK(o.envelope["subcommand"] == "chebyshev");
  CHECK(o.envelope.contains("verified"));
  CHECK(o.envelope.contains("version"));

  auto l = cmd::run(req("lens-quotient", {{"p", 2}, {"degree", 8}, {"grading", "ee"}}));
  CHECK(l.envelope["result"]["jprime_certified"] == true);
  CHECK(l.envelope["result"]["dimension"].get<long>() >= 5);
  CHECK(l.envelope["result"]["lower_bound"] == 5);

  auto t = cmd::run(req("torus-mul", {{"elements", {"(1,0)", "(0,1)"}}}));
  CHECK(t.text == "A*(1,1) + A^-1*(1,-1)");

  auto g = cmd::run(req("gamma", {{"p", 2}}));
  CHECK(g.exit_code == 0);
  auto h = cmd::run(req("homology", {{"genus", 1}}));
  CHECK(h.envelope["result"]["invariant_factors"] == json::array({0, 0, 0}));

  auto nr = cmd::run(req("f12-reduce", {{"element", "(0,0,0,0)"}, {"slopes", {1, -2, 1, 1}}, {"single-step", true}}));
  CHECK(nr.exit_code == 2);
  auto nf = cmd::run(req("f12-reduce", {{"element", "(0,0,0,5)"}, {"slopes", {1, -2, 1, 1}}}));
  CHECK(nf.exit_code == 0);
  CHECK(nf.envelope["verified"] == true);

  auto ac = cmd::run(req("algebra-closure", {{"matrix", {"2,0,0,1/2", "0,1,1,0"}}}));
  CHECK(ac.envelope["result"]["tag"] == "M2");

  auto sc = cmd::run(req("seifert-certify", {{"genus", 0}, {"boundary", 1}, {"fiber", {{1, 2}}}}));
  CHECK(sc.exit_code == 2);
  auto st = cmd::run(req("seifert-certify", {{"genus", 1}}));
  CHECK(st.exit_code == 0);
  CHECK(st.envelope["verified"] == true);
  CHECK(st.envelope["result"]["kind"] == "nonseparating_torus");
}

TEST_CASE("usage errors name the flag") {
  try {
    cmd::run(req("chebyshev", {{"family", "T"}, {"n", 2}, {"bogus", 1}}));
    CHECK(false);
  } catch (const cmd::UsageError& e) {
    CHECK(std::string(e.what()).find("--bogus") != std::string::npos);
  }
  CHECK_THROWS_AS(cmd::run(req("no-such-command", json::object())), cmd::UsageError);
  CHECK_THROWS_AS(cmd::run(req("chebyshev", {{"family", "T"}, {"n", -3}})), cmd::UsageError);
}

TEST_CASE("determinism") {
  for (auto r : {req("gamma", {{"p", 5}, {"prime", true}}), req("seifert-certify", {{"genus", 1}}),
                 req("f12-reduce", {{"element", "(1,0,0,4)*{x1}"}, {"slopes", {1, -2, 1, 1}}})}) {
    auto a = cmd::run(r), b = cmd::run(r);
    CHECK(strip_timing(a.envelope).dump() == strip_timing(b.envelope).dump());
    CHECK(a.text == b.text);
  }
}

TEST_CASE("cache") {
  TempDir d;
  auto r = req("gamma", {{"p", 3}});
  auto first = cmd::run(r, d.p.string());
  CHECK(!first.cache_hit);
  auto second = cmd::run(r, d.p.string());
  CHECK(second.cache_hit);
  CHECK(second.envelope.dump() == first.envelope.dump());
  CHECK(second.text == first.text);

  auto canon = cmd::canonical_request(r);
  fs::path file = d.p / (cmd::cache_key(canon) + ".json");
  REQUIRE(fs::exists(file));

  // an entry written by another version is a miss
  json j = json::parse(std::ifstream(file));
  j["version"] = "0.0.0-old";
  std::ofstream(file) << j.dump();
  CHECK(!cmd::cache_load(d.p.string(), canon));
  auto third = cmd::run(r, d.p.string());
  CHECK(!third.cache_hit);

  // corrupt entries are skipped and recomputed
  std::ofstream(file) << "{not json";
  CHECK(!cmd::cache_load(d.p.string(), canon));
  auto fourth = cmd::run(r, d.p.string());
  CHECK(!fourth.cache_hit);
  CHECK(strip_timing(fourth.envelope) == strip_timing(first.envelope));

  // no cache dir: a plain miss
  CHECK(!cmd::run(r).cache_hit);
  CHECK(!cmd::cache_load((d.p / "absent").string(), canon));

  // canonical form fills defaults, so spelled-out defaults share the entry
  auto a = cmd::canonical_request(req("lens-quotient", {{"p", 2}, {"degree", 4}}));
  auto b = cmd::canonical_request(req("lens-quotient", {{"degree", 4}, {"p", 2}, {"grading", "ee"}}));
  CHECK(cmd::cache_key(a) == cmd::cache_key(b));
}

TEST_CASE("C API") {
  CHECK(std::string(skein_version()) == SKEIN_VERSION);
  skein_result* res = nullptr;
  CHECK(skein_run(R"J({"subcommand":"chebyshev","args":{"family":"S","n":3}})J", nullptr, &res) == SKEIN_OK);
  REQUIRE(res);
  CHECK(std::string(skein_result_text(res)) == "x^3 - 2*x");
  CHECK(skein_result_exit_code(res) == 0);
  CHECK(json::parse(skein_result_envelope(res))["subcommand"] == "chebyshev");
  skein_result_free(res);

  res = nullptr;
  CHECK(skein_run(R"J({"subcommand":"f12-reduce","args":{"element":"(0,0,0,0)","slopes":[1,-2,1,1],"single-step":true}})J",
                  nullptr, &res) == SKEIN_NO_RESULT);
  CHECK(res);
  skein_result_free(res);

  res = nullptr;
  CHECK(skein_run(R"J({"subcommand":"chebyshev","args":{"nope":1}})J", nullptr, &res) == SKEIN_ERR_USAGE);
  CHECK(std::string(skein_last_error()).find("--nope") != std::string::npos);
  CHECK(skein_run("{broken", nullptr, &res) == SKEIN_ERR_PARSE);
  CHECK(skein_run(nullptr, nullptr, &res) == SKEIN_ERR_NULL);

  skein_fg_element *a = nullptr, *b = nullptr, *p = nullptr, *q = nullptr;
  REQUIRE(skein_fg_parse("(1,0)", &a) == SKEIN_OK);
  REQUIRE(skein_fg_parse("(0,1)", &b) == SKEIN_OK);
  REQUIRE(skein_fg_multiply(a, b, &p) == SKEIN_OK);
  char* s = nullptr;
  REQUIRE(skein_fg_to_string(p, &s) == SKEIN_OK);
  CHECK(std::string(s) == "A*(1,1) + A^-1*(1,-1)");
  skein_string_free(s);
  REQUIRE(skein_fg_parse("A*(1,1) + A^-1*(1,-1)", &q) == SKEIN_OK);
  CHECK(skein_fg_equal(p, q) == 1);
  skein_fg_element* sum = nullptr;
  REQUIRE(skein_fg_add(p, q, &sum) == SKEIN_OK);
  CHECK(skein_fg_equal(sum, p) == 0);
  skein_fg_element* bad = nullptr;
  CHECK(skein_fg_parse("(1,", &bad) == SKEIN_ERR_PARSE);
  CHECK(bad == nullptr);
  for (auto* x : {a, b, p, q, sum}) skein_fg_free(x);
  skein_fg_free(nullptr);
}

TEST_CASE("skeinctl binary") {
  auto c = sh("chebyshev --family T --n 2");
  CHECK(c.code == 0);
  CHECK(c.out == "x^2 - 2\n");
  auto t = sh("torus-mul \"(1,0)\" \"(0,1)\"");
  CHECK(t.out == "A*(1,1) + A^-1*(1,-1)\n");
  auto l = sh("--json lens-quotient --p 2 --degree 8 --grading ee");
  CHECK(l.code == 0);
  auto j = json::parse(l.out);
  CHECK(j["result"]["jprime_certified"] == true);
  CHECK(sh("chebyshev --family T --n 2 --bogus 3").code == 1);
  CHECK(sh("chebyshev --family T --n -5").code == 1);
  CHECK(sh("f12-reduce --slopes 1,-2,1,1 --element \"(0,0,0,0)\" --single-step").code == 2);
  CHECK(sh("seifert-certify --genus 0 --boundary 1 --fiber 1,2").code == 2);
  auto cert = sh("--json seifert-certify --genus 1 --boundary 0");
  CHECK(cert.code == 0);
  auto cj = json::parse(cert.out);
  CHECK(cj["result"]["verified"] == true);
  CHECK(cj["result"]["representation"].contains("order"));

  TempDir d;
  auto env = "SKEIN_CACHE_DIR=" + d.p.string();
  auto x1 = sh("--json gamma --p 4", env), x2 = sh("--json gamma --p 4", env);
  CHECK(x1.out == x2.out);
  CHECK(!fs::is_empty(d.p));
}
