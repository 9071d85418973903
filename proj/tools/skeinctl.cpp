// skeinctl: command line front end over the C library
#include <cstdlib>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include "CLI11.hpp"
#include "json.hpp"
#include "skein_c.h"

using nlohmann::json;

namespace {

struct UsageFail {
  std::string msg;
};

std::vector<long> int_list(const std::string& flag, const std::string& s) {
  std::vector<long> out;
  std::stringstream ss(s);
  std::string tok;
  while (std::getline(ss, tok, ',')) {
    try {
      std::size_t used = 0;
      out.push_back(std::stol(tok, &used));
      if (used != tok.size()) throw std::invalid_argument(tok);
    } catch (const std::exception&) {
      throw UsageFail{"--" + flag + ": bad integer '" + tok + "'"};
    }
  }
  return out;
}

json fiber_list(const std::vector<std::string>& fibers) {
  json out = json::array();
  for (auto& f : fibers) {
    auto v = int_list("fiber", f);
    if (v.size() != 2) throw UsageFail{"--fiber: expected b,a"};
    out.push_back(v);
  }
  return out;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"skein module computations: torus algebra, lens quotients, boundary rewriting, Seifert certificates"};
  app.require_subcommand(1);
  bool as_json = false;
  std::string cache_dir;
  app.add_flag("--json", as_json, "print the full JSON envelope");
  app.add_option("--cache-dir", cache_dir, "result cache directory (default $SKEIN_CACHE_DIR)");
  app.set_version_flag("--version", std::string(skein_version()));

  json args = json::object();
  std::string sub;

  // torus-mul
  std::vector<std::string> elements;
  auto* tm = app.add_subcommand("torus-mul", "product of torus skein elements, left to right");
  tm->add_option("elements", elements, "elements such as \"(1,0)\" or \"A*(1,1) - 2\"")->required();

  std::string family = "T";
  long n = 0, p = 0, degree = 0, genus = 0, boundary = 0, max_steps = 100000, word_length = 4;
  auto* ch = app.add_subcommand("chebyshev", "Chebyshev polynomial T_n or S_n in x");
  ch->add_option("--family", family, "T or S");
  ch->add_option("--n", n, "index")->required();

  bool prime = false;
  auto* ga = app.add_subcommand("gamma", "gamma_p or gamma'_p with its value at A = i");
  ga->add_option("--p", p)->required();
  ga->add_flag("--prime", prime, "the primed family");

  std::string grading = "ee";
  auto* lq = app.add_subcommand("lens-quotient", "truncated quotient dimension for L(2,1)#L(p,1)");
  lq->add_option("--p", p)->required();
  lq->add_option("--degree", degree)->required();
  lq->add_option("--grading", grading, "ee, eo, oe or oo");

  auto* jc = app.add_subcommand("jprime-check", "containment report for even p");
  jc->add_option("--p", p)->required();

  std::string element, slopes;
  bool single = false;
  auto* fr = app.add_subcommand("f12-reduce", "rewrite a module element to normal form");
  fr->add_option("--element,element", element, "e.g. \"(0,0,0,5)\" or \"A*(7,3,0,0)*{x1}\"")->required();
  fr->add_option("--slopes", slopes, "a1,b1,a2,b2")->required();
  fr->add_flag("--single-step", single, "apply one reduction to a single term");
  fr->add_option("--max-steps", max_steps, "round limit");

  std::vector<std::string> matrices;
  auto* ac = app.add_subcommand("algebra-closure", "subalgebra of M2 generated by rational matrices");
  ac->add_option("--matrix", matrices, "a,b,c,d (repeatable)")->required();

  std::vector<std::string> fibers;
  auto* sc = app.add_subcommand("seifert-certify", "torsion certificate for a Seifert manifold");
  sc->add_option("--genus", genus)->required()->allow_extra_args(false);
  sc->add_option("--boundary", boundary);
  sc->add_option("--fiber", fibers, "b,a (repeatable)")->allow_extra_args(false);
  sc->add_option("--word-length", word_length);

  auto* ho = app.add_subcommand("homology", "invariant factors of H1");
  ho->add_option("--genus", genus)->required()->allow_extra_args(false);
  ho->add_option("--boundary", boundary);
  ho->add_option("--fiber", fibers, "b,a (repeatable)")->allow_extra_args(false);

  try {
    app.parse(argc, argv);
  } catch (const CLI::CallForHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForAllHelp& e) {
    return app.exit(e);
  } catch (const CLI::CallForVersion& e) {
    return app.exit(e);
  } catch (const CLI::ParseError& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }

  try {
    auto given = [](CLI::App* a, const char* flag) { return a->get_option(flag)->count() > 0; };
    if (tm->parsed()) {
      sub = "torus-mul";
      args["elements"] = elements;
    } else if (ch->parsed()) {
      sub = "chebyshev";
      args["n"] = n;
      if (given(ch, "--family")) args["family"] = family;
    } else if (ga->parsed()) {
      sub = "gamma";
      args["p"] = p;
      args["prime"] = prime;
    } else if (lq->parsed()) {
      sub = "lens-quotient";
      args["p"] = p;
      args["degree"] = degree;
      if (given(lq, "--grading")) args["grading"] = grading;
    } else if (jc->parsed()) {
      sub = "jprime-check";
      args["p"] = p;
    } else if (fr->parsed()) {
      sub = "f12-reduce";
      args["element"] = element;
      args["slopes"] = int_list("slopes", slopes);
      args["single-step"] = single;
      if (given(fr, "--max-steps")) args["max-steps"] = max_steps;
    } else if (ac->parsed()) {
      sub = "algebra-closure";
      args["matrix"] = matrices;
    } else if (sc->parsed() || ho->parsed()) {
      sub = sc->parsed() ? "seifert-certify" : "homology";
      args["genus"] = genus;
      args["boundary"] = boundary;
      args["fiber"] = fiber_list(fibers);
      if (sc->parsed() && given(sc, "--word-length")) args["word-length"] = word_length;
    }
  } catch (const UsageFail& u) {
    std::cerr << "error: " << u.msg << "\n";
    return 1;
  }

  if (cache_dir.empty())
    if (const char* env = std::getenv("SKEIN_CACHE_DIR")) cache_dir = env;

  json request = {{"subcommand", sub}, {"args", args}};
  skein_result* res = nullptr;
  skein_status st = skein_run(request.dump().c_str(), cache_dir.empty() ? nullptr : cache_dir.c_str(), &res);
  if (st != SKEIN_OK && st != SKEIN_NO_RESULT) {
    std::cerr << "error: " << skein_last_error() << "\n";
    return 1;
  }
  if (as_json) std::cout << json::parse(skein_result_envelope(res)).dump(2) << "\n";
  else std::cout << skein_result_text(res) << "\n";
  int code = skein_result_exit_code(res);
  skein_result_free(res);
  return code;
}
