#pragma once
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "skein/matrix_rep.hpp"

namespace skein {

struct Fiber {
  long beta = 0, alpha = 2;
};

// M(g, n; (beta_1, alpha_1), ...); g < 0 means a non-orientable base
struct SeifertData {
  long g = 0;
  long n = 0;
  std::vector<Fiber> fibers;
  void validate() const;
  std::string str() const;
};

struct Letter {
  std::string sym;
  long exp = 1;
  friend bool operator==(const Letter&, const Letter&) = default;
};

// freely reduced word
class GroupWord {
 public:
  GroupWord() = default;
  static GroupWord gen(const std::string& s, long e = 1);
  static GroupWord parse(const std::string& text);  // "q1*q2^-1*h", "1" for the identity
  const std::vector<Letter>& letters() const { return l_; }
  bool empty() const { return l_.empty(); }
  std::size_t length() const;  // sum of |exp|
  GroupWord inverse() const;
  GroupWord pow(long e) const;
  GroupWord& operator*=(const GroupWord& o);
  friend GroupWord operator*(GroupWord a, const GroupWord& b) { return a *= b; }
  friend bool operator==(const GroupWord&, const GroupWord&) = default;
  std::string str() const;

 private:
  void push(const Letter& x);
  std::vector<Letter> l_;
};

struct Presentation {
  std::vector<std::string> generators;
  std::vector<GroupWord> relators;
};

Presentation presentation(const SeifertData& d);
// invariant factors of H1: torsion part (> 1) ascending, then one 0 per free rank
std::vector<Integer> homology(const SeifertData& d);

enum class SeifertCase {
  no_essential_torus,
  positive_genus,
  sphere_base,
  rp2_base,
  rp2_small,
  closed_haken_noneffective
};
std::string case_str(SeifertCase c);
SeifertCase classify(const SeifertData& d);

struct Representation {
  std::map<std::string, Mat2> images;
  long order = 1;  // common cyclotomic order of all entries
  Mat2 eval(const GroupWord& w) const;        // left to right
  Mat2 eval_right(const GroupWord& w) const;  // right to left, an independent association order
};

// first relator that fails (nullopt when all hold); right-assoc when independent = true
std::optional<std::string> failing_relator(const Presentation& p, const Representation& r, bool independent = false);

// the construction for the case; attempt selects the deterministic parameter schedule entry
struct BuiltRepresentation {
  Representation rep;
  std::string parameter;  // description of the chosen free parameter
  // loops for the torus criterion
  std::vector<GroupWord> side1, side2, torus;  // generating words of the two sides and the torus
  GroupWord dual;                              // crosses a non-separating torus once
};
std::optional<BuiltRepresentation> build_representation(const SeifertData& d, SeifertCase c, int attempt);

enum class CertKind { separating_torus, nonseparating_torus, noneffective_closed, noneffective_boundary, none };
std::string kind_str(CertKind k);

struct TorsionCertificate {
  CertKind kind = CertKind::none;
  SeifertCase seifert_case = SeifertCase::no_essential_torus;
  std::optional<Representation> representation;
  std::string parameter;
  // separating: x1, x2, gamma with Tr(x1 x2 gamma) != Tr(x1 gamma x2)
  // nonseparating: gamma, delta with tr(gamma delta) != tr(gamma^-1 delta)
  std::map<std::string, GroupWord> words;
  CycNum trace_lhs, trace_rhs;
  std::string criterion_ref;
  // hypotheses checked on the representation
  std::map<std::string, bool> hypotheses;
  std::map<std::string, std::string> classes;  // algebra tags in standard position
  std::vector<std::string> notes;
  std::vector<Integer> homology;
  bool verified = false;
};

struct CertifyOptions {
  int max_attempts = 24;
  int word_length = 4;  // non-separating search bound
};

// kind none for no_essential_torus; std::runtime_error if the parameter
// schedule runs out
TorsionCertificate certify(const SeifertData& d, const CertifyOptions& opt = {});
// rebuilds the presentation and checks relators, determinants and the trace
// inequality with right-to-left evaluation
bool reverify(const SeifertData& d, const TorsionCertificate& c, std::string* why = nullptr);

// product of -Tr(rho(w)) over the list
CycNum psi_evaluate(const std::vector<GroupWord>& words, const Representation& r);

}  // namespace skein
