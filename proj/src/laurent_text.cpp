#include <cctype>

#include "expr.hpp"

namespace skein {
namespace expr {
namespace {

class Reader {
 public:
  explicit Reader(const std::string& s) : s_(s) {}

  LinComb run() {
    LinComb r = sum();
    skip();
    if (i_ != s_.size()) fail("unexpected '" + std::string(1, s_[i_]) + "'");
    return r;
  }

 private:
  [[noreturn]] void fail(const std::string& why) const {
    throw ParseError(why + " at offset " + std::to_string(i_) + " in \"" + s_ + "\"");
  }
  void skip() {
    while (i_ < s_.size() && std::isspace(static_cast<unsigned char>(s_[i_]))) ++i_;
  }
  bool eat(char c) {
    skip();
    if (i_ < s_.size() && s_[i_] == c) {
      ++i_;
      return true;
    }
    return false;
  }
  char peek() {
    skip();
    return i_ < s_.size() ? s_[i_] : '\0';
  }

  static void add(LinComb& into, const Key& k, const RatFunc& c) {
    if (is_zero(c)) return;
    auto [it, fresh] = into.try_emplace(k, c);
    if (!fresh) {
      it->second += c;
      if (is_zero(it->second)) into.erase(it);
    }
  }
  static bool scalar_only(const LinComb& a) {
    return a.empty() || (a.size() == 1 && a.begin()->first.label.empty() && a.begin()->first.gen == kNone);
  }
  static RatFunc scalar_of(const LinComb& a) { return a.empty() ? RatFunc() : a.begin()->second; }

  LinComb mul(const LinComb& a, const LinComb& b) {
    LinComb r;
    for (auto& [ka, ca] : a)
      for (auto& [kb, cb] : b) {
        if (!ka.label.empty() && !kb.label.empty()) fail("two tuple factors in one term");
        if (ka.gen != kNone && kb.gen != kNone) fail("two generator factors in one term");
        Key k{ka.label.empty() ? kb.label : ka.label, ka.gen != kNone ? ka.gen : kb.gen};
        add(r, k, ca * cb);
      }
    return r;
  }

  LinComb sum() {
    LinComb r;
    bool neg = false;
    if (eat('-')) neg = true;
    else eat('+');
    for (;;) {
      LinComb t = product();
      for (auto& [k, c] : t) add(r, k, neg ? -c : c);
      if (eat('+')) neg = false;
      else if (eat('-')) neg = true;
      else break;
    }
    return r;
  }

  LinComb product() {
    LinComb r = factor();
    for (;;) {
      if (eat('*')) {
        r = mul(r, factor());
      } else if (eat('/')) {
        LinComb d = factor();
        if (!scalar_only(d) || d.empty()) fail("can only divide by a nonzero scalar");
        LinComb inv;
        inv[Key{}] = scalar_of(d).inv();
        r = mul(r, inv);
      } else {
        return r;
      }
    }
  }

  long integer() {
    skip();
    bool neg = false;
    if (i_ < s_.size() && (s_[i_] == '-' || s_[i_] == '+')) neg = s_[i_++] == '-';
    skip();
    size_t st = i_;
    while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
    if (st == i_) fail("expected integer");
    long v = std::stol(s_.substr(st, i_ - st));
    return neg ? -v : v;
  }

  // (int, int[, int, int]) when the parenthesis holds only integers and commas
  bool looks_like_tuple() const {
    size_t j = i_ + 1;
    bool comma = false;
    for (; j < s_.size() && s_[j] != ')'; ++j) {
      char c = s_[j];
      if (c == ',') comma = true;
      else if (!(std::isdigit(static_cast<unsigned char>(c)) || c == '-' || c == '+' || std::isspace(static_cast<unsigned char>(c))))
        return false;
    }
    return comma && j < s_.size();
  }

  LinComb factor() {
    char c = peek();
    LinComb r;
    if (c == '(') {
      if (looks_like_tuple()) {
        ++i_;
        Key k;
        do k.label.push_back(integer());
        while (eat(','));
        if (!eat(')')) fail("expected ')'");
        r[k] = RatFunc(1);
        return r;
      }
      ++i_;
      r = sum();
      if (!eat(')')) fail("expected ')'");
      return r;
    }
    if (c == '{') {
      ++i_;
      skip();
      Key k;
      k.gen = gen_name();
      if (!eat('}')) fail("expected '}'");
      r[k] = RatFunc(1);
      return r;
    }
    if (c == '-') {  // unary minus inside a product, e.g. 2*-A
      ++i_;
      LinComb t = factor();
      for (auto& [k, v] : t) r[k] = -v;
      return r;
    }
    if (std::isdigit(static_cast<unsigned char>(c))) {
      size_t st = i_;
      while (i_ < s_.size() && std::isdigit(static_cast<unsigned char>(s_[i_]))) ++i_;
      r[Key{}] = RatFunc(Rational(Integer(s_.substr(st, i_ - st))));
      return r;
    }
    if (c == 'A') {
      ++i_;
      long e = 1;
      if (eat('^')) {
        if (eat('(')) {
          e = integer();
          if (!eat(')')) fail("expected ')'");
        } else {
          e = integer();
        }
      }
      r[Key{}] = RatFunc(QLaurent::var(e));
      return r;
    }
    if (c == 'e' || c == 'x') {
      Key k;
      k.gen = gen_name();
      r[k] = RatFunc(1);
      return r;
    }
    fail(c ? "unexpected '" + std::string(1, c) + "'" : "unexpected end of input");
  }

  int gen_name() {
    skip();
    if (s_.compare(i_, 2, "x1") == 0) { i_ += 2; return kX1; }
    if (s_.compare(i_, 2, "x2") == 0) { i_ += 2; return kX2; }
    if (s_.compare(i_, 1, "e") == 0) { i_ += 1; return kEmpty; }
    fail("expected generator e, x1 or x2");
  }

  const std::string& s_;
  size_t i_ = 0;
};

}  // namespace

LinComb parse(const std::string& text) { return Reader(text).run(); }

}  // namespace expr

RatFunc parse_ratfunc(const std::string& text) {
  auto lc = expr::parse(text);
  RatFunc r;
  for (auto& [k, c] : lc) {
    if (!k.label.empty() || k.gen != expr::kNone) throw ParseError("expected a scalar in \"" + text + "\"");
    r += c;
  }
  return r;
}

LaurentPoly parse_laurent(const std::string& text) {
  RatFunc r = parse_ratfunc(text);
  if (!r.is_laurent()) throw ParseError("not a Laurent polynomial: \"" + text + "\"");
  try {
    return to_z(r.num());
  } catch (const DomainError&) {
    throw ParseError("non-integral coefficient in \"" + text + "\"");
  }
}

}  // namespace skein
