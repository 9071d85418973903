#pragma once
// Joining "coeff*basis" summands in the one house style.
#include <string>

namespace skein::textfmt {

class Sum {
 public:
  // coeff: printed coefficient; single: coefficient is one signed term;
  // basis: e.g. "(1,-1)" or "" for a bare scalar
  void add(std::string coeff, bool single, const std::string& basis) {
    bool neg = false;
    if (single && !coeff.empty() && coeff[0] == '-') {
      neg = true;
      coeff.erase(0, 1);
    }
    std::string body;
    if (!single) coeff = "(" + coeff + ")";
    if (basis.empty()) body = coeff;
    else if (single && coeff == "1") body = basis;
    else body = coeff + "*" + basis;
    if (out_.empty()) out_ = (neg ? "-" : "") + body;
    else out_ += (neg ? " - " : " + ") + body;
  }
  std::string str() const { return out_.empty() ? "0" : out_; }

 private:
  std::string out_;
};

}  // namespace skein::textfmt
