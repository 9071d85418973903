#pragma once
// Shared recursive-descent reader for the text forms:
//   "A*(1,1) + A^-1*(1,-1)", "(A - A^-1)*(0,0,0,1)*{x2}", "(A^2+1)/(2*A)".
#include <map>
#include <string>
#include <vector>

#include "skein/ratfunc.hpp"

namespace skein::expr {

enum Gen : int { kNone = -1, kEmpty = 0, kX1 = 1, kX2 = 2 };

struct Key {
  std::vector<long> label;  // empty = no tuple factor
  int gen = kNone;
  friend bool operator<(const Key& a, const Key& b) {
    if (a.label != b.label) return a.label < b.label;
    return a.gen < b.gen;
  }
};

using LinComb = std::map<Key, RatFunc>;

LinComb parse(const std::string& text);

}  // namespace skein::expr
