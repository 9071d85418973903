#pragma once
#include <cstddef>
#include <vector>

#include "skein/scalar.hpp"

namespace skein {

template <class F>
struct FieldMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<F> a;  // row-major

  FieldMatrix() = default;
  FieldMatrix(std::size_t r, std::size_t c, const F& zero) : rows(r), cols(c), a(r * c, zero) {}
  F& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const F& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }

  FieldMatrix transpose() const {
    FieldMatrix t;
    t.rows = cols;
    t.cols = rows;
    t.a.reserve(a.size());
    for (std::size_t j = 0; j < cols; ++j)
      for (std::size_t i = 0; i < rows; ++i) t.a.push_back(at(i, j));
    return t;
  }
};

// Reduced row echelon form in place; pivots are the first nonzero entry in
// column order. Returns pivot columns.
template <class F>
std::vector<std::size_t> rref(FieldMatrix<F>& m) {
  std::vector<std::size_t> piv;
  std::size_t r = 0;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && is_zero(m.at(p, c))) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    F iv = inverse(m.at(r, c));
    for (std::size_t j = c; j < m.cols; ++j) m.at(r, j) = m.at(r, j) * iv;
    for (std::size_t i = 0; i < m.rows; ++i) {
      if (i == r || is_zero(m.at(i, c))) continue;
      F f = m.at(i, c);
      for (std::size_t j = c; j < m.cols; ++j) m.at(i, j) = m.at(i, j) - f * m.at(r, j);
    }
    piv.push_back(c);
    ++r;
  }
  return piv;
}

template <class F>
std::size_t field_rank(FieldMatrix<F> m) {
  return rref(m).size();
}

// basis of {v : m v = 0}
template <class F>
std::vector<std::vector<F>> kernel(FieldMatrix<F> m, const F& zero, const F& one) {
  auto piv = rref(m);
  std::vector<bool> is_piv(m.cols, false);
  for (auto c : piv) is_piv[c] = true;
  std::vector<std::vector<F>> out;
  for (std::size_t free = 0; free < m.cols; ++free) {
    if (is_piv[free]) continue;
    std::vector<F> v(m.cols, zero);
    v[free] = one;
    for (std::size_t i = 0; i < piv.size(); ++i) v[piv[i]] = -m.at(i, free);
    out.push_back(std::move(v));
  }
  return out;
}

struct IntMatrix {
  std::size_t rows = 0, cols = 0;
  std::vector<Integer> a;

  IntMatrix() = default;
  IntMatrix(std::size_t r, std::size_t c) : rows(r), cols(c), a(r * c) {}
  Integer& at(std::size_t i, std::size_t j) { return a[i * cols + j]; }
  const Integer& at(std::size_t i, std::size_t j) const { return a[i * cols + j]; }
};

// invariant factors d1 | d2 | ..., zero padded to min(rows, cols)
std::vector<Integer> smith_normal_form(IntMatrix m);

// Bareiss fraction-free rank over Z (= rank over Q)
std::size_t int_rank(IntMatrix m);

}  // namespace skein
