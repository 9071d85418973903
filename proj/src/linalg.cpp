#include "skein/linalg.hpp"

#include <algorithm>

namespace skein {

std::vector<Integer> smith_normal_form(IntMatrix m) {
  const std::size_t R = m.rows, C = m.cols, K = std::min(R, C);
  auto swap_rows = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t c = 0; c < C; ++c) std::swap(m.at(i, c), m.at(j, c));
  };
  auto swap_cols = [&](std::size_t i, std::size_t j) {
    if (i != j)
      for (std::size_t r = 0; r < R; ++r) std::swap(m.at(r, i), m.at(r, j));
  };
  std::size_t t = 0;
  while (t < K) {
    // smallest nonzero |entry| in the trailing block
    bool found = false;
    std::size_t pi = 0, pj = 0;
    for (std::size_t i = t; i < R; ++i)
      for (std::size_t j = t; j < C; ++j)
        if (m.at(i, j) != 0 && (!found || abs(m.at(i, j)) < abs(m.at(pi, pj)))) {
          found = true;
          pi = i;
          pj = j;
        }
    if (!found) break;
    swap_rows(t, pi);
    swap_cols(t, pj);
    const Integer p = m.at(t, t);
    bool clean = true;
    for (std::size_t i = t + 1; i < R; ++i) {
      if (m.at(i, t) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(i, t).get_mpz_t(), p.get_mpz_t());
      for (std::size_t c = t; c < C; ++c) m.at(i, c) -= q * m.at(t, c);
      if (m.at(i, t) != 0) clean = false;
    }
    for (std::size_t j = t + 1; j < C; ++j) {
      if (m.at(t, j) == 0) continue;
      Integer q;
      mpz_fdiv_q(q.get_mpz_t(), m.at(t, j).get_mpz_t(), p.get_mpz_t());
      for (std::size_t r = t; r < R; ++r) m.at(r, j) -= q * m.at(r, t);
      if (m.at(t, j) != 0) clean = false;
    }
    if (!clean) continue;
    // divisibility: fold an offending row into row t and go again
    bool fixed = true;
    for (std::size_t i = t + 1; i < R && fixed; ++i)
      for (std::size_t j = t + 1; j < C; ++j)
        if (!mpz_divisible_p(m.at(i, j).get_mpz_t(), p.get_mpz_t())) {
          for (std::size_t c = t; c < C; ++c) m.at(t, c) += m.at(i, c);
          fixed = false;
          break;
        }
    if (!fixed) continue;
    ++t;
  }
  std::vector<Integer> d(K);
  for (std::size_t i = 0; i < K; ++i) d[i] = abs(m.at(i, i));
  return d;
}

std::size_t int_rank(IntMatrix m) {
  std::size_t r = 0;
  Integer prev = 1;
  for (std::size_t c = 0; c < m.cols && r < m.rows; ++c) {
    std::size_t p = r;
    while (p < m.rows && m.at(p, c) == 0) ++p;
    if (p == m.rows) continue;
    if (p != r)
      for (std::size_t j = 0; j < m.cols; ++j) std::swap(m.at(p, j), m.at(r, j));
    for (std::size_t i = r + 1; i < m.rows; ++i) {
      for (std::size_t j = c + 1; j < m.cols; ++j)
        m.at(i, j) = (m.at(r, c) * m.at(i, j) - m.at(i, c) * m.at(r, j)) / prev;
      m.at(i, c) = 0;
    }
    prev = m.at(r, c);
    ++r;
  }
  return r;
}

}  // namespace skein
