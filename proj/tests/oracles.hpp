#pragma once

// Reference computations that share no code path with the library: used to
// cross-check it in the unit and acceptance tests.

#include <algorithm>
#include <array>
#include <numeric>
#include <vector>

#include "logcy/integer.hpp"
#include "logcy/linalg.hpp"
#include "logcy/matrix.hpp"

namespace oracle {

using logcy::Integer;
using logcy::IntMatrix;
using logcy::Rational;

/// Sum over permutations. Fine up to n = 8 or so.
inline Integer leibniz_det(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<std::size_t> perm(n);
  std::iota(perm.begin(), perm.end(), 0);
  Integer total = 0;
  do {
    int sign = 1;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = i + 1; j < n; ++j)
        if (perm[i] > perm[j]) sign = -sign;
    Integer term = sign;
    for (std::size_t i = 0; i < n && term != 0; ++i) term *= m(i, perm[i]);
    total += term;
  } while (std::next_permutation(perm.begin(), perm.end()));
  return total;
}

/// Characteristic polynomial det(xI - m) by Faddeev-LeVerrier; coefficient
/// c[i] multiplies x^i.
inline std::vector<Rational> char_poly(const IntMatrix& m) {
  const std::size_t n = m.rows();
  std::vector<Rational> c(n + 1);
  c[n] = 1;
  std::vector<std::vector<Rational>> mk(n, std::vector<Rational>(n));  // M_k
  std::vector<std::vector<Rational>> prod(n, std::vector<Rational>(n));
  for (std::size_t k = 1; k <= n; ++k) {
    // M_k = A M_{k-1} + c_{n-k+1} I, with M_0 = 0.
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t j = 0; j < n; ++j) {
        Rational s = 0;
        for (std::size_t l = 0; l < n; ++l) s += Rational(m(i, l)) * mk[l][j];
        prod[i][j] = s;
      }
    for (std::size_t i = 0; i < n; ++i) {
      for (std::size_t j = 0; j < n; ++j) mk[i][j] = prod[i][j];
      mk[i][i] += c[n - k + 1];
    }
    Rational tr = 0;
    for (std::size_t i = 0; i < n; ++i)
      for (std::size_t l = 0; l < n; ++l) tr += Rational(m(i, l)) * mk[l][i];
    c[n - k] = -tr / Rational(static_cast<long>(k));
  }
  return c;
}

inline std::size_t sign_changes(const std::vector<Rational>& c) {
  std::size_t changes = 0;
  int last = 0;
  for (const auto& v : c) {
    const int s = sgn(v);
    if (s == 0) continue;
    if (last != 0 && s != last) ++changes;
    last = s;
  }
  return changes;
}

/// Inertia from the characteristic polynomial: a symmetric matrix has only
/// real roots, so Descartes' rule of signs counts them exactly.
inline logcy::Inertia descartes_inertia(const IntMatrix& m) {
  auto c = char_poly(m);
  std::size_t zero = 0;
  while (zero < c.size() && c[zero] == 0) ++zero;
  std::vector<Rational> reduced(c.begin() + static_cast<std::ptrdiff_t>(zero), c.end());
  std::vector<Rational> neg = reduced;
  for (std::size_t i = 0; i < neg.size(); ++i)
    if ((i + zero) % 2 == 1) neg[i] = -neg[i];
  return {sign_changes(reduced), zero, sign_changes(neg)};
}

/// Every rotation and reflection materialized, minimum taken.
inline std::vector<Integer> brute_canonical(std::vector<Integer> s) {
  std::vector<Integer> best = s;
  for (int pass = 0; pass < 2; ++pass) {
    for (std::size_t r = 0; r < s.size(); ++r) {
      std::rotate(s.begin(), s.begin() + 1, s.end());
      best = std::min(best, s);
    }
    std::reverse(s.begin(), s.end());
  }
  return best;
}

using Mat2 = std::array<Integer, 4>;

/// Product of the factors ((x, 1), (-1, 0)) with x = -s_i, first entry
/// applied first (rightmost).
inline Mat2 monodromy_product(const std::vector<Integer>& s) {
  Mat2 a{1, 0, 0, 1};
  for (const auto& v : s) {
    const Integer x = -v;
    a = Mat2{x * a[0] + a[2], x * a[1] + a[3], -a[0], -a[1]};
  }
  return a;
}

/// Rank by fraction-free elimination over Z.
inline std::size_t integer_rank(IntMatrix m) {
  std::size_t r = 0;
  for (std::size_t col = 0; col < m.cols() && r < m.rows(); ++col) {
    std::size_t p = r;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(r, j), m(p, j));
    for (std::size_t i = r + 1; i < m.rows(); ++i) {
      const Integer f = m(i, col);
      const Integer g = m(r, col);
      for (std::size_t j = 0; j < m.cols(); ++j) m(i, j) = m(i, j) * g - m(r, j) * f;
    }
    ++r;
  }
  return r;
}

/// Q_D built directly from the adjacency description.
inline IntMatrix cycle_matrix(const std::vector<long>& s) {
  const std::size_t k = s.size();
  IntMatrix q(k, k);
  for (std::size_t i = 0; i < k; ++i) {
    q(i, i) = s[i];
    for (std::size_t j = 0; j < k; ++j) {
      if (i == j) continue;
      const bool next = (i + 1) % k == j;
      const bool prev = (j + 1) % k == i;
      q(i, j) += (next ? 1 : 0) + (prev ? 1 : 0);
    }
  }
  return q;
}

}  // namespace oracle
