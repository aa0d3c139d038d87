#include "logcy/linalg.hpp"

#include <stdexcept>
#include <utility>

namespace logcy {

namespace {

RatMatrix to_rational(const IntMatrix& m) {
  RatMatrix r(m.rows(), m.cols());
  for (std::size_t i = 0; i < m.rows(); ++i)
    for (std::size_t j = 0; j < m.cols(); ++j) r(i, j) = m(i, j);
  return r;
}

void swap_rows(RatMatrix& m, std::size_t a, std::size_t b) {
  if (a == b) return;
  for (std::size_t j = 0; j < m.cols(); ++j) std::swap(m(a, j), m(b, j));
}

// Reduced row echelon form in place; returns the pivot columns in order.
// Only the first `ncols` columns are eligible as pivots.
std::vector<std::size_t> rref(RatMatrix& m, std::size_t ncols) {
  std::vector<std::size_t> pivots;
  std::size_t row = 0;
  for (std::size_t col = 0; col < ncols && row < m.rows(); ++col) {
    std::size_t p = row;
    while (p < m.rows() && m(p, col) == 0) ++p;
    if (p == m.rows()) continue;
    swap_rows(m, row, p);
    const Rational inv = 1 / m(row, col);
    for (std::size_t j = col; j < m.cols(); ++j) m(row, j) *= inv;
    for (std::size_t i = 0; i < m.rows(); ++i) {
      if (i == row || m(i, col) == 0) continue;
      const Rational f = m(i, col);
      for (std::size_t j = col; j < m.cols(); ++j) m(i, j) -= f * m(row, j);
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

}  // namespace

Inertia inertia(const IntMatrix& m) {
  if (!m.symmetric()) throw std::invalid_argument("inertia needs a symmetric matrix");
  const std::size_t n = m.rows();
  RatMatrix a = to_rational(m);
  Inertia out;
  for (std::size_t k = 0; k < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t j = k + 1;
      while (j < n && a(j, j) == 0) ++j;
      if (j < n) {
        swap_rows(a, k, j);
        for (std::size_t i = 0; i < n; ++i) std::swap(a(i, k), a(i, j));
      } else {
        j = k + 1;
        while (j < n && a(k, j) == 0) ++j;
        if (j == n) {
          ++out.zero;  // the remaining row and column are already zero
          continue;
        }
        for (std::size_t i = 0; i < n; ++i) a(k, i) += a(j, i);
        for (std::size_t i = 0; i < n; ++i) a(i, k) += a(i, j);
      }
    }
    const Rational p = a(k, k);
    if (p > 0)
      ++out.plus;
    else
      ++out.minus;
    for (std::size_t i = k + 1; i < n; ++i) {
      if (a(i, k) == 0) continue;
      const Rational f = a(i, k) / p;
      for (std::size_t j = k + 1; j < n; ++j) a(i, j) -= f * a(k, j);
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      a(i, k) = 0;
      a(k, i) = 0;
    }
  }
  return out;
}

Integer determinant(const IntMatrix& m) {
  if (!m.square()) throw std::invalid_argument("determinant needs a square matrix");
  const std::size_t n = m.rows();
  if (n == 0) return 1;
  IntMatrix a = m;
  Integer prev = 1;
  int sign = 1;
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (a(k, k) == 0) {
      std::size_t p = k + 1;
      while (p < n && a(p, k) == 0) ++p;
      if (p == n) return 0;
      for (std::size_t j = 0; j < n; ++j) std::swap(a(k, j), a(p, j));
      sign = -sign;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        Integer t = a(i, j) * a(k, k) - a(i, k) * a(k, j);
        mpz_divexact(t.get_mpz_t(), t.get_mpz_t(), prev.get_mpz_t());
        a(i, j) = std::move(t);
      }
    }
    prev = a(k, k);
  }
  return sign * a(n - 1, n - 1);
}

std::size_t rank(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  return rref(r, r.cols()).size();
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, std::span<const Rational> a) {
  if (a.size() != m.rows()) throw std::invalid_argument("right-hand side length does not match the matrix");
  RatMatrix aug(m.rows(), m.cols() + 1);
  for (std::size_t i = 0; i < m.rows(); ++i) {
    for (std::size_t j = 0; j < m.cols(); ++j) aug(i, j) = m(i, j);
    aug(i, m.cols()) = a[i];
    aug(i, m.cols()).canonicalize();
  }
  const auto pivots = rref(aug, m.cols());
  for (std::size_t r = pivots.size(); r < aug.rows(); ++r)
    if (aug(r, m.cols()) != 0) return std::nullopt;
  std::vector<Rational> z(m.cols());
  for (std::size_t r = 0; r < pivots.size(); ++r) z[pivots[r]] = aug(r, m.cols());
  return z;
}

std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, std::span<const Integer> a) {
  std::vector<Rational> q(a.begin(), a.end());
  return solve_rational(m, std::span<const Rational>(q));
}

std::vector<std::vector<Rational>> nullspace(const IntMatrix& m) {
  RatMatrix r = to_rational(m);
  const auto pivots = rref(r, r.cols());
  std::vector<bool> is_pivot(m.cols(), false);
  for (auto p : pivots) is_pivot[p] = true;
  std::vector<std::vector<Rational>> basis;
  for (std::size_t f = 0; f < m.cols(); ++f) {
    if (is_pivot[f]) continue;
    std::vector<Rational> v(m.cols());
    v[f] = 1;
    for (std::size_t row = 0; row < pivots.size(); ++row) v[pivots[row]] = -r(row, f);
    basis.push_back(std::move(v));
  }
  return basis;
}

}  // namespace logcy
