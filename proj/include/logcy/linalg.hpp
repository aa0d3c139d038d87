#pragma once

#include <cstddef>
#include <optional>
#include <span>
#include <vector>

#include "logcy/integer.hpp"
#include "logcy/matrix.hpp"

namespace logcy {

/// Signature triple of a symmetric form.
struct Inertia {
  std::size_t plus = 0;
  std::size_t zero = 0;
  std::size_t minus = 0;

  std::size_t dimension() const noexcept { return plus + zero + minus; }
  bool negative_definite() const noexcept { return plus == 0 && zero == 0; }

  friend bool operator==(const Inertia&, const Inertia&) = default;
};

/// Exact inertia by congruence diagonalization over Q.
///
/// Zero pivots are handled by symmetric swaps with a later nonzero
/// diagonal entry, or, when the whole remaining diagonal vanishes, by
/// adding a row/column with a nonzero pairing (which creates the pivot
/// 2*a_kj). Throws std::invalid_argument for non-symmetric input.
Inertia inertia(const IntMatrix& m);

/// Fraction-free (Bareiss) determinant of a square matrix.
Integer determinant(const IntMatrix& m);

/// Rank over Q.
std::size_t rank(const IntMatrix& m);

/// Some z with m z = a, or nullopt when `a` is outside the column space.
/// Throws std::invalid_argument on a dimension mismatch.
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, std::span<const Rational> a);
std::optional<std::vector<Rational>> solve_rational(const IntMatrix& m, std::span<const Integer> a);

/// Basis of {x : m x = 0} over Q (one vector per free column).
std::vector<std::vector<Rational>> nullspace(const IntMatrix& m);

}  // namespace logcy
