#pragma once

#include <cstddef>
#include <initializer_list>
#include <span>
#include <variant>
#include <vector>

#include "logcy/integer.hpp"
#include "logcy/matrix.hpp"

namespace logcy {

/// A single embedded torus with self-intersection `s`.
struct Torus {
  Integer s;

  friend bool operator==(const Torus& a, const Torus& b) { return a.s == b.s; }
};

/// A cycle of spheres C_1..C_k, k >= 2, stored by self-intersections.
///
/// Component i meets components i-1 and i+1 (cyclically) once each; for
/// k == 2 the two spheres meet in two points. Length-1 cycles would be
/// nodal and are rejected.
class SphereCycle {
 public:
  explicit SphereCycle(std::vector<Integer> seq);
  SphereCycle(std::initializer_list<long> seq);

  std::size_t size() const noexcept { return seq_.size(); }
  const Integer& operator[](std::size_t i) const { return seq_[i]; }
  const std::vector<Integer>& entries() const noexcept { return seq_; }

  friend bool operator==(const SphereCycle& a, const SphereCycle& b) { return a.seq_ == b.seq_; }
  /// Length first, then lexicographic on entries.
  friend bool operator<(const SphereCycle& a, const SphereCycle& b);

 private:
  std::vector<Integer> seq_;
};

class Divisor {
 public:
  Divisor(Torus t) : v_(std::move(t)) {}  // NOLINT(google-explicit-constructor)
  Divisor(SphereCycle c) : v_(std::move(c)) {}  // NOLINT(google-explicit-constructor)

  bool is_torus() const noexcept { return std::holds_alternative<Torus>(v_); }
  bool is_cycle() const noexcept { return std::holds_alternative<SphereCycle>(v_); }
  const Torus& torus() const { return std::get<Torus>(v_); }
  const SphereCycle& cycle() const { return std::get<SphereCycle>(v_); }

  /// Number of components, r(D).
  std::size_t length() const noexcept { return is_torus() ? 1 : cycle().size(); }
  /// Self-intersection sequence; a torus yields its single entry.
  std::vector<Integer> self_intersections() const;

  friend bool operator==(const Divisor& a, const Divisor& b) { return a.v_ == b.v_; }

 private:
  std::variant<Torus, SphereCycle> v_;
};

struct Descriptors {
  std::size_t length = 0;     // r(D)
  Integer s_total;            // sum (s_i + 2) for cycles, s for a torus
  std::size_t nonnegative = 0;  // #{i : s_i >= 0}
};

/// Q_D: diagonal s_i; off-diagonal 1 at cyclic neighbours for k >= 3, 2 for
/// k == 2; a torus gives the 1x1 matrix (s).
IntMatrix intersection_matrix(const Divisor& d);

Descriptors descriptors(const Divisor& d);

/// One of the 2k symmetries of a k-cycle: read the source starting at
/// `start`, forwards or backwards.
struct DihedralMap {
  std::size_t start = 0;
  bool reversed = false;

  /// Index into the source sequence for position `j` of the image.
  std::size_t source_index(std::size_t j, std::size_t k) const noexcept {
    return reversed ? (start + k - (j % k)) % k : (start + j) % k;
  }

  template <typename T>
  std::vector<T> apply(std::span<const T> src) const {
    std::vector<T> out;
    out.reserve(src.size());
    for (std::size_t j = 0; j < src.size(); ++j) out.push_back(src[source_index(j, src.size())]);
    return out;
  }
};

/// The symmetry realizing the canonical form (smallest start, forward
/// before reversed, on ties).
DihedralMap canonical_map(const SphereCycle& c);

/// Lexicographically minimal image over all rotations and reversals.
SphereCycle canonical_form(const SphereCycle& c);
Divisor canonical_form(const Divisor& d);

SphereCycle rotate(const SphereCycle& c, std::size_t shift);
SphereCycle reverse(const SphereCycle& c);

/// No component has self-intersection -1.
bool is_toric_minimal(const SphereCycle& c);

}  // namespace logcy
