#pragma once

#include <string_view>

#include "logcy/divisor.hpp"
#include "logcy/integer.hpp"

namespace logcy {

/// An element of SL(2,Z), row-major.
class Monodromy {
 public:
  /// Throws std::invalid_argument unless m11*m22 - m12*m21 == 1.
  Monodromy(Integer m11, Integer m12, Integer m21, Integer m22);

  static Monodromy identity() { return Monodromy(1, 0, 0, 1); }
  /// The elementary factor with rows (x, 1) and (-1, 0).
  static Monodromy elementary(const Integer& x) { return Monodromy(x, 1, -1, 0); }

  const Integer& m11() const noexcept { return a_; }
  const Integer& m12() const noexcept { return b_; }
  const Integer& m21() const noexcept { return c_; }
  const Integer& m22() const noexcept { return d_; }

  Integer trace() const { return a_ + d_; }
  Integer det() const { return a_ * d_ - b_ * c_; }

  friend Monodromy operator*(const Monodromy& x, const Monodromy& y);
  friend bool operator==(const Monodromy&, const Monodromy&) = default;

 private:
  Integer a_, b_, c_, d_;
};

enum class BundleType { Elliptic, Parabolic, Hyperbolic };

std::string_view to_string(BundleType t);

/// A(-s_1,...,-s_k) = M(-s_k) ... M(-s_1); the factor for s_1 acts first.
/// Throws PreconditionError for a torus (its boundary is a circle bundle).
Monodromy monodromy(const SphereCycle& c);
Monodromy monodromy(const Divisor& d);

struct TraceCertificate {
  Integer trace;
  /// trace != 2. A one-sided certificate: true guarantees det Q_D != 0.
  bool certifies_nondegenerate = false;
};

TraceCertificate nondegeneracy_by_trace(const SphereCycle& c);

BundleType bundle_type(const Monodromy& m);

}  // namespace logcy
