#include "logcy/monodromy.hpp"

#include <stdexcept>

#include "logcy/errors.hpp"

namespace logcy {

Monodromy::Monodromy(Integer m11, Integer m12, Integer m21, Integer m22)
    : a_(std::move(m11)), b_(std::move(m12)), c_(std::move(m21)), d_(std::move(m22)) {
  if (det() != 1) throw std::invalid_argument("monodromy matrix must have determinant 1");
}

Monodromy operator*(const Monodromy& x, const Monodromy& y) {
  return Monodromy(x.a_ * y.a_ + x.b_ * y.c_, x.a_ * y.b_ + x.b_ * y.d_,
                   x.c_ * y.a_ + x.d_ * y.c_, x.c_ * y.b_ + x.d_ * y.d_);
}

std::string_view to_string(BundleType t) {
  switch (t) {
    case BundleType::Elliptic: return "elliptic";
    case BundleType::Parabolic: return "parabolic";
    case BundleType::Hyperbolic: return "hyperbolic";
  }
  return "?";
}

Monodromy monodromy(const SphereCycle& c) {
  Monodromy a = Monodromy::identity();
  for (const auto& s : c.entries()) a = Monodromy::elementary(-s) * a;
  return a;
}

Monodromy monodromy(const Divisor& d) {
  if (d.is_torus())
    throw PreconditionError("CycleRequired", "a torus boundary is a circle bundle, not a torus bundle");
  return monodromy(d.cycle());
}

TraceCertificate nondegeneracy_by_trace(const SphereCycle& c) {
  TraceCertificate out;
  out.trace = monodromy(c).trace();
  out.certifies_nondegenerate = out.trace != 2;
  return out;
}

BundleType bundle_type(const Monodromy& m) {
  const Integer t = abs(m.trace());
  if (t < 2) return BundleType::Elliptic;
  if (t == 2) return BundleType::Parabolic;
  return BundleType::Hyperbolic;
}

}  // namespace logcy
