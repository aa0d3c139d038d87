#include "logcy/duality.hpp"

#include <algorithm>

#include "logcy/classifier.hpp"
#include "logcy/errors.hpp"

namespace logcy {

SphereCycle expand(const BlockForm& blocks) {
  std::vector<Integer> s;
  for (const auto& b : blocks) {
    s.push_back(b.a);
    for (Integer i = 0; i < b.b; ++i) s.emplace_back(-2);
  }
  return SphereCycle(std::move(s));
}

BlockForm block_form(const SphereCycle& c) {
  if (!is_toric_minimal(c)) throw NotEligible("NotToricMinimal", "the cycle has a -1 component");
  const auto& s = c.entries();
  if (std::none_of(s.begin(), s.end(), [](const Integer& v) { return v <= -3; }))
    throw NotEligible("NoEntryBelowMinusTwo", "the cycle needs an entry <= -3");
  if (!classify(c).inertia.negative_definite())
    throw NotEligible("NotNegativeDefinite", "Q_D is not negative definite");
  if (descriptors(c).s_total > -2) throw NotEligible("STotalAboveMinusTwo", "s(D) must be <= -2");

  const SphereCycle canon = canonical_form(c);
  BlockForm out;
  for (const auto& v : canon.entries()) {
    if (v == -2)
      out.back().b += 1;
    else
      out.push_back({v, 0});
  }
  return out;
}

SphereCycle dual_cycle(const SphereCycle& c) {
  const BlockForm blocks = block_form(c);
  const std::size_t n = blocks.size();
  BlockForm dual;
  dual.reserve(n);
  for (std::size_t i = 0; i < n; ++i) dual.push_back({-blocks[i].b - 3, -blocks[(i + 1) % n].a - 3});
  return canonical_form(expand(dual));
}

Torus elliptic_dual(const Torus& t) { return Torus{-t.s}; }

}  // namespace logcy
