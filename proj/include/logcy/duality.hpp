#pragma once

#include <vector>

#include "logcy/divisor.hpp"
#include "logcy/integer.hpp"

namespace logcy {

struct Block {
  Integer a;  // <= -3
  Integer b;  // number of -2 entries following a, >= 0

  friend bool operator==(const Block&, const Block&) = default;
};

/// Cyclic list of blocks; expands to a_1, (-2) x b_1, a_2, (-2) x b_2, ...
using BlockForm = std::vector<Block>;

SphereCycle expand(const BlockForm& blocks);

/// Parses a toric minimal, negative definite cycle with s(D) <= -2 that has
/// an entry <= -3. The cycle is canonicalized first, so the form starts at
/// its smallest entry. Throws NotEligible naming the failed precondition.
BlockForm block_form(const SphereCycle& c);

/// The dual cusp cycle: a'_i = -b_i - 3, b'_i = -a_{i+1} - 3, returned in
/// canonical form. Throws NotEligible like block_form.
SphereCycle dual_cycle(const SphereCycle& c);

/// Torus(s) -> Torus(-s).
Torus elliptic_dual(const Torus& t);

}  // namespace logcy
