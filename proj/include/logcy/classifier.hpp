#pragma once

#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "logcy/divisor.hpp"
#include "logcy/homology.hpp"
#include "logcy/linalg.hpp"
#include "logcy/moves.hpp"

namespace logcy {

/// Boundary behaviour of a regular neighbourhood.
///
/// Convex carries the contact Kodaira label "<= 0", Concave carries "-inf"
/// (concavity holds up to a local deformation of the symplectic form).
/// InvalidForLogCY marks b+ >= 2, which no log Calabi-Yau divisor has.
enum class ContactType { Convex, Concave, NoContactBoundary, InvalidForLogCY };

/// "convex", "concave", "none", "invalid".
std::string_view to_string(ContactType t);
/// "<=0", "-inf", or empty when there is no contact boundary.
std::string_view kodaira_label(ContactType t);

struct Classification {
  Inertia inertia;
  ContactType contact = ContactType::NoContactBoundary;
};

ContactType contact_type(const Inertia& in);
Classification classify(const Divisor& d);

enum class Definiteness { NegativeDefinite, NegativeSemiDefinite, PositiveIndex };
std::string_view to_string(Definiteness d);

/// Predicts the definiteness class of a toric minimal cycle from its
/// entries alone; nullopt when the cycle is not toric minimal.
std::optional<Definiteness> definiteness_shortcut(const SphereCycle& c);

/// Solves Q_D z = areas. Throws PreconditionError("NonPositiveArea") unless
/// every area is > 0 and PreconditionError("AreaLength") on a length
/// mismatch. nullopt means omega is not exact on the boundary.
std::optional<std::vector<Rational>> exact_on_boundary(const Divisor& d, std::span<const Rational> areas);

/// Whether some strictly positive area vector makes Q_D z = a solvable:
/// true outright for nondegenerate Q_D, otherwise a search over
/// a in {1,2,3}^k (k <= 8) backed by an exact check that ker Q_D meets
/// the non-negative orthant only in 0.
bool exact_for_some_positive_area(const Divisor& d);

/// Span of the component classes together with their orthogonal complement
/// in the ambient lattice is everything.
bool i2_criterion(const LogCYPair& p);

enum class RigidPattern {
  AllAtLeastMinusOne,  // s_i >= -1 for every i
  MinusOneTwoOrThree,  // (-1,-2) or (-1,-3)
  OneAndAtLeastFour,   // (1, p), p >= 4
  ZeroAndAtMostFour,   // (0, n), n <= 4
  OneOneP,             // (1, 1, p), p <= 1
  ThreeZerosN,         // (0, 0, 0, n), n <= 0
  OneChain,            // (1, -p_1+1, -p_2, ..., -p_{l-1}, -p_l+1), p_i >= 2, l >= 2
};
std::string_view to_string(RigidPattern p);

/// First pattern (in enum order) matched by some rotation/reversal of `c`.
std::optional<RigidPattern> match_rigid_pattern(const SphereCycle& c);

struct RigidityWitness {
  RigidPattern pattern;
  MoveWord path;  // replays from the input to the matching representative
};

/// Breadth-first search over the toric class of `c` for a representative
/// matching one of the rigid patterns; nullopt means unknown within bounds.
std::optional<RigidityWitness> rigidity_witness(const SphereCycle& c, const SearchBounds& bounds);

/// Betti-number arithmetic for a Stein filling U glued to the complement of
/// a negative definite toric minimal cycle.
struct ProfileVerdict {
  bool valid = false;
  long b_plus_closed = 0;  // b+(X_U) = 1 + b2_plus + b2_zero
  long euler = 0;          // e(U) = 1 - b1 + b2_plus + b2_zero + b2_minus
  std::vector<std::string> violations;
};

ProfileVerdict filling_profile_check(long b1, long b2_plus, long b2_zero, long b2_minus);

}  // namespace logcy
