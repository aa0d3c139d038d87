#pragma once

#include <cstddef>
#include <string>
#include <string_view>
#include <vector>

#include "logcy/divisor.hpp"
#include "logcy/integer.hpp"
#include "logcy/matrix.hpp"
#include "logcy/moves.hpp"

namespace logcy {

/// Integer coefficient vector over the active ambient basis.
using HClass = std::vector<Integer>;

/// Lattice of H_2 for the rational surfaces we model.
///
/// Rational: basis (h, e_1..e_n), pairing diag(+1, -1, ..., -1).
/// Ruled:    basis (f_1, f_2, e_1..e_n), pairing [[0,1],[1,0]] + diag(-1, ...).
/// The one-point blow-up of CP^2 with fibre/section classes (f, s) is stored
/// as Rational with n = 1 via f = h - e_1, s = h.
class AmbientBasis {
 public:
  enum class Kind { Rational, Ruled };

  AmbientBasis(Kind kind, std::size_t exceptional);

  static AmbientBasis rational(std::size_t n) { return {Kind::Rational, n}; }
  static AmbientBasis ruled(std::size_t n) { return {Kind::Ruled, n}; }

  Kind kind() const noexcept { return kind_; }
  std::size_t exceptional_count() const noexcept { return n_; }
  std::size_t dimension() const noexcept { return leading() + n_; }
  /// Number of non-exceptional basis vectors (1 or 2).
  std::size_t leading() const noexcept { return kind_ == Kind::Rational ? 1 : 2; }
  /// Index of e_j (0-based j).
  std::size_t exceptional_index(std::size_t j) const noexcept { return leading() + j; }

  Integer pair(const HClass& u, const HClass& v) const;
  IntMatrix gram() const;

  AmbientBasis with_extra_exceptional() const { return {kind_, n_ + 1}; }
  AmbientBasis without_exceptional() const;

  friend bool operator==(const AmbientBasis&, const AmbientBasis&) = default;

 private:
  Kind kind_;
  std::size_t n_;
};

std::string_view to_string(AmbientBasis::Kind kind);

/// A divisor together with the homology classes of its components and c_1.
struct LogCYPair {
  Divisor divisor;
  AmbientBasis basis;
  std::vector<HClass> classes;
  HClass c1;
};

struct Violation {
  std::string code;
  std::string message;
};

/// Every violated LogCYPair invariant, in a fixed order: structure,
/// "sum_ne_c1", then per component "self_intersection", "pairing" and
/// "adjunction". Empty means valid.
std::vector<Violation> validate_pair(const LogCYPair& p);

/// Class bookkeeping for a move. Blow-ups adjoin a fresh exceptional class e:
/// NonToricUp at i subtracts e from class i and from c1; ToricUp on edge
/// (i, i+1) subtracts e from both endpoint classes, inserts a component of
/// class e and subtracts e from c1. ToricDown is supported when the -1
/// component is a bare exceptional basis vector whose coefficient vanishes
/// everywhere after the contraction; that vector is then dropped.
/// Throws PreconditionError when the move does not apply.
LogCYPair transport(const LogCYPair& p, const Move& m);

LogCYPair transport(const LogCYPair& p, const std::vector<Move>& word);

/// b_2(X) - r(D) - 1. Throws PreconditionError("InvalidInput") when negative.
long complement_betti(long b2_ambient, long r);

enum class RuleStatus { Satisfied, Violated, NotApplicable };
std::string_view to_string(RuleStatus s);

struct RuleResult {
  std::string rule;
  RuleStatus status = RuleStatus::NotApplicable;
  std::string detail;
};

/// Advisory constraint report: homologous-component limits, rules on
/// non-negative components, and the length-stratified case table (matched
/// up to rotation and reversal). Never throws on a valid pair.
std::vector<RuleResult> check_constraints(const LogCYPair& p);

/// True when some rule in the report is Violated.
bool has_violation(const std::vector<RuleResult>& report);

/// The class of the whole divisor, sum of component classes.
HClass total_class(const LogCYPair& p);

}  // namespace logcy
