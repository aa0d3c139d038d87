#pragma once

#include <cstddef>
#include <optional>
#include <string_view>
#include <vector>

#include "logcy/divisor.hpp"

namespace logcy {

/// A positional blow-up/blow-down move.
///
/// ToricUp at index i inserts a -1 sphere on the edge between components i
/// and i+1 (cyclically); ToricDown at i contracts the -1 component i;
/// NonToricUp at i blows up a smooth point of component i.
struct Move {
  enum class Kind { ToricUp, ToricDown, NonToricUp };

  Kind kind = Kind::ToricUp;
  std::size_t index = 0;

  static Move toric_up(std::size_t edge) { return {Kind::ToricUp, edge}; }
  static Move toric_down(std::size_t component) { return {Kind::ToricDown, component}; }
  static Move nontoric_up(std::size_t component) { return {Kind::NonToricUp, component}; }

  friend bool operator==(const Move&, const Move&) = default;
};

/// "toric_up", "toric_down" or "nontoric_up".
std::string_view to_string(Move::Kind kind);
Move::Kind parse_move_kind(std::string_view name);

/// Position of the inserted -1 component after ToricUp on `edge` of a
/// k-cycle: edge + 1 (the last edge appends at the end).
inline std::size_t inserted_index(std::size_t edge) { return edge + 1; }

/// Length k+1: -1 inserted on the edge, both endpoints decremented.
/// Throws std::out_of_range for a bad edge.
SphereCycle toric_blow_up(const SphereCycle& c, std::size_t edge);

/// Inverse of toric_blow_up. Throws PreconditionError named
/// "NotBlowDownable" when s != -1 and "LengthTooShort" when k == 2.
SphereCycle toric_blow_down(const SphereCycle& c, std::size_t component);

/// Decrements one self-intersection; a torus decrements its only entry.
Divisor non_toric_blow_up(const Divisor& d, std::size_t component);

/// Applies any move; toric moves on a torus are a PreconditionError.
Divisor apply(const Divisor& d, const Move& m);

/// A replayable word: the moves together with the state they start from.
struct MoveWord {
  Divisor initial;
  std::vector<Move> moves;

  Divisor final_state() const;
  /// initial, then the state after each move.
  std::vector<Divisor> states() const;
};

struct Reduction {
  SphereCycle result;
  MoveWord word;
};

/// Blows down -1 spheres while the length is at least 3. At each step the
/// current cycle is read in canonical order and the lowest -1 position
/// there is contracted; the word records the matching position in the
/// actual (un-rotated) state, so it replays from `c` directly.
Reduction toric_minimal_reduce(const SphereCycle& c);

struct SearchBounds {
  std::size_t max_length = 8;
  Integer min_entry = -10;
  std::size_t max_steps = 6;
};

/// Bounded bidirectional breadth-first search over canonical forms using
/// toric blow-ups and blow-downs. A returned word replays from `a` to a
/// rotation or reversal of `b`; nullopt means nothing was found inside the
/// bounds, which is not a proof of inequivalence.
std::optional<MoveWord> toric_equivalent(const SphereCycle& a, const SphereCycle& b,
                                         const SearchBounds& bounds);

/// Canonical forms reachable from `c` by one toric move inside `bounds`,
/// in deterministic order (blow-ups by edge, then blow-downs by index).
std::vector<SphereCycle> toric_neighbours(const SphereCycle& c, const SearchBounds& bounds);

/// Finds a single toric move turning `from` into some dihedral image of
/// `to`. Used to turn canonical-form paths into positional words.
std::optional<Move> connecting_move(const SphereCycle& from, const SphereCycle& to);

}  // namespace logcy
