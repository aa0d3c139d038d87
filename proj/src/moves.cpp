#include "logcy/moves.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>
#include <string>

#include "logcy/errors.hpp"

namespace logcy {

std::string_view to_string(Move::Kind kind) {
  switch (kind) {
    case Move::Kind::ToricUp: return "toric_up";
    case Move::Kind::ToricDown: return "toric_down";
    case Move::Kind::NonToricUp: return "nontoric_up";
  }
  return "?";
}

Move::Kind parse_move_kind(std::string_view name) {
  if (name == "toric_up") return Move::Kind::ToricUp;
  if (name == "toric_down") return Move::Kind::ToricDown;
  if (name == "nontoric_up") return Move::Kind::NonToricUp;
  throw MalformedInput("unknown move '" + std::string(name) + "'");
}

SphereCycle toric_blow_up(const SphereCycle& c, std::size_t edge) {
  const std::size_t k = c.size();
  if (edge >= k) throw std::out_of_range("edge " + std::to_string(edge) + " out of range");
  std::vector<Integer> s = c.entries();
  s[edge] -= 1;
  s[(edge + 1) % k] -= 1;
  s.insert(s.begin() + static_cast<std::ptrdiff_t>(inserted_index(edge)), Integer(-1));
  return SphereCycle(std::move(s));
}

SphereCycle toric_blow_down(const SphereCycle& c, std::size_t component) {
  const std::size_t k = c.size();
  if (component >= k) throw std::out_of_range("component " + std::to_string(component) + " out of range");
  if (k == 2) throw PreconditionError("LengthTooShort", "blowing down in a 2-cycle leaves a nodal sphere");
  if (c[component] != -1)
    throw PreconditionError("NotBlowDownable", "component " + std::to_string(component) + " has s = " +
                                                   to_string(c[component]));
  std::vector<Integer> s = c.entries();
  s[(component + k - 1) % k] += 1;
  s[(component + 1) % k] += 1;
  s.erase(s.begin() + static_cast<std::ptrdiff_t>(component));
  return SphereCycle(std::move(s));
}

Divisor non_toric_blow_up(const Divisor& d, std::size_t component) {
  if (component >= d.length())
    throw std::out_of_range("component " + std::to_string(component) + " out of range");
  if (d.is_torus()) return Torus{d.torus().s - 1};
  std::vector<Integer> s = d.cycle().entries();
  s[component] -= 1;
  return SphereCycle(std::move(s));
}

Divisor apply(const Divisor& d, const Move& m) {
  if (m.kind == Move::Kind::NonToricUp) return non_toric_blow_up(d, m.index);
  if (d.is_torus()) throw PreconditionError("CycleRequired", "toric moves need a cycle of spheres");
  if (m.kind == Move::Kind::ToricUp) return toric_blow_up(d.cycle(), m.index);
  return toric_blow_down(d.cycle(), m.index);
}

Divisor MoveWord::final_state() const {
  Divisor d = initial;
  for (const auto& m : moves) d = apply(d, m);
  return d;
}

std::vector<Divisor> MoveWord::states() const {
  std::vector<Divisor> out{initial};
  for (const auto& m : moves) out.push_back(apply(out.back(), m));
  return out;
}

Reduction toric_minimal_reduce(const SphereCycle& c) {
  SphereCycle state = c;
  std::vector<Move> word;
  while (state.size() >= 3 && !is_toric_minimal(state)) {
    const DihedralMap m = canonical_map(state);
    const std::size_t k = state.size();
    std::size_t j = 0;
    while (state[m.source_index(j, k)] != -1) ++j;
    const std::size_t actual = m.source_index(j, k);
    word.push_back(Move::toric_down(actual));
    state = toric_blow_down(state, actual);
  }
  return {state, MoveWord{c, std::move(word)}};
}

namespace {

bool within(const SphereCycle& c, const SearchBounds& b) {
  if (c.size() > b.max_length) return false;
  return std::all_of(c.entries().begin(), c.entries().end(), [&](const Integer& s) { return s >= b.min_entry; });
}

using ParentMap = std::map<SphereCycle, SphereCycle>;

// Expands one level; returns the new frontier in sorted order.
std::vector<SphereCycle> expand(const std::vector<SphereCycle>& frontier, ParentMap& seen,
                                const SearchBounds& bounds) {
  std::vector<SphereCycle> next;
  for (const auto& node : frontier) {
    for (auto& n : toric_neighbours(node, bounds)) {
      if (seen.count(n)) continue;
      seen.emplace(n, node);
      next.push_back(std::move(n));
    }
  }
  std::sort(next.begin(), next.end());
  return next;
}

std::optional<SphereCycle> meeting_point(const std::vector<SphereCycle>& frontier, const ParentMap& other) {
  for (const auto& n : frontier)
    if (other.count(n)) return n;
  return std::nullopt;
}

}  // namespace

std::vector<SphereCycle> toric_neighbours(const SphereCycle& c, const SearchBounds& bounds) {
  std::vector<SphereCycle> out;
  auto push = [&](SphereCycle n) {
    n = canonical_form(n);
    if (std::find(out.begin(), out.end(), n) == out.end()) out.push_back(std::move(n));
  };
  for (std::size_t e = 0; e < c.size(); ++e) {
    SphereCycle up = toric_blow_up(c, e);
    if (within(up, bounds)) push(std::move(up));
  }
  if (c.size() >= 3)
    for (std::size_t i = 0; i < c.size(); ++i)
      if (c[i] == -1) push(toric_blow_down(c, i));
  return out;
}

std::optional<Move> connecting_move(const SphereCycle& from, const SphereCycle& to) {
  const SphereCycle target = canonical_form(to);
  if (to.size() == from.size() + 1) {
    for (std::size_t e = 0; e < from.size(); ++e)
      if (canonical_form(toric_blow_up(from, e)) == target) return Move::toric_up(e);
  } else if (to.size() + 1 == from.size() && from.size() >= 3) {
    for (std::size_t i = 0; i < from.size(); ++i)
      if (from[i] == -1 && canonical_form(toric_blow_down(from, i)) == target) return Move::toric_down(i);
  }
  return std::nullopt;
}

std::optional<MoveWord> toric_equivalent(const SphereCycle& a, const SphereCycle& b, const SearchBounds& bounds) {
  const SphereCycle ca = canonical_form(a);
  const SphereCycle cb = canonical_form(b);
  if (ca == cb) return MoveWord{a, {}};

  ParentMap fwd{{ca, ca}};
  ParentMap bwd{{cb, cb}};
  std::vector<SphereCycle> ffront{ca};
  std::vector<SphereCycle> bfront{cb};
  std::size_t depth = 0;
  std::optional<SphereCycle> meet;
  while (!meet && depth < bounds.max_steps && !ffront.empty() && !bfront.empty()) {
    if (ffront.size() <= bfront.size()) {
      ffront = expand(ffront, fwd, bounds);
      meet = meeting_point(ffront, bwd);
    } else {
      bfront = expand(bfront, bwd, bounds);
      meet = meeting_point(bfront, fwd);
    }
    ++depth;
  }
  if (!meet) return std::nullopt;

  std::vector<SphereCycle> path;
  for (SphereCycle n = *meet; !(n == ca); n = fwd.at(n)) path.push_back(n);
  std::reverse(path.begin(), path.end());
  for (SphereCycle n = *meet; !(n == cb);) {
    n = bwd.at(n);
    path.push_back(n);
  }

  MoveWord word{a, {}};
  SphereCycle state = a;
  for (const auto& target : path) {
    const auto m = connecting_move(state, target);
    if (!m) throw std::logic_error("search path is not connected by a single toric move");
    word.moves.push_back(*m);
    state = apply(state, *m).cycle();
  }
  return word;
}

}  // namespace logcy
