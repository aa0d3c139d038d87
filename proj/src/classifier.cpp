#include "logcy/classifier.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>

#include "logcy/errors.hpp"

namespace logcy {

std::string_view to_string(ContactType t) {
  switch (t) {
    case ContactType::Convex: return "convex";
    case ContactType::Concave: return "concave";
    case ContactType::NoContactBoundary: return "none";
    case ContactType::InvalidForLogCY: return "invalid";
  }
  return "?";
}

std::string_view kodaira_label(ContactType t) {
  switch (t) {
    case ContactType::Convex: return "<=0";
    case ContactType::Concave: return "-inf";
    default: return "";
  }
}

ContactType contact_type(const Inertia& in) {
  if (in.plus >= 2) return ContactType::InvalidForLogCY;
  if (in.plus == 1) return ContactType::Concave;
  if (in.zero == 0) return ContactType::Convex;
  return ContactType::NoContactBoundary;
}

Classification classify(const Divisor& d) {
  Classification out;
  out.inertia = inertia(intersection_matrix(d));
  out.contact = contact_type(out.inertia);
  return out;
}

std::string_view to_string(Definiteness d) {
  switch (d) {
    case Definiteness::NegativeDefinite: return "negative_definite";
    case Definiteness::NegativeSemiDefinite: return "negative_semidefinite";
    case Definiteness::PositiveIndex: return "positive_index";
  }
  return "?";
}

std::optional<Definiteness> definiteness_shortcut(const SphereCycle& c) {
  if (!is_toric_minimal(c)) return std::nullopt;
  const auto& s = c.entries();
  if (std::any_of(s.begin(), s.end(), [](const Integer& v) { return v >= 0; })) return Definiteness::PositiveIndex;
  // Toric minimal with no non-negative entry: every entry is <= -2.
  if (std::any_of(s.begin(), s.end(), [](const Integer& v) { return v < -2; })) return Definiteness::NegativeDefinite;
  return Definiteness::NegativeSemiDefinite;
}

std::optional<std::vector<Rational>> exact_on_boundary(const Divisor& d, std::span<const Rational> areas) {
  if (areas.size() != d.length())
    throw PreconditionError("AreaLength", "expected " + std::to_string(d.length()) + " areas, got " +
                                              std::to_string(areas.size()));
  for (const auto& a : areas)
    if (a <= 0) throw PreconditionError("NonPositiveArea", "area " + to_string(a) + " is not positive");
  return solve_rational(intersection_matrix(d), areas);
}

namespace {

std::vector<Integer> clear_denominators(const std::vector<Rational>& v);

// Whether ker q holds a nonzero vector with all entries >= 0. Such a vector
// exists iff the polytope {v in ker q, v >= 0, sum v = 1} has a vertex; in
// kernel coordinates a vertex is cut out by the normalization plus d - 1
// vanishing entries, so trying every such choice is exhaustive.
bool kernel_meets_orthant(const IntMatrix& q) {
  const auto basis = nullspace(q);
  const std::size_t d = basis.size();
  const std::size_t k = q.cols();
  if (d == 0) return false;
  std::vector<std::vector<Integer>> n;
  for (const auto& b : basis) n.push_back(clear_denominators(b));

  std::vector<bool> pick(k, false);
  std::fill(pick.begin(), pick.begin() + static_cast<std::ptrdiff_t>(d - 1), true);
  do {
    IntMatrix m(d, d);
    std::size_t row = 0;
    for (std::size_t i = 0; i < k; ++i) {
      if (!pick[i]) continue;
      for (std::size_t j = 0; j < d; ++j) m(row, j) = n[j][i];
      ++row;
    }
    for (std::size_t j = 0; j < d; ++j) {
      Integer sum = 0;
      for (std::size_t i = 0; i < k; ++i) sum += n[j][i];
      m(d - 1, j) = sum;
    }
    std::vector<Integer> rhs(d, Integer(0));
    rhs[d - 1] = 1;
    const auto c = solve_rational(m, std::span<const Integer>(rhs));
    if (!c) continue;
    bool nonnegative = true;
    for (std::size_t i = 0; i < k && nonnegative; ++i) {
      Rational v = 0;
      for (std::size_t j = 0; j < d; ++j) v += (*c)[j] * n[j][i];
      nonnegative = v >= 0;
    }
    if (nonnegative) return true;
  } while (std::prev_permutation(pick.begin(), pick.end()));
  return false;
}

}  // namespace

bool exact_for_some_positive_area(const Divisor& d) {
  const IntMatrix q = intersection_matrix(d);
  if (determinant(q) != 0) return true;
  const std::size_t k = q.rows();
  if (k <= 8) {
    std::vector<Integer> a(k, Integer(1));
    while (true) {
      if (solve_rational(q, std::span<const Integer>(a))) return true;
      std::size_t i = 0;
      while (i < k && a[i] == 3) a[i++] = 1;
      if (i == k) break;
      a[i] += 1;
    }
  }
  // The image of symmetric q is the orthogonal complement of its kernel, and
  // a strictly positive vector lies there iff the kernel avoids the
  // non-negative orthant (Stiemke).
  return !kernel_meets_orthant(q);
}

namespace {

std::vector<Integer> clear_denominators(const std::vector<Rational>& v) {
  Integer l = 1;
  for (const auto& x : v) mpz_lcm(l.get_mpz_t(), l.get_mpz_t(), x.get_den().get_mpz_t());
  std::vector<Integer> out;
  out.reserve(v.size());
  for (const auto& x : v) out.push_back(x.get_num() * (l / x.get_den()));
  return out;
}

}  // namespace

bool i2_criterion(const LogCYPair& p) {
  const std::size_t dim = p.basis.dimension();
  IntMatrix c(p.classes.size(), dim);
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) c(i, j) = p.classes[i][j];
  const auto i2 = nullspace(c * p.basis.gram());
  IntMatrix stacked(p.classes.size() + i2.size(), dim);
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    for (std::size_t j = 0; j < dim; ++j) stacked(i, j) = c(i, j);
  for (std::size_t i = 0; i < i2.size(); ++i) {
    const auto row = clear_denominators(i2[i]);
    for (std::size_t j = 0; j < dim; ++j) stacked(p.classes.size() + i, j) = row[j];
  }
  return rank(stacked) == dim;
}

std::string_view to_string(RigidPattern p) {
  switch (p) {
    case RigidPattern::AllAtLeastMinusOne: return "all_at_least_minus_one";
    case RigidPattern::MinusOneTwoOrThree: return "minus_one_two_or_three";
    case RigidPattern::OneAndAtLeastFour: return "one_and_at_least_four";
    case RigidPattern::ZeroAndAtMostFour: return "zero_and_at_most_four";
    case RigidPattern::OneOneP: return "one_one_p";
    case RigidPattern::ThreeZerosN: return "three_zeros_n";
    case RigidPattern::OneChain: return "one_chain";
  }
  return "?";
}

namespace {

bool matches(RigidPattern p, const std::vector<Integer>& s) {
  const std::size_t k = s.size();
  switch (p) {
    case RigidPattern::AllAtLeastMinusOne:
      return std::all_of(s.begin(), s.end(), [](const Integer& v) { return v >= -1; });
    case RigidPattern::MinusOneTwoOrThree:
      return k == 2 && s[0] == -1 && (s[1] == -2 || s[1] == -3);
    case RigidPattern::OneAndAtLeastFour:
      return k == 2 && s[0] == 1 && s[1] >= 4;
    case RigidPattern::ZeroAndAtMostFour:
      return k == 2 && s[0] == 0 && s[1] <= 4;
    case RigidPattern::OneOneP:
      return k == 3 && s[0] == 1 && s[1] == 1 && s[2] <= 1;
    case RigidPattern::ThreeZerosN:
      return k == 4 && s[0] == 0 && s[1] == 0 && s[2] == 0 && s[3] <= 0;
    case RigidPattern::OneChain: {
      if (k < 3 || s[0] != 1 || s[1] > -1 || s[k - 1] > -1) return false;
      for (std::size_t i = 2; i + 1 < k; ++i)
        if (s[i] > -2) return false;
      return true;
    }
  }
  return false;
}

constexpr RigidPattern kPatternOrder[] = {
    RigidPattern::AllAtLeastMinusOne, RigidPattern::MinusOneTwoOrThree, RigidPattern::OneAndAtLeastFour,
    RigidPattern::ZeroAndAtMostFour,  RigidPattern::OneOneP,            RigidPattern::ThreeZerosN,
    RigidPattern::OneChain};

}  // namespace

std::optional<RigidPattern> match_rigid_pattern(const SphereCycle& c) {
  const std::size_t k = c.size();
  for (RigidPattern p : kPatternOrder)
    for (std::size_t start = 0; start < k; ++start)
      for (bool rev : {false, true})
        if (matches(p, DihedralMap{start, rev}.apply(std::span<const Integer>(c.entries())))) return p;
  return std::nullopt;
}

std::optional<RigidityWitness> rigidity_witness(const SphereCycle& c, const SearchBounds& bounds) {
  // Plain BFS over actual states; each state is keyed by its canonical form.
  struct Node {
    SphereCycle state;
    std::vector<Move> word;
  };
  std::deque<Node> queue{{c, {}}};
  std::set<SphereCycle> seen{canonical_form(c)};
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (auto p = match_rigid_pattern(n.state)) return RigidityWitness{*p, MoveWord{c, std::move(n.word)}};
    if (n.word.size() >= bounds.max_steps) continue;
    std::vector<Move> moves;
    for (std::size_t e = 0; e < n.state.size(); ++e) moves.push_back(Move::toric_up(e));
    if (n.state.size() >= 3)
      for (std::size_t i = 0; i < n.state.size(); ++i)
        if (n.state[i] == -1) moves.push_back(Move::toric_down(i));
    for (const auto& m : moves) {
      SphereCycle next = apply(n.state, m).cycle();
      if (next.size() > bounds.max_length) continue;
      if (std::any_of(next.entries().begin(), next.entries().end(),
                      [&](const Integer& v) { return v < bounds.min_entry; }))
        continue;
      if (!seen.insert(canonical_form(next)).second) continue;
      auto word = n.word;
      word.push_back(m);
      queue.push_back({std::move(next), std::move(word)});
    }
  }
  return std::nullopt;
}

ProfileVerdict filling_profile_check(long b1, long b2_plus, long b2_zero, long b2_minus) {
  ProfileVerdict v;
  v.b_plus_closed = 1 + b2_plus + b2_zero;
  v.euler = 1 - b1 + b2_plus + b2_zero + b2_minus;
  if (b1 < 0 || b2_plus < 0 || b2_zero < 0 || b2_minus < 0) v.violations.push_back("negative Betti number");
  if (b2_zero + b1 != 1) v.violations.push_back("b2_zero + b1 must be 1");
  if (v.b_plus_closed == 1) {
    if (b1 != 1) v.violations.push_back("b+(X_U) = 1 needs a negative definite filling with b1 = 1");
  } else if (v.b_plus_closed == 3) {
    const bool allowed = (b2_plus == 1 && b2_zero == 1 && b1 == 0) || (b2_plus == 2 && b2_zero == 0 && b1 == 1);
    if (!allowed) v.violations.push_back("(b2_plus, b2_zero, b1) must be (1,1,0) or (2,0,1)");
  } else {
    v.violations.push_back("b+(X_U) must be 1 or 3");
  }
  if (v.euler < 2 || v.euler > 21) v.violations.push_back("e(U) must lie in [2, 21]");
  v.valid = v.violations.empty();
  return v;
}

}  // namespace logcy
