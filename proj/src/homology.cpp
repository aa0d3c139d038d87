#include "logcy/homology.hpp"

#include <algorithm>
#include <functional>
#include <stdexcept>

#include "logcy/errors.hpp"

namespace logcy {

AmbientBasis::AmbientBasis(Kind kind, std::size_t exceptional) : kind_(kind), n_(exceptional) {}

Integer AmbientBasis::pair(const HClass& u, const HClass& v) const {
  if (u.size() != dimension() || v.size() != dimension())
    throw std::invalid_argument("class length does not match the basis");
  Integer out;
  if (kind_ == Kind::Rational)
    out = u[0] * v[0];
  else
    out = u[0] * v[1] + u[1] * v[0];
  for (std::size_t i = leading(); i < dimension(); ++i) out -= u[i] * v[i];
  return out;
}

IntMatrix AmbientBasis::gram() const {
  IntMatrix g(dimension(), dimension());
  if (kind_ == Kind::Rational) {
    g(0, 0) = 1;
  } else {
    g(0, 1) = 1;
    g(1, 0) = 1;
  }
  for (std::size_t i = leading(); i < dimension(); ++i) g(i, i) = -1;
  return g;
}

AmbientBasis AmbientBasis::without_exceptional() const {
  if (n_ == 0) throw std::logic_error("no exceptional class to drop");
  return {kind_, n_ - 1};
}

std::string_view to_string(AmbientBasis::Kind kind) {
  return kind == AmbientBasis::Kind::Rational ? "rational" : "ruled";
}

HClass total_class(const LogCYPair& p) {
  HClass sum(p.basis.dimension());
  for (const auto& c : p.classes)
    for (std::size_t i = 0; i < sum.size() && i < c.size(); ++i) sum[i] += c[i];
  return sum;
}

std::vector<Violation> validate_pair(const LogCYPair& p) {
  std::vector<Violation> out;
  const std::size_t r = p.divisor.length();
  const std::size_t dim = p.basis.dimension();
  if (p.classes.size() != r)
    out.push_back({"structure", "expected " + std::to_string(r) + " classes, got " + std::to_string(p.classes.size())});
  for (std::size_t i = 0; i < p.classes.size(); ++i)
    if (p.classes[i].size() != dim)
      out.push_back({"structure", "class " + std::to_string(i) + " has length " + std::to_string(p.classes[i].size()) +
                                      ", basis dimension is " + std::to_string(dim)});
  if (p.c1.size() != dim) out.push_back({"structure", "c1 has length " + std::to_string(p.c1.size())});
  if (!out.empty()) return out;

  if (total_class(p) != p.c1) out.push_back({"sum_ne_c1", "component classes do not sum to c1"});

  const auto s = p.divisor.self_intersections();
  for (std::size_t i = 0; i < r; ++i) {
    const Integer self = p.basis.pair(p.classes[i], p.classes[i]);
    if (self != s[i])
      out.push_back({"self_intersection", "[C" + std::to_string(i) + "]^2 = " + to_string(self) + ", expected " +
                                              to_string(s[i])});
    for (std::size_t j = i + 1; j < r; ++j) {
      long expected = 0;
      if (r == 2)
        expected = 2;
      else if (j == i + 1 || (i == 0 && j == r - 1))
        expected = 1;
      const Integer got = p.basis.pair(p.classes[i], p.classes[j]);
      if (got != expected)
        out.push_back({"pairing", "[C" + std::to_string(i) + "].[C" + std::to_string(j) + "] = " + to_string(got) +
                                      ", expected " + std::to_string(expected)});
    }
    const Integer adj = p.basis.pair(p.c1, p.classes[i]);
    const Integer want = p.divisor.is_torus() ? s[i] : Integer(s[i] + 2);
    if (adj != want)
      out.push_back({"adjunction", "c1.[C" + std::to_string(i) + "] = " + to_string(adj) + ", expected " +
                                       to_string(want)});
  }
  return out;
}

namespace {

void add_exceptional(LogCYPair& p) {
  p.basis = p.basis.with_extra_exceptional();
  for (auto& c : p.classes) c.emplace_back(0);
  p.c1.emplace_back(0);
}

// Index of the exceptional basis vector equal to `c`, if `c` is one.
std::optional<std::size_t> bare_exceptional(const AmbientBasis& b, const HClass& c) {
  std::optional<std::size_t> hit;
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    if (c[i] != 1 || i < b.leading() || hit) return std::nullopt;
    hit = i;
  }
  return hit;
}

}  // namespace

LogCYPair transport(const LogCYPair& p, const Move& m) {
  LogCYPair out = p;
  out.divisor = apply(p.divisor, m);
  const std::size_t k = p.divisor.length();
  switch (m.kind) {
    case Move::Kind::NonToricUp: {
      add_exceptional(out);
      const std::size_t e = out.basis.dimension() - 1;
      out.classes[m.index][e] -= 1;
      out.c1[e] -= 1;
      break;
    }
    case Move::Kind::ToricUp: {
      add_exceptional(out);
      const std::size_t e = out.basis.dimension() - 1;
      out.classes[m.index][e] -= 1;
      out.classes[(m.index + 1) % k][e] -= 1;
      HClass fresh(out.basis.dimension());
      fresh[e] = 1;
      out.classes.insert(out.classes.begin() + static_cast<std::ptrdiff_t>(inserted_index(m.index)), fresh);
      out.c1[e] -= 1;
      break;
    }
    case Move::Kind::ToricDown: {
      const auto e = bare_exceptional(p.basis, p.classes[m.index]);
      if (!e)
        throw PreconditionError("UnsupportedBlowDown",
                                "component " + std::to_string(m.index) + " is not a bare exceptional class");
      out.classes[(m.index + k - 1) % k][*e] += 1;
      out.classes[(m.index + 1) % k][*e] += 1;
      out.c1[*e] += 1;
      out.classes.erase(out.classes.begin() + static_cast<std::ptrdiff_t>(m.index));
      const auto mentions = [&](const HClass& c) { return c[*e] != 0; };
      if (mentions(out.c1) || std::any_of(out.classes.begin(), out.classes.end(), mentions))
        throw PreconditionError("UnsupportedBlowDown", "the contracted class still appears elsewhere");
      for (auto& c : out.classes) c.erase(c.begin() + static_cast<std::ptrdiff_t>(*e));
      out.c1.erase(out.c1.begin() + static_cast<std::ptrdiff_t>(*e));
      out.basis = out.basis.without_exceptional();
      break;
    }
  }
  return out;
}

LogCYPair transport(const LogCYPair& p, const std::vector<Move>& word) {
  LogCYPair out = p;
  for (const auto& m : word) out = transport(out, m);
  return out;
}

long complement_betti(long b2_ambient, long r) {
  const long out = b2_ambient - r - 1;
  if (out < 0)
    throw PreconditionError("InvalidInput", "b2 = " + std::to_string(b2_ambient) + " is too small for r = " +
                                                std::to_string(r));
  return out;
}

std::string_view to_string(RuleStatus s) {
  switch (s) {
    case RuleStatus::Satisfied: return "satisfied";
    case RuleStatus::Violated: return "violated";
    case RuleStatus::NotApplicable: return "not_applicable";
  }
  return "?";
}

bool has_violation(const std::vector<RuleResult>& report) {
  return std::any_of(report.begin(), report.end(), [](const RuleResult& r) { return r.status == RuleStatus::Violated; });
}

namespace {

// A cycle with its classes, read through one dihedral symmetry.
struct View {
  std::vector<Integer> s;
  std::vector<HClass> c;
};

using Pattern = std::function<bool(const View&)>;

bool any_view(const LogCYPair& p, const Pattern& pattern) {
  const auto s = p.divisor.self_intersections();
  const std::size_t k = s.size();
  for (std::size_t start = 0; start < k; ++start)
    for (bool rev : {false, true}) {
      const DihedralMap m{start, rev};
      View v{m.apply(std::span<const Integer>(s)), m.apply(std::span<const HClass>(p.classes))};
      if (pattern(v)) return true;
    }
  return false;
}

RuleResult verdict(std::string rule, bool ok, std::string detail) {
  return {std::move(rule), ok ? RuleStatus::Satisfied : RuleStatus::Violated, std::move(detail)};
}

RuleResult skip(std::string rule) { return {std::move(rule), RuleStatus::NotApplicable, ""}; }

bool adjacent(std::size_t i, std::size_t j, std::size_t k) {
  return k <= 3 || (i + 1) % k == j || (j + 1) % k == i;
}

}  // namespace

std::vector<RuleResult> check_constraints(const LogCYPair& p) {
  static const char* const kNames[] = {
      "homologous_at_most_three",   "homologous_pair_needs_r_le_4", "adjacent_homologous_shape",
      "disjoint_nonnegative",       "nonnegative_at_most_four",     "four_nonnegative_shape",
      "adjacent_positive_product",  "table_r_ge_5",                 "table_r4_three_nonnegative",
      "table_r4_two_nonnegative",   "table_r3_three_nonnegative",   "table_r3_two_nonnegative",
      "table_r2_two_nonnegative",   "table_r2_one_nonnegative",     "table_r2_no_nonnegative"};
  std::vector<RuleResult> out;
  if (p.divisor.is_torus()) {
    for (const char* n : kNames) out.push_back(skip(n));
    return out;
  }

  const auto s = p.divisor.self_intersections();
  const auto& cls = p.classes;
  const std::size_t r = s.size();
  std::size_t nonneg = 0;
  for (const auto& v : s)
    if (v >= 0) ++nonneg;

  // Homologous components.
  std::size_t multiplicity = 0;
  for (std::size_t i = 0; i < r; ++i)
    multiplicity = std::max<std::size_t>(multiplicity, std::count(cls.begin(), cls.end(), cls[i]));
  out.push_back(verdict(kNames[0], multiplicity <= 3 && (multiplicity < 3 || r == 3),
                        std::to_string(multiplicity) + " homologous components, r = " + std::to_string(r)));
  out.push_back(multiplicity >= 2 ? verdict(kNames[1], r <= 4, "r = " + std::to_string(r)) : skip(kNames[1]));
  {
    bool any = false;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i) {
      const std::size_t j = (i + 1) % r;
      if (r == 2 && i == 1) break;
      if (cls[i] != cls[j]) continue;
      any = true;
      ok = ok && ((r == 3 && s[i] == 1 && s[j] == 1) || (r == 2 && s[i] == 2 && s[j] == 2));
    }
    out.push_back(any ? verdict(kNames[2], ok, "") : skip(kNames[2]));
  }

  // Non-negative components.
  {
    bool any = false;
    bool ok = true;
    for (std::size_t i = 0; i < r; ++i)
      for (std::size_t j = i + 1; j < r; ++j) {
        if (adjacent(i, j, r) || s[i] < 0 || s[j] < 0) continue;
        any = true;
        ok = ok && cls[i] == cls[j] && s[i] == 0 && s[j] == 0;
      }
    out.push_back(any ? verdict(kNames[3], ok, "") : skip(kNames[3]));
  }
  out.push_back(verdict(kNames[4], nonneg <= 4, "r>=0 = " + std::to_string(nonneg)));
  if (nonneg == 4) {
    const bool ok = r == 4 && std::all_of(s.begin(), s.end(), [](const Integer& v) { return v == 0; }) &&
                    cls[0] == cls[2] && cls[1] == cls[3];
    out.push_back(verdict(kNames[5], ok, ""));
  } else {
    out.push_back(skip(kNames[5]));
  }
  {
    bool any = false;
    bool ok = true;
    if (r >= 3)
      for (std::size_t i = 0; i < r; ++i) {
        const std::size_t j = (i + 1) % r;
        if (s[i] < 0 || s[j] < 0 || s[i] * s[j] < 1) continue;
        any = true;
        ok = ok && cls[i] == cls[j] && s[i] == 1 && s[j] == 1 && r == 3;
      }
    out.push_back(any ? verdict(kNames[6], ok, "") : skip(kNames[6]));
  }

  // Case table, up to rotation and reversal.
  const auto eq = [](const HClass& a, const HClass& b) { return a == b; };
  if (r >= 5) {
    const bool ok = nonneg <= 2 && (nonneg < 2 || any_view(p, [](const View& v) {
                                     return v.s[0] >= 0 && v.s[1] == 0;
                                   }));
    out.push_back(verdict(kNames[7], ok, "r>=0 = " + std::to_string(nonneg)));
  } else {
    out.push_back(skip(kNames[7]));
  }
  if (r == 4 && nonneg == 3) {
    out.push_back(verdict(kNames[8], any_view(p, [&](const View& v) {
                            return v.s[0] >= 0 && v.s[1] == 0 && v.s[2] < 0 && v.s[3] == 0 && eq(v.c[1], v.c[3]) &&
                                   v.s[2] + v.s[0] <= 0;
                          }),
                          ""));
  } else {
    out.push_back(skip(kNames[8]));
  }
  if (r == 4 && nonneg == 2) {
    out.push_back(verdict(kNames[9], any_view(p, [&](const View& v) {
                            const bool alternating =
                                v.s[0] == 0 && v.s[1] < 0 && v.s[2] == 0 && v.s[3] < 0 && eq(v.c[0], v.c[2]);
                            const bool consecutive = v.s[0] >= 0 && v.s[1] == 0 && v.s[2] < 0 && v.s[3] < 0 &&
                                                     v.s[2] + v.s[3] + v.s[0] <= 0;
                            return alternating || consecutive;
                          }),
                          ""));
  } else {
    out.push_back(skip(kNames[9]));
  }
  if (r == 3 && nonneg == 3) {
    out.push_back(verdict(kNames[10], any_view(p, [&](const View& v) {
                            const bool i = v.s[0] == 1 && v.s[1] == 1 && v.s[2] == 1 && eq(v.c[0], v.c[1]) &&
                                           eq(v.c[1], v.c[2]);
                            const bool ii = v.s[0] == 1 && v.s[1] == 1 && v.s[2] == 0 && eq(v.c[0], v.c[1]);
                            const bool iii = v.s[0] >= 0 && v.s[0] <= 2 && v.s[1] == 0 && v.s[2] == 0;
                            return i || ii || iii;
                          }),
                          ""));
  } else {
    out.push_back(skip(kNames[10]));
  }
  if (r == 3 && nonneg == 2) {
    out.push_back(verdict(kNames[11], any_view(p, [&](const View& v) {
                            const bool i = v.s[0] == 1 && v.s[1] == 1 && v.s[2] < 0 && eq(v.c[0], v.c[1]);
                            const bool ii = v.s[0] >= 0 && v.s[1] == 0 && v.s[2] < 0 && v.s[2] + v.s[0] <= 2;
                            return i || ii;
                          }),
                          ""));
  } else {
    out.push_back(skip(kNames[11]));
  }
  if (r == 2 && nonneg == 2) {
    static const long kAllowed[][2] = {{4, 1}, {4, 0}, {3, 1}, {3, 0}, {2, 2},
                                       {2, 1}, {2, 0}, {1, 1}, {1, 0}, {0, 0}};
    bool ok = false;
    for (const auto& a : kAllowed)
      ok = ok || (s[0] == a[0] && s[1] == a[1]) || (s[0] == a[1] && s[1] == a[0]);
    out.push_back(verdict(kNames[12], ok, ""));
  } else {
    out.push_back(skip(kNames[12]));
  }
  out.push_back(r == 2 && nonneg == 1 ? verdict(kNames[13], true, "") : skip(kNames[13]));
  // Only meaningful when Q_D has a positive direction; negative (semi-)definite
  // 2-cycles such as (-2,-2) do occur as boundaries.
  if (r == 2 && nonneg == 0 && s[0] * s[1] < 4) {
    bool ok = false;
    for (long q : {-1L, -2L, -3L}) ok = ok || (s[0] == -1 && s[1] == q) || (s[1] == -1 && s[0] == q);
    out.push_back(verdict(kNames[14], ok, ""));
  } else {
    out.push_back(skip(kNames[14]));
  }
  return out;
}

}  // namespace logcy
