// Acceptance run: one PASS/FAIL line per criterion, with timings. Exit code
// is non-zero when any criterion fails.

#include <chrono>
#include <cstdio>
#include <functional>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "logcy/classifier.hpp"
#include "logcy/duality.hpp"
#include "logcy/enumeration.hpp"
#include "logcy/errors.hpp"
#include "logcy/json_io.hpp"
#include "logcy/linalg.hpp"
#include "logcy/monodromy.hpp"
#include "logcy/moves.hpp"
#include "logcy/sweep.hpp"
#include "oracles.hpp"

using namespace logcy;

namespace {

struct Outcome {
  bool pass = false;
  std::string detail;
};

struct Criterion {
  int id;
  std::string name;
  double budget_seconds;
  std::function<Outcome()> run;
};

Divisor cyc(std::initializer_list<long> s) { return SphereCycle(s); }

// ---------------------------------------------------------------------------

Outcome example_moves() {
  const std::vector<SphereCycle> cycles{{3, -2, 0}, {2, -2, -1, -1}, {2, -1, 0}};
  const SearchBounds bounds{8, -10, 3};
  std::size_t paths = 0;
  bool ok = true;
  for (const auto& a : cycles)
    for (const auto& b : cycles) {
      if (&a == &b) continue;
      const auto w = toric_equivalent(a, b, bounds);
      if (!w || !(canonical_form(w->final_state()) == Divisor(canonical_form(b)))) {
        ok = false;
        continue;
      }
      ++paths;
    }
  for (const auto& c : cycles) ok = ok && monodromy(c).trace() == 1;
  const auto direct = toric_equivalent(cycles[0], cycles[2], bounds);
  ok = ok && direct && direct->moves.size() == 2;
  return {ok, std::to_string(paths) + "/6 ordered paths found, common trace 1"};
}

Outcome trichotomy() {
  std::size_t convex = 0, semi = 0, concave = 0, mismatches = 0;
  bool ok = classify(SphereCycle{-3, -3}).contact == ContactType::Convex;
  const auto shortcut_ok = [](const SphereCycle& c, const Classification& cl) {
    const auto p = definiteness_shortcut(c);
    if (!p) return true;
    switch (*p) {
      case Definiteness::NegativeDefinite: return cl.contact == ContactType::Convex;
      case Definiteness::NegativeSemiDefinite: return cl.contact == ContactType::NoContactBoundary;
      case Definiteness::PositiveIndex: return cl.inertia.plus >= 1;
    }
    return false;
  };

  struct Tally {
    std::size_t checked = 0, wrong = 0, shortcut_wrong = 0;
  };
  const SweepRange range{2, 7, -8, -2};
  const Tally t = sweep_reduce_parallel(
      range, Tally{},
      [&](Tally& acc, const SphereCycle& c) {
        const auto& s = c.entries();
        if (std::all_of(s.begin(), s.end(), [](const Integer& v) { return v == -2; })) return;
        // Inertia is a dihedral invariant: one representative per class.
        if (s != oracle::brute_canonical(s)) return;
        ++acc.checked;
        const Classification cl = classify(c);
        if (cl.contact != ContactType::Convex) ++acc.wrong;
        if (!shortcut_ok(c, cl)) ++acc.shortcut_wrong;
      },
      [](Tally& a, const Tally& b) {
        a.checked += b.checked;
        a.wrong += b.wrong;
        a.shortcut_wrong += b.shortcut_wrong;
      });
  convex = t.checked;
  mismatches += t.wrong + t.shortcut_wrong;

  for (std::size_t k = 2; k <= 7; ++k) {
    const SphereCycle c(std::vector<Integer>(k, Integer(-2)));
    const Classification cl = classify(c);
    ++semi;
    if (cl.contact != ContactType::NoContactBoundary || !shortcut_ok(c, cl)) ++mismatches;
  }
  for (const auto& e : catalog(-3, 3)) {
    if (!e.divisor.is_cycle()) continue;
    ++concave;
    const Classification cl = classify(e.divisor);
    if (cl.contact != ContactType::Concave || !shortcut_ok(e.divisor.cycle(), cl)) ++mismatches;
  }
  ok = ok && mismatches == 0;
  std::ostringstream d;
  d << convex << " convex dihedral classes, " << semi << " all -2, " << concave << " catalog cycles; " << mismatches
    << " mismatches";
  return {ok, d.str()};
}

Outcome trace_determinant() {
  struct Tally {
    std::size_t checked = 0, forward = 0, converse = 0;
  };
  const SweepRange range{2, 6, -5, 5};
  const Tally t = sweep_reduce_parallel(
      range, Tally{},
      [](Tally& acc, const SphereCycle& c) {
        ++acc.checked;
        const auto m = oracle::monodromy_product(c.entries());
        const bool trace_is_two = m[0] + m[3] == 2;
        const bool singular = determinant(intersection_matrix(c)) == 0;
        if (!trace_is_two && singular) ++acc.forward;
        if (trace_is_two && !singular) ++acc.converse;
      },
      [](Tally& a, const Tally& b) {
        a.checked += b.checked;
        a.forward += b.forward;
        a.converse += b.converse;
      });
  std::ostringstream d;
  d << t.checked << " cycles; trace != 2 with det = 0: " << t.forward << "; converse violations: " << t.converse;
  return {t.forward == 0 && t.checked == range.size(), d.str()};
}

Outcome move_invariance() {
  std::mt19937 rng(20240601);
  std::uniform_int_distribution<std::size_t> len(2, 8);
  std::uniform_int_distribution<long> entry(-5, 5);
  std::uniform_int_distribution<long> area(4, 9);
  std::size_t failures = 0;
  for (int t = 0; t < 1000; ++t) {
    std::vector<Integer> s(len(rng));
    for (auto& v : s) v = entry(rng);
    const SphereCycle c(std::move(s));
    const Integer trace = monodromy(c).trace();
    const IntMatrix q = intersection_matrix(c);
    const bool nondegenerate = determinant(q) != 0;
    std::vector<Rational> a(c.size());
    for (auto& x : a) x = area(rng);
    const bool exact = solve_rational(q, std::span<const Rational>(a)).has_value();
    for (std::size_t e = 0; e < c.size(); ++e) {
      const SphereCycle up = toric_blow_up(c, e);
      const IntMatrix q2 = intersection_matrix(up);
      if (monodromy(up).trace() != trace) ++failures;
      if ((determinant(q2) != 0) != nondegenerate) ++failures;
      if (!(toric_blow_down(up, inserted_index(e)) == c)) ++failures;
      for (long eps : {1L, 2L, 3L}) {
        std::vector<Rational> b = a;
        b[e] -= eps;
        b[(e + 1) % c.size()] -= eps;
        b.insert(b.begin() + static_cast<std::ptrdiff_t>(inserted_index(e)), Rational(eps));
        if (solve_rational(q2, std::span<const Rational>(b)).has_value() != exact) ++failures;
      }
    }
  }
  return {failures == 0, "1000 cycles, " + std::to_string(failures) + " failures"};
}

Outcome duality_suite() {
  bool ok = dual_cycle(SphereCycle{-4, -2}) == canonical_form(SphereCycle{-4, -2});
  ok = ok && dual_cycle(SphereCycle{-3, -3}) == SphereCycle{-3, -3};
  ok = ok && dual_cycle(SphereCycle{-3, -4}) == canonical_form(SphereCycle{-3, -2, -3});
  ok = ok && dual_cycle(SphereCycle{-3, -2, -3}) == canonical_form(SphereCycle{-3, -4});

  // Every operation starts by canonicalizing, so one representative per
  // dihedral class covers all sequences.
  struct Tally {
    std::size_t classes = 0, failures = 0;
  };
  const SweepRange range{2, 7, -8, -2};
  const Tally t = sweep_reduce_parallel(
      range, Tally{},
      [](Tally& acc, const SphereCycle& c) {
        if (c.entries() != oracle::brute_canonical(c.entries())) return;
        try {
          block_form(c);
        } catch (const NotEligible&) {
          return;
        }
        ++acc.classes;
        const SphereCycle d = dual_cycle(c);
        bool good = canonical_form(dual_cycle(d)) == c;
        good = good && monodromy(d).trace() == monodromy(c).trace();
        good = good && classify(d).contact == ContactType::Convex;
        try {
          block_form(d);
        } catch (const NotEligible&) {
          good = false;
        }
        if (!good) ++acc.failures;
      },
      [](Tally& a, const Tally& b) {
        a.classes += b.classes;
        a.failures += b.failures;
      });
  ok = ok && t.failures == 0 && t.classes > 0;
  return {ok, std::to_string(t.classes) + " eligible dihedral classes, " + std::to_string(t.failures) + " failures"};
}

Outcome catalog_fidelity() {
  std::size_t checked = 0, wrong = 0;
  const auto expected = [](CaseTag tag, long p) -> Divisor {
    switch (tag) {
      case CaseTag::A: return Torus{0};
      case CaseTag::B1: return Torus{9};
      case CaseTag::B2: return cyc({1, 4});
      case CaseTag::B3: return cyc({1, 1, 1});
      case CaseTag::C1: return Torus{8};
      case CaseTag::C2: return cyc({2 * p, 4 - 2 * p});
      case CaseTag::C3: return cyc({2 * p, 0, 2 - 2 * p});
      case CaseTag::C4: return cyc({2 * p, 0, -2 * p, 0});
      case CaseTag::D2a: return cyc({2 * p + 1, 3 - 2 * p});
      case CaseTag::D2b: return cyc({4, 0});
      case CaseTag::D3: return cyc({2 * p + 1, 0, -2 * p + 1});
      case CaseTag::D4: return cyc({2 * p + 1, 0, -2 * p - 1, 0});
    }
    return Torus{0};
  };
  for (const auto& e : catalog(-3, 3)) {
    ++checked;
    bool good = e.divisor == expected(e.spec.tag, e.spec.param.value_or(0));
    if (e.spec.tag == CaseTag::A)
      good = good && !e.pair;
    else
      good = good && e.pair && validate_pair(*e.pair).empty() && e.pair->divisor == e.divisor;
    if (!good) ++wrong;
  }
  bool ok = wrong == 0;
  ok = ok && instantiate({CaseTag::C4, 0L}).divisor == cyc({0, 0, 0, 0});
  ok = ok && instantiate({CaseTag::D3, 0L}).divisor == cyc({1, 0, 1});
  ok = ok && instantiate({CaseTag::B2, std::nullopt}).divisor == cyc({1, 4});
  ok = ok && descriptors(instantiate({CaseTag::B2, std::nullopt}).divisor).s_total == 9;
  return {ok, std::to_string(checked) + " catalog entries, " + std::to_string(wrong) + " mismatches"};
}

// Independent restatement of the sequence-level filters.
bool passes_filters(const Divisor& d, std::string& why) {
  const auto s = d.self_intersections();
  Integer total = 0;
  std::size_t nonneg = 0;
  for (const auto& v : s) {
    total += d.is_torus() ? v : Integer(v + 2);
    if (v >= 0) ++nonneg;
  }
  if (total > 9) return why = "s_total > 9", false;
  if (d.is_torus()) return true;
  const std::size_t r = s.size();
  for (long l = 2; l <= 40; ++l)
    if (r == 2 && ((s[0] == 5 + l && s[1] == -l) || (s[1] == 5 + l && s[0] == -l)))
      return why = "(5+l,-l)", false;
  if (nonneg > 4) return why = "r>=0 > 4", false;
  if (r >= 5 && nonneg > 2) return why = "r>=5 with r>=0 > 2", false;
  if (r >= 5 && nonneg == 2) {
    std::size_t i = 0;
    while (s[i] < 0) ++i;
    std::size_t j = i + 1;
    while (s[j] < 0) ++j;
    const bool adjacent = j == i + 1 || (i == 0 && j == r - 1);
    if (!adjacent || (s[i] != 0 && s[j] != 0)) return why = "r>=5 non-negative pair", false;
  }
  return true;
}

Outcome enumeration_filters() {
  const EnumBounds b{6, -9, 8, -3, 3, 0};
  const EnumResult first = enumerate_anticanonical(b, 0);
  const EnumResult second = enumerate_anticanonical(b, 0);
  const EnumResult serial = enumerate_anticanonical(b, 1);
  const EnumResult four = enumerate_anticanonical(b, 4);
  std::ostringstream s1, s2, s3, s4;
  write_jsonl(s1, first.records);
  write_jsonl(s2, second.records);
  write_jsonl(s3, serial.records);
  write_jsonl(s4, four.records);
  const bool identical = s1.str() == s2.str() && s1.str() == s3.str() && s1.str() == s4.str();

  std::size_t bad_filter = 0, bad_replay = 0, bad_pair = 0;
  std::string why;
  const auto roots = catalog(b.param_lo, b.param_hi);
  for (const auto& r : first.records) {
    if (!passes_filters(r.sequence, why)) ++bad_filter;
    const CatalogEntry root = instantiate(r.spec);
    if (!(canonical_form(MoveWord{root.divisor, r.moves}.final_state()) == r.sequence)) ++bad_replay;
    if (r.s_total != descriptors(root.divisor).s_total - static_cast<long>(r.moves.size())) ++bad_replay;
    if (root.pair) {
      const LogCYPair p = transport(*root.pair, r.moves);
      if (!validate_pair(p).empty() || has_violation(check_constraints(p))) ++bad_pair;
    }
  }
  std::ostringstream d;
  d << first.records.size() << " records (" << first.stats.discovered << " discovered, "
    << first.stats.rejected_by_sequence_bounds + first.stats.rejected_by_validation +
           first.stats.rejected_by_constraints
    << " filtered); filter violations " << bad_filter << ", replay failures " << bad_replay
    << ", pair failures " << bad_pair << ", runs " << (identical ? "byte-identical" : "DIFFER");
  const bool ok = identical && bad_filter == 0 && bad_replay == 0 && bad_pair == 0 && !first.records.empty() &&
                  !first.stats.truncated;
  return {ok, d.str()};
}

Outcome filling_profiles() {
  std::size_t cases = 0, wrong = 0;
  std::vector<std::string> accepted_three;
  for (long b1 = 0; b1 <= 3; ++b1)
    for (long bp = 0; bp <= 3; ++bp)
      for (long bz = 0; bz <= 3; ++bz)
        for (long bm = 0; bm <= 25; ++bm) {
          ++cases;
          const ProfileVerdict v = filling_profile_check(b1, bp, bz, bm);
          const long bplus = 1 + bp + bz;
          const long e = 1 - b1 + bp + bz + bm;
          bool expect = bz + b1 == 1 && e >= 2 && e <= 21;
          if (bplus == 1)
            expect = expect && b1 == 1;
          else if (bplus == 3)
            expect = expect && ((bp == 1 && bz == 1 && b1 == 0) || (bp == 2 && bz == 0 && b1 == 1));
          else
            expect = false;
          if (v.valid != expect || v.b_plus_closed != bplus || v.euler != e) ++wrong;
          if (v.valid && bplus == 3) {
            const std::string triple = std::to_string(bp) + std::to_string(bz) + std::to_string(b1);
            if (std::find(accepted_three.begin(), accepted_three.end(), triple) == accepted_three.end())
              accepted_three.push_back(triple);
          }
        }
  std::sort(accepted_three.begin(), accepted_three.end());
  const bool exact_triples = accepted_three == std::vector<std::string>{"110", "201"};
  const bool examples = filling_profile_check(0, 1, 1, 3).valid && filling_profile_check(0, 1, 1, 3).euler == 6 &&
                        filling_profile_check(1, 2, 0, 0).valid && !filling_profile_check(0, 1, 0, 5).valid;
  return {wrong == 0 && exact_triples && examples,
          std::to_string(cases) + " profiles, " + std::to_string(wrong) + " mismatches, b+=3 triples " +
              (exact_triples ? "{(1,1,0),(2,0,1)}" : "WRONG")};
}

Outcome exactness_biconditional() {
  // The closure reaching every cycle of length <= 5 with entries >= -4 that
  // the catalog can produce; s(D) drops by one per move, so 20 moves reach
  // the lowest s(D) in range.
  const EnumBounds b{5, -4, 20, -3, 3, 0};
  const EnumResult r = enumerate_anticanonical(b, 0);
  std::size_t checked = 0, mismatches = 0, degenerate = 0;
  std::string first_bad;
  for (const auto& rec : r.records) {
    if (!rec.sequence.is_cycle()) continue;
    const auto& s = rec.sequence.cycle().entries();
    if (std::any_of(s.begin(), s.end(), [](const Integer& v) { return v > 4; })) continue;
    ++checked;
    if (rec.det == 0) ++degenerate;
    const bool lhs = exact_for_some_positive_area(rec.sequence);
    const bool rhs = rec.inertia.negative_definite() || rec.inertia.plus == 1;
    if (lhs != rhs) {
      ++mismatches;
      if (first_bad.empty()) first_bad = dump(to_json(rec.sequence));
    }
  }
  std::ostringstream d;
  d << checked << " enumerated cycles (" << degenerate << " degenerate), " << mismatches << " mismatches";
  if (!first_bad.empty()) d << ", first " << first_bad;
  return {mismatches == 0 && checked > 0 && !r.stats.truncated, d.str()};
}

}  // namespace

int main() {
  const std::vector<Criterion> criteria{
      {1, "toric moves example: pairwise paths, trace 1", 1, example_moves},
      {2, "contact trichotomy table", 10, trichotomy},
      {3, "monodromy trace vs determinant, k<=6, [-5,5]", 300, trace_determinant},
      {4, "toric move invariance suite", 30, move_invariance},
      {5, "duality suite, k<=7, entries >= -8", 60, duality_suite},
      {6, "catalog fidelity", 1, catalog_fidelity},
      {7, "enumeration filters and determinism", 300, enumeration_filters},
      {8, "filling profile arithmetic", 1, filling_profiles},
      {9, "exactness biconditional on enumerated cycles", 300, exactness_biconditional},
  };
  int failed = 0;
  for (const auto& c : criteria) {
    const auto t0 = std::chrono::steady_clock::now();
    Outcome o;
    try {
      o = c.run();
    } catch (const std::exception& e) {
      o = {false, std::string("exception: ") + e.what()};
    }
    const double secs = std::chrono::duration<double>(std::chrono::steady_clock::now() - t0).count();
    const bool in_time = secs <= c.budget_seconds;
    const bool pass = o.pass && in_time;
    if (!pass) ++failed;
    std::printf("%s [%d] %s: %s (%.2f s, budget %.0f s%s)\n", pass ? "PASS" : "FAIL", c.id, c.name.c_str(),
                o.detail.c_str(), secs, c.budget_seconds, in_time ? "" : ", OVER BUDGET");
    std::fflush(stdout);
  }
  std::printf("%d/%zu criteria passed\n", static_cast<int>(criteria.size()) - failed, criteria.size());
  return failed == 0 ? 0 : 1;
}
