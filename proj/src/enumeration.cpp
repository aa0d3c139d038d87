#include "logcy/enumeration.hpp"

#include <algorithm>
#include <deque>
#include <string>
#include <unordered_set>

#include <omp.h>

#include "logcy/errors.hpp"
#include "logcy/monodromy.hpp"

namespace logcy {

namespace {

struct CaseName {
  CaseTag tag;
  std::string_view name;
};

constexpr CaseName kCaseNames[] = {{CaseTag::A, "A"},     {CaseTag::B1, "B1"},   {CaseTag::B2, "B2"},
                                   {CaseTag::B3, "B3"},   {CaseTag::C1, "C1"},   {CaseTag::C2, "C2"},
                                   {CaseTag::C3, "C3"},   {CaseTag::C4, "C4"},   {CaseTag::D2a, "D2a"},
                                   {CaseTag::D2b, "D2b"}, {CaseTag::D3, "D3"},   {CaseTag::D4, "D4"}};

HClass h_class(long h) { return {Integer(h)}; }
HClass ruled_class(long f1, long f2) { return {Integer(f1), Integer(f2)}; }
// x f + y s with f = h - e_1, s = h.
HClass fs_class(long x, long y) { return {Integer(x + y), Integer(-x)}; }

SphereCycle cycle_of(const AmbientBasis& basis, const std::vector<HClass>& classes) {
  std::vector<Integer> s;
  for (const auto& c : classes) s.push_back(basis.pair(c, c));
  return SphereCycle(std::move(s));
}

LogCYPair make_pair(AmbientBasis basis, std::vector<HClass> classes, HClass c1) {
  SphereCycle c = cycle_of(basis, classes);
  return LogCYPair{std::move(c), basis, std::move(classes), std::move(c1)};
}

}  // namespace

std::string_view to_string(CaseTag tag) {
  for (const auto& c : kCaseNames)
    if (c.tag == tag) return c.name;
  return "?";
}

CaseTag parse_case_tag(std::string_view name) {
  for (const auto& c : kCaseNames)
    if (c.name == name) return c.tag;
  throw MalformedInput("unknown case tag '" + std::string(name) + "'");
}

bool has_parameter(CaseTag tag) {
  switch (tag) {
    case CaseTag::C2:
    case CaseTag::C3:
    case CaseTag::C4:
    case CaseTag::D2a:
    case CaseTag::D3:
    case CaseTag::D4:
      return true;
    default:
      return false;
  }
}

CatalogEntry instantiate(const MinimalModelSpec& spec) {
  if (has_parameter(spec.tag) != spec.param.has_value())
    throw PreconditionError("ParameterMismatch", std::string("case ") + std::string(to_string(spec.tag)) +
                                                     (spec.param ? " takes no parameter" : " needs a parameter"));
  const long t = spec.param.value_or(0);
  const auto rational = AmbientBasis::rational(0);
  const auto ruled = AmbientBasis::ruled(0);
  const auto fs = AmbientBasis::rational(1);
  const HClass c1_fs = fs_class(1, 2);
  std::optional<LogCYPair> pair;
  switch (spec.tag) {
    case CaseTag::A:
      return {spec, Torus{0}, std::nullopt};
    case CaseTag::B1:
      pair = LogCYPair{Torus{9}, rational, {h_class(3)}, h_class(3)};
      break;
    case CaseTag::B2:
      pair = make_pair(rational, {h_class(1), h_class(2)}, h_class(3));
      break;
    case CaseTag::B3:
      pair = make_pair(rational, {h_class(1), h_class(1), h_class(1)}, h_class(3));
      break;
    case CaseTag::C1:
      pair = LogCYPair{Torus{8}, ruled, {ruled_class(2, 2)}, ruled_class(2, 2)};
      break;
    case CaseTag::C2:
      pair = make_pair(ruled, {ruled_class(t, 1), ruled_class(2 - t, 1)}, ruled_class(2, 2));
      break;
    case CaseTag::C3:
      pair = make_pair(ruled, {ruled_class(t, 1), ruled_class(1, 0), ruled_class(1 - t, 1)}, ruled_class(2, 2));
      break;
    case CaseTag::C4:
      pair = make_pair(ruled, {ruled_class(t, 1), ruled_class(1, 0), ruled_class(-t, 1), ruled_class(1, 0)},
                       ruled_class(2, 2));
      break;
    case CaseTag::D2a:
      pair = make_pair(fs, {fs_class(t, 1), fs_class(1 - t, 1)}, c1_fs);
      break;
    case CaseTag::D2b:
      pair = make_pair(fs, {fs_class(0, 2), fs_class(1, 0)}, c1_fs);
      break;
    case CaseTag::D3:
      pair = make_pair(fs, {fs_class(t, 1), fs_class(1, 0), fs_class(-t, 1)}, c1_fs);
      break;
    case CaseTag::D4:
      pair = make_pair(fs, {fs_class(t, 1), fs_class(1, 0), fs_class(-(t + 1), 1), fs_class(1, 0)}, c1_fs);
      break;
  }
  Divisor d = pair->divisor;
  return {spec, std::move(d), std::move(pair)};
}

std::vector<CatalogEntry> catalog(long param_lo, long param_hi) {
  std::vector<CatalogEntry> out;
  for (CaseTag tag : kAllCases) {
    if (!has_parameter(tag)) {
      out.push_back(instantiate({tag, std::nullopt}));
      continue;
    }
    for (long p = param_lo; p <= param_hi; ++p) out.push_back(instantiate({tag, p}));
  }
  return out;
}

std::optional<std::string> sequence_obstruction(const Divisor& d) {
  const Descriptors desc = descriptors(d);
  if (desc.s_total > 9) return "s(D) = " + to_string(desc.s_total) + " exceeds 9";
  if (d.is_torus()) return std::nullopt;
  const auto& s = d.cycle().entries();
  const std::size_t r = s.size();
  if (r == 2 && s[0] + s[1] == 5 && std::min(s[0], s[1]) <= -2) return std::string("S(D) has the form (5+l, -l), l >= 2");
  if (desc.nonnegative > 4) return "r>=0 = " + std::to_string(desc.nonnegative) + " exceeds 4";
  if (r >= 5) {
    if (desc.nonnegative > 2) return "r >= 5 with r>=0 = " + std::to_string(desc.nonnegative);
    if (desc.nonnegative == 2) {
      bool ok = false;
      for (std::size_t i = 0; i < r; ++i) {
        const auto& x = s[i];
        const auto& y = s[(i + 1) % r];
        ok = ok || (x >= 0 && y >= 0 && (x == 0 || y == 0));
      }
      if (!ok) return std::string("r >= 5 needs its two non-negative entries adjacent, one of them 0");
    }
  }
  return std::nullopt;
}

EnumRecord make_record(const Divisor& sequence, const MinimalModelSpec& spec, std::vector<Move> moves,
                       bool has_homology) {
  EnumRecord r{canonical_form(sequence), spec, std::move(moves), {}, {}, std::nullopt, {}, {}, has_homology};
  const IntMatrix q = intersection_matrix(r.sequence);
  r.inertia = inertia(q);
  r.det = determinant(q);
  if (r.sequence.is_cycle()) r.trace = monodromy(r.sequence.cycle()).trace();
  r.s_total = descriptors(r.sequence).s_total;
  r.contact = contact_type(r.inertia);
  return r;
}

Divisor replay(const EnumRecord& record) {
  return MoveWord{instantiate(record.spec).divisor, record.moves}.final_state();
}

namespace {

struct Node {
  Divisor state;
  std::size_t root;
  std::vector<Move> word;
};

std::string key_of(const Divisor& d) {
  std::string k = d.is_torus() ? "T" : "C";
  for (const auto& s : canonical_form(d).self_intersections()) {
    k += ',';
    k += s.get_str();
  }
  return k;
}

bool within(const Divisor& d, const EnumBounds& b) {
  if (d.length() > b.max_length) return false;
  for (const auto& s : d.self_intersections())
    if (s < b.min_entry) return false;
  return true;
}

// Children that respect the bounds, each with its dedup key, in move order.
std::vector<std::pair<std::string, Node>> children(const Node& n, const EnumBounds& b) {
  std::vector<std::pair<std::string, Node>> out;
  if (n.word.size() >= b.max_moves) return out;
  std::vector<Move> moves;
  if (n.state.is_cycle())
    for (std::size_t e = 0; e < n.state.length(); ++e) moves.push_back(Move::toric_up(e));
  for (std::size_t i = 0; i < n.state.length(); ++i) moves.push_back(Move::nontoric_up(i));
  for (const auto& m : moves) {
    Divisor next = apply(n.state, m);
    if (!within(next, b)) continue;
    std::string key = key_of(next);
    auto word = n.word;
    word.push_back(m);
    out.emplace_back(std::move(key), Node{std::move(next), n.root, std::move(word)});
  }
  return out;
}

class SeenIndex {
 public:
  explicit SeenIndex(std::size_t cap) : cap_(cap) {}

  // False when the key is already present or the cap has been reached.
  bool insert(const std::string& key) {
    if (set_.count(key)) return false;
    if (cap_ != 0 && bytes_ + cost(key) > cap_) {
      truncated_ = true;
      return false;
    }
    set_.insert(key);
    bytes_ += cost(key);
    return true;
  }
  bool truncated() const { return truncated_; }

 private:
  static std::size_t cost(const std::string& k) { return k.size() + 64; }

  std::unordered_set<std::string> set_;
  std::size_t cap_;
  std::size_t bytes_ = 0;
  bool truncated_ = false;
};

struct Roots {
  std::vector<CatalogEntry> entries;
  std::vector<Node> nodes;
};

Roots seed(const EnumBounds& b, SeenIndex& seen) {
  Roots r;
  r.entries = catalog(b.param_lo, b.param_hi);
  for (std::size_t i = 0; i < r.entries.size(); ++i) {
    const Divisor& d = r.entries[i].divisor;
    if (!within(d, b) || !seen.insert(key_of(d))) continue;
    r.nodes.push_back({d, i, {}});
  }
  return r;
}

// Record for a node, or nullopt when a filter rejects it. `why` receives
// 1 (sequence bounds), 2 (validation) or 3 (constraints) on rejection.
std::optional<EnumRecord> emit(const Node& n, const std::vector<CatalogEntry>& roots, int& why) {
  const CatalogEntry& root = roots[n.root];
  why = 0;
  if (sequence_obstruction(n.state)) {
    why = 1;
    return std::nullopt;
  }
  if (root.pair) {
    const LogCYPair p = transport(*root.pair, n.word);
    if (!validate_pair(p).empty()) {
      why = 2;
      return std::nullopt;
    }
    if (has_violation(check_constraints(p))) {
      why = 3;
      return std::nullopt;
    }
  }
  return make_record(n.state, root.spec, n.word, root.pair.has_value());
}

bool record_less(const EnumRecord& a, const EnumRecord& b) {
  if (a.sequence.length() != b.sequence.length()) return a.sequence.length() < b.sequence.length();
  const auto x = a.sequence.self_intersections();
  const auto y = b.sequence.self_intersections();
  return std::lexicographical_compare(x.begin(), x.end(), y.begin(), y.end());
}

void tally(EnumResult& out, int why) {
  if (why == 1) ++out.stats.rejected_by_sequence_bounds;
  if (why == 2) ++out.stats.rejected_by_validation;
  if (why == 3) ++out.stats.rejected_by_constraints;
}

void finish(EnumResult& out, const SeenIndex& seen) {
  std::sort(out.records.begin(), out.records.end(), record_less);
  out.stats.emitted = out.records.size();
  out.stats.truncated = seen.truncated();
}

}  // namespace

EnumResult enumerate_serial(const EnumBounds& bounds) {
  SeenIndex seen(bounds.memory_cap_bytes);
  Roots roots = seed(bounds, seen);
  std::deque<Node> queue(roots.nodes.begin(), roots.nodes.end());
  std::vector<Node> closed;
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    for (auto& [key, child] : children(n, bounds))
      if (seen.insert(key)) queue.push_back(std::move(child));
    closed.push_back(std::move(n));
  }
  EnumResult out;
  out.stats.discovered = closed.size();
  for (const auto& n : closed) {
    int why = 0;
    if (auto r = emit(n, roots.entries, why))
      out.records.push_back(std::move(*r));
    else
      tally(out, why);
  }
  finish(out, seen);
  return out;
}

EnumResult enumerate_parallel(const EnumBounds& bounds, int workers) {
  const int threads = workers > 0 ? workers : omp_get_max_threads();
  SeenIndex seen(bounds.memory_cap_bytes);
  Roots roots = seed(bounds, seen);
  std::vector<Node> level = roots.nodes;
  std::vector<Node> closed;
  while (!level.empty()) {
    std::vector<std::vector<std::pair<std::string, Node>>> expanded(level.size());
    const auto n = static_cast<std::int64_t>(level.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
    for (std::int64_t i = 0; i < n; ++i) expanded[i] = children(level[i], bounds);
    std::vector<Node> next;
    for (auto& kids : expanded)
      for (auto& [key, child] : kids)
        if (seen.insert(key)) next.push_back(std::move(child));
    for (auto& node : level) closed.push_back(std::move(node));
    level = std::move(next);
  }

  EnumResult out;
  out.stats.discovered = closed.size();
  std::vector<std::optional<EnumRecord>> records(closed.size());
  std::vector<int> why(closed.size(), 0);
  const auto m = static_cast<std::int64_t>(closed.size());
#pragma omp parallel for num_threads(threads) schedule(dynamic, 16)
  for (std::int64_t i = 0; i < m; ++i) records[i] = emit(closed[i], roots.entries, why[i]);
  for (std::size_t i = 0; i < records.size(); ++i) {
    if (records[i])
      out.records.push_back(std::move(*records[i]));
    else
      tally(out, why[i]);
  }
  finish(out, seen);
  return out;
}

EnumResult enumerate_anticanonical(const EnumBounds& bounds, int workers) {
  return workers == 1 ? enumerate_serial(bounds) : enumerate_parallel(bounds, workers);
}

AnticanonicalQuery is_anticanonical(const Divisor& d, const EnumBounds& bounds) {
  AnticanonicalQuery out;
  if (auto why = sequence_obstruction(d)) {
    out.obstruction = *why;
    return out;
  }
  // Moves never shorten a divisor, never raise an entry and lower s(D) by
  // exactly one, so anything longer, lower or with smaller s(D) is a dead end.
  EnumBounds b = bounds;
  b.max_length = std::min(b.max_length, d.length());
  const auto entries = d.self_intersections();
  const Integer lowest = *std::min_element(entries.begin(), entries.end());
  if (lowest > b.min_entry) b.min_entry = lowest;
  const Integer target_total = descriptors(d).s_total;
  const std::string target = key_of(d);

  SeenIndex seen(b.memory_cap_bytes);
  Roots roots = seed(b, seen);
  std::deque<Node> queue(roots.nodes.begin(), roots.nodes.end());
  while (!queue.empty()) {
    Node n = std::move(queue.front());
    queue.pop_front();
    if (key_of(n.state) == target) {
      const CatalogEntry& root = roots.entries[n.root];
      out.witness = make_record(n.state, root.spec, n.word, root.pair.has_value());
      return out;
    }
    if (descriptors(n.state).s_total <= target_total) continue;
    for (auto& [key, child] : children(n, b))
      if (seen.insert(key)) queue.push_back(std::move(child));
  }
  return out;
}

}  // namespace logcy
