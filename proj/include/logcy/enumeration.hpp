#pragma once

#include <cstddef>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "logcy/classifier.hpp"
#include "logcy/divisor.hpp"
#include "logcy/homology.hpp"
#include "logcy/linalg.hpp"
#include "logcy/moves.hpp"

namespace logcy {

/// Minimal log Calabi-Yau pairs. A: elliptic ruled surface with a torus.
/// B*: CP^2. C*: S^2 x S^2. D*: CP^2 # -CP^2.
enum class CaseTag { A, B1, B2, B3, C1, C2, C3, C4, D2a, D2b, D3, D4 };

inline constexpr CaseTag kAllCases[] = {CaseTag::A,  CaseTag::B1,  CaseTag::B2,  CaseTag::B3,
                                        CaseTag::C1, CaseTag::C2,  CaseTag::C3,  CaseTag::C4,
                                        CaseTag::D2a, CaseTag::D2b, CaseTag::D3, CaseTag::D4};

std::string_view to_string(CaseTag tag);
/// Throws MalformedInput for an unknown tag.
CaseTag parse_case_tag(std::string_view name);
/// C2-C4 take b, D2a/D3/D4 take a; the rest are unparameterized.
bool has_parameter(CaseTag tag);

struct MinimalModelSpec {
  CaseTag tag = CaseTag::A;
  std::optional<long> param;

  friend bool operator==(const MinimalModelSpec&, const MinimalModelSpec&) = default;
};

struct CatalogEntry {
  MinimalModelSpec spec;
  Divisor divisor;
  /// Absent for case A, whose ambient surface has b_1 != 0 and is not modelled.
  std::optional<LogCYPair> pair;
};

/// Throws PreconditionError when the parameter presence does not match the tag.
CatalogEntry instantiate(const MinimalModelSpec& spec);

/// Every case, parameterized ones once per value in [param_lo, param_hi],
/// in case order then parameter order.
std::vector<CatalogEntry> catalog(long param_lo, long param_hi);

struct EnumBounds {
  std::size_t max_length = 6;
  Integer min_entry = -9;
  std::size_t max_moves = 8;
  long param_lo = -3;
  long param_hi = 3;
  /// Soft cap on the dedup index, in bytes; 0 disables it. When hit, the
  /// search stops expanding and the result is marked truncated.
  std::size_t memory_cap_bytes = 0;
};

struct EnumRecord {
  Divisor sequence;  // canonical form
  MinimalModelSpec spec;
  std::vector<Move> moves;  // positional, replayable from the catalog divisor
  Inertia inertia;
  Integer det;
  std::optional<Integer> trace;  // cycles only
  Integer s_total;
  ContactType contact = ContactType::NoContactBoundary;
  bool has_homology = true;
};

struct EnumStats {
  std::size_t discovered = 0;
  std::size_t emitted = 0;
  std::size_t rejected_by_validation = 0;
  std::size_t rejected_by_constraints = 0;
  std::size_t rejected_by_sequence_bounds = 0;
  bool truncated = false;
};

struct EnumResult {
  std::vector<EnumRecord> records;  // sorted by (length, canonical sequence)
  EnumStats stats;
};

/// Reference implementation: a single FIFO breadth-first closure.
EnumResult enumerate_serial(const EnumBounds& bounds);

/// Level-synchronous closure; frontier expansion runs on `workers` OpenMP
/// threads (0 = runtime default). Output is identical to enumerate_serial.
EnumResult enumerate_parallel(const EnumBounds& bounds, int workers = 0);

/// Dispatches to the serial kernel for workers == 1, parallel otherwise.
EnumResult enumerate_anticanonical(const EnumBounds& bounds, int workers = 0);

/// Replays a record's provenance from its catalog divisor.
Divisor replay(const EnumRecord& record);

/// Sequence-level obstructions every anti-canonical cycle avoids: s(D) <= 9,
/// S(D) != (5+l, -l) for l >= 2, r^{>=0} <= 4, and for r >= 5 at most two
/// non-negative entries, adjacent, one of them 0. Returns the first failed
/// clause, if any.
std::optional<std::string> sequence_obstruction(const Divisor& d);

struct AnticanonicalQuery {
  std::optional<EnumRecord> witness;
  /// Why no witness exists in principle (e.g. s(D) > 9); empty otherwise.
  std::string obstruction;
};

/// Searches the bounded closure for `d`, stopping at the first hit. A
/// missing witness is "unknown within bounds", not a disproof.
AnticanonicalQuery is_anticanonical(const Divisor& d, const EnumBounds& bounds);

/// Computes the invariant block of a record for `sequence`.
EnumRecord make_record(const Divisor& sequence, const MinimalModelSpec& spec, std::vector<Move> moves,
                       bool has_homology);

}  // namespace logcy
