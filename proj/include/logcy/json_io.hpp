#pragma once

// JSON encodings shared by the CLI and the enumeration stream. Integers that
// fit in 64 bits are JSON numbers, larger ones are decimal strings;
// rationals are always "p/q" (or "p") strings. No floats anywhere.

#include <iosfwd>
#include <span>
#include <string>
#include <vector>

#include <json.hpp>

#include "logcy/divisor.hpp"
#include "logcy/enumeration.hpp"
#include "logcy/homology.hpp"
#include "logcy/linalg.hpp"
#include "logcy/moves.hpp"

namespace logcy {

using Json = nlohmann::ordered_json;

Json to_json(const Integer& v);
Json to_json(const Rational& v);
Json to_json(const Inertia& in);
Json to_json(const Divisor& d);
Json to_json(const std::vector<Move>& moves);
Json to_json(const LogCYPair& p);
Json to_json(const EnumRecord& r);

/// The parsers below throw MalformedInput on any schema violation.
Integer integer_from_json(const Json& j);
Rational rational_from_json(const Json& j);
/// {"kind":"torus","s":n} or {"kind":"cycle","s":[...]}.
Divisor divisor_from_json(const Json& j);
std::vector<Move> moves_from_json(const Json& j);
LogCYPair pair_from_json(const Json& j);

/// Parses text as JSON, mapping parse errors to MalformedInput.
Json parse_json(const std::string& text);

/// Compact single-line dump.
std::string dump(const Json& j);

Json classification_report(const Divisor& d);
/// Throws PreconditionError for a torus.
Json monodromy_report(const Divisor& d);
/// A torus maps to its elliptic dual; cycles throw NotEligible when ineligible.
Json dual_report(const Divisor& d);
Json reduce_report(const Divisor& d);
Json equiv_report(const SphereCycle& a, const SphereCycle& b, const SearchBounds& bounds);
Json check_report(const LogCYPair& p);
Json solve_exact_report(const Divisor& d, std::span<const Rational> areas);

/// Plumbing graph: nodes in component order, one edge per intersection
/// point, so a 2-cycle gets two parallel edges.
std::string plumbing_dot(const Divisor& d);

/// One record per line, in the given order.
void write_jsonl(std::ostream& out, const std::vector<EnumRecord>& records);

}  // namespace logcy
