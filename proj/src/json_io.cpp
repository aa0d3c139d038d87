#include "logcy/json_io.hpp"

#include <ostream>
#include <sstream>

#include "logcy/classifier.hpp"
#include "logcy/duality.hpp"
#include "logcy/errors.hpp"
#include "logcy/monodromy.hpp"

namespace logcy {

Json to_json(const Integer& v) {
  if (v.fits_slong_p()) return Json(static_cast<std::int64_t>(v.get_si()));
  return Json(v.get_str());
}

Json to_json(const Rational& v) { return Json(to_string(v)); }

Json to_json(const Inertia& in) { return Json::array({in.plus, in.zero, in.minus}); }

Json to_json(const Divisor& d) {
  Json j = Json::object();
  if (d.is_torus()) {
    j["kind"] = "torus";
    j["s"] = to_json(d.torus().s);
  } else {
    j["kind"] = "cycle";
    Json s = Json::array();
    for (const auto& v : d.cycle().entries()) s.push_back(to_json(v));
    j["s"] = std::move(s);
  }
  return j;
}

Json to_json(const std::vector<Move>& moves) {
  Json out = Json::array();
  for (const auto& m : moves) {
    Json j = Json::object();
    j["op"] = std::string(to_string(m.kind));
    j["index"] = m.index;
    out.push_back(std::move(j));
  }
  return out;
}

namespace {

Json class_json(const HClass& c) {
  Json out = Json::array();
  for (const auto& v : c) out.push_back(to_json(v));
  return out;
}

Json integers(const std::vector<Integer>& v) { return class_json(v); }

const Json& field(const Json& j, const char* name) {
  if (!j.is_object() || !j.contains(name)) throw MalformedInput(std::string("missing field '") + name + "'");
  return j.at(name);
}

HClass class_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("a homology class must be an array");
  HClass out;
  for (const auto& v : j) out.push_back(integer_from_json(v));
  return out;
}

Json nullable(const std::optional<Integer>& v) { return v ? to_json(*v) : Json(nullptr); }

}  // namespace

Json to_json(const LogCYPair& p) {
  Json j = Json::object();
  j["divisor"] = to_json(p.divisor);
  j["basis"] = Json{{"kind", std::string(to_string(p.basis.kind()))}, {"n", p.basis.exceptional_count()}};
  Json classes = Json::array();
  for (const auto& c : p.classes) classes.push_back(class_json(c));
  j["classes"] = std::move(classes);
  j["c1"] = class_json(p.c1);
  return j;
}

Json to_json(const EnumRecord& r) {
  Json j = Json::object();
  if (r.sequence.is_torus())
    j["seq"] = Json{{"torus", to_json(r.sequence.torus().s)}};
  else
    j["seq"] = integers(r.sequence.cycle().entries());
  j["case"] = std::string(to_string(r.spec.tag));
  j["param"] = r.spec.param ? Json(*r.spec.param) : Json(nullptr);
  j["moves"] = to_json(r.moves);
  j["inertia"] = to_json(r.inertia);
  j["det"] = to_json(r.det);
  j["trace"] = nullable(r.trace);
  j["s_total"] = to_json(r.s_total);
  j["contact"] = std::string(to_string(r.contact));
  const auto kod = kodaira_label(r.contact);
  j["kod"] = kod.empty() ? Json(nullptr) : Json(std::string(kod));
  j["homology"] = r.has_homology;
  return j;
}

Integer integer_from_json(const Json& j) {
  if (j.is_number_integer()) {
    if (j.is_number_unsigned()) return Integer(std::to_string(j.get<std::uint64_t>()));
    return Integer(std::to_string(j.get<std::int64_t>()));
  }
  if (j.is_string()) return parse_integer(j.get<std::string>());
  throw MalformedInput("expected an integer, got " + j.dump());
}

Rational rational_from_json(const Json& j) {
  if (j.is_number_integer()) return Rational(integer_from_json(j));
  if (j.is_string()) return parse_rational(j.get<std::string>());
  throw MalformedInput("expected a rational, got " + j.dump());
}

Divisor divisor_from_json(const Json& j) {
  const Json& kind = field(j, "kind");
  const Json& s = field(j, "s");
  if (kind == "torus") return Torus{integer_from_json(s)};
  if (kind == "cycle") {
    if (!s.is_array()) throw MalformedInput("a cycle needs an array of self-intersections");
    std::vector<Integer> seq;
    for (const auto& v : s) seq.push_back(integer_from_json(v));
    return SphereCycle(std::move(seq));
  }
  throw MalformedInput("divisor kind must be \"torus\" or \"cycle\"");
}

std::vector<Move> moves_from_json(const Json& j) {
  if (!j.is_array()) throw MalformedInput("a move word must be an array");
  std::vector<Move> out;
  for (const auto& m : j) {
    const Json& op = field(m, "op");
    const Json& index = field(m, "index");
    if (!op.is_string() || !index.is_number_unsigned()) throw MalformedInput("bad move " + m.dump());
    out.push_back({parse_move_kind(op.get<std::string>()), index.get<std::size_t>()});
  }
  return out;
}

LogCYPair pair_from_json(const Json& j) {
  Divisor d = divisor_from_json(field(j, "divisor"));
  const Json& basis = field(j, "basis");
  const Json& kind = field(basis, "kind");
  const Json& n = field(basis, "n");
  if (!n.is_number_unsigned()) throw MalformedInput("basis n must be a non-negative integer");
  AmbientBasis b = AmbientBasis::rational(0);
  if (kind == "rational")
    b = AmbientBasis::rational(n.get<std::size_t>());
  else if (kind == "ruled")
    b = AmbientBasis::ruled(n.get<std::size_t>());
  else
    throw MalformedInput("basis kind must be \"rational\" or \"ruled\"");
  const Json& classes = field(j, "classes");
  if (!classes.is_array()) throw MalformedInput("classes must be an array");
  std::vector<HClass> cls;
  for (const auto& c : classes) cls.push_back(class_from_json(c));
  return LogCYPair{std::move(d), b, std::move(cls), class_from_json(field(j, "c1"))};
}

Json parse_json(const std::string& text) {
  try {
    return Json::parse(text);
  } catch (const nlohmann::json::parse_error& e) {
    throw MalformedInput(std::string("invalid JSON: ") + e.what());
  }
}

std::string dump(const Json& j) { return j.dump(); }

Json classification_report(const Divisor& d) {
  const Classification c = classify(d);
  Json j = Json::object();
  j["inertia"] = to_json(c.inertia);
  j["det"] = to_json(determinant(intersection_matrix(d)));
  if (d.is_cycle()) {
    const Monodromy m = monodromy(d.cycle());
    j["trace"] = to_json(m.trace());
    j["contact"] = std::string(to_string(c.contact));
    j["bundle_type"] = std::string(to_string(bundle_type(m)));
  } else {
    j["trace"] = nullptr;
    j["contact"] = std::string(to_string(c.contact));
    j["bundle_type"] = nullptr;
  }
  const auto kod = kodaira_label(c.contact);
  j["kod"] = kod.empty() ? Json(nullptr) : Json(std::string(kod));
  if (c.contact == ContactType::Concave) j["note"] = "concave up to a local deformation of the symplectic form";
  return j;
}

Json monodromy_report(const Divisor& d) {
  const Monodromy m = monodromy(d);
  Json j = Json::object();
  j["matrix"] = Json::array({Json::array({to_json(m.m11()), to_json(m.m12())}),
                             Json::array({to_json(m.m21()), to_json(m.m22())})});
  j["trace"] = to_json(m.trace());
  j["bundle_type"] = std::string(to_string(bundle_type(m)));
  return j;
}

Json dual_report(const Divisor& d) {
  Json j = Json::object();
  if (d.is_torus()) {
    j["dual"] = to_json(Divisor(elliptic_dual(d.torus())));
    return j;
  }
  Json blocks = Json::array();
  for (const auto& b : block_form(d.cycle())) blocks.push_back(Json::array({to_json(b.a), to_json(b.b)}));
  j["blocks"] = std::move(blocks);
  j["dual"] = to_json(Divisor(dual_cycle(d.cycle())));
  return j;
}

Json reduce_report(const Divisor& d) {
  Json j = Json::object();
  if (d.is_torus()) {
    j["result"] = to_json(d);
    j["moves"] = Json::array();
    return j;
  }
  const Reduction r = toric_minimal_reduce(d.cycle());
  j["result"] = to_json(Divisor(r.result));
  j["canonical"] = to_json(Divisor(canonical_form(r.result)));
  j["moves"] = to_json(r.word.moves);
  return j;
}

Json equiv_report(const SphereCycle& a, const SphereCycle& b, const SearchBounds& bounds) {
  Json j = Json::object();
  const auto word = toric_equivalent(a, b, bounds);
  if (!word) {
    j["found"] = false;
    j["result"] = "NotFoundWithinBounds";
    return j;
  }
  j["found"] = true;
  j["steps"] = word->moves.size();
  j["moves"] = to_json(word->moves);
  Json states = Json::array();
  for (const auto& s : word->states()) states.push_back(to_json(s));
  j["states"] = std::move(states);
  return j;
}

Json check_report(const LogCYPair& p) {
  Json j = Json::object();
  const auto violations = validate_pair(p);
  j["valid"] = violations.empty();
  Json vs = Json::array();
  for (const auto& v : violations) vs.push_back(Json{{"code", v.code}, {"message", v.message}});
  j["violations"] = std::move(vs);
  if (!violations.empty()) return j;
  Json rules = Json::array();
  for (const auto& r : check_constraints(p))
    rules.push_back(Json{{"rule", r.rule}, {"status", std::string(to_string(r.status))}, {"detail", r.detail}});
  j["constraints"] = std::move(rules);
  j["i2_criterion"] = i2_criterion(p);
  return j;
}

Json solve_exact_report(const Divisor& d, std::span<const Rational> areas) {
  Json j = Json::object();
  const auto z = exact_on_boundary(d, areas);
  if (!z) {
    j["solvable"] = false;
    j["result"] = "UNSOLVABLE";
    return j;
  }
  j["solvable"] = true;
  Json w = Json::array();
  for (const auto& v : *z) w.push_back(to_json(v));
  j["z"] = std::move(w);
  return j;
}

std::string plumbing_dot(const Divisor& d) {
  std::ostringstream out;
  const auto s = d.self_intersections();
  out << "graph plumbing {\n";
  for (std::size_t i = 0; i < s.size(); ++i)
    out << "  c" << i << " [label=\"" << s[i].get_str() << (d.is_torus() ? " (torus)" : "") << "\"];\n";
  if (d.is_cycle()) {
    const std::size_t k = s.size();
    if (k == 2) {
      out << "  c0 -- c1;\n  c0 -- c1;\n";
    } else {
      for (std::size_t i = 0; i < k; ++i) out << "  c" << i << " -- c" << (i + 1) % k << ";\n";
    }
  }
  out << "}\n";
  return out.str();
}

void write_jsonl(std::ostream& out, const std::vector<EnumRecord>& records) {
  for (const auto& r : records) out << to_json(r).dump() << '\n';
}

}  // namespace logcy
