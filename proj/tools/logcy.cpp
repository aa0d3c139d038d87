// logcy: command-line front end. Every subcommand parses its input, calls
// one library report builder and prints the result.

#include <cstdlib>
#include <fstream>
#include <iostream>
#include <iterator>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "logcy/enumeration.hpp"
#include "logcy/errors.hpp"
#include "logcy/json_io.hpp"

namespace {

using namespace logcy;

std::string slurp(const std::string& path) {
  if (path == "-") return {std::istreambuf_iterator<char>(std::cin), {}};
  std::ifstream in(path);
  if (!in) throw MalformedInput("cannot read '" + path + "'");
  return {std::istreambuf_iterator<char>(in), {}};
}

Divisor read_divisor(const std::string& path) { return divisor_from_json(parse_json(slurp(path))); }

SphereCycle read_cycle(const std::string& path) {
  Divisor d = read_divisor(path);
  if (!d.is_cycle()) throw PreconditionError("CycleRequired", "'" + path + "' holds a torus");
  return d.cycle();
}

std::vector<Rational> parse_areas(const std::string& text) {
  std::vector<Rational> out;
  std::stringstream ss(text);
  std::string item;
  while (std::getline(ss, item, ',')) out.push_back(parse_rational(item));
  if (out.empty()) throw MalformedInput("--areas is empty");
  return out;
}

void parse_param_range(const std::string& text, long& lo, long& hi) {
  const auto colon = text.find(':');
  if (colon == std::string::npos) throw MalformedInput("--param-range expects LO:HI");
  const Integer a = parse_integer(text.substr(0, colon));
  const Integer b = parse_integer(text.substr(colon + 1));
  if (!a.fits_slong_p() || !b.fits_slong_p() || a > b) throw MalformedInput("bad --param-range '" + text + "'");
  lo = a.get_si();
  hi = b.get_si();
}

// Bytes, optionally suffixed K, M or G.
std::size_t memory_cap_from_env() {
  const char* raw = std::getenv("LOGCY_MAX_MEM");
  if (raw == nullptr || *raw == '\0') return 0;
  std::string text(raw);
  std::size_t scale = 1;
  switch (text.back()) {
    case 'K': case 'k': scale = 1ull << 10; break;
    case 'M': case 'm': scale = 1ull << 20; break;
    case 'G': case 'g': scale = 1ull << 30; break;
    default: break;
  }
  if (scale != 1) text.pop_back();
  const Integer v = parse_integer(text);
  if (v < 0 || !v.fits_ulong_p()) throw MalformedInput("LOGCY_MAX_MEM must be a byte count");
  return static_cast<std::size_t>(v.get_ui()) * scale;
}

void print(const Json& j) { std::cout << dump(j) << '\n'; }

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"Log Calabi-Yau divisor toolkit"};
  app.require_subcommand(1);
  app.fallthrough();
  std::string seed;
  app.add_option("--seed", seed, "Reserved; every algorithm is deterministic");

  std::string file, file_b, out_path, areas, param_range = "-3:3";
  SearchBounds search;
  long search_min_entry = -10;
  EnumBounds enum_bounds;
  long enum_min_entry = -9;
  int workers = 0;

  auto* classify = app.add_subcommand("classify", "Inertia, contact type and monodromy trace");
  classify->add_option("file", file, "Divisor JSON")->required();
  auto* mono = app.add_subcommand("monodromy", "Monodromy matrix, trace and bundle type");
  mono->add_option("file", file, "Divisor JSON")->required();
  auto* dual = app.add_subcommand("dual", "Dual cycle (or elliptic dual of a torus)");
  dual->add_option("file", file, "Divisor JSON")->required();
  auto* reduce = app.add_subcommand("reduce", "Toric-minimal representative and move word");
  reduce->add_option("file", file, "Divisor JSON")->required();
  auto* equiv = app.add_subcommand("equiv", "Bounded toric-equivalence search");
  equiv->add_option("a", file, "First cycle JSON")->required();
  equiv->add_option("b", file_b, "Second cycle JSON")->required();
  equiv->add_option("--max-length", search.max_length)->check(CLI::PositiveNumber);
  equiv->add_option("--min-entry", search_min_entry);
  equiv->add_option("--max-steps", search.max_steps)->check(CLI::NonNegativeNumber);
  auto* enumerate = app.add_subcommand("enumerate", "Anti-canonical sequences from the minimal models");
  enumerate->add_option("--max-length", enum_bounds.max_length)->check(CLI::PositiveNumber);
  enumerate->add_option("--min-entry", enum_min_entry);
  enumerate->add_option("--max-moves", enum_bounds.max_moves)->check(CLI::NonNegativeNumber);
  enumerate->add_option("--param-range", param_range, "LO:HI");
  enumerate->add_option("--out", out_path, "JSONL output (default stdout)");
  enumerate->add_option("--workers", workers, "Threads; 1 selects the serial kernel")->check(CLI::NonNegativeNumber);
  auto* check = app.add_subcommand("check", "Validate a pair and report the constraint rules");
  check->add_option("file", file, "Pair JSON")->required();
  auto* solve = app.add_subcommand("solve-exact", "Solve Q_D z = a for positive areas");
  solve->add_option("file", file, "Divisor JSON")->required();
  solve->add_option("--areas", areas, "Comma-separated rationals")->required();
  auto* graph = app.add_subcommand("graph", "Plumbing graph in DOT");
  graph->add_option("file", file, "Divisor JSON")->required();
  graph->add_option("-o", out_path, "DOT output (default stdout)");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? 0 : 1;
  }

  try {
    if (classify->parsed()) {
      print(classification_report(read_divisor(file)));
    } else if (mono->parsed()) {
      print(monodromy_report(read_divisor(file)));
    } else if (dual->parsed()) {
      print(dual_report(read_divisor(file)));
    } else if (reduce->parsed()) {
      print(reduce_report(read_divisor(file)));
    } else if (equiv->parsed()) {
      search.min_entry = search_min_entry;
      print(equiv_report(read_cycle(file), read_cycle(file_b), search));
    } else if (enumerate->parsed()) {
      enum_bounds.min_entry = enum_min_entry;
      parse_param_range(param_range, enum_bounds.param_lo, enum_bounds.param_hi);
      enum_bounds.memory_cap_bytes = memory_cap_from_env();
      const EnumResult result = enumerate_anticanonical(enum_bounds, workers);
      if (out_path.empty()) {
        write_jsonl(std::cout, result.records);
      } else {
        std::ofstream out(out_path);
        if (!out) throw MalformedInput("cannot write '" + out_path + "'");
        write_jsonl(out, result.records);
      }
      const auto& s = result.stats;
      std::cerr << "discovered " << s.discovered << ", emitted " << s.emitted << ", rejected "
                << s.rejected_by_sequence_bounds << " by sequence bounds, " << s.rejected_by_validation
                << " by validation, " << s.rejected_by_constraints << " by constraints\n";
      if (s.truncated) std::cerr << "warning: LOGCY_MAX_MEM reached; the closure is truncated\n";
    } else if (check->parsed()) {
      print(check_report(pair_from_json(parse_json(slurp(file)))));
    } else if (solve->parsed()) {
      const Divisor d = read_divisor(file);
      const auto a = parse_areas(areas);
      print(solve_exact_report(d, a));
    } else if (graph->parsed()) {
      const std::string dot = plumbing_dot(read_divisor(file));
      if (out_path.empty()) {
        std::cout << dot;
      } else {
        std::ofstream out(out_path);
        if (!out) throw MalformedInput("cannot write '" + out_path + "'");
        out << dot;
      }
    }
  } catch (const PreconditionError& e) {
    Json j = Json::object();
    j["error"] = dynamic_cast<const NotEligible*>(&e) ? "NotEligible" : "PreconditionFailed";
    j["precondition"] = e.precondition();
    j["detail"] = e.what();
    print(j);
    std::cerr << "error: " << e.what() << '\n';
    return 2;
  } catch (const MalformedInput& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 1;
  } catch (const std::logic_error& e) {
    std::cerr << "malformed input: " << e.what() << '\n';
    return 1;
  }
  return 0;
}
