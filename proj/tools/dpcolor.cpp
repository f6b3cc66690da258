// Command-line front end for the dpcolor library.
//
// Exit codes: 0 = the property holds / colorable, 1 = it fails / uncolorable,
// 2 = bad input.

#include <fstream>
#include <iostream>
#include <sstream>
#include <string>
#include <vector>

#include <CLI11.hpp>

#include "dpcolor/dpcolor.hpp"
#include "dpcolor/io.hpp"

namespace {

using namespace dpcolor;
using io::json;

constexpr int kHolds = 0;
constexpr int kFails = 1;
constexpr int kInputError = 2;

std::string slurp(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

bool looks_like_json(const std::string& text) {
  auto first = text.find_first_not_of(" \t\r\n");
  return first != std::string::npos && text[first] == '{';
}

// "catalog:<name>" names a built-in instance; anything else is a file path.
PlaneGraph load_plane(const std::string& source) {
  constexpr std::string_view prefix = "catalog:";
  if (source.rfind(prefix, 0) == 0) {
    const CatalogEntry* entry = find_catalog_entry(source.substr(prefix.size()));
    if (!entry) throw Error(ErrorKind::ParseError, "no catalog entry " + source);
    return entry->plane;
  }
  std::istringstream in(slurp(source));
  return io::read_plane(in);
}

Graph load_graph(const std::string& source) {
  if (source.rfind("catalog:", 0) == 0) return load_plane(source).graph();
  const std::string text = slurp(source);
  std::istringstream in(text);
  if (looks_like_json(text)) return io::read_plane(in).graph();
  return io::read_edge_list(in);
}

Cover load_cover(const std::string& path) {
  std::istringstream in(slurp(path));
  return io::read_cover(in);
}

void emit(const std::string& out_path, const std::string& text) {
  if (out_path.empty()) {
    std::cout << text;
    return;
  }
  std::ofstream out(out_path);
  if (!out) throw Error(ErrorKind::ParseError, "cannot write " + out_path);
  out << text;
}

int cmd_cycles(const std::string& source, std::vector<int> lengths) {
  const Graph g = load_graph(source);
  if (lengths.empty()) lengths = {4, 6};
  bool any = false;
  for (int k : lengths) {
    auto cycles = list_cycles(g, k);
    std::cout << k << "-cycles: " << cycles.size() << '\n';
    for (const Cycle& c : cycles) {
      for (std::size_t i = 0; i < c.size(); ++i) std::cout << (i ? " " : "  ") << c[i];
      std::cout << '\n';
    }
    any = any || !cycles.empty();
  }
  return any ? kFails : kHolds;
}

int cmd_solve(const std::string& path, int d, bool brute, std::uint64_t budget) {
  const Cover c = load_cover(path);
  if (auto violation = validate_cover(c)) {
    throw Error(ErrorKind::ParseError, "invalid cover, clause (" + std::to_string(violation->clause) + "): " + violation->witness);
  }
  auto result = brute ? brute_force_rep_set(c, d, budget) : find_rep_set(c, d, SolveOptions{budget});
  if (!result) {
    std::cout << "UNSAT\n";
    return kFails;
  }
  io::write_json(std::cout, io::coloring_to_json(c, *result, d));
  return kHolds;
}

int cmd_theorem(const std::string& source, std::uint64_t seed) {
  const PlaneGraph pg = load_plane(source);
  const Graph& g = pg.graph();
  require_no46(g);
  const Cover c = random_cover(g, ListAssignment::uniform(g.vertex_count(), 3), seed, true);
  PipelineResult result = color_planar_no46(pg, c);
  json doc{{"seed", seed},
           {"cover", io::cover_to_json(c)},
           {"coloring", io::coloring_to_json(c, result.coloring, 1)},
           {"trace", io::trace_to_json(result.trace)}};
  io::write_json(std::cout, doc);
  return kHolds;
}

void write_initial_table(std::ostream& out, const PlaneGraph& pg, const ChargeLedger& ledger) {
  for (Vertex v = 0; v < pg.graph().vertex_count(); ++v) {
    out << "v" << v << "  initial " << ledger.vertex_initial[static_cast<std::size_t>(v)].str() << '\n';
  }
  for (int f = 0; f < pg.face_count(); ++f) {
    out << "f" << f << "  initial " << ledger.face_initial[static_cast<std::size_t>(f)].str() << '\n';
  }
  out << "total initial " << ledger.total_initial().str() << " (rules not applied)\n";
}

int cmd_audit(const std::string& source, const std::string& format) {
  const PlaneGraph pg = load_plane(source);
  if (!is_no46(pg.graph())) {
    // the rules presume no 4- or 6-cycles; only the initial charges are meaningful
    const ChargeLedger initial = initial_charges(pg);
    write_initial_table(std::cout, pg, initial);
    require_no46(pg.graph());
  }
  const ChargeLedger ledger = apply_rules(pg);
  const AuditReport report = audit_cases(pg, ledger);
  if (format == "json") {
    io::write_json(std::cout, io::audit_to_json(ledger, report));
  } else {
    io::write_audit_table(std::cout, ledger, report);
  }
  return report.holds() ? kHolds : kFails;
}

int cmd_gen(int n, std::uint64_t seed, int attempts, const std::string& format, const std::string& out_path) {
  const PlaneGraph pg = generate_no46(n, seed, GeneratorOptions{attempts});
  if (!is_no46(pg.graph())) throw Error(ErrorKind::ContractViolation, "generated graph has a 4- or 6-cycle");
  std::ostringstream text;
  if (format == "edges") {
    io::write_edge_list(text, pg.graph());
  } else {
    io::write_plane(text, pg);
  }
  emit(out_path, text.str());
  return kHolds;
}

int cmd_lemma(const std::string& kind_name) {
  auto kind = parse_config_kind(kind_name);
  if (!kind) throw Error(ErrorKind::ParseError, "unknown configuration " + kind_name);
  LemmaCheck check = verify_config_reducible(*kind);
  std::cout << to_string(*kind) << ": " << (check.ok() ? "ok" : "counterexample") << ", " << check.colorable << "/"
            << check.covers << " covers colorable\n";
  if (check.counterexample) io::write_json(std::cout, io::cover_to_json(*check.counterexample));
  return check.ok() ? kHolds : kFails;
}

int cmd_catalog(const std::string& name, const std::string& format) {
  if (name.empty()) {
    for (const CatalogEntry& e : catalog()) {
      std::cout << e.name << " n=" << e.plane.graph().vertex_count() << " m=" << e.plane.graph().edge_count()
                << " faces=" << e.plane.face_count() << " no46=" << (e.no46 ? "true" : "false") << '\n';
    }
    return kHolds;
  }
  const CatalogEntry* entry = find_catalog_entry(name);
  if (!entry) throw Error(ErrorKind::ParseError, "no catalog entry " + name);
  if (format == "edges") {
    io::write_edge_list(std::cout, entry->plane.graph());
  } else {
    io::write_plane(std::cout, entry->plane);
  }
  return kHolds;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"DP-coloring covers, improper DP-colorings of planar graphs without 4- and 6-cycles, and a discharging auditor"};
  app.require_subcommand(1);

  std::string source, format = "text", out_path, kind;
  std::vector<int> lengths;
  int d = 1, n = 10, attempts = 100;
  bool brute = false;
  std::uint64_t seed = 1, budget = kDefaultBudget;

  auto* cycles = app.add_subcommand("cycles", "List cycles of the given lengths (default 4 and 6)");
  cycles->add_option("graph", source, "Edge-list or plane-graph file, or catalog:<name>")->required();
  cycles->add_option("-k,--length", lengths, "Cycle length (repeatable)");

  auto* solve = app.add_subcommand("solve", "Find a d-representative set of a cover");
  solve->add_option("cover", source, "Cover file")->required();
  solve->add_option("-d", d, "Impropriety bound")->check(CLI::NonNegativeNumber);
  solve->add_flag("--brute", brute, "Use exhaustive enumeration");
  solve->add_option("--budget", budget, "Search node / assignment budget");

  auto* theorem = app.add_subcommand("theorem", "Color a plane graph without 4-/6-cycles from a random 3-list cover");
  theorem->add_option("plane", source, "Plane-graph file or catalog:<name>")->required();
  theorem->add_option("--seed", seed, "Cover seed");

  auto* audit_cmd = app.add_subcommand("audit", "Apply the discharging rules and audit final charges");
  audit_cmd->add_option("plane", source, "Plane-graph file or catalog:<name>")->required();
  audit_cmd->add_option("--format", format, "text or json")->check(CLI::IsMember({"text", "json"}));

  auto* gen = app.add_subcommand("gen", "Generate a plane graph without 4-/6-cycles");
  gen->add_option("-n", n, "Vertex count")->required()->check(CLI::PositiveNumber);
  gen->add_option("--seed", seed, "Generator seed");
  gen->add_option("--attempts", attempts, "Attempt budget")->check(CLI::PositiveNumber);
  gen->add_option("--format", format, "plane or edges");
  gen->add_option("-o,--output", out_path, "Output file (default stdout)");

  auto* lemma = app.add_subcommand("lemma", "Exhaustively verify a reducible configuration");
  lemma->add_option("kind", kind, "LowVertex | AdjacentThrees | FourWithThreeThrees")->required();

  auto* cat = app.add_subcommand("catalog", "List built-in instances or print one");
  cat->add_option("name", source, "Entry name");
  cat->add_option("--format", format, "plane or edges");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    const int code = app.exit(e);
    return code == 0 ? kHolds : kInputError;
  }

  try {
    if (*cycles) return cmd_cycles(source, lengths);
    if (*solve) return cmd_solve(source, d, brute, budget);
    if (*theorem) return cmd_theorem(source, seed);
    if (*audit_cmd) return cmd_audit(source, format);
    if (*gen) return cmd_gen(n, seed, attempts, format == "text" ? "plane" : format, out_path);
    if (*lemma) return cmd_lemma(kind);
    if (*cat) return cmd_catalog(source, format == "text" ? "plane" : format);
  } catch (const Error& e) {
    std::cerr << "error: " << e.what() << '\n';
    switch (e.kind()) {
      case ErrorKind::GenerationExhausted:
      case ErrorKind::TheoremViolation:
      case ErrorKind::ContractViolation:
        return kFails;
      default:
        return kInputError;
    }
  }
  return kInputError;
}
