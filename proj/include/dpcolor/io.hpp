#pragma once

#include <algorithm>
#include <iomanip>
#include <istream>
#include <ostream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "dpcolor/catalog.hpp"
#include "dpcolor/cover.hpp"
#include "dpcolor/discharging.hpp"
#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"
#include "dpcolor/reduction.hpp"
#include "dpcolor/solver.hpp"

namespace dpcolor::io {

using nlohmann::json;

inline constexpr const char* kGraphHeader = "# dpcolor graph v1";
inline constexpr const char* kPlaneFormat = "dpcolor.plane/1";
inline constexpr const char* kCoverFormat = "dpcolor.cover/1";
inline constexpr const char* kColoringFormat = "dpcolor.coloring/1";
inline constexpr const char* kTraceFormat = "dpcolor.trace/1";
inline constexpr const char* kAuditFormat = "dpcolor.audit/1";

// ---- edge list -------------------------------------------------------------
// Lines starting with '#' are comments. Then "n m" and m lines "u v".

inline Graph read_edge_list(std::istream& in) {
  std::string line;
  std::ostringstream body;
  while (std::getline(in, line)) {
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string::npos || line[first] == '#') continue;
    body << line << '\n';
  }
  std::istringstream tokens(body.str());
  long long n = 0, m = 0;
  if (!(tokens >> n >> m) || n < 0 || m < 0) throw Error(ErrorKind::ParseError, "expected header \"n m\"");
  std::vector<std::pair<Vertex, Vertex>> edges;
  for (long long i = 0; i < m; ++i) {
    long long u = 0, v = 0;
    if (!(tokens >> u >> v)) throw Error(ErrorKind::ParseError, "expected " + std::to_string(m) + " edges, got " + std::to_string(i));
    edges.emplace_back(static_cast<Vertex>(u), static_cast<Vertex>(v));
  }
  std::string extra;
  if (tokens >> extra) throw Error(ErrorKind::ParseError, "trailing data after edge list");
  return Graph::build(static_cast<int>(n), edges);
}

inline void write_edge_list(std::ostream& out, const Graph& g) {
  out << kGraphHeader << '\n' << g.vertex_count() << ' ' << g.edge_count() << '\n';
  for (const Edge& e : g.edges()) out << e.u << ' ' << e.v << '\n';
}

// ---- json helpers ----------------------------------------------------------

inline json parse_json(std::istream& in) {
  try {
    return json::parse(in);
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline void expect_format(const json& doc, const char* format) {
  if (!doc.is_object() || !doc.contains("format") || doc["format"] != format) {
    throw Error(ErrorKind::ParseError, std::string("expected format ") + format);
  }
}

template <class T>
T field(const json& doc, const char* key) {
  if (!doc.contains(key)) throw Error(ErrorKind::ParseError, std::string("missing field \"") + key + "\"");
  try {
    return doc.at(key).get<T>();
  } catch (const json::exception& e) {
    throw Error(ErrorKind::ParseError, std::string("field \"") + key + "\": " + e.what());
  }
}

namespace detail {

// Objects open one key per line; arrays of containers put one element per
// line; everything below that is written compactly.
inline void dump_readable(std::ostream& out, const json& doc, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  const std::string inner(static_cast<std::size_t>(indent + 2), ' ');
  if (doc.is_object() && !doc.empty()) {
    out << "{\n";
    std::size_t i = 0;
    for (auto it = doc.begin(); it != doc.end(); ++it, ++i) {
      out << inner << json(it.key()).dump() << ": ";
      dump_readable(out, it.value(), indent + 2);
      out << (i + 1 < doc.size() ? ",\n" : "\n");
    }
    out << pad << '}';
    return;
  }
  const bool nested = doc.is_array() && !doc.empty() &&
                      std::any_of(doc.begin(), doc.end(), [](const json& e) { return e.is_structured(); });
  if (nested) {
    out << "[\n";
    for (std::size_t i = 0; i < doc.size(); ++i) {
      out << inner;
      if (doc[i].is_object()) {
        dump_readable(out, doc[i], indent + 2);
      } else {
        out << doc[i].dump();
      }
      out << (i + 1 < doc.size() ? ",\n" : "\n");
    }
    out << pad << ']';
    return;
  }
  out << doc.dump();
}

}  // namespace detail

inline void write_json(std::ostream& out, const json& doc) {
  detail::dump_readable(out, doc, 0);
  out << '\n';
}

// ---- plane graph -----------------------------------------------------------

inline json plane_to_json(const PlaneGraph& pg) {
  return json{{"format", kPlaneFormat}, {"n", pg.graph().vertex_count()}, {"rotations", pg.rotation().order}};
}

inline PlaneGraph plane_from_json(const json& doc) {
  expect_format(doc, kPlaneFormat);
  const int n = field<int>(doc, "n");
  auto rotations = field<std::vector<std::vector<Vertex>>>(doc, "rotations");
  if (static_cast<int>(rotations.size()) != n) throw Error(ErrorKind::ParseError, "rotations length differs from n");
  return plane_from_rotation(RotationSystem{std::move(rotations)});
}

inline PlaneGraph read_plane(std::istream& in) { return plane_from_json(parse_json(in)); }
inline void write_plane(std::ostream& out, const PlaneGraph& pg) { write_json(out, plane_to_json(pg)); }

// ---- cover -----------------------------------------------------------------

inline json cover_to_json(const Cover& c) {
  json edges = json::array();
  json matchings = json::array();
  for (int id = 0; id < c.host.edge_count(); ++id) {
    const Edge& e = c.host.edge(id);
    edges.push_back({e.u, e.v});
    json pairs = json::array();
    for (auto [x, y] : c.matchings[static_cast<std::size_t>(id)]) pairs.push_back({x, y});
    matchings.push_back(std::move(pairs));
  }
  return json{{"format", kCoverFormat},
              {"n", c.host.vertex_count()},
              {"edges", std::move(edges)},
              {"lists", c.lists.lists},
              {"matchings", std::move(matchings)}};
}

/// Matching pairs are (color at first listed endpoint, color at second).
inline Cover cover_from_json(const json& doc) {
  expect_format(doc, kCoverFormat);
  const int n = field<int>(doc, "n");
  auto edges = field<std::vector<std::pair<Vertex, Vertex>>>(doc, "edges");
  auto lists = field<std::vector<std::vector<Color>>>(doc, "lists");
  auto matchings = field<std::vector<std::vector<std::pair<Color, Color>>>>(doc, "matchings");
  if (matchings.size() != edges.size()) throw Error(ErrorKind::ParseError, "one matching per edge expected");
  if (static_cast<int>(lists.size()) != n) throw Error(ErrorKind::ParseError, "one list per vertex expected");
  Cover c = Cover::empty_over(Graph::build(n, edges), ListAssignment::from(std::move(lists)));
  for (std::size_t i = 0; i < edges.size(); ++i) c.set_matching(edges[i].first, edges[i].second, matchings[i]);
  if (auto bad = validate_cover(c)) throw Error(ErrorKind::ParseError, "invalid cover: " + bad->witness);
  return c;
}

inline Cover read_cover(std::istream& in) { return cover_from_json(parse_json(in)); }
inline void write_cover(std::ostream& out, const Cover& c) { write_json(out, cover_to_json(c)); }

// ---- coloring / trace ------------------------------------------------------

inline json coloring_to_json(const Cover& c, const RepSet& s, int d) {
  ImproprietyProfile p = impropriety(c, s);
  return json{{"format", kColoringFormat},
              {"d", d},
              {"colors", s.colors},
              {"impropriety", p.counts},
              {"max_impropriety", p.max()}};
}

inline RepSet coloring_from_json(const json& doc) {
  expect_format(doc, kColoringFormat);
  return RepSet{field<std::vector<Color>>(doc, "colors")};
}

inline json trace_to_json(const std::vector<TraceStep>& trace) {
  json steps = json::array();
  for (const TraceStep& t : trace) {
    steps.push_back(json{{"kind", std::string(to_string(t.kind))},
                         {"excised", t.excised},
                         {"residual_sizes", t.residual_sizes},
                         {"chosen", t.chosen}});
  }
  return json{{"format", kTraceFormat}, {"steps", std::move(steps)}};
}

inline std::vector<TraceStep> trace_from_json(const json& doc) {
  expect_format(doc, kTraceFormat);
  std::vector<TraceStep> out;
  for (const json& s : field<json>(doc, "steps")) {
    auto kind = parse_config_kind(field<std::string>(s, "kind"));
    if (!kind) throw Error(ErrorKind::ParseError, "unknown configuration kind");
    out.push_back(TraceStep{*kind, field<std::vector<Vertex>>(s, "excised"), field<std::vector<int>>(s, "residual_sizes"),
                            field<std::vector<Color>>(s, "chosen")});
  }
  return out;
}

// ---- audit report ----------------------------------------------------------

inline json audit_to_json(const ChargeLedger& ledger, const AuditReport& report) {
  json elements = json::array();
  for (const ElementAudit& a : report.elements) {
    json transfers = json::array();
    for (std::size_t i : a.transfers) {
      const Transfer& t = ledger.transfers[i];
      const bool outgoing = t.from == a.element;
      transfers.push_back(json{{"rule", to_string(t.rule)},
                               {"direction", outgoing ? "out" : "in"},
                               {"other", (outgoing ? t.to : t.from).str()},
                               {"amount_sixths", t.amount.in_sixths()}});
    }
    elements.push_back(json{{"element", a.element.str()},
                            {"initial_sixths", a.initial.in_sixths()},
                            {"final_sixths", a.final_charge.in_sixths()},
                            {"case", a.case_label},
                            {"pattern", a.pattern},
                            {"repeated_incidence", a.repeated_incidence},
                            {"verdict", std::string(to_string(a.verdict))},
                            {"transfers", std::move(transfers)}});
  }
  return json{{"format", kAuditFormat},
              {"total_initial_sixths", report.total_initial.in_sixths()},
              {"total_final_sixths", report.total_final.in_sixths()},
              {"conserved", report.conserved()},
              {"theorem_violation", report.theorem_violation},
              {"pass", report.count(Verdict::Pass)},
              {"fail", report.count(Verdict::Fail)},
              {"out_of_case", report.count(Verdict::OutOfCase)},
              {"elements", std::move(elements)}};
}

inline void write_audit_table(std::ostream& out, const ChargeLedger& ledger, const AuditReport& report) {
  out << std::left << std::setw(8) << "element" << std::setw(9) << "initial" << std::setw(9) << "final" << std::setw(22)
      << "case" << std::setw(24) << "pattern" << "verdict\n";
  for (const ElementAudit& a : report.elements) {
    out << std::setw(8) << a.element.str() << std::setw(9) << a.initial.str() << std::setw(9) << a.final_charge.str()
        << std::setw(22) << (a.case_label.empty() ? "-" : a.case_label) << std::setw(24) << a.pattern << to_string(a.verdict)
        << (a.repeated_incidence ? " (repeated incidence)" : "") << '\n';
    if (a.verdict == Verdict::Fail) {
      for (std::size_t i : a.transfers) {
        const Transfer& t = ledger.transfers[i];
        out << "    " << to_string(t.rule) << ' ' << t.from.str() << " -> " << t.to.str() << ' ' << t.amount.str() << '\n';
      }
    }
  }
  out << "total initial " << report.total_initial.str() << ", total final " << report.total_final.str()
      << (report.conserved() ? " (conserved)" : " (NOT conserved)") << '\n';
  out << "pass " << report.count(Verdict::Pass) << ", fail " << report.count(Verdict::Fail) << ", out of case analysis "
      << report.count(Verdict::OutOfCase) << '\n';
  if (report.theorem_violation) out << "TheoremViolation: every vertex satisfies the structural lemmas\n";
}

}  // namespace dpcolor::io
