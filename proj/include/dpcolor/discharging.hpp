#pragma once

#include <algorithm>
#include <compare>
#include <cstdint>
#include <numeric>
#include <tuple>
#include <string>
#include <string_view>
#include <vector>

#include "dpcolor/error.hpp"
#include "dpcolor/graph.hpp"
#include "dpcolor/plane.hpp"

namespace dpcolor {

/// Exact charge, stored as an integer number of sixths.
class Charge {
 public:
  constexpr Charge() = default;
  static constexpr Charge sixths(std::int64_t s) { return Charge(s); }
  static constexpr Charge whole(std::int64_t w) { return Charge(6 * w); }
  static constexpr Charge thirds(std::int64_t t) { return Charge(2 * t); }

  constexpr std::int64_t in_sixths() const noexcept { return sixths_; }

  constexpr Charge operator+(Charge o) const { return Charge(sixths_ + o.sixths_); }
  constexpr Charge operator-(Charge o) const { return Charge(sixths_ - o.sixths_); }
  constexpr Charge operator-() const { return Charge(-sixths_); }
  constexpr Charge& operator+=(Charge o) { sixths_ += o.sixths_; return *this; }
  constexpr Charge& operator-=(Charge o) { sixths_ -= o.sixths_; return *this; }
  friend constexpr auto operator<=>(Charge, Charge) = default;

  /// Reduced fraction, e.g. "-2/3", "0", "1".
  std::string str() const {
    std::int64_t num = sixths_;
    std::int64_t den = 6;
    std::int64_t g = std::gcd(num < 0 ? -num : num, den);
    if (g == 0) g = 1;
    num /= g;
    den /= g;
    return den == 1 ? std::to_string(num) : std::to_string(num) + "/" + std::to_string(den);
  }

 private:
  constexpr explicit Charge(std::int64_t s) : sixths_(s) {}
  std::int64_t sixths_ = 0;
};

enum class ElementKind { Vertex, Face };

struct Element {
  ElementKind kind = ElementKind::Vertex;
  int index = 0;

  friend auto operator<=>(const Element&, const Element&) = default;
  std::string str() const { return (kind == ElementKind::Vertex ? "v" : "f") + std::to_string(index); }
};

enum class Rule { R1 = 1, R2, R3, R4, R5 };

inline std::string to_string(Rule r) { return "R" + std::to_string(static_cast<int>(r)); }

struct Transfer {
  Rule rule;
  Element from;
  Element to;
  Charge amount;

  friend bool operator==(const Transfer&, const Transfer&) = default;
};

struct ChargeLedger {
  std::vector<Charge> vertex_initial, face_initial;
  std::vector<Charge> vertex_final, face_final;
  std::vector<Transfer> transfers;

  Charge initial(Element e) const { return pick(vertex_initial, face_initial, e); }
  Charge final_charge(Element e) const { return pick(vertex_final, face_final, e); }

  Charge total_initial() const { return sum(vertex_initial) + sum(face_initial); }
  Charge total_final() const { return sum(vertex_final) + sum(face_final); }

 private:
  static Charge pick(const std::vector<Charge>& v, const std::vector<Charge>& f, Element e) {
    return (e.kind == ElementKind::Vertex ? v : f).at(static_cast<std::size_t>(e.index));
  }
  static Charge sum(const std::vector<Charge>& xs) {
    Charge s;
    for (Charge c : xs) s += c;
    return s;
  }
};

inline constexpr Charge kEulerTotal = Charge::whole(-12);

/// mu(v) = 2 d(v) - 6 and mu(f) = d(f) - 6; the total is -12 on any
/// connected plane graph and is asserted.
inline ChargeLedger initial_charges(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  if (!g.connected()) throw Error(ErrorKind::Disconnected, "charges need a connected plane graph");
  ChargeLedger ledger;
  for (Vertex v = 0; v < g.vertex_count(); ++v) ledger.vertex_initial.push_back(Charge::whole(2 * g.degree(v) - 6));
  for (const Face& f : pg.faces()) ledger.face_initial.push_back(Charge::whole(f.degree() - 6));
  ledger.vertex_final = ledger.vertex_initial;
  ledger.face_final = ledger.face_initial;
  if (ledger.total_initial() != kEulerTotal) {
    throw Error(ErrorKind::ContractViolation, "initial charge total " + ledger.total_initial().str() + " != -12");
  }
  return ledger;
}

/// Applies the five transfer rules literally, counting incidences with
/// multiplicity along face walks:
///   R1  4+-vertex -> each incident 3-face: 1
///   R2  4+-vertex -> each incident 5-face: 1/3
///   R3  4+-vertex -> each pendant 3-face: 1/3
///   R4  7+-face   -> each incident 3-vertex: 1/3
///   R5  3-vertex  -> each incident 3-face: 2/3
inline ChargeLedger apply_rules(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  require_no46(g);
  ChargeLedger ledger = initial_charges(pg);
  auto& log = ledger.transfers;
  auto vtx = [](Vertex v) { return Element{ElementKind::Vertex, v}; };
  auto fce = [](int f) { return Element{ElementKind::Face, f}; };

  for (int fi = 0; fi < pg.face_count(); ++fi) {
    const Face& f = pg.face(fi);
    for (Vertex v : f.walk) {
      const int dv = g.degree(v);
      if (dv >= 4 && f.degree() == 3) log.push_back({Rule::R1, vtx(v), fce(fi), Charge::whole(1)});
      if (dv >= 4 && f.degree() == 5) log.push_back({Rule::R2, vtx(v), fce(fi), Charge::thirds(1)});
      if (f.degree() >= 7 && dv == 3) log.push_back({Rule::R4, fce(fi), vtx(v), Charge::thirds(1)});
      if (dv == 3 && f.degree() == 3) log.push_back({Rule::R5, vtx(v), fce(fi), Charge::thirds(2)});
    }
  }
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    if (g.degree(v) < 4) continue;
    for (const PendantFace& p : pendant_3faces(pg, v)) log.push_back({Rule::R3, vtx(v), fce(p.face), Charge::thirds(1)});
  }
  std::stable_sort(log.begin(), log.end(), [](const Transfer& a, const Transfer& b) {
    return std::tie(a.rule, a.from, a.to) < std::tie(b.rule, b.from, b.to);
  });

  auto slot = [&](Element e) -> Charge& {
    return (e.kind == ElementKind::Vertex ? ledger.vertex_final : ledger.face_final)[static_cast<std::size_t>(e.index)];
  };
  for (const Transfer& t : log) {
    slot(t.from) -= t.amount;
    slot(t.to) += t.amount;
  }
  if (ledger.total_final() != kEulerTotal) {
    throw Error(ErrorKind::ContractViolation, "final charge total " + ledger.total_final().str() + " != -12");
  }
  return ledger;
}

enum class Verdict { Pass, Fail, OutOfCase };

constexpr std::string_view to_string(Verdict v) {
  switch (v) {
    case Verdict::Pass: return "pass";
    case Verdict::Fail: return "FAIL";
    case Verdict::OutOfCase: return "out of case analysis";
  }
  return "?";
}

struct ElementAudit {
  Element element;
  Charge initial;
  Charge final_charge;
  std::vector<std::size_t> transfers;  // indices into the ledger's log
  std::string case_label;
  std::string pattern;  // face degrees around a vertex / vertex degrees around a face, cyclic
  bool repeated_incidence = false;
  Verdict verdict = Verdict::OutOfCase;
};

struct AuditReport {
  std::vector<ElementAudit> elements;
  Charge total_initial;
  Charge total_final;
  bool theorem_violation = false;  // every vertex satisfies the structural lemmas

  std::size_t count(Verdict v) const {
    return static_cast<std::size_t>(std::count_if(elements.begin(), elements.end(), [v](const ElementAudit& a) { return a.verdict == v; }));
  }
  bool conserved() const { return total_initial == kEulerTotal && total_final == kEulerTotal; }
  bool holds() const { return conserved() && count(Verdict::Fail) == 0 && !theorem_violation; }
};

/// Whether vertex v satisfies the three structural lemmas locally: degree
/// at least 3, a 3-vertex has no 3-neighbor, a 4-vertex has at most two.
inline bool lemma_compliant(const Graph& g, Vertex v) {
  const int d = g.degree(v);
  if (d < 3) return false;
  int threes = 0;
  for (Vertex w : g.neighbors(v)) {
    if (g.degree(w) == 3) ++threes;
  }
  if (d == 3) return threes == 0;
  if (d == 4) return threes <= 2;
  return true;
}

namespace detail {

inline std::string degree_pattern(const std::vector<int>& degrees) {
  std::string s = "(";
  for (std::size_t i = 0; i < degrees.size(); ++i) s += (i ? "," : "") + std::to_string(degrees[i]);
  return s + ")";
}

inline std::string vertex_case(int d) {
  if (d == 3) return "Case 1: 3-vertex";
  if (d == 4) return "Case 2: 4-vertex";
  if (d >= 5) return "Case 3: 5+-vertex";
  return "";
}

inline std::string face_case(int d) {
  if (d == 3) return "Case 4: 3-face";
  if (d == 5 || d >= 7) return "Case 5: 5+-face";
  return "";
}

}  // namespace detail

/// Classifies every vertex and face and checks final >= 0 for each element
/// whose surroundings satisfy the structural lemmas. An element counts as
/// lemma-compliant when every vertex on it (and, for a vertex, the vertex
/// itself) and all their neighbors are lemma-compliant.
inline AuditReport audit_cases(const PlaneGraph& pg, const ChargeLedger& ledger) {
  const Graph& g = pg.graph();
  require_no46(g);
  AuditReport report;
  report.total_initial = ledger.total_initial();
  report.total_final = ledger.total_final();

  std::vector<char> compliant(static_cast<std::size_t>(g.vertex_count()));
  bool all_compliant = g.vertex_count() > 0;
  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    compliant[static_cast<std::size_t>(v)] = lemma_compliant(g, v);
    all_compliant = all_compliant && compliant[static_cast<std::size_t>(v)];
  }
  report.theorem_violation = all_compliant;

  auto region_ok = [&](const std::vector<Vertex>& core) {
    for (Vertex x : core) {
      if (!compliant[static_cast<std::size_t>(x)]) return false;
      for (Vertex w : g.neighbors(x)) {
        if (!compliant[static_cast<std::size_t>(w)]) return false;
      }
    }
    return true;
  };
  auto transfers_of = [&](Element e) {
    std::vector<std::size_t> idx;
    for (std::size_t i = 0; i < ledger.transfers.size(); ++i) {
      if (ledger.transfers[i].from == e || ledger.transfers[i].to == e) idx.push_back(i);
    }
    return idx;
  };
  auto finish = [&](ElementAudit& a, bool in_region) {
    if (a.case_label.empty() || !in_region) {
      a.verdict = Verdict::OutOfCase;
    } else {
      a.verdict = a.final_charge >= Charge() ? Verdict::Pass : Verdict::Fail;
    }
  };

  for (Vertex v = 0; v < g.vertex_count(); ++v) {
    ElementAudit a;
    a.element = {ElementKind::Vertex, v};
    a.initial = ledger.initial(a.element);
    a.final_charge = ledger.final_charge(a.element);
    a.transfers = transfers_of(a.element);
    std::vector<int> around = pg.faces_around(v);
    std::vector<int> degrees;
    for (int f : around) degrees.push_back(pg.face(f).degree());
    a.pattern = detail::degree_pattern(degrees);
    auto sorted = around;
    std::sort(sorted.begin(), sorted.end());
    a.repeated_incidence = std::adjacent_find(sorted.begin(), sorted.end()) != sorted.end();
    a.case_label = detail::vertex_case(g.degree(v));
    finish(a, region_ok({v}));
    report.elements.push_back(std::move(a));
  }
  for (int fi = 0; fi < pg.face_count(); ++fi) {
    const Face& f = pg.face(fi);
    ElementAudit a;
    a.element = {ElementKind::Face, fi};
    a.initial = ledger.initial(a.element);
    a.final_charge = ledger.final_charge(a.element);
    a.transfers = transfers_of(a.element);
    std::vector<int> degrees;
    for (Vertex x : f.walk) degrees.push_back(g.degree(x));
    a.pattern = detail::degree_pattern(degrees);
    auto walk = f.walk;
    std::sort(walk.begin(), walk.end());
    a.repeated_incidence = std::adjacent_find(walk.begin(), walk.end()) != walk.end();
    a.case_label = detail::face_case(f.degree());
    finish(a, !f.walk.empty() && region_ok(f.walk));
    report.elements.push_back(std::move(a));
  }
  return report;
}

inline AuditReport audit(const PlaneGraph& pg) { return audit_cases(pg, apply_rules(pg)); }

struct FaceThreeCount {
  int face = 0;
  int degree = 0;
  int threes = 0;  // 3-vertex occurrences along the walk
  bool pass = true;
};

/// With no two 3-vertices adjacent, a face of degree d meets at most
/// floor(d/2) 3-vertices.
inline std::vector<FaceThreeCount> check_face_threes(const PlaneGraph& pg) {
  const Graph& g = pg.graph();
  for (const Edge& e : g.edges()) {
    if (g.degree(e.u) == 3 && g.degree(e.v) == 3) {
      throw Error(ErrorKind::HypothesisViolated,
                  "3-vertices " + std::to_string(e.u) + " and " + std::to_string(e.v) + " are adjacent");
    }
  }
  std::vector<FaceThreeCount> out;
  for (int fi = 0; fi < pg.face_count(); ++fi) {
    const Face& f = pg.face(fi);
    FaceThreeCount c{fi, f.degree(), 0, true};
    for (Vertex x : f.walk) {
      if (g.degree(x) == 3) ++c.threes;
    }
    c.pass = c.threes <= c.degree / 2;
    out.push_back(c);
  }
  return out;
}

}  // namespace dpcolor
