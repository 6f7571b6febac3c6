#include "dpcolor/report_json.hpp"

namespace dpcolor {

Json big_to_json(const BigInt& value) {
  if (value >= 0 && value <= BigInt(std::numeric_limits<std::int64_t>::max())) {
    return Json(static_cast<std::int64_t>(value));
  }
  return Json(value.str());
}

Json rational_to_json(Rational r) { return Json{{"num", r.numerator()}, {"den", r.denominator()}}; }

std::string graph_label(const Multigraph& g) {
  if (g.is_simple() && g.vertex_count() > 0) return encode_graph6(g);
  std::string out = encode_edge_list(g);
  for (auto& c : out) {
    if (c == '\n') c = ';';
  }
  return out;
}

Json graph_to_json(const Multigraph& g) {
  Json edges = Json::array();
  for (const auto& e : g.edges()) edges.push_back(Json::array({e.u, e.v, e.multiplicity}));
  return Json{{"n", g.vertex_count()}, {"m", g.edge_count()}, {"label", graph_label(g)}, {"edges", edges}};
}

Json labeling_to_json(const SLabeling& l) {
  Json arcs = Json::array();
  for (std::size_t e = 0; e < l.perms.size(); ++e) {
    Json perms = Json::array();
    for (const auto& p : l.perms[e]) perms.push_back(p.to_string());
    arcs.push_back(Json{{"tail", l.orientation.arcs[e].tail}, {"head", l.orientation.arcs[e].head}, {"perms", perms}});
  }
  return Json{{"k", l.k}, {"arcs", arcs}};
}

Json signed_graph_to_json(const SignedGraph& sg) {
  Json edges = Json::array();
  for (std::size_t e = 0; e < sg.sign.size(); ++e) {
    edges.push_back(Json::array({sg.graph.edges()[e].u, sg.graph.edges()[e].v, sg.sign[e]}));
  }
  return Json{{"edges", edges}};
}

Json bound_to_json(const BoundValue& b) {
  Json hyps = Json::array();
  for (const auto& h : b.hypotheses) {
    Json item{{"name", h.name}, {"status", to_string(h.status)}};
    if (!h.detail.empty()) item["detail"] = h.detail;
    hyps.push_back(item);
  }
  Json out{{"theorem", b.theorem},
           {"hypotheses", hyps},
           {"base", b.base},
           {"exponent", rational_to_json(b.exponent)},
           {"floor", big_to_json(b.floor)},
           {"applicable", b.applicable},
           {"display", b.display()}};
  if (!b.corollary.empty()) out["corollary"] = b.corollary;
  if (!b.notes.empty()) out["notes"] = b.notes;
  return out;
}

Json count_to_json(const CountReport& r) {
  Json out{{"value", r.value},
           {"partial", r.partial},
           {"labelings_examined", r.labelings_examined},
           {"labelings_total", r.labelings_total},
           {"dedup_group_order", r.dedup_group_order},
           {"steps", r.steps}};
  if (r.witness) out["witness"] = labeling_to_json(*r.witness);
  if (r.signed_witness) out["signed_witness"] = signed_graph_to_json(*r.signed_witness);
  return out;
}

Json degree_result_to_json(const DegreeSearchResult& r) {
  Json out{{"permutation", r.pi.to_string()}, {"mode", to_string(r.mode)}, {"degree", r.degree}};
  if (r.anchor) out["anchor"] = Json::array({r.anchor->first, r.anchor->second});
  if (r.witness) out["witness"] = r.witness->to_string();
  if (!r.factors.empty()) {
    Json factors = Json::array();
    for (auto [i, j] : r.factors) factors.push_back(Json::array({i, j}));
    out["factors"] = factors;
  }
  return out;
}

Json worst_case_to_json(const WorstCaseResult& r) {
  Json witnesses = Json::array();
  for (const auto& w : r.witnesses) witnesses.push_back(degree_result_to_json(w));
  return Json{{"max_degree", r.max_degree},   {"instances", r.instances}, {"evaluated", r.evaluated},
              {"deduplicated", r.deduplicated}, {"argmax_count", r.argmax_count}, {"witnesses", witnesses}};
}

void write_jsonl(std::ostream& out, const std::vector<Json>& records) {
  for (const auto& r : records) out << r.dump() << "\n";
}

}  // namespace dpcolor
