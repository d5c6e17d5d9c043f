#include "longcycle/serialize.hpp"

#include <ostream>

#include "longcycle/graph6.hpp"

namespace longcycle {

json vertex_list(VertexSet s) {
  json out = json::array();
  for (Vertex v : s) out.push_back(v);
  return out;
}

void to_json(json& j, const SpectralResult& r) {
  j = {{"mu", r.mu}, {"perron", r.perron}, {"iterations", r.iterations}, {"residual", r.residual}};
}

void to_json(json& j, const Certificate& c) {
  j = {{"a", c.a},
       {"b", c.b},
       {"c", c.c},
       {"mu_ref", c.mu_ref},
       {"exact", c.exact},
       {"verdict", to_string(c.verdict)}};
  if (c.exact) {
    json sums = json::array();
    for (double s : c.column_sums) sums.push_back(static_cast<std::int64_t>(s));
    j["column_sums"] = std::move(sums);
  } else {
    j["column_sums"] = c.column_sums;
  }
  j["mu_bound"] = c.mu_bound ? json(*c.mu_bound) : json(nullptr);
}

void to_json(json& j, const JoinComparison& c) {
  j = {{"mu_merged", c.mu_merged},
       {"mu_split", c.mu_split},
       {"outcome", to_string(c.outcome)},
       {"strict", c.strict()}};
}

void to_json(json& j, const PathWitness& p) { j = {{"vertices", p.vertices}, {"order", p.order()}}; }

void to_json(json& j, const CycleWitness& c) {
  j = {{"vertices", c.vertices}, {"length", c.length()}};
}

void to_json(json& j, const FactResult& f) {
  j = {{"verdict", to_string(f.verdict)}, {"reason", f.reason}};
  j["witness"] = f.witness ? json(*f.witness) : json(nullptr);
}

void to_json(json& j, const TransformStep& s) {
  j = {{"u", s.u},
       {"v", s.v},
       {"source", s.source},
       {"target", s.target},
       {"moved", vertex_list(s.moved)},
       {"mu_before", s.mu_before},
       {"mu_after", s.mu_after},
       {"f_before", s.f_before.str()},
       {"f_after", s.f_after.str()},
       {"invariants_hold", s.invariants_hold()}};
  if (s.circumference_checked) {
    j["c_before"] = s.c_before;
    j["c_after"] = s.c_after;
  } else {
    j["c_before"] = "unverified";
    j["c_after"] = "unverified";
  }
}

void to_json(json& j, const ClaimReport& r) {
  j = {{"u", r.u},
       {"s", r.s},
       {"t", r.t},
       {"clique_su", r.clique_su},
       {"dominated_tu", r.dominated_tu},
       {"no_tu_yu_edges", r.no_tu_yu_edges},
       {"su_le_2k", r.su_le_2k},
       {"min_le_k", r.min_le_k},
       {"deg_bound", r.deg_bound},
       {"long_cycle_free", r.long_cycle_free}};
}

void to_json(json& j, const PerronViolation& v) {
  j = {{"u", v.u}, {"v", v.v}, {"x_u", v.x_u}, {"x_v", v.x_v}, {"expected_strict", v.expected_strict}};
}

void to_json(json& j, const ScanRecord& r) {
  j = {{"graph", r.graph6},
       {"n", r.n},
       {"k", r.k},
       {"constraint", r.constraint.to_string()},
       {"mu", r.mu},
       {"is_free", r.is_free},
       {"is_target", r.is_target}};
}

void to_json(json& j, const ClimbEvent& e) {
  j = {{"restart", e.restart}, {"step", e.step}, {"u", e.u}, {"v", e.v}, {"mu", e.mu}};
}

void to_json(json& j, const ClimbResult& r) {
  j = {{"best", r.best},
       {"mu_target", r.mu_target},
       {"evaluations", r.evaluations},
       {"restarts", r.restarts},
       {"skipped", r.skipped},
       {"history", r.history}};
}

void to_json(json& j, const TheoremAudit& a) {
  j = {{"n", a.n},
       {"k", a.k},
       {"mu", a.mu},
       {"mu_snk", a.mu_snk},
       {"reaches_snk", a.reaches_snk},
       {"reaches_snk_plus", a.reaches_snk_plus},
       {"has_cycle_2k1", a.has_cycle_2k1},
       {"has_cycle_2k2", a.has_cycle_2k2},
       {"is_snk", a.is_snk},
       {"is_snk_plus", a.is_snk_plus},
       {"consistent_a", a.consistent_a},
       {"consistent_b", a.consistent_b},
       {"above_threshold", a.above_threshold}};
  j["mu_snk_plus"] = a.mu_snk_plus ? json(*a.mu_snk_plus) : json(nullptr);
}

json scan_summary(const ScanReport& report) {
  json failures = json::array();
  for (const auto& f : report.failures) {
    failures.push_back({{"index", f.index}, {"graph", f.graph6}, {"message", f.message}});
  }
  return {{"n", report.n},
          {"k", report.k},
          {"constraint", report.constraint.to_string()},
          {"target", to_string(report.target)},
          {"count_scanned", report.count_scanned},
          {"count_free", report.count_free},
          {"mu_target", report.mu_target},
          {"target_free", report.target_free},
          {"verdict", to_string(report.verdict)},
          {"complete", report.complete},
          {"maximizers", report.maximizers},
          {"failures", failures}};
}

void write_scan_jsonl(std::ostream& out, const ScanReport& report) {
  const auto& lines = report.free_records.empty() ? report.maximizers : report.free_records;
  for (const auto& r : lines) out << json(r).dump() << '\n';
  out << json{{"summary", scan_summary(report)}}.dump() << '\n';
}

void write_trace_jsonl(std::ostream& out, const TransformTrace& trace) {
  for (const auto& s : trace.steps) out << json(s).dump() << '\n';
  json summary = {{"initial", emit_graph6(trace.initial)},
                  {"final", emit_graph6(trace.final)},
                  {"steps", trace.steps.size()},
                  {"fixpoint", is_fixpoint(trace.final)}};
  out << json{{"summary", summary}}.dump() << '\n';
}

}  // namespace longcycle
