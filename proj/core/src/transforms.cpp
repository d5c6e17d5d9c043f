#include "longcycle/transforms.hpp"

#include <algorithm>
#include <cmath>

#include "longcycle/error.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {

Graph kelmans(const Graph& g, Vertex u, Vertex v) {
  const VertexSet moved = private_neighbors(g, u, v);
  GraphBuilder b(g);
  for (Vertex x : moved) {
    b.remove_edge(u, x);
    b.add_edge(v, x);
  }
  return b.build();
}

bool is_eligible_edge(const Graph& g, Vertex u, Vertex v) {
  return g.has_edge(u, v) && !private_neighbors(g, u, v).empty() &&
         !private_neighbors(g, v, u).empty();
}

std::pair<Graph, TransformStep> lemma6_step(const Graph& g, Vertex u, Vertex v,
                                            SearchBudget budget) {
  if (!is_eligible_edge(g, u, v)) {
    throw DomainError("move-neighbour step needs an edge whose endpoints both have private neighbours");
  }
  if (!is_connected(g)) throw DomainError("move-neighbour step needs a connected graph");

  const SpectralResult before = spectral_radius(g);
  const double xu = before.perron[u];
  const double xv = before.perron[v];

  TransformStep step;
  step.u = u;
  step.v = v;
  if (std::abs(xu - xv) <= kPerronTieTolerance) {
    step.source = std::min(u, v);
  } else {
    step.source = xu < xv ? u : v;
  }
  step.target = step.source == u ? v : u;
  step.moved = private_neighbors(g, step.source, step.target);

  Graph next = kelmans(g, step.source, step.target);
  step.mu_before = before.mu;
  step.mu_after = spectral_radius(next).mu;
  step.f_before = degree_product(g);
  step.f_after = degree_product(next);
  if (g.order() <= kCircumferenceCheckLimit) {
    step.circumference_checked = true;
    step.c_before = circumference_length(g, budget);
    step.c_after = circumference_length(next, budget);
  }
  return {std::move(next), std::move(step)};
}

bool is_fixpoint(const Graph& g) {
  for (auto [u, v] : g.edges())
    if (is_eligible_edge(g, u, v)) return false;
  return true;
}

TransformTrace reduce_to_fixpoint(const Graph& g, SearchBudget budget) {
  if (!is_connected(g)) throw DomainError("fixpoint reduction needs a connected graph");
  TransformTrace trace{g, g, {}};
  for (;;) {
    bool stepped = false;
    for (auto [u, v] : trace.final.edges()) {
      if (!is_eligible_edge(trace.final, u, v)) continue;
      auto [next, step] = lemma6_step(trace.final, u, v, budget);
      trace.final = std::move(next);
      trace.steps.push_back(std::move(step));
      stepped = true;
      break;
    }
    if (!stepped) return trace;
  }
}

ClaimReport claim_checks(const Graph& g, Vertex u, int k, SearchBudget budget) {
  const VertexPartition p = partition_at(g, u);
  ClaimReport r;
  r.u = u;
  r.s = p.s_size();
  r.t = p.t_size();
  r.clique_su = induced_edge_count(g, p.s) == r.s * (r.s - 1) / 2;
  r.dominated_tu = cross_edges(g, p.s, p.t) == r.s * r.t;
  r.no_tu_yu_edges = cross_edges(g, p.t, p.y) == 0;
  r.su_le_2k = r.s <= 2 * k;
  r.min_le_k = std::min(r.s, r.t) <= k;
  r.deg_bound = r.s < r.t || g.degree(u) <= 2 * k + 1;
  const int forbidden = 2 * k + 2;
  r.long_cycle_free = forbidden > g.order() || !has_cycle_at_least(g, forbidden, budget);
  return r;
}

std::vector<PerronViolation> perron_monotonicity_check(const Graph& g) {
  if (!is_connected(g)) throw DomainError("Perron entry check needs a connected graph");
  const SpectralResult sr = spectral_radius(g);
  const auto& x = sr.perron;
  std::vector<PerronViolation> out;
  for (auto [a, b] : g.edges()) {
    for (auto [u, v] : {std::pair{a, b}, std::pair{b, a}}) {
      const bool pu_empty = private_neighbors(g, u, v).empty();  // P_v(u)
      const bool pv_empty = private_neighbors(g, v, u).empty();  // P_u(v)
      if (pu_empty && !pv_empty && !(x[v] - x[u] > kPerronTieTolerance)) {
        out.push_back({u, v, x[u], x[v], true});
      }
      if (pu_empty && pv_empty && u < v && std::abs(x[v] - x[u]) > kPerronTieTolerance) {
        out.push_back({u, v, x[u], x[v], false});
      }
    }
  }
  return out;
}

}  // namespace longcycle
