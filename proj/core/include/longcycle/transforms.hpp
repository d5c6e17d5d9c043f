#pragma once

#include <optional>
#include <vector>

#include "longcycle/cycles.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// G_{u->v}: the private neighbours of u with respect to v are re-attached to v.
/// Requires uv in E(G).
Graph kelmans(const Graph& g, Vertex u, Vertex v);

/// Whether both private-neighbour sets of the edge uv are nonempty.
bool is_eligible_edge(const Graph& g, Vertex u, Vertex v);

/// One move-neighbour step on the edge {u, v}.
struct TransformStep {
  Vertex u = 0;
  Vertex v = 0;
  /// The step applied is G_{source -> target}; {source, target} = {u, v}.
  Vertex source = 0;
  Vertex target = 0;
  VertexSet moved;
  double mu_before = 0;
  double mu_after = 0;
  /// Whether the circumference fields were computed (see kCircumferenceCheckLimit).
  bool circumference_checked = false;
  /// Longest cycle length, 0 for a forest. Meaningful only when checked.
  int c_before = 0;
  int c_after = 0;
  BigInt f_before;
  BigInt f_after;

  bool mu_nondecreasing() const { return mu_after >= mu_before - 1e-9; }
  bool circumference_nonincreasing() const { return !circumference_checked || c_after <= c_before; }
  bool degree_product_decreasing() const { return f_after < f_before; }
  bool invariants_hold() const {
    return mu_nondecreasing() && circumference_nonincreasing() && degree_product_decreasing();
  }
};

/// Orders above this skip the circumference comparison in traces.
inline constexpr int kCircumferenceCheckLimit = 18;

/// Perron entries within this distance are treated as equal.
inline constexpr double kPerronTieTolerance = 1e-9;

/// Applies G_{u->v} or G_{v->u}: the endpoint with the smaller Perron entry
/// loses its private neighbours (the smaller id on a tie). Throws DomainError
/// if the edge is absent, either private set is empty, or G is disconnected.
std::pair<Graph, TransformStep> lemma6_step(const Graph& g, Vertex u, Vertex v,
                                            SearchBudget budget = {});

struct TransformTrace {
  Graph initial;
  Graph final;
  std::vector<TransformStep> steps;
};

/// Repeats lemma6_step on the first eligible edge in (u, v) order, u < v,
/// rescanning from the start after each step, until no edge is eligible.
/// The degree product strictly drops each step, so this terminates.
TransformTrace reduce_to_fixpoint(const Graph& g, SearchBudget budget = {});

/// True when every edge uv has P_v(u) or P_u(v) empty.
bool is_fixpoint(const Graph& g);

/// Structural conditions on the S_u / T_u / Y_u split at one vertex.
struct ClaimReport {
  Vertex u = 0;
  int s = 0;
  int t = 0;
  bool clique_su = false;       ///< G[S_u] is complete
  bool dominated_tu = false;    ///< every S_u vertex sees every T_u vertex
  bool no_tu_yu_edges = false;  ///< e(T_u, Y_u) = 0
  bool su_le_2k = false;        ///< s_u <= 2k
  bool min_le_k = false;        ///< min(s_u, t_u) <= k
  bool deg_bound = false;       ///< s_u >= t_u implies d(u) <= 2k+1
  /// Whether G has no cycle of length >= 2k+2 (the bound conditions assume it).
  bool long_cycle_free = false;
};

ClaimReport claim_checks(const Graph& g, Vertex u, int k, SearchBudget budget = {});

struct PerronViolation {
  Vertex u = 0;
  Vertex v = 0;
  double x_u = 0;
  double x_v = 0;
  /// True if the strict relation x_v > x_u failed, false if the equality did.
  bool expected_strict = false;
};

/// For each edge, in both orientations: P_v(u) empty and P_u(v) nonempty
/// should give x_v > x_u (by more than 1e-9), and both empty should give
/// |x_u - x_v| <= 1e-9. Returns the edges that break this. G must be connected.
std::vector<PerronViolation> perron_monotonicity_check(const Graph& g);

}  // namespace longcycle
