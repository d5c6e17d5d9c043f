#pragma once

#include <optional>

#include "longcycle/cycles.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// Per-graph audit against the two long-cycle implications:
///   (a) mu(G) >= mu(S_{n,k})  => C_{>=2k+1} in G, unless G = S_{n,k};
///   (b) mu(G) >= mu(S+_{n,k}) => C_{>=2k+2} in G, unless G = S+_{n,k}.
/// Below n = 13k^2 the implications are not guaranteed; the record is
/// observational there.
struct TheoremAudit {
  int n = 0;
  int k = 0;
  double mu = 0;
  double mu_snk = 0;
  /// Absent when n - k < 2.
  std::optional<double> mu_snk_plus;
  bool reaches_snk = false;
  bool reaches_snk_plus = false;
  bool has_cycle_2k1 = false;  ///< some cycle of length >= 2k+1
  bool has_cycle_2k2 = false;  ///< some cycle of length >= 2k+2
  bool is_snk = false;
  bool is_snk_plus = false;
  bool consistent_a = true;
  bool consistent_b = true;
  bool above_threshold = false;  ///< n >= 13k^2
};

/// mu comparisons use a 1e-9 window. Needs 1 <= k < n.
TheoremAudit classify_against_theorem(const Graph& g, int k, SearchBudget budget = {});

}  // namespace longcycle
