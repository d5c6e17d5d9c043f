#pragma once

#include "longcycle/graph.hpp"
#include "longcycle/rng.hpp"

namespace longcycle {

/// G(n, p) on labels 0..n-1.
Graph random_graph(Rng& rng, int n, double p);

/// A random labelled spanning tree plus each remaining pair with probability p.
Graph random_connected_graph(Rng& rng, int n, double p);

/// A uniformly attached random tree (vertex i joins a random earlier vertex
/// of a random permutation).
Graph random_tree(Rng& rng, int n);

/// Hypotheses of the long-path-through-B lemma: G[A] complete with |A| = t,
/// |B| > kt, and either (standard) e(A,B) >= k|B| with some b having more
/// than k neighbours in A, or (remark) e(A,B) > k|B|.
enum class EndsInMode { Standard, Remark };

struct EndsInInstance {
  Graph graph;
  VertexSet a;  ///< 0..t-1
  VertexSet b;  ///< t..n-1
  int k = 1;
  int t = 2;
};

struct EndsInLimits {
  int max_k = 3;
  int max_t = 6;
  int max_b = 25;
  /// Probability of each B-B edge.
  double b_density = 0.05;
};

EndsInInstance generate_ends_in_instance(Rng& rng, EndsInMode mode, const EndsInLimits& limits = {});

bool satisfies_ends_in_hypotheses(const EndsInInstance& inst, EndsInMode mode);

}  // namespace longcycle
