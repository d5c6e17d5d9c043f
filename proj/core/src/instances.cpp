#include "longcycle/instances.hpp"

#include <algorithm>
#include <numeric>
#include <vector>

#include "longcycle/error.hpp"

namespace longcycle {

Graph random_graph(Rng& rng, int n, double p) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (uniform_unit(rng) < p) b.add_edge(u, v);
  return b.build();
}

Graph random_tree(Rng& rng, int n) {
  std::vector<Vertex> order(n);
  std::iota(order.begin(), order.end(), 0);
  for (int i = n - 1; i > 0; --i) std::swap(order[i], order[uniform_int(rng, 0, i)]);
  GraphBuilder b(n);
  for (int i = 1; i < n; ++i) b.add_edge(order[i], order[uniform_int(rng, 0, i - 1)]);
  return b.build();
}

Graph random_connected_graph(Rng& rng, int n, double p) {
  GraphBuilder b(random_tree(rng, n));
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v)
      if (!b.has_edge(u, v) && uniform_unit(rng) < p) b.add_edge(u, v);
  return b.build();
}

EndsInInstance generate_ends_in_instance(Rng& rng, EndsInMode mode, const EndsInLimits& limits) {
  EndsInInstance inst{Graph(1), {}, {}, 1, 2};
  // Some b needs more than k neighbours in A, so t >= k + 1; and |B| > kt.
  for (;;) {
    inst.k = uniform_int(rng, 1, limits.max_k);
    inst.t = uniform_int(rng, std::max(2, inst.k + 1), std::max(2, limits.max_t));
    if (inst.k * inst.t < limits.max_b && inst.t > inst.k) break;
  }
  const int k = inst.k;
  const int t = inst.t;
  const int nb = uniform_int(rng, k * t + 1, limits.max_b);
  const int n = t + nb;
  if (n > kMaxOrder) throw DomainError("instance limits exceed 64 vertices");

  GraphBuilder b(n);
  for (Vertex u = 0; u < t; ++u)
    for (Vertex v = u + 1; v < t; ++v) b.add_edge(u, v);

  // Each B vertex draws a random number of A-neighbours centred near k.
  int cross = 0;
  for (Vertex y = t; y < n; ++y) {
    const int want = uniform_int(rng, std::max(0, k - 2), std::min(t, k + 1));
    std::vector<Vertex> pool(t);
    std::iota(pool.begin(), pool.end(), 0);
    for (int i = 0; i < want; ++i) {
      const int j = uniform_int(rng, i, t - 1);
      std::swap(pool[i], pool[j]);
      b.add_edge(y, pool[i]);
      ++cross;
    }
  }
  for (Vertex y = t; y < n; ++y)
    for (Vertex z = y + 1; z < n; ++z)
      if (uniform_unit(rng) < limits.b_density) b.add_edge(y, z);

  auto a_degree = [&](Vertex y) {
    int d = 0;
    for (Vertex x = 0; x < t; ++x) d += b.has_edge(x, y) ? 1 : 0;
    return d;
  };
  auto add_random_cross_edge = [&](Vertex y) {
    for (;;) {
      const Vertex x = uniform_int(rng, 0, t - 1);
      if (!b.has_edge(x, y)) {
        b.add_edge(x, y);
        ++cross;
        return;
      }
    }
  };

  if (mode == EndsInMode::Standard) {
    const Vertex heavy = uniform_int(rng, t, n - 1);
    while (a_degree(heavy) <= k) add_random_cross_edge(heavy);
  }
  const auto enough = [&] { return mode == EndsInMode::Standard ? cross >= k * nb : cross > k * nb; };
  while (!enough()) {
    Vertex y;
    do {
      y = uniform_int(rng, t, n - 1);
    } while (a_degree(y) == t);
    add_random_cross_edge(y);
  }

  inst.graph = b.build();
  inst.a = VertexSet::range(t);
  inst.b = VertexSet::range(t, n);
  return inst;
}

bool satisfies_ends_in_hypotheses(const EndsInInstance& inst, EndsInMode mode) {
  const Graph& g = inst.graph;
  const int k = inst.k;
  const int t = inst.a.size();
  const int nb = inst.b.size();
  if (t != inst.t || t < 2 || k < 1) return false;
  if (induced_edge_count(g, inst.a) != t * (t - 1) / 2) return false;
  if (nb <= k * t) return false;
  const int cross = cross_edges(g, inst.a, inst.b);
  if (mode == EndsInMode::Remark) return cross > k * nb;
  if (cross < k * nb) return false;
  for (Vertex y : inst.b)
    if ((g.neighbors(y) & inst.a).size() > k) return true;
  return false;
}

}  // namespace longcycle
