#pragma once

#include <array>
#include <cstdint>
#include <optional>
#include <span>
#include <utility>
#include <vector>

#include <boost/multiprecision/cpp_int.hpp>

#include "longcycle/vertex_set.hpp"

namespace longcycle {

using BigInt = boost::multiprecision::cpp_int;

class GraphBuilder;

/// Immutable simple undirected graph on vertices 0..n-1 (1 <= n <= 64).
/// Row u of the adjacency is a 64-bit set; equality is label-sensitive.
class Graph {
 public:
  /// Edgeless graph on n vertices.
  explicit Graph(int n);

  static Graph from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges);

  int order() const { return n_; }
  VertexSet vertices() const { return VertexSet::range(n_); }
  VertexSet neighbors(Vertex u) const { return rows_[u]; }
  /// N[u] = N(u) + u
  VertexSet closed_neighbors(Vertex u) const { return rows_[u] | VertexSet::single(u); }
  bool has_edge(Vertex u, Vertex v) const { return rows_[u].contains(v); }
  int degree(Vertex u) const { return rows_[u].size(); }
  int edge_count() const;
  std::vector<std::pair<Vertex, Vertex>> edges() const;

  Graph with_edge(Vertex u, Vertex v) const;
  Graph without_edge(Vertex u, Vertex v) const;

  bool operator==(const Graph& other) const;

 private:
  friend class GraphBuilder;

  int n_;
  std::array<VertexSet, kMaxOrder> rows_{};
};

/// Mutable staging area for building a Graph; keeps rows symmetric.
class GraphBuilder {
 public:
  explicit GraphBuilder(int n);
  explicit GraphBuilder(const Graph& g);

  int order() const { return g_.n_; }
  GraphBuilder& add_edge(Vertex u, Vertex v);
  GraphBuilder& remove_edge(Vertex u, Vertex v);
  bool has_edge(Vertex u, Vertex v) const { return g_.has_edge(u, v); }
  Graph build() const { return g_; }

 private:
  void check(Vertex u, Vertex v) const;
  Graph g_;
};

// -- named families -------------------------------------------------------

Graph complete_graph(int n);
Graph edgeless_graph(int n);
Graph path_graph(int n);
Graph cycle_graph(int n);

/// K_k joined with an independent set of n-k vertices; vertices 0..k-1 are the clique.
Graph construct_snk(int n, int k);
/// construct_snk(n, k) plus the edge {k, k+1}.
Graph construct_snk_plus(int n, int k);
/// kn - (k^2 + k)/2
std::int64_t snk_edge_count(int n, int k);

/// Disjoint copies of g and h plus every g-h edge; h is relabeled after g.
Graph join(const Graph& g, const Graph& h);
Graph disjoint_union(const Graph& g, const Graph& h);

// -- set vocabulary --------------------------------------------------------

/// Neighbours of u other than v that are not neighbours of v. Requires uv in E(G).
VertexSet private_neighbors(const Graph& g, Vertex u, Vertex v);

/// Split of the neighbourhood of u by whether a neighbour reaches outside N[u].
struct VertexPartition {
  Vertex u = 0;
  VertexSet s;  ///< neighbours of u adjacent to something in y
  VertexSet t;  ///< the remaining neighbours of u
  VertexSet y;  ///< V - N[u]

  int s_size() const { return s.size(); }
  int t_size() const { return t.size(); }
};

VertexPartition partition_at(const Graph& g, Vertex u);

// -- metrics ---------------------------------------------------------------

/// Number of edges with one end in x and the other in y. x and y must be disjoint.
int cross_edges(const Graph& g, VertexSet x, VertexSet y);
/// e(G[s])
int induced_edge_count(const Graph& g, VertexSet s);
/// G[s], relabeled to 0..|s|-1 in ascending vertex order. s must be nonempty.
Graph induced(const Graph& g, VertexSet s);
std::vector<int> degree_sequence(const Graph& g);
/// Product of all vertex degrees, exact.
BigInt degree_product(const Graph& g);

struct GraphMetrics {
  int edges = 0;
  std::vector<int> degrees;
  BigInt degree_product;
};

GraphMetrics metrics(const Graph& g);

// -- connectivity & recognizers --------------------------------------------

VertexSet component_of(const Graph& g, Vertex v);
std::vector<VertexSet> components(const Graph& g);
bool is_connected(const Graph& g);

/// Whether g is isomorphic to S_{n,k} (n = g.order()).
bool is_snk(const Graph& g, int k);
/// Whether g is isomorphic to S+_{n,k}. K_2 counts as S+_{2,1}.
bool is_snk_plus(const Graph& g, int k);

}  // namespace longcycle
