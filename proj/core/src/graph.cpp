#include "longcycle/graph.hpp"

#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

void check_order(int n) {
  if (n < 1 || n > kMaxOrder) {
    throw DomainError("graph order must be in [1, 64], got " + std::to_string(n));
  }
}

void check_vertex(const Graph& g, Vertex v) {
  if (v < 0 || v >= g.order()) {
    throw DomainError("vertex " + std::to_string(v) + " out of range for order " +
                      std::to_string(g.order()));
  }
}

}  // namespace

Graph::Graph(int n) : n_(n) { check_order(n); }

Graph Graph::from_edges(int n, std::span<const std::pair<Vertex, Vertex>> edges) {
  GraphBuilder b(n);
  for (auto [u, v] : edges) b.add_edge(u, v);
  return b.build();
}

int Graph::edge_count() const {
  int twice = 0;
  for (int u = 0; u < n_; ++u) twice += rows_[u].size();
  return twice / 2;
}

std::vector<std::pair<Vertex, Vertex>> Graph::edges() const {
  std::vector<std::pair<Vertex, Vertex>> out;
  for (Vertex u = 0; u < n_; ++u) {
    for (Vertex v : rows_[u] - VertexSet::range(u + 1)) out.emplace_back(u, v);
  }
  return out;
}

Graph Graph::with_edge(Vertex u, Vertex v) const { return GraphBuilder(*this).add_edge(u, v).build(); }

Graph Graph::without_edge(Vertex u, Vertex v) const {
  return GraphBuilder(*this).remove_edge(u, v).build();
}

bool Graph::operator==(const Graph& other) const {
  if (n_ != other.n_) return false;
  for (int u = 0; u < n_; ++u) {
    if (rows_[u] != other.rows_[u]) return false;
  }
  return true;
}

GraphBuilder::GraphBuilder(int n) : g_(n) {}
GraphBuilder::GraphBuilder(const Graph& g) : g_(g) {}

void GraphBuilder::check(Vertex u, Vertex v) const {
  check_vertex(g_, u);
  check_vertex(g_, v);
  if (u == v) throw DomainError("loops are not allowed (vertex " + std::to_string(u) + ")");
}

GraphBuilder& GraphBuilder::add_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.rows_[u].insert(v);
  g_.rows_[v].insert(u);
  return *this;
}

GraphBuilder& GraphBuilder::remove_edge(Vertex u, Vertex v) {
  check(u, v);
  g_.rows_[u].erase(v);
  g_.rows_[v].erase(u);
  return *this;
}

Graph complete_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u < n; ++u)
    for (Vertex v = u + 1; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph edgeless_graph(int n) { return Graph(n); }

Graph path_graph(int n) {
  GraphBuilder b(n);
  for (Vertex u = 0; u + 1 < n; ++u) b.add_edge(u, u + 1);
  return b.build();
}

Graph cycle_graph(int n) {
  if (n < 3) throw DomainError("a cycle needs at least 3 vertices");
  return GraphBuilder(path_graph(n)).add_edge(n - 1, 0).build();
}

std::int64_t snk_edge_count(int n, int k) {
  return std::int64_t{k} * n - (std::int64_t{k} * k + k) / 2;
}

Graph construct_snk(int n, int k) {
  if (k < 1 || k >= n || n > kMaxOrder) {
    throw DomainError("S(n,k) needs 1 <= k < n <= 64, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  return join(complete_graph(k), edgeless_graph(n - k));
}

Graph construct_snk_plus(int n, int k) {
  if (k < 1 || n - k < 2 || n > kMaxOrder) {
    throw DomainError("S+(n,k) needs 1 <= k <= n-2 and n <= 64, got n=" + std::to_string(n) +
                      " k=" + std::to_string(k));
  }
  return construct_snk(n, k).with_edge(k, k + 1);
}

Graph join(const Graph& g, const Graph& h) {
  const int offset = g.order();
  const int n = offset + h.order();
  if (n > kMaxOrder) throw DomainError("join exceeds 64 vertices");
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + offset, v + offset);
  for (Vertex u = 0; u < offset; ++u)
    for (Vertex v = offset; v < n; ++v) b.add_edge(u, v);
  return b.build();
}

Graph disjoint_union(const Graph& g, const Graph& h) {
  const int offset = g.order();
  const int n = offset + h.order();
  if (n > kMaxOrder) throw DomainError("disjoint union exceeds 64 vertices");
  GraphBuilder b(n);
  for (auto [u, v] : g.edges()) b.add_edge(u, v);
  for (auto [u, v] : h.edges()) b.add_edge(u + offset, v + offset);
  return b.build();
}

VertexSet private_neighbors(const Graph& g, Vertex u, Vertex v) {
  check_vertex(g, u);
  check_vertex(g, v);
  if (!g.has_edge(u, v)) {
    throw DomainError("private neighbours need an edge, but " + std::to_string(u) + "-" +
                      std::to_string(v) + " is not one");
  }
  return g.neighbors(u) - VertexSet::single(v) - g.neighbors(v);
}

VertexPartition partition_at(const Graph& g, Vertex u) {
  check_vertex(g, u);
  VertexPartition p;
  p.u = u;
  p.y = g.vertices() - g.closed_neighbors(u);
  for (Vertex w : g.neighbors(u)) {
    if (g.neighbors(w).disjoint(p.y)) {
      p.t.insert(w);
    } else {
      p.s.insert(w);
    }
  }
  return p;
}

int cross_edges(const Graph& g, VertexSet x, VertexSet y) {
  if (!x.disjoint(y)) throw DomainError("cross_edges needs disjoint vertex sets");
  int count = 0;
  for (Vertex u : x) count += (g.neighbors(u) & y).size();
  return count;
}

int induced_edge_count(const Graph& g, VertexSet s) {
  int twice = 0;
  for (Vertex u : s) twice += (g.neighbors(u) & s).size();
  return twice / 2;
}

Graph induced(const Graph& g, VertexSet s) {
  if (s.empty()) throw DomainError("induced subgraph needs a nonempty vertex set");
  if (!s.is_subset_of(g.vertices())) throw DomainError("induced subgraph set out of range");
  std::array<int, kMaxOrder> label{};
  int next = 0;
  for (Vertex u : s) label[u] = next++;
  GraphBuilder b(next);
  for (Vertex u : s)
    for (Vertex v : g.neighbors(u) & s)
      if (u < v) b.add_edge(label[u], label[v]);
  return b.build();
}

std::vector<int> degree_sequence(const Graph& g) {
  std::vector<int> out(g.order());
  for (Vertex u = 0; u < g.order(); ++u) out[u] = g.degree(u);
  return out;
}

BigInt degree_product(const Graph& g) {
  BigInt product = 1;
  for (Vertex u = 0; u < g.order(); ++u) product *= g.degree(u);
  return product;
}

GraphMetrics metrics(const Graph& g) {
  return GraphMetrics{g.edge_count(), degree_sequence(g), degree_product(g)};
}

VertexSet component_of(const Graph& g, Vertex v) {
  check_vertex(g, v);
  VertexSet seen = VertexSet::single(v);
  VertexSet frontier = seen;
  while (!frontier.empty()) {
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    frontier = next - seen;
    seen |= next;
  }
  return seen;
}

std::vector<VertexSet> components(const Graph& g) {
  std::vector<VertexSet> out;
  VertexSet rest = g.vertices();
  while (!rest.empty()) {
    VertexSet c = component_of(g, rest.min());
    out.push_back(c);
    rest -= c;
  }
  return out;
}

bool is_connected(const Graph& g) { return component_of(g, 0) == g.vertices(); }

namespace {

bool is_complete(const Graph& g) {
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) != g.order() - 1) return false;
  return true;
}

VertexSet dominating_vertices(const Graph& g) {
  VertexSet out;
  for (Vertex u = 0; u < g.order(); ++u)
    if (g.degree(u) == g.order() - 1) out.insert(u);
  return out;
}

}  // namespace

bool is_snk(const Graph& g, int k) {
  const int n = g.order();
  if (k < 1 || k >= n) return false;
  if (n - k == 1) return is_complete(g);
  // With at least two independent vertices, the clique is exactly the set of
  // dominating vertices and every other vertex sees precisely that set.
  const VertexSet clique = dominating_vertices(g);
  if (clique.size() != k) return false;
  for (Vertex r : g.vertices() - clique)
    if (g.neighbors(r) != clique) return false;
  return true;
}

bool is_snk_plus(const Graph& g, int k) {
  const int n = g.order();
  if (n == 2 && k == 1) return is_complete(g);
  if (k < 1 || n - k < 2) return false;
  if (n - k == 2) return is_complete(g);
  const VertexSet clique = dominating_vertices(g);
  if (clique.size() != k) return false;
  const VertexSet rest = g.vertices() - clique;
  for (Vertex r : rest)
    if (!clique.is_subset_of(g.neighbors(r))) return false;
  return induced_edge_count(g, rest) == 1;
}

}  // namespace longcycle
