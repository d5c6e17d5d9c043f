#include "longcycle/cycles.hpp"

#include <algorithm>
#include <bit>
#include <vector>

#include "longcycle/error.hpp"

namespace longcycle {

namespace {

// Vertices reachable from `from` through `allowed`, excluding `from`.
VertexSet reachable(const Graph& g, Vertex from, VertexSet allowed) {
  VertexSet seen;
  VertexSet frontier = g.neighbors(from) & allowed;
  while (!frontier.empty()) {
    seen |= frontier;
    VertexSet next;
    for (Vertex u : frontier) next |= g.neighbors(u);
    frontier = next & allowed;
    frontier -= seen;
  }
  return seen;
}

class Counter {
 public:
  explicit Counter(SearchBudget budget) : budget_(budget) {}
  void tick(const std::vector<Vertex>& best) {
    if (++expansions_ > budget_.max_expansions) {
      throw BudgetExceeded("search budget of " + std::to_string(budget_.max_expansions) +
                               " expansions exceeded",
                           best, expansions_);
    }
  }

 private:
  SearchBudget budget_;
  std::uint64_t expansions_ = 0;
};

// Depth-first search over simple paths in lexicographic order. Stops as soon
// as a path of `target` vertices is recorded.
class PathSearch {
 public:
  PathSearch(const Graph& g, int target, SearchBudget budget)
      : g_(g), target_(target), counter_(budget) {}

  std::vector<Vertex> run() {
    for (Vertex s = 0; s < g_.order() && !done_; ++s) {
      stack_.push_back(s);
      dfs(s, VertexSet::single(s));
      stack_.pop_back();
    }
    return best_;
  }

 private:
  void dfs(Vertex end, VertexSet visited) {
    counter_.tick(best_);
    if (stack_.size() > best_.size()) {
      best_ = stack_;
      if (best_.size() >= static_cast<std::size_t>(target_)) {
        done_ = true;
        return;
      }
    }
    const VertexSet open = g_.vertices() - visited;
    const VertexSet reach = reachable(g_, end, open);
    if (stack_.size() + reach.size() <= best_.size()) return;
    for (Vertex w : g_.neighbors(end) & open) {
      stack_.push_back(w);
      dfs(w, visited | VertexSet::single(w));
      stack_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  int target_;
  Counter counter_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> best_;
  bool done_ = false;
};

// Cycles are rooted at their smallest vertex s and only use vertices above s.
// In maximise mode the longest cycle (stopping early at `hi`) is kept; in
// window mode the first cycle with length in [lo, hi] ends the search.
class CycleSearch {
 public:
  CycleSearch(const Graph& g, int lo, int hi, bool maximise, SearchBudget budget)
      : g_(g), lo_(lo), hi_(std::min(hi, g.order())), maximise_(maximise), counter_(budget) {}

  std::vector<Vertex> run() {
    if (hi_ < 3 || lo_ > hi_) return {};
    for (Vertex s = 0; s < g_.order() && !done_; ++s) {
      const int room = g_.order() - s;
      if (room < lo_ || (maximise_ && room <= static_cast<int>(best_.size()))) break;
      root_ = s;
      allowed_ = VertexSet::range(s + 1, g_.order());
      stack_.push_back(s);
      dfs(s, VertexSet::single(s));
      stack_.pop_back();
    }
    return best_;
  }

 private:
  int accept_from() const {
    return maximise_ ? std::max(lo_, static_cast<int>(best_.size()) + 1) : lo_;
  }

  void dfs(Vertex end, VertexSet visited) {
    counter_.tick(best_);
    const int len = static_cast<int>(stack_.size());
    if (len >= 3 && len >= accept_from() && len <= hi_ && g_.has_edge(end, root_)) {
      best_ = stack_;
      if (!maximise_ || len >= hi_) {
        done_ = true;
        return;
      }
    }
    if (len >= hi_) return;
    const VertexSet open = allowed_ - visited;
    const VertexSet reach = reachable(g_, end, open);
    // Every extension closes back at the root, so it must stay in reach.
    if (len + reach.size() < accept_from()) return;
    if ((reach & g_.neighbors(root_)).empty()) return;
    for (Vertex w : g_.neighbors(end) & open) {
      stack_.push_back(w);
      dfs(w, visited | VertexSet::single(w));
      stack_.pop_back();
      if (done_) return;
    }
  }

  const Graph& g_;
  int lo_;
  int hi_;
  bool maximise_;
  Counter counter_;
  Vertex root_ = 0;
  VertexSet allowed_;
  std::vector<Vertex> stack_;
  std::vector<Vertex> best_;
  bool done_ = false;
};

}  // namespace

bool is_valid_path(const Graph& g, const PathWitness& p) {
  VertexSet seen;
  for (std::size_t i = 0; i < p.vertices.size(); ++i) {
    const Vertex v = p.vertices[i];
    if (v < 0 || v >= g.order() || seen.contains(v)) return false;
    seen.insert(v);
    if (i > 0 && !g.has_edge(p.vertices[i - 1], v)) return false;
  }
  return !p.vertices.empty();
}

bool is_valid_cycle(const Graph& g, const CycleWitness& c) {
  if (c.length() < 3) return false;
  if (!is_valid_path(g, PathWitness{c.vertices})) return false;
  return g.has_edge(c.vertices.back(), c.vertices.front());
}

PathWitness longest_path(const Graph& g, SearchBudget budget) {
  return PathWitness{PathSearch(g, g.order(), budget).run()};
}

std::optional<CycleWitness> circumference(const Graph& g, SearchBudget budget) {
  auto best = CycleSearch(g, 3, g.order(), true, budget).run();
  if (best.empty()) return std::nullopt;
  return CycleWitness{std::move(best)};
}

int circumference_length(const Graph& g, SearchBudget budget) {
  auto c = circumference(g, budget);
  return c ? c->length() : 0;
}

std::optional<PathWitness> find_path_of_order(const Graph& g, int order, SearchBudget budget) {
  if (order < 1) throw DomainError("path order must be at least 1");
  if (order > g.order()) return std::nullopt;
  auto best = PathSearch(g, order, budget).run();
  if (static_cast<int>(best.size()) < order) return std::nullopt;
  return PathWitness{std::move(best)};
}

std::optional<CycleWitness> find_cycle_at_least(const Graph& g, int length, SearchBudget budget) {
  if (length < 3) throw DomainError("cycle length bound must be at least 3");
  if (length > g.order()) return std::nullopt;
  // Maximise with a ceiling of n, stopping at the first cycle that reaches `length`.
  auto best = CycleSearch(g, length, g.order(), false, budget).run();
  if (best.empty()) return std::nullopt;
  return CycleWitness{std::move(best)};
}

std::optional<CycleWitness> find_cycle_length_in(const Graph& g, int lo, int hi,
                                                 SearchBudget budget) {
  if (lo < 3 || hi < lo) throw DomainError("cycle length window needs 3 <= lo <= hi");
  auto best = CycleSearch(g, lo, hi, false, budget).run();
  if (best.empty()) return std::nullopt;
  return CycleWitness{std::move(best)};
}

bool has_path_order(const Graph& g, int order, SearchBudget budget) {
  return find_path_of_order(g, order, budget).has_value();
}

bool has_cycle_at_least(const Graph& g, int length, SearchBudget budget) {
  return find_cycle_at_least(g, length, budget).has_value();
}

bool has_cycle_length_in(const Graph& g, int lo, int hi, SearchBudget budget) {
  return find_cycle_length_in(g, lo, hi, budget).has_value();
}

std::uint64_t cycle_length_mask(const Graph& g) {
  const int n = g.order();
  if (n > kCycleMaskMaxOrder) throw DomainError("cycle length table needs n <= 16");
  // ends[m]: endpoints of paths that start at min(m) and cover exactly m.
  std::vector<std::uint32_t> ends(std::size_t{1} << n, 0);
  for (int v = 0; v < n; ++v) ends[std::size_t{1} << v] = 1U << v;
  std::uint64_t lengths = 0;
  for (std::uint32_t m = 1; m < (1U << n); ++m) {
    const std::uint32_t e = ends[m];
    if (!e) continue;
    const int root = std::countr_zero(m);
    const int size = std::popcount(m);
    for (int v = 0; v < n; ++v) {
      if (!(e >> v & 1U)) continue;
      const std::uint64_t nbrs = g.neighbors(v).bits();
      if (size >= 3 && (nbrs >> root & 1U)) lengths |= std::uint64_t{1} << size;
      for (int w = root + 1; w < n; ++w)
        if (!(m >> w & 1U) && (nbrs >> w & 1U)) ends[m | (1U << w)] |= 1U << w;
    }
  }
  return lengths;
}

namespace {

class EndsInSearch {
 public:
  EndsInSearch(const Graph& g, VertexSet a, VertexSet b, int min_order, int min_b,
               SearchBudget budget)
      : g_(g), a_(a), b_(b), min_order_(min_order), min_b_(min_b), counter_(budget) {}

  std::vector<Vertex> run() {
    for (Vertex s : a_) {
      stack_.push_back(s);
      if (dfs(s, VertexSet::single(s), 0)) return stack_;
      stack_.pop_back();
    }
    return {};
  }

 private:
  bool dfs(Vertex end, VertexSet visited, int b_count) {
    counter_.tick(stack_);
    const int order = static_cast<int>(stack_.size());
    if (a_.contains(end) && order >= min_order_ && b_count >= min_b_) return true;
    const VertexSet open = g_.vertices() - visited;
    const VertexSet reach = reachable(g_, end, open);
    if (order + reach.size() < min_order_) return false;
    if (b_count + (reach & b_).size() < min_b_) return false;
    if ((reach & a_).empty()) return false;
    for (Vertex w : g_.neighbors(end) & open) {
      stack_.push_back(w);
      if (dfs(w, visited | VertexSet::single(w), b_count + (b_.contains(w) ? 1 : 0))) return true;
      stack_.pop_back();
    }
    return false;
  }

  const Graph& g_;
  VertexSet a_, b_;
  int min_order_, min_b_;
  Counter counter_;
  std::vector<Vertex> stack_;
};

}  // namespace

std::optional<PathWitness> path_with_ends_in(const Graph& g, VertexSet a, VertexSet b,
                                             int min_order, int min_b_count, SearchBudget budget) {
  if (!a.disjoint(b) || (a | b) != g.vertices()) {
    throw DomainError("path_with_ends_in needs a partition of the vertex set");
  }
  auto found = EndsInSearch(g, a, b, min_order, min_b_count, budget).run();
  if (found.empty()) return std::nullopt;
  return PathWitness{std::move(found)};
}

const char* to_string(FactKind f) {
  switch (f) {
    case FactKind::ErdosGallai: return "eg";
    case FactKind::PathSnk: return "f1";
    case FactKind::PathSnkPlus: return "f2";
    case FactKind::CliqueEnds: return "f4";
  }
  return "?";
}

const char* to_string(FactVerdict v) {
  switch (v) {
    case FactVerdict::Vacuous: return "Vacuous";
    case FactVerdict::Verified: return "Verified";
    case FactVerdict::Counterexample: return "Counterexample";
  }
  return "?";
}

namespace {

FactResult check_erdos_gallai(const Graph& g, int ell, SearchBudget budget) {
  if (ell < 1) throw DomainError("Erdos-Gallai check needs ell >= 1");
  const std::int64_t n = g.order();
  // e(G) > (ell - 2) n / 2
  if (2 * std::int64_t{g.edge_count()} <= (ell - 2) * n) {
    return {FactVerdict::Vacuous, std::nullopt, "edge bound not exceeded"};
  }
  if (auto p = find_path_of_order(g, ell, budget)) {
    return {FactVerdict::Verified, std::move(p), "path found"};
  }
  return {FactVerdict::Counterexample, std::nullopt, "no path of the guaranteed order"};
}

FactResult check_path_snk(const Graph& g, int k, bool plus, SearchBudget budget) {
  const int n = g.order();
  if (k < 1 || n <= 3 * k) throw DomainError("path fact needs k >= 1 and n > 3k");
  if (!is_connected(g)) return {FactVerdict::Vacuous, std::nullopt, "graph is disconnected"};
  const std::int64_t bound = snk_edge_count(n, k) + (plus ? 1 : 0);
  const std::int64_t e = g.edge_count();
  if (e < bound) return {FactVerdict::Vacuous, std::nullopt, "edge bound not met"};
  const int order = 2 * k + (plus ? 3 : 2);
  if (auto p = find_path_of_order(g, order, budget)) {
    return {FactVerdict::Verified, std::move(p), "path found"};
  }
  const bool exceptional = e == bound && (plus ? is_snk_plus(g, k) : is_snk(g, k));
  if (exceptional) return {FactVerdict::Verified, std::nullopt, "equality case graph"};
  return {FactVerdict::Counterexample, std::nullopt, "no path and not the equality graph"};
}

FactResult check_clique_ends(const Graph& g, int k, bool plus, SearchBudget budget) {
  const int n = g.order();
  if (k < 2 || n < 2 * k) throw DomainError("clique-ends fact needs k >= 2 and n >= 2k");
  const Graph host = plus ? construct_snk_plus(n, k) : construct_snk(n, k);
  for (auto [u, v] : host.edges()) {
    if (!g.has_edge(u, v)) {
      return {FactVerdict::Vacuous, std::nullopt, "no embedded copy on the canonical labels"};
    }
  }
  const VertexSet clique = VertexSet::range(k);
  const int order = plus ? 2 * k : 2 * k - 1;
  if (auto p = path_with_ends_in(g, clique, g.vertices() - clique, order, 0, budget)) {
    return {FactVerdict::Verified, std::move(p), "path found"};
  }
  return {FactVerdict::Counterexample, std::nullopt, "no path with both ends in the clique"};
}

}  // namespace

FactResult check_fact(const Graph& g, FactKind which, const FactParams& params,
                      SearchBudget budget) {
  switch (which) {
    case FactKind::ErdosGallai: return check_erdos_gallai(g, params.ell, budget);
    case FactKind::PathSnk: return check_path_snk(g, params.k, false, budget);
    case FactKind::PathSnkPlus: return check_path_snk(g, params.k, true, budget);
    case FactKind::CliqueEnds: return check_clique_ends(g, params.k, params.plus, budget);
  }
  throw DomainError("unknown fact");
}

}  // namespace longcycle
