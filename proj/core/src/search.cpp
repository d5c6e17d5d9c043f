#include "longcycle/search.hpp"

#include <stdexcept>

#include "longcycle/error.hpp"
#include "longcycle/graph6.hpp"
#include "longcycle/instances.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {

ClimbResult hillclimb_search(int n, int k, const CycleConstraint& constraint, std::uint64_t seed,
                             std::uint64_t budget, SearchBudget oracle) {
  if (n < 2 || n > kGraph6MaxOrder) throw DomainError("search needs 2 <= n <= 62");
  if (k < 1 || k >= n) throw DomainError("search needs 1 <= k < n");

  ClimbResult result;
  result.mu_target = mu_snk_closed_form(n, k);
  Rng rng(seed);

  std::optional<Graph> best;
  double best_mu = -1;
  auto offer = [&](const Graph& g, double mu) {
    if (mu > best_mu) {
      best_mu = mu;
      best = g;
    }
  };

  while (result.evaluations < budget) {
    // Trees have no cycles, so every start is free.
    const std::uint64_t spent_before = result.evaluations;
    Graph current = random_tree(rng, n);
    double mu = spectral_radius(current).mu;
    int step = 0;
    result.history.push_back({result.restarts, step, -1, -1, mu});
    offer(current, mu);

    bool out_of_budget = false;
    for (;;) {
      Vertex pick_u = -1, pick_v = -1;
      double pick_mu = mu;
      for (Vertex u = 0; u < n && !out_of_budget; ++u) {
        for (Vertex v = u + 1; v < n; ++v) {
          if (current.has_edge(u, v)) continue;
          if (result.evaluations >= budget) {
            out_of_budget = true;
            break;
          }
          ++result.evaluations;
          const Graph candidate = current.with_edge(u, v);
          try {
            if (!constraint.is_free(candidate, oracle)) continue;
          } catch (const BudgetExceeded&) {
            ++result.skipped;
            continue;
          }
          const double m = spectral_radius(candidate).mu;
          if (m > pick_mu + kPlateauTolerance) {
            pick_mu = m;
            pick_u = u;
            pick_v = v;
          }
        }
      }
      if (out_of_budget || pick_u < 0) break;
      current = current.with_edge(pick_u, pick_v);
      mu = pick_mu;
      result.history.push_back({result.restarts, ++step, pick_u, pick_v, mu});
      offer(current, mu);
    }
    ++result.restarts;
    // A complete start offers no moves; further restarts would spin.
    if (result.evaluations == spent_before) break;
  }

  if (!best) {
    // Zero budget: report the first starting tree only.
    Rng replay(seed);
    best = random_tree(replay, n);
    best_mu = spectral_radius(*best).mu;
  }
  if (!recheck_free(*best, constraint, oracle)) {
    throw std::logic_error("hill climb produced a graph containing a forbidden cycle");
  }
  result.best = ScanRecord{emit_graph6(*best), n, k, constraint, best_mu, true, is_snk(*best, k)};
  return result;
}

}  // namespace longcycle
