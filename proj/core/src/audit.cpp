#include "longcycle/audit.hpp"

#include "longcycle/error.hpp"
#include "longcycle/spectral.hpp"

namespace longcycle {

TheoremAudit classify_against_theorem(const Graph& g, int k, SearchBudget budget) {
  const int n = g.order();
  if (k < 1 || k >= n) throw DomainError("audit needs 1 <= k < n");
  constexpr double tol = 1e-9;

  TheoremAudit a;
  a.n = n;
  a.k = k;
  a.mu = spectral_radius(g).mu;
  a.mu_snk = mu_snk_closed_form(n, k);
  if (n - k >= 2) a.mu_snk_plus = spectral_radius(construct_snk_plus(n, k)).mu;

  a.reaches_snk = a.mu >= a.mu_snk - tol;
  a.reaches_snk_plus = a.mu_snk_plus && a.mu >= *a.mu_snk_plus - tol;
  a.has_cycle_2k1 = 2 * k + 1 <= n && has_cycle_at_least(g, 2 * k + 1, budget);
  a.has_cycle_2k2 = 2 * k + 2 <= n && has_cycle_at_least(g, 2 * k + 2, budget);
  a.is_snk = is_snk(g, k);
  a.is_snk_plus = is_snk_plus(g, k);
  a.consistent_a = !a.reaches_snk || a.has_cycle_2k1 || a.is_snk;
  a.consistent_b = !a.reaches_snk_plus || a.has_cycle_2k2 || a.is_snk_plus;
  a.above_threshold = n >= 13 * k * k;
  return a;
}

}  // namespace longcycle
