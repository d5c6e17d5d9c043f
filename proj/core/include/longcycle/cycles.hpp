#pragma once

#include <cstdint>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "longcycle/graph.hpp"

namespace longcycle {

/// A simple path, listed end to end. Its order is the number of vertices.
struct PathWitness {
  std::vector<Vertex> vertices;
  int order() const { return static_cast<int>(vertices.size()); }
};

/// A simple cycle listed from its smallest vertex; length = number of vertices.
struct CycleWitness {
  std::vector<Vertex> vertices;
  int length() const { return static_cast<int>(vertices.size()); }
};

bool is_valid_path(const Graph& g, const PathWitness& p);
bool is_valid_cycle(const Graph& g, const CycleWitness& c);

/// Cap on DFS node expansions for one call.
struct SearchBudget {
  std::uint64_t max_expansions = 100'000'000;
};

/// The exact search ran out of budget. Carries the best vertex sequence seen
/// so far (a path, or a cycle for cycle searches), which may be empty.
class BudgetExceeded : public std::runtime_error {
 public:
  BudgetExceeded(const std::string& what, std::vector<Vertex> best, std::uint64_t expansions)
      : std::runtime_error(what), best_(std::move(best)), expansions_(expansions) {}
  const std::vector<Vertex>& best_so_far() const { return best_; }
  std::uint64_t expansions() const { return expansions_; }

 private:
  std::vector<Vertex> best_;
  std::uint64_t expansions_;
};

/// A maximum-order path; the lexicographically smallest one among ties.
PathWitness longest_path(const Graph& g, SearchBudget budget = {});

/// A longest cycle (lexicographically smallest among ties), none for forests.
std::optional<CycleWitness> circumference(const Graph& g, SearchBudget budget = {});

/// Length of a longest cycle, 0 for forests.
int circumference_length(const Graph& g, SearchBudget budget = {});

/// Lexicographically first path with exactly `order` vertices, if any.
std::optional<PathWitness> find_path_of_order(const Graph& g, int order, SearchBudget budget = {});
/// Lexicographically first cycle of length at least `length`, if any.
std::optional<CycleWitness> find_cycle_at_least(const Graph& g, int length,
                                                SearchBudget budget = {});
/// Some cycle whose length lies in [lo, hi], if any.
std::optional<CycleWitness> find_cycle_length_in(const Graph& g, int lo, int hi,
                                                 SearchBudget budget = {});

bool has_path_order(const Graph& g, int order, SearchBudget budget = {});
bool has_cycle_at_least(const Graph& g, int length, SearchBudget budget = {});
bool has_cycle_length_in(const Graph& g, int lo, int hi, SearchBudget budget = {});

inline constexpr int kCycleMaskMaxOrder = 16;

/// Bit L is set iff G has a cycle of length L. Subset DP, independent of the
/// search above; n <= 16.
std::uint64_t cycle_length_mask(const Graph& g);

/// A path with both ends in `a`, at least `min_order` vertices and at least
/// `min_b_count` vertices from `b`. `a` and `b` must partition V(G).
std::optional<PathWitness> path_with_ends_in(const Graph& g, VertexSet a, VertexSet b,
                                             int min_order, int min_b_count,
                                             SearchBudget budget = {});

// -- extremal facts ----------------------------------------------------------

enum class FactKind {
  ErdosGallai,  ///< e(G) > (l-2)n/2 forces a path of order l
  PathSnk,      ///< e(G) >= e(S_{n,k}) forces P_{2k+2} unless G = S_{n,k}
  PathSnkPlus,  ///< e(G) >= e(S+_{n,k}) forces P_{2k+3} unless G = S+_{n,k}
  CliqueEnds,   ///< an embedded S_{n,k} (S+) gives P_{>=2k-1} (P_{>=2k}) with ends in the clique
};

struct FactParams {
  int k = 0;
  int ell = 0;
  /// For CliqueEnds: use S+_{n,k} instead of S_{n,k}.
  bool plus = false;
};

enum class FactVerdict { Vacuous, Verified, Counterexample };

const char* to_string(FactKind f);
const char* to_string(FactVerdict v);

struct FactResult {
  FactVerdict verdict = FactVerdict::Vacuous;
  /// The guaranteed path when one was found.
  std::optional<PathWitness> witness;
  /// Which clause settled the verdict.
  std::string reason;
};

/// Evaluates one extremal fact on a concrete graph.
///
/// Vacuous means the hypothesis fails (edge bound not met, graph disconnected
/// for the connected-only facts, or no embedded S_{n,k} on vertices 0..n-1
/// with clique 0..k-1 for CliqueEnds). Parameter domain errors throw
/// DomainError: ErdosGallai needs ell >= 1; PathSnk/PathSnkPlus need k >= 1
/// and n > 3k; CliqueEnds needs k >= 2 and n >= 2k.
FactResult check_fact(const Graph& g, FactKind which, const FactParams& params,
                      SearchBudget budget = {});

}  // namespace longcycle
