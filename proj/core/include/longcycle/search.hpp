#pragma once

#include <cstdint>
#include <vector>

#include "longcycle/scan.hpp"

namespace longcycle {

struct ClimbEvent {
  int restart = 0;
  int step = 0;
  /// The edge added at this step; (-1, -1) for a fresh starting tree.
  Vertex u = -1;
  Vertex v = -1;
  double mu = 0;
};

struct ClimbResult {
  ScanRecord best;
  double mu_target = 0;
  std::vector<ClimbEvent> history;
  std::uint64_t evaluations = 0;
  int restarts = 0;
  /// Candidates dropped because the cycle oracle ran out of budget.
  std::uint64_t skipped = 0;
};

inline constexpr double kPlateauTolerance = 1e-12;

/// Steepest-ascent search for a large spectral radius among graphs free of
/// the forbidden cycles. Each climb starts from a seeded random spanning tree
/// and adds the free edge with the largest resulting mu until no addition
/// improves mu by more than 1e-12; then it restarts. `budget` caps the number
/// of candidate evaluations. The result replays exactly for a given seed.
ClimbResult hillclimb_search(int n, int k, const CycleConstraint& constraint, std::uint64_t seed,
                             std::uint64_t budget, SearchBudget oracle = {});

}  // namespace longcycle
