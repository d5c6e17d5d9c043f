#pragma once

#include <cstdint>
#include <functional>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "longcycle/cycles.hpp"
#include "longcycle/enumerate.hpp"
#include "longcycle/graph.hpp"

namespace longcycle {

/// The set of forbidden cycle lengths: [l, n], {l}, or [lo, hi].
class CycleConstraint {
 public:
  enum class Mode { AtLeast, Exactly, Window };

  static CycleConstraint at_least(int length);
  static CycleConstraint exactly(int length);
  static CycleConstraint window(int lo, int hi);
  /// "atleast:L", "exactly:L" or "window:LO:HI".
  static CycleConstraint parse(std::string_view text);

  Mode mode() const { return mode_; }
  int lo() const { return lo_; }
  /// Upper end of the window; unbounded for AtLeast.
  std::optional<int> hi() const;

  /// True when g has no cycle whose length is forbidden.
  bool is_free(const Graph& g, SearchBudget budget = {}) const;

  std::string to_string() const;
  bool operator==(const CycleConstraint&) const = default;

 private:
  CycleConstraint(Mode mode, int lo, int hi) : mode_(mode), lo_(lo), hi_(hi) {}
  Mode mode_;
  int lo_;
  int hi_;  // -1 for AtLeast
};

/// Same answer as constraint.is_free(g) from a different oracle: the subset DP
/// for n <= 16, otherwise the longest-cycle search or one search per length.
bool recheck_free(const Graph& g, const CycleConstraint& constraint, SearchBudget budget = {});

enum class TargetKind { Snk, SnkPlus };

const char* to_string(TargetKind t);
TargetKind parse_target(std::string_view text);

/// The comparison graph S_{n,k} or S+_{n,k}.
Graph target_graph(TargetKind target, int n, int k);

struct ScanRecord {
  std::string graph6;
  int n = 0;
  int k = 0;
  CycleConstraint constraint = CycleConstraint::at_least(3);
  double mu = 0;
  bool is_free = false;
  bool is_target = false;
};

enum class ScanVerdict { TargetIsUniqueMax, TargetTied, TargetBeaten, TargetNotFree };

const char* to_string(ScanVerdict v);

struct ScanFailure {
  std::uint64_t index = 0;
  std::string graph6;
  std::string message;
};

struct ScanReport {
  int n = 0;
  int k = 0;
  CycleConstraint constraint = CycleConstraint::at_least(3);
  TargetKind target = TargetKind::Snk;
  std::uint64_t count_scanned = 0;
  std::uint64_t count_free = 0;
  /// Every free graph within 1e-9 of the largest mu, sorted by graph6.
  std::vector<ScanRecord> maximizers;
  double mu_target = 0;
  bool target_free = false;
  ScanVerdict verdict = ScanVerdict::TargetIsUniqueMax;
  /// False if any graph hit an oracle budget; those graphs are in `failures`.
  bool complete = true;
  std::vector<ScanFailure> failures;
  /// Free records in source order, kept only when requested.
  std::vector<ScanRecord> free_records;
};

inline constexpr double kMaximizerTieWindow = 1e-9;

/// Pull-style graph source; returns nullopt when exhausted.
using GraphStream = std::function<std::optional<Graph>()>;

GraphStream corpus_stream(std::vector<Graph> graphs);
GraphStream enumeration_stream(int n, EnumerationOptions options = {});

struct ScanOptions {
  /// Worker threads; 0 means hardware concurrency.
  int jobs = 0;
  SearchBudget budget;
  bool keep_free_records = false;
  std::size_t batch_size = 1 << 14;
};

/// Scans every graph from `source` (all must have order n), keeps those free
/// of the forbidden cycles, and compares the best spectral radius found
/// against the target graph. Output does not depend on the worker count.
ScanReport scan_extremal(const GraphStream& source, int n, int k, const CycleConstraint& constraint,
                         TargetKind target, const ScanOptions& options = {});

}  // namespace longcycle
