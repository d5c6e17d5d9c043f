#pragma once

#include <cstdint>
#include <optional>

#include "longcycle/graph.hpp"

namespace longcycle {

inline constexpr int kEnumerationDefaultCap = 7;
inline constexpr int kEnumerationHardCap = 8;

struct EnumerationOptions {
  bool connected_only = false;
  int min_edges = 0;
  /// Required for n = 8 (2^28 graphs).
  bool allow_large = false;
};

/// Bit i of `mask` is the i-th vertex pair in graph6 order
/// (0-1, 0-2, 1-2, 0-3, ...).
Graph graph_from_edge_mask(int n, std::uint64_t mask);

/// Streams every labeled graph on n vertices exactly once, in edge-mask order,
/// applying the filters on the fly. Throws DomainError above the cap.
class LabeledEnumerator {
 public:
  LabeledEnumerator(int n, EnumerationOptions options = {});

  std::optional<Graph> next();
  /// 2^C(n,2), before filtering.
  std::uint64_t total() const { return total_; }

 private:
  int n_;
  EnumerationOptions options_;
  std::uint64_t total_;
  std::uint64_t mask_ = 0;
};

template <class Fn>
void for_each_labeled(int n, const EnumerationOptions& options, Fn&& fn) {
  LabeledEnumerator e(n, options);
  while (auto g = e.next()) fn(*g);
}

}  // namespace longcycle
