#include "longcycle/enumerate.hpp"

#include <bit>
#include <string>

#include "longcycle/error.hpp"

namespace longcycle {

Graph graph_from_edge_mask(int n, std::uint64_t mask) {
  GraphBuilder b(n);
  int bit = 0;
  for (Vertex j = 1; j < n; ++j) {
    for (Vertex i = 0; i < j; ++i, ++bit) {
      if ((mask >> bit) & 1U) b.add_edge(i, j);
    }
  }
  return b.build();
}

LabeledEnumerator::LabeledEnumerator(int n, EnumerationOptions options)
    : n_(n), options_(options) {
  if (n < 1) throw DomainError("enumeration needs n >= 1");
  const int cap = options.allow_large ? kEnumerationHardCap : kEnumerationDefaultCap;
  if (n > cap) {
    throw DomainError("labeled enumeration of n=" + std::to_string(n) + " exceeds the cap of " +
                      std::to_string(cap) +
                      (options.allow_large ? "" : " (n=8 needs an explicit override)"));
  }
  total_ = std::uint64_t{1} << (n * (n - 1) / 2);
}

std::optional<Graph> LabeledEnumerator::next() {
  while (mask_ < total_) {
    const std::uint64_t mask = mask_++;
    if (std::popcount(mask) < options_.min_edges) continue;
    Graph g = graph_from_edge_mask(n_, mask);
    if (options_.connected_only && !is_connected(g)) continue;
    return g;
  }
  return std::nullopt;
}

}  // namespace longcycle
