#pragma once

#include <cstdint>
#include <functional>
#include <map>
#include <optional>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

using TypeCounts = std::map<SizePair, std::uint64_t>;

/**
 * Simplicial pair counts. A pair (f, g) with f a proper subset of g counts
 * once in `total` and once in `by_type[{|f|, |g|}]`. For temporal graphs a
 * pair is "up" when the smaller edge was born first and "down" otherwise.
 */
struct PairCounts {
  std::uint64_t total = 0;
  TypeCounts by_type;
  std::optional<TypeCounts> up_by_type;
  std::optional<TypeCounts> down_by_type;

  std::uint64_t up_total() const;
  std::uint64_t down_total() const;

  friend bool operator==(const PairCounts&, const PairCounts&) = default;
};

/// Calls visit(smaller, larger) for every pair of edge indices where edge
/// `smaller` is a proper subset of edge `larger`. Each pair is visited once.
void for_each_pair(const Hypergraph& g,
                   const std::function<void(std::size_t smaller, std::size_t larger)>& visit);

/// Exact count. Each edge is tested only against the strictly larger edges
/// incident to its least-incident vertex.
PairCounts count_pairs(const Hypergraph& g);

/// Quadratic all-pairs oracle; refuses graphs with more than `max_edges` edges.
PairCounts count_pairs_brute(const Hypergraph& g, std::size_t max_edges = 2000);

/// Whether each edge is maximal (not a proper subset of another edge).
std::vector<bool> maximal_edges(const Hypergraph& g);

}  // namespace hypersimp
