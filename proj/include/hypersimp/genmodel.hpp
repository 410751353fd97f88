#pragma once

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/nullmodel.hpp"
#include "hypersimp/random.hpp"

namespace hypersimp {

struct GenSpec {
  DegreeSequence degrees;
  EdgeSizeSequence sizes;
  double q = 0;  // probability that an edge is built from an existing one
  std::uint64_t seed = 1;
  bool require_connected = false;
};

/// Non-fatal problems with a spec, e.g. sum k*m_k differing from sum d_v.
std::vector<std::string> validate(const GenSpec& spec);

/// Edge indices grouped by size, supporting a uniform pick among the edges
/// whose size differs from a given k.
class EdgeSizeIndex {
 public:
  void add(std::size_t edge_index, std::size_t size);
  std::size_t count_other_than(std::size_t k) const noexcept;
  /// Uniform over edges whose size is not k; count_other_than(k) must be > 0.
  std::size_t pick_other_than(std::size_t k, Rng& rng) const;

 private:
  std::vector<std::vector<std::size_t>> by_size_;
  std::size_t total_ = 0;
};

/**
 * Builds a size-k edge from a uniformly chosen existing edge of a different
 * size: a uniform k-subset of a larger edge, or a smaller edge extended by
 * k - |e'| Chung-Lu draws (possibly a multiset). Falls back to a plain
 * Chung-Lu draw when every existing edge has size k. Returned sorted.
 */
Edge simplicial_edge(const ChungLuSampler& sampler, int k, std::span<const Edge> edges,
                     const EdgeSizeIndex& index, Rng& rng);

/// Convenience overload that indexes `edges` itself.
Edge simplicial_edge(const DegreeSequence& d, int k, std::span<const Edge> edges, Rng& rng);

/// Shuffled list holding m_k copies of each size k.
std::vector<int> shuffled_sizes(const EdgeSizeSequence& m, Rng& rng);

/**
 * Walks a shuffled size list; each edge is a simplicial_edge with
 * probability q and a Chung-Lu edge otherwise. Edges are appended to
 * `initial`, so list order is birth order.
 */
Multigraph simplicial_cl_graph(const DegreeSequence& d, const EdgeSizeSequence& m, double q, Rng& rng,
                               std::vector<Edge> initial = {});
Multigraph simplicial_cl_graph(const GenSpec& spec, Rng& rng);

struct Skeleton {
  std::vector<Edge> edges;
  EdgeSizeSequence remaining;
};

/**
 * Connects every positive-degree vertex by coalescence: each edge joins k
 * distinct components chosen with probability proportional to the product
 * of their degree weights, with a designated vertex per component drawn
 * proportional to degree. When k exceeds the number c of components left,
 * the final edge joins all c and adds k - c Chung-Lu draws.
 * Throws Error when the size list runs out before the graph is connected.
 */
Skeleton connected_skeleton(const DegreeSequence& d, const EdgeSizeSequence& m, Rng& rng);

/// Skeleton first, then the simplicial model on the leftover sizes with the
/// skeleton as initial edge list.
Multigraph connected_simplicial_cl(const GenSpec& spec, Rng& rng);

/// Dispatches on spec.require_connected using Rng(spec.seed).
Multigraph generate(const GenSpec& spec);

}  // namespace hypersimp
