#pragma once

#include <cstdint>
#include <map>
#include <span>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/random.hpp"

namespace hypersimp {

/// Draws Chung-Lu vertices with probability d_v / |d|.
class ChungLuSampler {
 public:
  /// Throws Error on an all-zero degree sequence.
  explicit ChungLuSampler(DegreeSequence d);

  const DegreeSequence& degrees() const noexcept { return d_; }

  Vertex draw_vertex(Rng& rng) const noexcept { return static_cast<Vertex>(table_(rng)); }

  /// k independent draws in draw order; repeats are possible.
  Edge draw(int k, Rng& rng) const;

  /// Rejection-samples draw(k) until all k vertices differ; returns them
  /// sorted. Throws Error when fewer than k vertices have positive degree.
  Edge draw_simple(int k, Rng& rng) const;

 private:
  DegreeSequence d_;
  AliasTable table_;
};

Edge cl_edge(const DegreeSequence& d, int k, Rng& rng);
Edge cl_edge_simple(const DegreeSequence& d, int k, Rng& rng);

/// m_k edges of each size k, sizes in increasing order. With
/// `require_simple_edges` every edge is conditioned to have distinct vertices.
Multigraph cl_graph(const DegreeSequence& d, const EdgeSizeSequence& m, Rng& rng,
                    bool require_simple_edges = false);

/// Fraction of s Chung-Lu k-draws with k distinct vertices.
double estimate_p_simple(const DegreeSequence& d, int k, std::size_t s, Rng& rng);

/// P(a Chung-Lu k-draw is simple) = k! * e_k(p), e_k the elementary
/// symmetric polynomial of the vertex probabilities.
double exact_p_simple(const DegreeSequence& d, int k);

/**
 * Probability that a simple Chung-Lu edge of size k lands inside `edge`:
 *   sum over k-subsets S of edge of  k! * prod_{v in S} d_v / (|d|^k * p_simple_k).
 * Requires |edge| > k and distinct vertices.
 */
double subset_pair_probability(std::span<const Vertex> edge, int k, const DegreeSequence& d,
                               double p_simple_k);

enum class PSimpleMethod { exact, monte_carlo };

struct CellEstimate {
  double value = 0;
  double std_error = 0;
};

/// Estimated (or exact) E[pairs(G_hat, k, l)] per size pair of the null model.
struct ExpectationMatrix {
  std::map<SizePair, CellEstimate> by_type;
  double total = 0;
  double total_std_error = 0;
  std::map<int, double> p_simple;
  std::size_t samples = 0;  // 0 for exact computations
  std::uint64_t seed = 0;
  PSimpleMethod p_simple_method = PSimpleMethod::exact;

  double value(int k, int l) const;
};

struct EstimateOptions {
  std::size_t samples = 1000;
  std::uint64_t seed = 1;
  /// `exact` evaluates p_simple in closed form; `monte_carlo` uses
  /// estimate_p_simple with `samples` draws per size.
  PSimpleMethod p_simple = PSimpleMethod::exact;
};

/**
 * Monte Carlo estimate: for every size l, one pool of `samples` simple
 * l-edges is drawn and shared by all k < l; each cell is m_k * m_l times the
 * pool mean of subset_pair_probability.
 */
ExpectationMatrix estimate_expected_pairs(const DegreeSequence& d, const EdgeSizeSequence& m,
                                          const EstimateOptions& opts = {});

/// Closed form for uniform degrees: m_k * m_l * C(l, k) / C(n, k).
ExpectationMatrix exact_expected_pairs_uniform(std::size_t n, const EdgeSizeSequence& m);

struct BruteLimits {
  std::size_t max_vertices = 10;
  int max_size = 4;
};

/// Exhaustive enumeration over all vertex subsets; only for tiny instances.
ExpectationMatrix exact_expected_pairs_brute(const DegreeSequence& d, const EdgeSizeSequence& m,
                                             BruteLimits limits = {});

}  // namespace hypersimp
