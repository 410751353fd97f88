#pragma once

#include <cstddef>
#include <cstdint>
#include <map>
#include <optional>
#include <stdexcept>
#include <string>
#include <utility>
#include <vector>

namespace hypersimp {

using Vertex = std::uint32_t;
using Edge = std::vector<Vertex>;

/// Edge sizes (i, j) with i < j, used to key per-type tables.
using SizePair = std::pair<int, int>;

class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

class ParseError : public Error {
 public:
  ParseError(std::size_t line, const std::string& what)
      : Error("line " + std::to_string(line) + ": " + what), line_(line) {}

  std::size_t line() const noexcept { return line_; }

 private:
  std::size_t line_;
};

/**
 * Simple hypergraph on dense vertex ids 0..n-1.
 *
 * Every stored edge is a strictly increasing list of at least two vertex ids.
 * Identical edges may coexist until preprocess() removes them. When temporal()
 * is true the edge order is the birth order.
 */
class Hypergraph {
 public:
  Hypergraph() = default;

  /// Validates every edge; throws Error on a size < 2 edge, an out-of-range
  /// vertex, or an edge that is not strictly increasing.
  Hypergraph(std::size_t n, std::vector<Edge> edges, bool temporal = false,
             std::vector<std::string> labels = {});

  std::size_t num_vertices() const noexcept { return n_; }
  std::size_t num_edges() const noexcept { return edges_.size(); }
  const std::vector<Edge>& edges() const noexcept { return edges_; }
  const Edge& edge(std::size_t i) const { return edges_.at(i); }
  bool temporal() const noexcept { return temporal_; }

  /// External label of each vertex; empty when the graph was built from ids.
  const std::vector<std::string>& labels() const noexcept { return labels_; }
  std::string label(Vertex v) const;

  /// Number of adjacent edge pairs that shared a timestamp at load time.
  std::size_t timestamp_ties() const noexcept { return timestamp_ties_; }
  void set_timestamp_ties(std::size_t ties) noexcept { timestamp_ties_ = ties; }

  std::size_t max_edge_size() const noexcept;

  /// Incident edge indices per vertex, in edge order.
  std::vector<std::vector<std::size_t>> incidence() const;

  friend bool operator==(const Hypergraph& a, const Hypergraph& b) {
    return a.n_ == b.n_ && a.temporal_ == b.temporal_ && a.edges_ == b.edges_;
  }

 private:
  std::size_t n_ = 0;
  std::vector<Edge> edges_;
  bool temporal_ = false;
  std::vector<std::string> labels_;
  std::size_t timestamp_ties_ = 0;
};

/**
 * Edge list produced by the random generators. Edges are sorted but may
 * repeat a vertex (multiset edges) and may be parallel to each other.
 */
struct Multigraph {
  std::size_t n = 0;
  std::vector<Edge> edges;

  /// Degree counting multiplicity inside multiset edges.
  std::vector<std::uint64_t> degrees() const;
};

/// Collapses multiset edges to their support and drops supports of size < 2.
struct Simplified {
  Hypergraph graph;
  std::size_t multiset_edges = 0;  // edges whose support was smaller than the edge
  std::size_t dropped_edges = 0;   // supports that fell below size 2
};
Simplified simplify(const Multigraph& g, bool temporal = true);

class DegreeSequence {
 public:
  DegreeSequence() = default;
  explicit DegreeSequence(std::vector<std::uint64_t> degrees);

  const std::vector<std::uint64_t>& values() const noexcept { return d_; }
  std::uint64_t operator[](std::size_t v) const { return d_[v]; }
  std::size_t size() const noexcept { return d_.size(); }
  std::uint64_t total() const noexcept { return total_; }
  std::size_t positive_count() const noexcept;

  /// Chung-Lu vertex probability d_v / total.
  double probability(std::size_t v) const { return double(d_[v]) / double(total_); }

  static DegreeSequence uniform(std::size_t n, std::uint64_t degree = 1);

  friend bool operator==(const DegreeSequence&, const DegreeSequence&) = default;

 private:
  std::vector<std::uint64_t> d_;
  std::uint64_t total_ = 0;
};

class EdgeSizeSequence {
 public:
  EdgeSizeSequence() = default;
  /// Drops zero counts; throws Error on a size below 2.
  explicit EdgeSizeSequence(std::map<int, std::uint64_t> counts);

  const std::map<int, std::uint64_t>& counts() const noexcept { return counts_; }
  std::uint64_t count(int k) const;
  bool empty() const noexcept { return counts_.empty(); }
  int k_min() const;
  int k_max() const;
  std::uint64_t num_edges() const noexcept;
  /// Sum of k * m_k; equals the degree total of the graph it came from.
  std::uint64_t volume() const noexcept;

  friend bool operator==(const EdgeSizeSequence&, const EdgeSizeSequence&) = default;

 private:
  std::map<int, std::uint64_t> counts_;
};

DegreeSequence degree_sequence(const Hypergraph& g);
EdgeSizeSequence edge_size_sequence(const Hypergraph& g);

struct PreprocessOptions {
  int min_size = 2;
  int max_size = 11;
};

struct Preprocessed {
  Hypergraph graph;
  std::vector<Vertex> original_vertex;  // new id -> id in the input graph
  std::size_t dropped_by_size = 0;
  std::size_t dropped_duplicates = 0;
};

/// Size filter, first-occurrence dedup and vertex compaction. Throws Error
/// when nothing survives.
Preprocessed preprocess(const Hypergraph& g, PreprocessOptions opts = {});

/// Vertex-induced subgraph on the largest connected component (ties go to the
/// component holding the smallest vertex id). Ids are compacted, labels kept.
Hypergraph largest_component(const Hypergraph& g);

bool is_connected(const Hypergraph& g);

/// Line graph adjacency: node per hyperedge, sorted neighbour lists.
using Adjacency = std::vector<std::vector<std::size_t>>;
Adjacency line_graph(const Hypergraph& g);

}  // namespace hypersimp
