#include "hypersimp/hypergraph.hpp"

#include <algorithm>
#include <limits>
#include <numeric>
#include <set>

#include "hypersimp/union_find.hpp"

namespace hypersimp {

Hypergraph::Hypergraph(std::size_t n, std::vector<Edge> edges, bool temporal,
                       std::vector<std::string> labels)
    : n_(n), edges_(std::move(edges)), temporal_(temporal), labels_(std::move(labels)) {
  if (!labels_.empty() && labels_.size() != n_)
    throw Error("label count " + std::to_string(labels_.size()) + " does not match " +
                std::to_string(n_) + " vertices");
  for (std::size_t i = 0; i < edges_.size(); ++i) {
    const Edge& e = edges_[i];
    if (e.size() < 2) throw Error("edge " + std::to_string(i) + " has fewer than 2 vertices");
    for (std::size_t j = 0; j < e.size(); ++j) {
      if (e[j] >= n_) throw Error("edge " + std::to_string(i) + " has out-of-range vertex");
      if (j > 0 && e[j - 1] >= e[j])
        throw Error("edge " + std::to_string(i) + " is not a strictly increasing vertex list");
    }
  }
}

std::string Hypergraph::label(Vertex v) const {
  return labels_.empty() ? std::to_string(v) : labels_.at(v);
}

std::size_t Hypergraph::max_edge_size() const noexcept {
  std::size_t m = 0;
  for (const auto& e : edges_) m = std::max(m, e.size());
  return m;
}

std::vector<std::vector<std::size_t>> Hypergraph::incidence() const {
  std::vector<std::vector<std::size_t>> inc(n_);
  for (std::size_t i = 0; i < edges_.size(); ++i)
    for (Vertex v : edges_[i]) inc[v].push_back(i);
  return inc;
}

std::vector<std::uint64_t> Multigraph::degrees() const {
  std::vector<std::uint64_t> d(n, 0);
  for (const auto& e : edges)
    for (Vertex v : e) ++d.at(v);
  return d;
}

Simplified simplify(const Multigraph& g, bool temporal) {
  Simplified out;
  std::vector<Edge> edges;
  edges.reserve(g.edges.size());
  for (Edge e : g.edges) {
    std::sort(e.begin(), e.end());
    const auto size_before = e.size();
    e.erase(std::unique(e.begin(), e.end()), e.end());
    if (e.size() != size_before) ++out.multiset_edges;
    if (e.size() < 2) {
      ++out.dropped_edges;
      continue;
    }
    edges.push_back(std::move(e));
  }
  out.graph = Hypergraph(g.n, std::move(edges), temporal);
  return out;
}

DegreeSequence::DegreeSequence(std::vector<std::uint64_t> degrees) : d_(std::move(degrees)) {
  for (auto x : d_) {
    if (x > std::numeric_limits<std::uint64_t>::max() - total_) throw Error("degree total overflows");
    total_ += x;
  }
}

std::size_t DegreeSequence::positive_count() const noexcept {
  return static_cast<std::size_t>(std::count_if(d_.begin(), d_.end(), [](auto x) { return x > 0; }));
}

DegreeSequence DegreeSequence::uniform(std::size_t n, std::uint64_t degree) {
  return DegreeSequence(std::vector<std::uint64_t>(n, degree));
}

EdgeSizeSequence::EdgeSizeSequence(std::map<int, std::uint64_t> counts) {
  for (auto [k, m] : counts) {
    if (k < 2) throw Error("edge size " + std::to_string(k) + " is below 2");
    if (m > 0) counts_.emplace(k, m);
  }
}

std::uint64_t EdgeSizeSequence::count(int k) const {
  auto it = counts_.find(k);
  return it == counts_.end() ? 0 : it->second;
}

int EdgeSizeSequence::k_min() const {
  if (counts_.empty()) throw Error("empty edge size sequence");
  return counts_.begin()->first;
}

int EdgeSizeSequence::k_max() const {
  if (counts_.empty()) throw Error("empty edge size sequence");
  return counts_.rbegin()->first;
}

std::uint64_t EdgeSizeSequence::num_edges() const noexcept {
  std::uint64_t total = 0;
  for (auto [k, m] : counts_) total += m;
  return total;
}

std::uint64_t EdgeSizeSequence::volume() const noexcept {
  std::uint64_t total = 0;
  for (auto [k, m] : counts_) total += std::uint64_t(k) * m;
  return total;
}

DegreeSequence degree_sequence(const Hypergraph& g) {
  std::vector<std::uint64_t> d(g.num_vertices(), 0);
  for (const auto& e : g.edges())
    for (Vertex v : e) ++d[v];
  return DegreeSequence(std::move(d));
}

EdgeSizeSequence edge_size_sequence(const Hypergraph& g) {
  std::map<int, std::uint64_t> m;
  for (const auto& e : g.edges()) ++m[static_cast<int>(e.size())];
  return EdgeSizeSequence(std::move(m));
}

namespace {

// Keeps the listed edges and renumbers the vertices they touch in increasing
// id order.
Preprocessed compact(const Hypergraph& g, std::vector<Edge> edges) {
  Preprocessed out;
  std::vector<char> used(g.num_vertices(), 0);
  for (const auto& e : edges)
    for (Vertex v : e) used[v] = 1;
  constexpr Vertex kUnmapped = std::numeric_limits<Vertex>::max();
  std::vector<Vertex> remap(g.num_vertices(), kUnmapped);
  std::vector<std::string> labels;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!used[v]) continue;
    remap[v] = static_cast<Vertex>(out.original_vertex.size());
    out.original_vertex.push_back(static_cast<Vertex>(v));
    labels.push_back(g.label(static_cast<Vertex>(v)));
  }
  for (auto& e : edges)
    for (auto& v : e) v = remap[v];
  if (g.labels().empty()) labels.clear();
  out.graph = Hypergraph(out.original_vertex.size(), std::move(edges), g.temporal(), std::move(labels));
  out.graph.set_timestamp_ties(g.timestamp_ties());
  return out;
}

}  // namespace

Preprocessed preprocess(const Hypergraph& g, PreprocessOptions opts) {
  if (opts.min_size < 2 || opts.max_size < opts.min_size)
    throw Error("invalid size window [" + std::to_string(opts.min_size) + ", " +
                std::to_string(opts.max_size) + "]");
  std::set<Edge> seen;
  std::vector<Edge> kept;
  std::size_t by_size = 0, duplicates = 0;
  for (const auto& e : g.edges()) {
    const auto k = static_cast<int>(e.size());
    if (k < opts.min_size || k > opts.max_size) {
      ++by_size;
      continue;
    }
    if (!seen.insert(e).second) {
      ++duplicates;
      continue;
    }
    kept.push_back(e);
  }
  if (kept.empty()) throw Error("preprocessing left no edges");
  Preprocessed out = compact(g, std::move(kept));
  out.dropped_by_size = by_size;
  out.dropped_duplicates = duplicates;
  return out;
}

namespace {

UnionFind vertex_components(const Hypergraph& g) {
  UnionFind uf(g.num_vertices());
  for (const auto& e : g.edges())
    for (std::size_t j = 1; j < e.size(); ++j) uf.unite(e[0], e[j]);
  return uf;
}

}  // namespace

Hypergraph largest_component(const Hypergraph& g) {
  if (g.num_edges() == 0) return g;
  UnionFind uf = vertex_components(g);
  // Scanning vertices in id order and requiring a strictly larger size keeps
  // the component with the smallest vertex id on ties.
  std::size_t best_root = uf.find(g.edge(0)[0]);
  std::size_t best_size = 0;
  std::vector<char> touched(g.num_vertices(), 0);
  for (const auto& e : g.edges())
    for (Vertex v : e) touched[v] = 1;
  for (std::size_t v = 0; v < g.num_vertices(); ++v) {
    if (!touched[v]) continue;
    const auto s = uf.size_of(v);
    if (s > best_size) {
      best_size = s;
      best_root = uf.find(v);
    }
  }
  std::vector<Edge> kept;
  for (const auto& e : g.edges())
    if (uf.find(e[0]) == best_root) kept.push_back(e);
  return compact(g, std::move(kept)).graph;
}

bool is_connected(const Hypergraph& g) {
  UnionFind uf = vertex_components(g);
  std::size_t isolated = 0;
  std::vector<char> touched(g.num_vertices(), 0);
  for (const auto& e : g.edges())
    for (Vertex v : e) touched[v] = 1;
  for (char t : touched) isolated += t ? 0 : 1;
  return g.num_vertices() > 0 && isolated == 0 && uf.components() == 1;
}

Adjacency line_graph(const Hypergraph& g) {
  const auto inc = g.incidence();
  Adjacency adj(g.num_edges());
  std::vector<std::size_t> mark(g.num_edges(), std::numeric_limits<std::size_t>::max());
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    mark[i] = i;
    for (Vertex v : g.edge(i)) {
      for (std::size_t j : inc[v]) {
        if (mark[j] == i) continue;
        mark[j] = i;
        adj[i].push_back(j);
      }
    }
    std::sort(adj[i].begin(), adj[i].end());
  }
  return adj;
}

}  // namespace hypersimp
