#include "hypersimp/measures.hpp"

#include <algorithm>
#include <bit>
#include <cstdio>
#include <sstream>
#include <unordered_map>
#include <unordered_set>

namespace hypersimp {
namespace {

struct EdgeHash {
  std::size_t operator()(const Edge& e) const noexcept {
    std::uint64_t h = 0x9e3779b97f4a7c15ULL ^ e.size();
    for (Vertex v : e) h = splitmix64(h ^ v);
    return static_cast<std::size_t>(h);
  }
};

void require_closure_sizes(const Hypergraph& g) {
  if (g.max_edge_size() > kMaxClosureEdgeSize)
    throw Error("closure measures enumerate subsets and refuse edges larger than " +
                std::to_string(kMaxClosureEdgeSize) + " (got " + std::to_string(g.max_edge_size()) +
                "); run preprocess first");
}

Edge subset_of(const Edge& e, std::uint32_t mask) {
  Edge s;
  for (std::size_t i = 0; i < e.size(); ++i)
    if (mask >> i & 1U) s.push_back(e[i]);
  return s;
}

// A cell whose expectation is zero while pairs were observed cannot be
// divided out; it is reported as unresolved instead.
MatrixCell ratio_cell(std::uint64_t count, double expected) {
  if (count == 0) return {0.0, false};
  if (expected <= 0) return {0.0, true};
  return {double(count) / expected, false};
}

}  // namespace

double simplicial_ratio(const PairCounts& counts, const ExpectationMatrix& exp) {
  if (exp.total > 0) return double(counts.total) / exp.total;
  if (counts.total > 0)
    throw Error("expected pair count is zero but " + std::to_string(counts.total) +
                " pairs were observed; the expectation estimate is broken");
  return 1.0;
}

PartialMatrix simplicial_matrix(const PairCounts& counts, const ExpectationMatrix& exp) {
  PartialMatrix out;
  for (const auto& [key, cell] : exp.by_type) {
    auto it = counts.by_type.find(key);
    out[key] = ratio_cell(it == counts.by_type.end() ? 0 : it->second, cell.value);
  }
  return out;
}

std::map<SizePair, double> simplicial_weights(const ExpectationMatrix& exp) {
  std::map<SizePair, double> w;
  if (exp.total <= 0) return w;
  for (const auto& [key, cell] : exp.by_type) w[key] = cell.value / exp.total;
  return w;
}

TemporalRatios temporal_ratios(const PairCounts& counts, const ExpectationMatrix& exp) {
  if (!counts.up_by_type) throw Error("temporal ratios need a temporal graph");
  if (exp.total > 0)
    return {2.0 * double(counts.up_total()) / exp.total, 2.0 * double(counts.down_total()) / exp.total};
  if (counts.total > 0) throw Error("expected pair count is zero but pairs were observed");
  return {1.0, 1.0};
}

PartialMatrix temporal_matrix(const PairCounts& counts, const ExpectationMatrix& exp) {
  if (!counts.up_by_type) throw Error("temporal matrix needs a temporal graph");
  auto lookup = [](const TypeCounts& t, SizePair key) -> std::uint64_t {
    auto it = t.find(key);
    return it == t.end() ? 0 : it->second;
  };
  PartialMatrix out;
  for (const auto& [key, cell] : exp.by_type) {
    const double half = cell.value / 2.0;
    out[key] = ratio_cell(lookup(*counts.up_by_type, key), half);
    out[{key.second, key.first}] = ratio_cell(lookup(*counts.down_by_type, key), half);
  }
  return out;
}

double simplicial_fraction(const Hypergraph& g) {
  require_closure_sizes(g);
  std::unordered_set<Edge, EdgeHash> edges(g.edges().begin(), g.edges().end());
  std::size_t large = 0, closed = 0;
  for (const auto& e : g.edges()) {
    if (e.size() < 3) continue;
    ++large;
    const std::uint32_t full = (std::uint32_t{1} << e.size()) - 1;
    bool all = true;
    for (std::uint32_t mask = 1; mask < full && all; ++mask)
      if (std::popcount(mask) >= 2) all = edges.contains(subset_of(e, mask));
    closed += all ? 1 : 0;
  }
  return large == 0 ? 0.0 : double(closed) / double(large);
}

double edit_simpliciality(const Hypergraph& g) {
  require_closure_sizes(g);
  if (g.num_edges() == 0) throw Error("edit simpliciality of an empty graph");
  const auto maximal = maximal_edges(g);
  std::vector<std::vector<std::size_t>> inc(g.num_vertices());
  std::uint64_t closure = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (!maximal[i]) continue;
    const Edge& e = g.edge(i);
    // Positions of e shared with each earlier maximal edge; a subset of e is
    // new iff no earlier maximal edge covers it.
    std::unordered_map<std::size_t, std::uint32_t> shared;
    for (std::size_t pos = 0; pos < e.size(); ++pos)
      for (std::size_t h : inc[e[pos]]) shared[h] |= std::uint32_t{1} << pos;
    std::vector<std::uint32_t> covers;
    for (auto [h, mask] : shared)
      if (std::popcount(mask) >= 2) covers.push_back(mask);
    const std::uint32_t full = (std::uint32_t{1} << e.size()) - 1;
    for (std::uint32_t mask = 1; mask <= full; ++mask) {
      if (std::popcount(mask) < 2) continue;
      const bool covered = std::any_of(covers.begin(), covers.end(),
                                       [mask](std::uint32_t c) { return (mask & c) == mask; });
      closure += covered ? 0 : 1;
    }
    for (Vertex v : e) inc[v].push_back(i);
  }
  return double(g.num_edges()) / double(closure);
}

double face_edit_simpliciality(const Hypergraph& g) {
  require_closure_sizes(g);
  const auto maximal = maximal_edges(g);
  const auto inc = g.incidence();
  std::vector<std::size_t> mark(g.num_edges(), g.num_edges());
  double sum = 0;
  std::size_t faces = 0;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    const Edge& e = g.edge(i);
    if (!maximal[i] || e.size() < 3) continue;
    std::size_t inside = 0;
    for (Vertex v : e) {
      for (std::size_t h : inc[v]) {
        if (mark[h] == i) continue;
        mark[h] = i;
        const Edge& f = g.edge(h);
        if (f.size() <= e.size() && std::includes(e.begin(), e.end(), f.begin(), f.end())) ++inside;
      }
    }
    const double subsets = double((std::uint64_t{1} << e.size()) - e.size() - 1);
    sum += double(inside) / subsets;
    ++faces;
  }
  return faces == 0 ? 0.0 : sum / double(faces);
}

LegacyMeasures legacy_measures(const Hypergraph& g) {
  LegacyMeasures out;
  out.simplicial_fraction = simplicial_fraction(g);
  out.edit_simpliciality = edit_simpliciality(g);
  out.face_edit_simpliciality = face_edit_simpliciality(g);
  out.simplicial_fraction_defined =
      std::any_of(g.edges().begin(), g.edges().end(), [](const Edge& e) { return e.size() >= 3; });
  const auto maximal = maximal_edges(g);
  out.face_edit_simpliciality_defined = false;
  for (std::size_t i = 0; i < g.num_edges(); ++i)
    if (maximal[i] && g.edge(i).size() >= 3) out.face_edit_simpliciality_defined = true;
  return out;
}

SimplicialReport build_report(const PairCounts& counts, const ExpectationMatrix& exp) {
  SimplicialReport r;
  r.ratio = simplicial_ratio(counts, exp);
  r.matrix = simplicial_matrix(counts, exp);
  r.weights = simplicial_weights(exp);
  if (counts.up_by_type) {
    r.temporal = temporal_ratios(counts, exp);
    r.temporal_matrix = temporal_matrix(counts, exp);
  }
  r.counts = counts;
  r.expectation = exp;
  return r;
}

namespace {

std::string format_cell(const MatrixCell& c) {
  if (c.unresolved) return "unresolved";
  if (c.value > 1000) return ">1k";
  char buf[32];
  std::snprintf(buf, sizeof buf, "%.2f", c.value);
  return buf;
}

}  // namespace

std::string render_matrix(const PartialMatrix& m) {
  std::ostringstream out;
  for (const auto& [key, cell] : m)
    out << '(' << key.first << ',' << key.second << "): " << format_cell(cell) << '\n';
  return out.str();
}

std::string matrix_csv(const PartialMatrix& m) {
  if (m.empty()) return "i\\j\n";
  int lo = m.begin()->first.first, hi = lo;
  for (const auto& [key, cell] : m) {
    lo = std::min({lo, key.first, key.second});
    hi = std::max({hi, key.first, key.second});
  }
  std::ostringstream out;
  out << "i\\j";
  for (int j = lo; j <= hi; ++j) out << ',' << j;
  out << '\n';
  for (int i = lo; i <= hi; ++i) {
    out << i;
    for (int j = lo; j <= hi; ++j) {
      out << ',';
      auto it = m.find({i, j});
      if (it == m.end()) continue;
      if (it->second.unresolved) {
        out << "unresolved";
      } else {
        char buf[40];
        std::snprintf(buf, sizeof buf, "%.17g", it->second.value);
        out << buf;
      }
    }
    out << '\n';
  }
  return out.str();
}

}  // namespace hypersimp
