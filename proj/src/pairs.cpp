#include "hypersimp/pairs.hpp"

#include <algorithm>

namespace hypersimp {
namespace {

std::uint64_t sum(const std::optional<TypeCounts>& t) {
  std::uint64_t s = 0;
  if (t)
    for (auto [k, c] : *t) s += c;
  return s;
}

void record(PairCounts& out, const Hypergraph& g, std::size_t smaller, std::size_t larger) {
  const SizePair key{static_cast<int>(g.edge(smaller).size()), static_cast<int>(g.edge(larger).size())};
  ++out.total;
  ++out.by_type[key];
  if (g.temporal()) ++(smaller < larger ? *out.up_by_type : *out.down_by_type)[key];
}

PairCounts empty_counts(const Hypergraph& g) {
  PairCounts out;
  if (g.temporal()) {
    out.up_by_type.emplace();
    out.down_by_type.emplace();
  }
  return out;
}

// Keeps the up/down maps keyed identically to by_type.
void fill_missing_keys(PairCounts& out) {
  if (!out.up_by_type) return;
  for (auto [key, c] : out.by_type) {
    (*out.up_by_type)[key];
    (*out.down_by_type)[key];
  }
}

}  // namespace

std::uint64_t PairCounts::up_total() const { return sum(up_by_type); }
std::uint64_t PairCounts::down_total() const { return sum(down_by_type); }

void for_each_pair(const Hypergraph& g,
                   const std::function<void(std::size_t, std::size_t)>& visit) {
  const auto inc = g.incidence();
  for (std::size_t f = 0; f < g.num_edges(); ++f) {
    const Edge& small = g.edge(f);
    Vertex pivot = small.front();
    for (Vertex v : small)
      if (inc[v].size() < inc[pivot].size()) pivot = v;
    for (std::size_t h : inc[pivot]) {
      const Edge& big = g.edge(h);
      if (big.size() <= small.size()) continue;
      if (std::includes(big.begin(), big.end(), small.begin(), small.end())) visit(f, h);
    }
  }
}

PairCounts count_pairs(const Hypergraph& g) {
  PairCounts out = empty_counts(g);
  for_each_pair(g, [&](std::size_t s, std::size_t l) { record(out, g, s, l); });
  fill_missing_keys(out);
  return out;
}

PairCounts count_pairs_brute(const Hypergraph& g, std::size_t max_edges) {
  if (g.num_edges() > max_edges)
    throw Error("brute-force pair count capped at " + std::to_string(max_edges) + " edges");
  PairCounts out = empty_counts(g);
  for (std::size_t a = 0; a < g.num_edges(); ++a) {
    for (std::size_t b = 0; b < g.num_edges(); ++b) {
      if (a == b) continue;
      const Edge& ea = g.edge(a);
      const Edge& eb = g.edge(b);
      // Proper subset: every vertex of a found in b, and b strictly larger.
      if (ea.size() >= eb.size()) continue;
      bool inside = true;
      for (Vertex v : ea) inside = inside && std::find(eb.begin(), eb.end(), v) != eb.end();
      if (inside) record(out, g, a, b);
    }
  }
  fill_missing_keys(out);
  return out;
}

std::vector<bool> maximal_edges(const Hypergraph& g) {
  std::vector<bool> maximal(g.num_edges(), true);
  for_each_pair(g, [&](std::size_t s, std::size_t) { maximal[s] = false; });
  return maximal;
}

}  // namespace hypersimp
