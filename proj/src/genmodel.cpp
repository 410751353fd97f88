#include "hypersimp/genmodel.hpp"

#include <algorithm>
#include <bit>
#include <map>
#include <numeric>

namespace hypersimp {

std::vector<std::string> validate(const GenSpec& spec) {
  if (!(spec.q >= 0.0 && spec.q <= 1.0)) throw Error("q must lie in [0, 1]");
  std::vector<std::string> warnings;
  if (spec.sizes.volume() != spec.degrees.total())
    warnings.push_back("sum of k*m_k (" + std::to_string(spec.sizes.volume()) + ") differs from sum of degrees (" +
                       std::to_string(spec.degrees.total()) + "); degrees act as relative weights only");
  return warnings;
}

void EdgeSizeIndex::add(std::size_t edge_index, std::size_t size) {
  if (size >= by_size_.size()) by_size_.resize(size + 1);
  by_size_[size].push_back(edge_index);
  ++total_;
}

std::size_t EdgeSizeIndex::count_other_than(std::size_t k) const noexcept {
  return total_ - (k < by_size_.size() ? by_size_[k].size() : 0);
}

std::size_t EdgeSizeIndex::pick_other_than(std::size_t k, Rng& rng) const {
  const auto available = count_other_than(k);
  if (available == 0) throw Error("no edge of a different size to build from");
  auto r = static_cast<std::size_t>(rng.below(available));
  for (std::size_t size = 0; size < by_size_.size(); ++size) {
    if (size == k) continue;
    if (r < by_size_[size].size()) return by_size_[size][r];
    r -= by_size_[size].size();
  }
  throw Error("edge size index is inconsistent");
}

Edge simplicial_edge(const ChungLuSampler& sampler, int k, std::span<const Edge> edges,
                     const EdgeSizeIndex& index, Rng& rng) {
  if (k < 2) throw Error("edge size must be at least 2");
  const auto size = static_cast<std::size_t>(k);
  Edge e;
  if (index.count_other_than(size) == 0) {
    e = sampler.draw(k, rng);
  } else {
    const Edge& base = edges[index.pick_other_than(size, rng)];
    if (base.size() > size) {
      // Partial Fisher-Yates over positions gives a uniform k-subset.
      std::vector<std::size_t> pos(base.size());
      std::iota(pos.begin(), pos.end(), std::size_t{0});
      for (std::size_t i = 0; i < size; ++i) std::swap(pos[i], pos[i + rng.below(pos.size() - i)]);
      for (std::size_t i = 0; i < size; ++i) e.push_back(base[pos[i]]);
    } else {
      e = base;
      const Edge extra = sampler.draw(static_cast<int>(size - base.size()), rng);
      e.insert(e.end(), extra.begin(), extra.end());
    }
  }
  std::sort(e.begin(), e.end());
  return e;
}

Edge simplicial_edge(const DegreeSequence& d, int k, std::span<const Edge> edges, Rng& rng) {
  EdgeSizeIndex index;
  for (std::size_t i = 0; i < edges.size(); ++i) index.add(i, edges[i].size());
  return simplicial_edge(ChungLuSampler(d), k, edges, index, rng);
}

std::vector<int> shuffled_sizes(const EdgeSizeSequence& m, Rng& rng) {
  std::vector<int> sizes;
  sizes.reserve(m.num_edges());
  for (auto [k, count] : m.counts()) sizes.insert(sizes.end(), count, k);
  rng.shuffle(sizes);
  return sizes;
}

Multigraph simplicial_cl_graph(const DegreeSequence& d, const EdgeSizeSequence& m, double q, Rng& rng,
                               std::vector<Edge> initial) {
  if (!(q >= 0.0 && q <= 1.0)) throw Error("q must lie in [0, 1]");
  Multigraph g;
  g.n = d.size();
  g.edges = std::move(initial);
  if (m.empty()) return g;
  const ChungLuSampler sampler(d);
  EdgeSizeIndex index;
  for (std::size_t i = 0; i < g.edges.size(); ++i) index.add(i, g.edges[i].size());
  g.edges.reserve(g.edges.size() + m.num_edges());
  for (int k : shuffled_sizes(m, rng)) {
    Edge e;
    if (rng.bernoulli(q)) {
      e = simplicial_edge(sampler, k, g.edges, index, rng);
    } else {
      e = sampler.draw(k, rng);
      std::sort(e.begin(), e.end());
    }
    index.add(g.edges.size(), e.size());
    g.edges.push_back(std::move(e));
  }
  return g;
}

Multigraph simplicial_cl_graph(const GenSpec& spec, Rng& rng) {
  return simplicial_cl_graph(spec.degrees, spec.sizes, spec.q, rng);
}

namespace {

/// Live components keyed by their root vertex, with integer degree weights.
class Components {
 public:
  explicit Components(const DegreeSequence& d) : d_(d), fenwick_(d.size() + 1, 0), members_(d.size()),
                                                 cumulative_(d.size()), live_pos_(d.size(), kDead) {
    for (std::size_t v = 0; v < d.size(); ++v) {
      if (d[v] == 0) continue;
      members_[v] = {static_cast<Vertex>(v)};
      cumulative_[v] = {d[v]};
      live_pos_[v] = live_.size();
      live_.push_back(v);
      add(v, static_cast<std::int64_t>(d[v]));
      total_ += d[v];
    }
  }

  std::size_t count() const noexcept { return live_.size(); }
  const std::vector<std::size_t>& live() const noexcept { return live_; }
  std::uint64_t weight(std::size_t root) const { return cumulative_[root].back(); }

  std::size_t sample_root(Rng& rng) const {
    // Fenwick descent for the first slot whose prefix sum exceeds r.
    std::uint64_t r = rng.below(total_);
    std::size_t pos = 0;
    std::size_t step = std::bit_floor(fenwick_.size() - 1);
    for (; step; step >>= 1) {
      if (pos + step < fenwick_.size() && static_cast<std::uint64_t>(fenwick_[pos + step]) <= r) {
        pos += step;
        r -= static_cast<std::uint64_t>(fenwick_[pos]);
      }
    }
    return pos;  // 0-based slot = pos
  }

  Vertex designated(std::size_t root, Rng& rng) const {
    const auto& cum = cumulative_[root];
    const auto r = rng.below(cum.back());
    const auto at = std::upper_bound(cum.begin(), cum.end(), r) - cum.begin();
    return members_[root][static_cast<std::size_t>(at)];
  }

  /// Merges the given roots; returns the surviving root.
  std::size_t merge(const std::vector<std::size_t>& roots) {
    std::size_t keep = roots.front();
    for (auto r : roots)
      if (members_[r].size() > members_[keep].size()) keep = r;
    for (auto r : roots) {
      if (r == keep) continue;
      for (Vertex v : members_[r]) {
        members_[keep].push_back(v);
        cumulative_[keep].push_back(cumulative_[keep].back() + d_[v]);
      }
      add(keep, static_cast<std::int64_t>(weight(r)));
      add(r, -static_cast<std::int64_t>(weight(r)));
      members_[r].clear();
      members_[r].shrink_to_fit();
      cumulative_[r].clear();
      cumulative_[r].shrink_to_fit();
      const auto pos = live_pos_[r];
      live_[pos] = live_.back();
      live_pos_[live_[pos]] = pos;
      live_.pop_back();
      live_pos_[r] = kDead;
    }
    return keep;
  }

 private:
  static constexpr std::size_t kDead = static_cast<std::size_t>(-1);

  void add(std::size_t slot, std::int64_t delta) {
    for (std::size_t i = slot + 1; i < fenwick_.size(); i += i & (~i + 1)) fenwick_[i] += delta;
  }

  const DegreeSequence& d_;
  std::vector<std::int64_t> fenwick_;
  std::vector<std::vector<Vertex>> members_;
  std::vector<std::vector<std::uint64_t>> cumulative_;
  std::vector<std::size_t> live_;
  std::vector<std::size_t> live_pos_;
  std::uint64_t total_ = 0;
};

constexpr int kRejectionTries = 64;

// k distinct live components with P(set) proportional to the product of
// weights. Cheap rejection first, then an exact sequential draw driven by
// elementary symmetric polynomials of the suffix weights.
std::vector<std::size_t> distinct_components(const Components& comps, std::size_t k, Rng& rng) {
  std::vector<std::size_t> chosen;
  for (int attempt = 0; attempt < kRejectionTries; ++attempt) {
    chosen.clear();
    bool distinct = true;
    for (std::size_t i = 0; i < k && distinct; ++i) {
      const auto r = comps.sample_root(rng);
      distinct = std::find(chosen.begin(), chosen.end(), r) == chosen.end();
      chosen.push_back(r);
    }
    if (distinct) return chosen;
  }

  const auto& live = comps.live();
  const std::size_t c = live.size();
  double total = 0;
  for (auto r : live) total += double(comps.weight(r));
  // suffix[i][j] = e_j(w_i, ..., w_{c-1}) with weights normalised by total.
  std::vector<std::vector<double>> suffix(c + 1, std::vector<double>(k + 1, 0.0));
  suffix[c][0] = 1.0;
  for (std::size_t i = c; i-- > 0;) {
    const double w = double(comps.weight(live[i])) / total;
    suffix[i][0] = 1.0;
    for (std::size_t j = 1; j <= k; ++j) suffix[i][j] = suffix[i + 1][j] + w * suffix[i + 1][j - 1];
  }
  chosen.clear();
  std::size_t need = k;
  for (std::size_t i = 0; i < c && need > 0; ++i) {
    const double w = double(comps.weight(live[i])) / total;
    const double take = w * suffix[i + 1][need - 1] / suffix[i][need];
    if (c - i == need || rng.uniform() < take) {
      chosen.push_back(live[i]);
      --need;
    }
  }
  return chosen;
}

}  // namespace

Skeleton connected_skeleton(const DegreeSequence& d, const EdgeSizeSequence& m, Rng& rng) {
  if (d.positive_count() < 2) throw Error("a connected skeleton needs at least 2 positive-degree vertices");
  const ChungLuSampler sampler(d);
  Components comps(d);
  const auto sizes = shuffled_sizes(m, rng);
  Skeleton out;
  std::map<int, std::uint64_t> used;
  std::size_t next = 0;
  while (comps.count() > 1) {
    if (next == sizes.size())
      throw Error("edge sizes exhausted with " + std::to_string(comps.count()) +
                  " components left; these sizes cannot connect the graph");
    const int k = sizes[next++];
    ++used[k];
    const auto join = std::min<std::size_t>(static_cast<std::size_t>(k), comps.count());
    const auto roots = distinct_components(comps, join, rng);
    Edge e;
    for (auto r : roots) e.push_back(comps.designated(r, rng));
    if (join < static_cast<std::size_t>(k)) {
      const Edge extra = sampler.draw(k - static_cast<int>(join), rng);
      e.insert(e.end(), extra.begin(), extra.end());
    }
    std::sort(e.begin(), e.end());
    comps.merge(roots);
    out.edges.push_back(std::move(e));
  }
  std::map<int, std::uint64_t> remaining;
  for (auto [k, count] : m.counts()) remaining[k] = count - used[k];
  out.remaining = EdgeSizeSequence(std::move(remaining));
  return out;
}

Multigraph connected_simplicial_cl(const GenSpec& spec, Rng& rng) {
  Skeleton skeleton = connected_skeleton(spec.degrees, spec.sizes, rng);
  return simplicial_cl_graph(spec.degrees, skeleton.remaining, spec.q, rng, std::move(skeleton.edges));
}

Multigraph generate(const GenSpec& spec) {
  Rng rng(spec.seed);
  return spec.require_connected ? connected_simplicial_cl(spec, rng) : simplicial_cl_graph(spec, rng);
}

}  // namespace hypersimp
