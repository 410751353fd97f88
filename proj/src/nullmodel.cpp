#include "hypersimp/nullmodel.hpp"

#include <algorithm>
#include <bit>
#include <cmath>

namespace hypersimp {
namespace {

constexpr std::size_t kChunk = 1024;
constexpr std::uint64_t kRejectionCap = 100'000'000;

double factorial(int k) {
  double f = 1;
  for (int i = 2; i <= k; ++i) f *= i;
  return f;
}

// e_0..e_kmax of the given values.
std::vector<double> elementary_symmetric(std::span<const double> x, int kmax) {
  std::vector<double> e(static_cast<std::size_t>(kmax) + 1, 0.0);
  e[0] = 1.0;
  for (double xi : x)
    for (int j = kmax; j >= 1; --j) e[j] += xi * e[j - 1];
  return e;
}

double binomial(double n, int k) {
  if (k < 0 || k > n) return 0;
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

void require_sizes(const DegreeSequence& d, const EdgeSizeSequence& m) {
  if (d.total() == 0) throw Error("degree sequence is all zero");
  for (auto [k, count] : m.counts())
    if (d.positive_count() < static_cast<std::size_t>(k))
      throw Error("size " + std::to_string(k) + " needs " + std::to_string(k) +
                  " positive-degree vertices but only " + std::to_string(d.positive_count()) +
                  " exist; simple edges can never be drawn");
}

}  // namespace

ChungLuSampler::ChungLuSampler(DegreeSequence d) : d_(std::move(d)) {
  if (d_.total() == 0) throw Error("degree sequence is all zero");
  table_ = AliasTable(d_.values());
}

Edge ChungLuSampler::draw(int k, Rng& rng) const {
  if (k < 1) throw Error("edge size must be positive");
  Edge e(static_cast<std::size_t>(k));
  for (auto& v : e) v = draw_vertex(rng);
  return e;
}

Edge ChungLuSampler::draw_simple(int k, Rng& rng) const {
  if (k < 1) throw Error("edge size must be positive");
  if (d_.positive_count() < static_cast<std::size_t>(k))
    throw Error("cannot draw a simple edge of size " + std::to_string(k) + " from " +
                std::to_string(d_.positive_count()) + " positive-degree vertices");
  Edge e;
  e.reserve(static_cast<std::size_t>(k));
  for (std::uint64_t attempt = 0; attempt < kRejectionCap; ++attempt) {
    // Stopping at the first repeat rejects exactly the same draws as
    // completing the tuple first.
    e.clear();
    bool simple = true;
    for (int i = 0; i < k && simple; ++i) {
      const Vertex v = draw_vertex(rng);
      simple = std::find(e.begin(), e.end(), v) == e.end();
      e.push_back(v);
    }
    if (simple) {
      std::sort(e.begin(), e.end());
      return e;
    }
  }
  throw Error("rejection sampling of a simple size-" + std::to_string(k) + " edge did not terminate");
}

Edge cl_edge(const DegreeSequence& d, int k, Rng& rng) { return ChungLuSampler(d).draw(k, rng); }

Edge cl_edge_simple(const DegreeSequence& d, int k, Rng& rng) {
  return ChungLuSampler(d).draw_simple(k, rng);
}

Multigraph cl_graph(const DegreeSequence& d, const EdgeSizeSequence& m, Rng& rng,
                    bool require_simple_edges) {
  Multigraph g;
  g.n = d.size();
  if (m.empty()) return g;
  const ChungLuSampler sampler(d);
  g.edges.reserve(m.num_edges());
  for (auto [k, count] : m.counts()) {
    for (std::uint64_t i = 0; i < count; ++i) {
      Edge e = require_simple_edges ? sampler.draw_simple(k, rng) : sampler.draw(k, rng);
      std::sort(e.begin(), e.end());
      g.edges.push_back(std::move(e));
    }
  }
  return g;
}

double estimate_p_simple(const DegreeSequence& d, int k, std::size_t s, Rng& rng) {
  if (s == 0) throw Error("sample count must be positive");
  const ChungLuSampler sampler(d);
  std::size_t simple = 0;
  for (std::size_t i = 0; i < s; ++i) {
    Edge e = sampler.draw(k, rng);
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) == e.end()) ++simple;
  }
  return double(simple) / double(s);
}

double exact_p_simple(const DegreeSequence& d, int k) {
  if (d.total() == 0) throw Error("degree sequence is all zero");
  if (k < 1) throw Error("edge size must be positive");
  std::vector<double> p(d.size());
  for (std::size_t v = 0; v < d.size(); ++v) p[v] = d.probability(v);
  return factorial(k) * elementary_symmetric(p, k)[static_cast<std::size_t>(k)];
}

double subset_pair_probability(std::span<const Vertex> edge, int k, const DegreeSequence& d,
                               double p_simple_k) {
  if (p_simple_k <= 0) throw Error("p_simple must be positive");
  if (k < 1 || static_cast<std::size_t>(k) >= edge.size())
    throw Error("subset size must be smaller than the containing edge");
  std::vector<double> p(edge.size());
  for (std::size_t i = 0; i < edge.size(); ++i) p[i] = d.probability(edge[i]);
  return factorial(k) * elementary_symmetric(p, k)[static_cast<std::size_t>(k)] / p_simple_k;
}

double ExpectationMatrix::value(int k, int l) const {
  auto it = by_type.find({k, l});
  if (it == by_type.end()) throw Error("no expectation cell (" + std::to_string(k) + "," + std::to_string(l) + ")");
  return it->second.value;
}

ExpectationMatrix estimate_expected_pairs(const DegreeSequence& d, const EdgeSizeSequence& m,
                                          const EstimateOptions& opts) {
  if (opts.samples == 0) throw Error("sample count must be positive");
  require_sizes(d, m);
  ExpectationMatrix out;
  out.samples = opts.samples;
  out.seed = opts.seed;
  out.p_simple_method = opts.p_simple;
  if (m.empty()) return out;

  const ChungLuSampler sampler(d);
  const std::size_t chunks = (opts.samples + kChunk - 1) / kChunk;
  auto chunk_range = [&](std::size_t c) {
    return std::pair{c * kChunk, std::min(opts.samples, (c + 1) * kChunk)};
  };

  // Relative variance of each p_simple estimate, propagated into the cells.
  std::map<int, double> p_rel_var;
  for (auto [k, count] : m.counts()) {
    if (opts.p_simple == PSimpleMethod::exact) {
      out.p_simple[k] = exact_p_simple(d, k);
      p_rel_var[k] = 0;
      continue;
    }
    std::vector<std::size_t> hits(chunks, 0);
    parallel_for(chunks, [&](std::size_t c) {
      Rng rng = Rng::substream(opts.seed, stream_id("p_simple", k), c);
      auto [lo, hi] = chunk_range(c);
      hits[c] = static_cast<std::size_t>(std::llround(estimate_p_simple(d, k, hi - lo, rng) * double(hi - lo)));
    });
    std::size_t x = 0;
    for (auto h : hits) x += h;
    if (x == 0)
      throw Error("no simple edge of size " + std::to_string(k) + " in " + std::to_string(opts.samples) +
                  " draws; raise the sample count");
    const double p = double(x) / double(opts.samples);
    out.p_simple[k] = p;
    p_rel_var[k] = (1 - p) / (p * double(opts.samples));
  }

  double total_var = 0;
  std::map<int, double> row_sum;  // sum over l of cell(k, l), for p_simple error
  for (auto [l, ml] : m.counts()) {
    std::vector<int> smaller;
    for (auto [k, mk] : m.counts())
      if (k < l) smaller.push_back(k);
    if (smaller.empty()) continue;
    std::vector<double> p_small;
    for (int k : smaller) p_small.push_back(out.p_simple.at(k));

    struct Partial {
      std::vector<double> sum, sumsq;
      double tot = 0, totsq = 0;
    };
    std::vector<Partial> partial(chunks);
    parallel_for(chunks, [&](std::size_t c) {
      Rng rng = Rng::substream(opts.seed, stream_id("pool", l), c);
      Partial& part = partial[c];
      part.sum.assign(smaller.size(), 0.0);
      part.sumsq.assign(smaller.size(), 0.0);
      std::vector<double> p(static_cast<std::size_t>(l));
      auto [lo, hi] = chunk_range(c);
      for (std::size_t i = lo; i < hi; ++i) {
        const Edge e = sampler.draw_simple(l, rng);
        for (std::size_t j = 0; j < e.size(); ++j) p[j] = d.probability(e[j]);
        const auto es = elementary_symmetric(p, l - 1);
        double row = 0;
        for (std::size_t j = 0; j < smaller.size(); ++j) {
          const int k = smaller[j];
          const double x = factorial(k) * es[static_cast<std::size_t>(k)] / p_small[j];
          part.sum[j] += x;
          part.sumsq[j] += x * x;
          row += double(m.count(k)) * double(ml) * x;
        }
        part.tot += row;
        part.totsq += row * row;
      }
    });

    const double s = double(opts.samples);
    double tot = 0, totsq = 0;
    for (std::size_t j = 0; j < smaller.size(); ++j) {
      const int k = smaller[j];
      double sum = 0, sumsq = 0;
      for (const auto& part : partial) {
        sum += part.sum[j];
        sumsq += part.sumsq[j];
      }
      const double mean = sum / s;
      const double var = s > 1 ? std::max(0.0, (sumsq - s * mean * mean) / (s - 1)) : 0.0;
      const double scale = double(m.count(k)) * double(ml);
      CellEstimate cell;
      cell.value = scale * mean;
      cell.std_error = std::sqrt(scale * scale * var / s + cell.value * cell.value * p_rel_var[k]);
      out.by_type[{k, l}] = cell;
      row_sum[k] += cell.value;
    }
    for (const auto& part : partial) {
      tot += part.tot;
      totsq += part.totsq;
    }
    const double mean = tot / s;
    total_var += s > 1 ? std::max(0.0, (totsq - s * mean * mean) / (s - 1)) / s : 0.0;
  }
  for (const auto& [key, cell] : out.by_type) out.total += cell.value;
  for (auto [k, r] : row_sum) total_var += r * r * p_rel_var[k];
  out.total_std_error = std::sqrt(total_var);
  return out;
}

ExpectationMatrix exact_expected_pairs_uniform(std::size_t n, const EdgeSizeSequence& m) {
  ExpectationMatrix out;
  for (auto [k, mk] : m.counts()) {
    if (static_cast<std::size_t>(k) > n)
      throw Error("edge size " + std::to_string(k) + " exceeds " + std::to_string(n) + " vertices");
    out.p_simple[k] = exact_p_simple(DegreeSequence::uniform(n), k);
  }
  for (auto [k, mk] : m.counts()) {
    for (auto [l, ml] : m.counts()) {
      if (l <= k) continue;
      const double v = double(mk) * double(ml) * binomial(l, k) / binomial(double(n), k);
      out.by_type[{k, l}] = {v, 0.0};
      out.total += v;
    }
  }
  return out;
}

ExpectationMatrix exact_expected_pairs_brute(const DegreeSequence& d, const EdgeSizeSequence& m,
                                             BruteLimits limits) {
  const std::size_t n = d.size();
  if (n > limits.max_vertices || (!m.empty() && m.k_max() > limits.max_size))
    throw Error("instance too large for exhaustive expectation");
  require_sizes(d, m);
  std::vector<double> p(n);
  for (std::size_t v = 0; v < n; ++v) p[v] = d.probability(v);

  ExpectationMatrix out;
  // P_simple by summing over every ordered tuple with distinct entries.
  for (auto [k, mk] : m.counts()) {
    std::vector<std::size_t> tuple(static_cast<std::size_t>(k), 0);
    double simple = 0;
    while (true) {
      std::uint32_t seen = 0;
      bool distinct = true;
      double prob = 1;
      for (auto v : tuple) {
        distinct = distinct && !(seen >> v & 1U);
        seen |= 1U << v;
        prob *= p[v];
      }
      if (distinct) simple += prob;
      std::size_t pos = 0;
      while (pos < tuple.size() && ++tuple[pos] == n) tuple[pos++] = 0;
      if (pos == tuple.size()) break;
    }
    out.p_simple[k] = simple;
  }

  // P(simple k-edge == S) for every vertex subset S.
  auto set_probability = [&](std::uint32_t mask, int k) {
    double prob = factorial(k);
    for (std::size_t v = 0; v < n; ++v)
      if (mask >> v & 1U) prob *= p[v];
    return prob / out.p_simple.at(k);
  };
  const std::uint32_t full = (std::uint32_t{1} << n) - 1;
  for (auto [k, mk] : m.counts()) {
    for (auto [l, ml] : m.counts()) {
      if (l <= k) continue;
      double sum = 0;
      for (std::uint32_t t = 0; t <= full; ++t) {
        if (std::popcount(t) != l) continue;
        const double pt = set_probability(t, l);
        for (std::uint32_t s = t; s; s = (s - 1) & t)
          if (std::popcount(s) == k) sum += set_probability(s, k) * pt;
      }
      const double v = double(mk) * double(ml) * sum;
      out.by_type[{k, l}] = {v, 0.0};
      out.total += v;
    }
  }
  return out;
}

}  // namespace hypersimp
