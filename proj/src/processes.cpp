#include "hypersimp/processes.hpp"

#include <algorithm>
#include <bit>
#include <cmath>
#include <cstdio>
#include <deque>
#include <numeric>

#include "hypersimp/genmodel.hpp"
#include "hypersimp/union_find.hpp"

namespace hypersimp {
namespace {

constexpr std::size_t kBatch = 256;

// Runs `trajectory(rep)` for every replicate, in parallel batches, and feeds
// the results to the builder in replicate order.
template <class Fn>
CurveBuilder collect(std::size_t reps, Fn&& trajectory) {
  CurveBuilder builder;
  for (std::size_t start = 0; start < reps; start += kBatch) {
    const std::size_t count = std::min(kBatch, reps - start);
    std::vector<std::vector<double>> slots(count);
    parallel_for(count, [&](std::size_t i) { slots[i] = trajectory(start + i); });
    for (const auto& s : slots) builder.add(s);
  }
  return builder;
}

std::vector<double> normalized(std::vector<double> v, double by) {
  for (auto& x : v) x /= by;
  return v;
}

std::vector<double> adversarial_trajectory(const Hypergraph& g, std::span<const double> betweenness, Rng& rng) {
  // Ties are values equal up to rounding noise of the accumulation.
  std::vector<std::size_t> order(g.num_edges());
  std::iota(order.begin(), order.end(), std::size_t{0});
  std::stable_sort(order.begin(), order.end(),
                   [&](std::size_t a, std::size_t b) { return betweenness[a] < betweenness[b]; });
  std::size_t begin = 0;
  while (begin < order.size()) {
    std::size_t end = begin + 1;
    const double v = betweenness[order[begin]];
    while (end < order.size() && betweenness[order[end]] - v <= 1e-9 * std::max(1.0, std::abs(v))) ++end;
    for (std::size_t i = end - begin; i > 1; --i)
      std::swap(order[begin + i - 1], order[begin + rng.below(i)]);
    begin = end;
  }
  return giant_component_trajectory(g, order);
}

std::vector<double> diffusion_trajectory(const Hypergraph& g, DiffusionInit init, std::size_t rounds, Rng& rng) {
  auto state = initial_diffusion(g.num_vertices(), init, rng);
  auto& w = state.mass;
  const double n = double(w.size());
  const double total = std::accumulate(w.begin(), w.end(), 0.0);
  std::vector<double> out;
  out.reserve(rounds + 1);
  // Running sum of |n * w_v - total|, i.e. 2n times the distance.
  double scaled = 2 * n * wasserstein_to_uniform(w, state.target);
  out.push_back(wasserstein_to_uniform(w, state.target));
  for (std::size_t r = 1; r <= rounds; ++r) {
    const Edge& e = g.edge(static_cast<std::size_t>(rng.below(g.num_edges())));
    for (Vertex v : e) scaled -= std::abs(n * w[v] - total);
    diffuse_on(w, e);
    for (Vertex v : e) scaled += std::abs(n * w[v] - total);
    if (r % 256 == 0) {
      out.push_back(wasserstein_to_uniform(w, state.target));
      scaled = 2 * n * out.back();
    } else {
      out.push_back(std::max(0.0, scaled / (2 * n)));
    }
  }
  return out;
}

}  // namespace

void CurveBuilder::add(std::span<const double> trajectory) {
  runs_.emplace_back(trajectory.begin(), trajectory.end());
}

Curve CurveBuilder::finish(std::size_t first_x, double normalizer) const {
  Curve c;
  c.reps = runs_.size();
  c.normalizer = normalizer;
  std::size_t len = 0;
  for (const auto& r : runs_) len = std::max(len, r.size());
  c.x.resize(len);
  std::iota(c.x.begin(), c.x.end(), first_x);
  c.mean.assign(len, 0.0);
  c.std.assign(len, 0.0);
  // Welford per step in replicate order; identical inputs give std == 0 exactly.
  for (std::size_t step = 0; step < len; ++step) {
    double mean = 0, m2 = 0;
    std::size_t n = 0;
    for (const auto& r : runs_) {
      if (r.empty()) continue;
      const double x = step < r.size() ? r[step] : r.back();
      ++n;
      const double delta = x - mean;
      mean += delta / double(n);
      m2 += delta * (x - mean);
    }
    c.mean[step] = mean;
    c.std[step] = n > 1 ? std::sqrt(std::max(0.0, m2 / double(n - 1))) : 0.0;
  }
  return c;
}

std::vector<double> giant_component_trajectory(const Hypergraph& g, std::span<const std::size_t> order) {
  const std::size_t steps = std::min({g.num_edges(), g.num_vertices(), order.size()});
  UnionFind uf(g.num_vertices());
  std::size_t giant = g.num_vertices() > 0 ? 1 : 0;
  std::vector<double> out;
  out.reserve(steps);
  for (std::size_t i = 0; i < steps; ++i) {
    const Edge& e = g.edge(order[i]);
    for (std::size_t j = 1; j < e.size(); ++j) uf.unite(e[0], e[j]);
    giant = std::max(giant, uf.size_of(e[0]));
    out.push_back(double(giant));
  }
  return out;
}

Curve random_growth(const Hypergraph& g, std::size_t reps, std::uint64_t seed) {
  const double n = double(g.num_vertices());
  auto builder = collect(reps, [&](std::size_t rep) {
    Rng rng = Rng::substream(seed, stream_id("random_growth"), rep);
    std::vector<std::size_t> order(g.num_edges());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    return normalized(giant_component_trajectory(g, order), n);
  });
  return builder.finish(1, n);
}

std::vector<double> edge_betweenness(const Hypergraph& g, std::size_t line_graph_cap) {
  if (g.num_edges() > line_graph_cap)
    throw Error("line graph of " + std::to_string(g.num_edges()) + " hyperedges exceeds the cap of " +
                std::to_string(line_graph_cap) + "; betweenness refused");
  const Adjacency adj = line_graph(g);
  const std::size_t n = adj.size();
  std::vector<double> bc(n, 0.0);
  std::vector<std::size_t> stack;
  std::vector<std::vector<std::size_t>> pred(n);
  std::vector<double> sigma(n), delta(n);
  std::vector<long> dist(n);
  for (std::size_t s = 0; s < n; ++s) {
    stack.clear();
    for (std::size_t v = 0; v < n; ++v) {
      pred[v].clear();
      sigma[v] = 0;
      delta[v] = 0;
      dist[v] = -1;
    }
    sigma[s] = 1;
    dist[s] = 0;
    std::deque<std::size_t> queue{s};
    while (!queue.empty()) {
      const auto v = queue.front();
      queue.pop_front();
      stack.push_back(v);
      for (auto w : adj[v]) {
        if (dist[w] < 0) {
          dist[w] = dist[v] + 1;
          queue.push_back(w);
        }
        if (dist[w] == dist[v] + 1) {
          sigma[w] += sigma[v];
          pred[w].push_back(v);
        }
      }
    }
    while (!stack.empty()) {
      const auto w = stack.back();
      stack.pop_back();
      for (auto v : pred[w]) delta[v] += sigma[v] / sigma[w] * (1.0 + delta[w]);
      if (w != s) bc[w] += delta[w];
    }
  }
  // Each unordered pair was counted from both endpoints.
  for (auto& b : bc) b /= 2.0;
  return bc;
}

Curve adversarial_growth(const Hypergraph& g, std::size_t reps, std::uint64_t seed, std::size_t line_graph_cap) {
  const auto bc = edge_betweenness(g, line_graph_cap);
  return adversarial_growth(g, bc, reps, seed);
}

Curve adversarial_growth(const Hypergraph& g, std::span<const double> betweenness, std::size_t reps,
                         std::uint64_t seed) {
  if (betweenness.size() != g.num_edges()) throw Error("one betweenness value per edge expected");
  const double n = double(g.num_vertices());
  auto builder = collect(reps, [&](std::size_t rep) {
    Rng rng = Rng::substream(seed, stream_id("adversarial_growth"), rep);
    return normalized(adversarial_trajectory(g, betweenness, rng), n);
  });
  return builder.finish(1, n);
}

DiffusionState initial_diffusion(std::size_t n, DiffusionInit init, Rng& rng) {
  if (n == 0) throw Error("diffusion on an empty vertex set");
  DiffusionState s;
  s.mass.assign(n, 0.0);
  if (init == DiffusionInit::single_source) {
    s.mass[static_cast<std::size_t>(rng.below(n))] = 1.0;
    s.target = 1.0 / double(n);
    return s;
  }
  const std::size_t sources = (n + 9) / 10;
  std::vector<std::size_t> ids(n);
  std::iota(ids.begin(), ids.end(), std::size_t{0});
  for (std::size_t i = 0; i < sources; ++i) std::swap(ids[i], ids[i + rng.below(n - i)]);
  for (std::size_t i = 0; i < sources; ++i) s.mass[ids[i]] = 1.0;
  s.target = double(sources) / double(n);
  return s;
}

void diffuse_on(std::vector<double>& mass, const Edge& e) noexcept {
  double total = 0;
  for (Vertex v : e) total += mass[v];
  const double share = total / double(e.size());
  for (Vertex v : e) mass[v] = share;
}

double wasserstein_to_uniform(std::span<const double> mass, double target) {
  const double n = double(mass.size());
  const double total = std::accumulate(mass.begin(), mass.end(), 0.0);
  const double expected = target * n;
  if (std::abs(total - expected) > 1e-9 * std::max(1.0, expected))
    throw Error("mass " + std::to_string(total) + " does not match the target total " + std::to_string(expected));
  // Half of sum |w_v - total / n|, scaled by n so integer masses stay exact.
  double scaled = 0;
  for (double w : mass) scaled += std::abs(n * w - total);
  return scaled / (2 * n);
}

Curve diffusion(const Hypergraph& g, DiffusionInit init, std::size_t rounds, std::size_t reps,
                std::uint64_t seed) {
  if (rounds == 0) throw Error("diffusion needs at least one round");
  if (g.num_edges() == 0) throw Error("diffusion on a graph without edges");
  auto builder = collect(reps, [&](std::size_t rep) {
    Rng rng = Rng::substream(seed, stream_id("diffusion"), rep);
    return diffusion_trajectory(g, init, rounds, rng);
  });
  return builder.finish(0);
}

Experiment parse_experiment(const std::string& name) {
  if (name == "random-growth") return Experiment::random_growth;
  if (name == "adversarial-growth") return Experiment::adversarial_growth;
  if (name == "diffusion-single") return Experiment::diffusion_single;
  if (name == "diffusion-fraction") return Experiment::diffusion_fraction;
  throw Error("unknown experiment '" + name +
              "' (expected random-growth, adversarial-growth, diffusion-single or diffusion-fraction)");
}

std::string to_string(Experiment e) {
  switch (e) {
    case Experiment::random_growth: return "random-growth";
    case Experiment::adversarial_growth: return "adversarial-growth";
    case Experiment::diffusion_single: return "diffusion-single";
    case Experiment::diffusion_fraction: return "diffusion-fraction";
  }
  return "unknown";
}

namespace {

// One replicate of the chosen process on a given graph.
std::vector<double> run_once(const Hypergraph& g, Experiment which, const SuiteOptions& opts,
                             std::span<const double> betweenness, Rng& rng) {
  const double n = double(g.num_vertices());
  switch (which) {
    case Experiment::random_growth: {
      std::vector<std::size_t> order(g.num_edges());
      std::iota(order.begin(), order.end(), std::size_t{0});
      rng.shuffle(order);
      return normalized(giant_component_trajectory(g, order), n);
    }
    case Experiment::adversarial_growth:
      return normalized(adversarial_trajectory(g, betweenness, rng), n);
    case Experiment::diffusion_single:
      return diffusion_trajectory(g, DiffusionInit::single_source, opts.rounds, rng);
    case Experiment::diffusion_fraction:
      return diffusion_trajectory(g, DiffusionInit::fraction, opts.rounds, rng);
  }
  return {};
}

bool is_growth(Experiment e) { return e == Experiment::random_growth || e == Experiment::adversarial_growth; }

}  // namespace

std::vector<Series> run_experiment_suite(const Hypergraph& real, Experiment which, const SuiteOptions& opts) {
  if (!is_growth(which) && opts.rounds == 0) throw Error("diffusion needs at least one round");
  const std::size_t first_x = is_growth(which) ? 1 : 0;
  const double normalizer = is_growth(which) ? double(real.num_vertices()) : 1.0;
  std::vector<Series> out;

  {
    Series s;
    s.label = "real";
    std::vector<double> bc;
    if (which == Experiment::adversarial_growth) bc = edge_betweenness(real, opts.line_graph_cap);
    // Adversarial growth on a fixed graph only varies through tie-breaks; one run.
    const std::size_t reps = which == Experiment::adversarial_growth ? 1 : opts.real_reps;
    const auto stream = stream_id("suite-real");
    for (std::size_t r = 0; r < reps; ++r) s.replicate_seeds.push_back(derive_seed(opts.seed, stream, r));
    auto builder = collect(reps, [&](std::size_t rep) {
      Rng rng(s.replicate_seeds[rep]);
      return run_once(real, which, opts, bc, rng);
    });
    s.curve = builder.finish(first_x, normalizer);
    out.push_back(std::move(s));
  }

  const DegreeSequence d = degree_sequence(real);
  const EdgeSizeSequence m = edge_size_sequence(real);
  for (double q : opts.q_values) {
    if (!(q >= 0.0 && q <= 1.0)) throw Error("q must lie in [0, 1]");
    Series s;
    s.q = q;
    char label[32];
    std::snprintf(label, sizeof label, "q=%g", q);
    s.label = label;
    const auto stream = stream_id("suite-model", std::bit_cast<std::uint64_t>(q));
    for (std::size_t r = 0; r < opts.reps; ++r) s.replicate_seeds.push_back(derive_seed(opts.seed, stream, r));
    auto builder = collect(opts.reps, [&](std::size_t rep) {
      GenSpec spec{d, m, q, s.replicate_seeds[rep], true};
      const Multigraph raw = generate(spec);
      const Hypergraph g = preprocess(simplify(raw).graph, {2, opts.max_size}).graph;
      Rng rng = Rng::substream(s.replicate_seeds[rep], stream_id("process"), 0);
      std::vector<double> bc;
      if (which == Experiment::adversarial_growth) bc = edge_betweenness(g, opts.line_graph_cap);
      return run_once(g, which, opts, bc, rng);
    });
    s.curve = builder.finish(first_x, normalizer);
    out.push_back(std::move(s));
  }
  return out;
}

}  // namespace hypersimp
