#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <numeric>
#include <set>

#include "hypersimp/genmodel.hpp"
#include "hypersimp/processes.hpp"
#include "oracles.hpp"

using namespace hypersimp;
using Sizes = std::map<int, std::uint64_t>;

namespace {

Hypergraph random_graph(Rng& rng, std::size_t edges, Vertex n) {
  std::vector<Edge> out;
  while (out.size() < edges) {
    Edge e;
    const auto k = 2 + rng.below(3);
    while (e.size() < k) {
      const auto v = static_cast<Vertex>(rng.below(n));
      if (std::find(e.begin(), e.end(), v) == e.end()) e.push_back(v);
    }
    std::sort(e.begin(), e.end());
    out.push_back(e);
  }
  return Hypergraph(n, out);
}

}  // namespace

TEST_CASE("curve builder pads with the last value") {
  CurveBuilder b;
  const std::vector<double> a{1, 2, 3}, c{1};
  b.add(a);
  b.add(c);
  const auto curve = b.finish(1, 4);
  CHECK(curve.x == std::vector<std::size_t>{1, 2, 3});
  CHECK(curve.mean == std::vector<double>{1, 1.5, 2});
  CHECK(curve.std[0] == 0);
  CHECK(curve.std[2] == doctest::Approx(std::sqrt(2.0)));
  CHECK(curve.reps == 2);
  CHECK(curve.normalizer == 4);
}

TEST_CASE("random growth basics") {
  const auto one = random_growth(Hypergraph(5, {{0, 1, 2}}), 10, 1);
  CHECK(one.mean == std::vector<double>{3.0 / 5});

  const Hypergraph pairs(8, {{0, 1}, {2, 3}, {4, 5}, {6, 7}});
  const auto c = random_growth(pairs, 50, 2);
  CHECK(c.mean.size() == 4);
  for (double m : c.mean) CHECK(m == doctest::Approx(2.0 / 8));

  Rng rng(3);
  for (int t = 0; t < 50; ++t) {
    const auto g = random_graph(rng, 12, 15);
    std::vector<std::size_t> order(g.num_edges());
    std::iota(order.begin(), order.end(), std::size_t{0});
    rng.shuffle(order);
    const auto traj = giant_component_trajectory(g, order);
    CHECK(traj.size() == std::min(g.num_edges(), g.num_vertices()));
    CHECK(std::is_sorted(traj.begin(), traj.end()));
    CHECK(traj.back() <= double(g.num_vertices()));
  }
}

TEST_CASE("betweenness") {
  // Path a-b, b-c, c-d: the middle hyperedge lies between the other two.
  const Hypergraph path(4, {{0, 1}, {1, 2}, {2, 3}});
  CHECK(edge_betweenness(path) == std::vector<double>{0, 1, 0});
  const auto c = adversarial_growth(path, 5, 1);
  CHECK(c.mean == std::vector<double>{0.5, 0.5, 1.0});
  for (double s : c.std) CHECK(s == 0);

  CHECK(edge_betweenness(Hypergraph(6, {{0, 1}, {2, 3}, {4, 5}})) == std::vector<double>{0, 0, 0});

  Rng rng(4);
  for (int t = 0; t < 40; ++t) {
    const auto g = random_graph(rng, 5 + rng.below(26), Vertex(10 + rng.below(20)));
    const auto fast = edge_betweenness(g);
    const auto slow = oracle::recount_betweenness(g);
    for (std::size_t i = 0; i < fast.size(); ++i) CHECK(fast[i] == doctest::Approx(slow[i]).epsilon(1e-12));
  }
  CHECK_THROWS_AS(edge_betweenness(path, 2), Error);
}

TEST_CASE("adversarial growth with total ties matches random growth in distribution") {
  const Hypergraph disjoint(9, {{0, 1}, {2, 3, 4}, {5, 6, 7, 8}});
  const auto a = adversarial_growth(disjoint, 4000, 5);
  const auto r = random_growth(disjoint, 4000, 6);
  for (std::size_t i = 0; i < a.mean.size(); ++i)
    CHECK(std::abs(a.mean[i] - r.mean[i]) < 4 * std::hypot(a.std[i], r.std[i]) / std::sqrt(4000.0) + 1e-12);
}

TEST_CASE("wasserstein distance") {
  const std::vector<double> single{1, 0, 0, 0}, split{0.5, 0.5, 0, 0}, flat{0.25, 0.25, 0.25, 0.25};
  CHECK(wasserstein_to_uniform(single, 0.25) == 0.75);
  // Half of |1/4| + |1/4| + |-1/4| + |-1/4|.
  CHECK(wasserstein_to_uniform(split, 0.25) == 0.5);
  CHECK(wasserstein_to_uniform(flat, 0.25) == 0);
  CHECK_THROWS_AS(wasserstein_to_uniform(split, 0.3), Error);
}

TEST_CASE("diffusion rounds") {
  std::vector<double> w{0.2, 0.2, 0.5, 0.1};
  diffuse_on(w, Edge{0, 1});
  CHECK(w == std::vector<double>{0.2, 0.2, 0.5, 0.1});
  diffuse_on(w, Edge{1, 2});
  CHECK(w[1] == doctest::Approx(0.35));
  CHECK(w[2] == doctest::Approx(0.35));

  // One round on a spanning edge reaches the target.
  const Hypergraph full(5, {{0, 1, 2, 3, 4}});
  const auto c = diffusion(full, DiffusionInit::single_source, 3, 4, 1);
  CHECK(c.mean[0] == doctest::Approx(0.8));
  CHECK(c.mean[1] == doctest::Approx(0).epsilon(1e-15));
  CHECK(c.x.front() == 0);
  CHECK_THROWS_AS(diffusion(full, DiffusionInit::single_source, 0, 4, 1), Error);

  Rng rng(6);
  const auto init = initial_diffusion(23, DiffusionInit::fraction, rng);
  CHECK(std::count(init.mass.begin(), init.mass.end(), 1.0) == 3);
  CHECK(init.target == 3.0 / 23);
  const auto src = initial_diffusion(23, DiffusionInit::single_source, rng);
  CHECK(std::accumulate(src.mass.begin(), src.mass.end(), 0.0) == 1.0);
}

TEST_CASE("diffusion conserves mass") {
  Rng rng(7);
  const auto g = random_graph(rng, 40, 30);
  auto state = initial_diffusion(g.num_vertices(), DiffusionInit::fraction, rng);
  const double total = std::accumulate(state.mass.begin(), state.mass.end(), 0.0);
  for (int r = 0; r < 10000; ++r) {
    diffuse_on(state.mass, g.edge(rng.below(g.num_edges())));
    const double now = std::accumulate(state.mass.begin(), state.mass.end(), 0.0);
    REQUIRE(std::abs(now - total) <= 1e-12 * total);
  }
  CHECK(wasserstein_to_uniform(state.mass, state.target) >= 0);
}

TEST_CASE("experiment suite") {
  GenSpec spec;
  spec.degrees = DegreeSequence({3, 2, 2, 1, 2, 1, 1, 2, 1, 1, 2, 1});
  spec.sizes = EdgeSizeSequence(Sizes{{2, 4}, {3, 3}, {4, 1}});
  spec.require_connected = true;
  spec.seed = 5;
  const auto real = largest_component(preprocess(simplify(generate(spec)).graph).graph);

  SuiteOptions opts;
  opts.reps = 6;
  opts.real_reps = 6;
  opts.rounds = 20;
  for (auto which : {Experiment::random_growth, Experiment::adversarial_growth, Experiment::diffusion_single,
                     Experiment::diffusion_fraction}) {
    const auto series = run_experiment_suite(real, which, opts);
    REQUIRE(series.size() == 4);
    CHECK(series[0].label == "real");
    CHECK(series[2].label == "q=0.5");
    for (const auto& s : series) {
      std::set<std::uint64_t> seeds(s.replicate_seeds.begin(), s.replicate_seeds.end());
      CHECK(seeds.size() == s.replicate_seeds.size());
      CHECK(s.curve.x.size() == s.curve.mean.size());
      for (double sd : s.curve.std) CHECK(sd >= 0);
    }
    if (which == Experiment::adversarial_growth) {
      CHECK(series[0].curve.reps == 1);
      for (double sd : series[0].curve.std) CHECK(sd == 0);
    }
    const auto again = run_experiment_suite(real, which, opts);
    for (std::size_t i = 0; i < series.size(); ++i) CHECK(again[i].curve.mean == series[i].curve.mean);
  }
  CHECK(to_string(parse_experiment("diffusion-fraction")) == "diffusion-fraction");
  CHECK_THROWS_AS(parse_experiment("nope"), Error);
  opts.line_graph_cap = 2;
  CHECK_THROWS_AS(run_experiment_suite(real, Experiment::adversarial_growth, opts), Error);
}
