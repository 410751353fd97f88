#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <algorithm>
#include <cmath>
#include <functional>

#include "hypersimp/io.hpp"
#include "hypersimp/nullmodel.hpp"
#include "hypersimp/report.hpp"

using namespace hypersimp;
using Sizes = std::map<int, std::uint64_t>;

namespace {

// Visits every ordered k-tuple over n vertices with its probability.
void for_each_tuple(const std::vector<double>& p, int k, const std::function<void(const Edge&, double)>& fn) {
  Edge t(static_cast<std::size_t>(k), 0);
  const auto n = static_cast<Vertex>(p.size());
  while (true) {
    double pr = 1;
    for (Vertex v : t) pr *= p[v];
    fn(t, pr);
    int i = k - 1;
    while (i >= 0 && ++t[static_cast<std::size_t>(i)] == n) t[static_cast<std::size_t>(i--)] = 0;
    if (i < 0) return;
  }
}

bool distinct(Edge e) {
  std::sort(e.begin(), e.end());
  return std::adjacent_find(e.begin(), e.end()) == e.end();
}

std::vector<double> probs(const std::vector<std::uint64_t>& d) {
  double total = 0;
  for (auto x : d) total += double(x);
  std::vector<double> p;
  for (auto x : d) p.push_back(double(x) / total);
  return p;
}

double tuple_p_simple(const std::vector<std::uint64_t>& d, int k) {
  double s = 0;
  for_each_tuple(probs(d), k, [&](const Edge& t, double pr) { s += distinct(t) ? pr : 0; });
  return s;
}

// E[pairs(k,l)] by enumerating ordered tuples of both edges.
double tuple_expectation(const std::vector<std::uint64_t>& d, int k, int l, std::uint64_t mk, std::uint64_t ml) {
  const auto p = probs(d);
  const double pk = tuple_p_simple(d, k), pl = tuple_p_simple(d, l);
  double sum = 0;
  for_each_tuple(p, l, [&](const Edge& big, double pb) {
    if (!distinct(big)) return;
    for_each_tuple(p, k, [&](const Edge& small, double ps) {
      if (!distinct(small)) return;
      const bool inside = std::all_of(small.begin(), small.end(),
                                      [&](Vertex v) { return std::find(big.begin(), big.end(), v) != big.end(); });
      if (inside) sum += pb * ps;
    });
  });
  return double(mk) * double(ml) * sum / (pk * pl);
}

double binom(int n, int k) {
  double r = 1;
  for (int i = 1; i <= k; ++i) r = r * (n - k + i) / i;
  return r;
}

}  // namespace

TEST_CASE("cl_edge draws") {
  Rng rng(1);
  const DegreeSequence single({1, 0, 0});
  for (int i = 0; i < 100; ++i) CHECK(cl_edge(single, 4, rng) == Edge{0, 0, 0, 0});

  const DegreeSequence d({1, 2, 1});
  int ones = 0;
  const int draws = 100000;
  for (int i = 0; i < draws / 2; ++i)
    for (Vertex v : cl_edge(d, 2, rng)) ones += v == 1;
  CHECK(double(ones) / draws == doctest::Approx(0.5).epsilon(0.02));

  CHECK_THROWS_AS(cl_edge(DegreeSequence({0, 0}), 2, rng), Error);
}

TEST_CASE("cl_edge_simple") {
  Rng rng(2);
  for (int i = 0; i < 50; ++i) {
    CHECK(cl_edge_simple(DegreeSequence({1, 1}), 2, rng) == Edge{0, 1});
    CHECK(cl_edge_simple(DegreeSequence({1, 1, 1}), 3, rng) == Edge{0, 1, 2});
  }
  CHECK_THROWS_AS(cl_edge_simple(DegreeSequence({1, 1, 0}), 3, rng), Error);

  // Acceptance rate of raw draws against the tuple oracle.
  const std::vector<std::uint64_t> raw{5, 1, 1, 2};
  const DegreeSequence d(raw);
  const int trials = 10000;
  int simple = 0;
  for (int i = 0; i < trials; ++i) simple += distinct(cl_edge(d, 3, rng));
  const double p = tuple_p_simple(raw, 3);
  CHECK(std::abs(double(simple) / trials - p) < 3 * std::sqrt(p * (1 - p) / trials));
}

TEST_CASE("p_simple") {
  CHECK(exact_p_simple(DegreeSequence::uniform(1000), 2) == doctest::Approx(1 - 1.0 / 1000).epsilon(1e-12));
  CHECK(exact_p_simple(DegreeSequence({1, 1}), 2) == doctest::Approx(0.5));
  Rng rng(3);
  const std::size_t s = 20000;
  const double est = estimate_p_simple(DegreeSequence({1, 1}), 2, s, rng);
  CHECK(std::abs(est - 0.5) < 3 * std::sqrt(0.25 / double(s)));
  CHECK(estimate_p_simple(DegreeSequence::uniform(1000), 2, s, rng) == doctest::Approx(0.999).epsilon(0.002));

  // One dominant degree: k = 2 closed form 1 - sum p^2.
  const std::vector<std::uint64_t> dom{97, 1, 1, 1};
  double sq = 0;
  for (double x : probs(dom)) sq += x * x;
  CHECK(exact_p_simple(DegreeSequence(dom), 2) == doctest::Approx(1 - sq).epsilon(1e-12));

  Rng pick(4);
  for (int t = 0; t < 30; ++t) {
    std::vector<std::uint64_t> d(2 + pick.below(5));
    for (auto& x : d) x = pick.below(6);
    d[0] += 1;
    d[1] += 1;
    for (int k = 2; k <= std::min<int>(4, int(d.size())); ++k)
      CHECK(exact_p_simple(DegreeSequence(d), k) == doctest::Approx(tuple_p_simple(d, k)).epsilon(1e-12));
  }
}

TEST_CASE("subset pair probability") {
  const std::vector<std::uint64_t> raw{1, 1, 1, 1};
  const DegreeSequence d(raw);
  const Edge e{0, 1, 2};
  const double ps = exact_p_simple(d, 2);
  // Of 16 ordered pairs, 12 are simple and 6 land inside e.
  CHECK(subset_pair_probability(e, 2, d, ps) == doctest::Approx(0.5).epsilon(1e-12));
  CHECK_THROWS_AS(subset_pair_probability(e, 2, d, 0.0), Error);
  CHECK_THROWS_AS(subset_pair_probability(e, 3, d, ps), Error);

  const DegreeSequence skew({3, 1, 4, 1, 5, 9, 2, 6});
  const Edge f{1, 4, 5, 7}, g{7, 5, 1, 4};
  const double p2 = exact_p_simple(skew, 2);
  CHECK(subset_pair_probability(f, 2, skew, p2) == doctest::Approx(subset_pair_probability(g, 2, skew, p2)));

  // Scaling invariance.
  std::vector<std::uint64_t> scaled;
  for (auto x : skew.values()) scaled.push_back(7 * x);
  const DegreeSequence s7(scaled);
  CHECK(exact_p_simple(s7, 3) == doctest::Approx(exact_p_simple(skew, 3)).epsilon(1e-12));
  CHECK(subset_pair_probability(f, 3, s7, exact_p_simple(s7, 3)) ==
        doctest::Approx(subset_pair_probability(f, 3, skew, exact_p_simple(skew, 3))).epsilon(1e-12));

  // Uniform degrees: C(l,k) / C(n,k) with exact p_simple.
  const DegreeSequence u = DegreeSequence::uniform(6);
  CHECK(subset_pair_probability(Edge{0, 1, 2, 3}, 2, u, exact_p_simple(u, 2)) ==
        doctest::Approx(binom(4, 2) / binom(6, 2)).epsilon(1e-12));
}

TEST_CASE("subset pair probability is monotone in member degrees") {
  std::vector<std::uint64_t> base{2, 3, 1, 4, 2, 2};
  const Edge e{0, 2, 3};
  double prev = 0;
  for (std::uint64_t x = 1; x < 12; ++x) {
    base[2] = x;
    const DegreeSequence d(base);
    const double p = subset_pair_probability(e, 2, d, exact_p_simple(d, 2));
    CHECK(p >= prev - 1e-15);
    prev = p;
  }
}

TEST_CASE("closed form for uniform degrees") {
  const auto e = exact_expected_pairs_uniform(10, EdgeSizeSequence(Sizes{{2, 2}, {3, 1}}));
  CHECK(e.total == doctest::Approx(2.0 / 15).epsilon(1e-14));
  CHECK(exact_expected_pairs_uniform(10, EdgeSizeSequence(Sizes{{3, 4}})).total == 0);
  CHECK_THROWS_AS(exact_expected_pairs_uniform(3, EdgeSizeSequence(Sizes{{4, 1}, {5, 1}})), Error);
}

TEST_CASE("brute force oracle") {
  const auto forced = exact_expected_pairs_brute(DegreeSequence({2, 1, 1}), EdgeSizeSequence(Sizes{{2, 1}, {3, 1}}));
  CHECK(forced.total == doctest::Approx(1).epsilon(1e-12));

  const EdgeSizeSequence m({{2, 3}, {3, 2}, {4, 1}});
  const auto brute = exact_expected_pairs_brute(DegreeSequence::uniform(7), m);
  const auto closed = exact_expected_pairs_uniform(7, m);
  for (const auto& [key, cell] : closed.by_type)
    CHECK(brute.value(key.first, key.second) == doctest::Approx(cell.value).epsilon(1e-12));

  Rng rng(9);
  for (int t = 0; t < 10; ++t) {
    std::vector<std::uint64_t> d(4 + rng.below(3));
    for (auto& x : d) x = 1 + rng.below(5);
    const auto b = exact_expected_pairs_brute(DegreeSequence(d), m);
    for (const auto& [key, cell] : b.by_type) {
      const double oracle = tuple_expectation(d, key.first, key.second, m.count(key.first), m.count(key.second));
      CHECK(cell.value == doctest::Approx(oracle).epsilon(1e-10));
    }
  }
  CHECK_THROWS_AS(exact_expected_pairs_brute(DegreeSequence::uniform(20), m), Error);
}

TEST_CASE("estimator against the exact oracles") {
  const EdgeSizeSequence m({{2, 2}, {3, 2}, {4, 1}});
  Rng rng(17);
  for (int t = 0; t < 5; ++t) {
    std::vector<std::uint64_t> d(5 + rng.below(3));
    for (auto& x : d) x = 1 + rng.below(6);
    const DegreeSequence deg(d);
    for (auto method : {PSimpleMethod::exact, PSimpleMethod::monte_carlo}) {
      const auto est = estimate_expected_pairs(deg, m, {20000, 100 + std::uint64_t(t), method});
      for (const auto& [key, cell] : est.by_type) {
        const double oracle = tuple_expectation(d, key.first, key.second, m.count(key.first), m.count(key.second));
        CHECK(std::abs(cell.value - oracle) <= 4 * cell.std_error + 1e-12 * oracle);
      }
    }
  }
  const auto u = estimate_expected_pairs(DegreeSequence::uniform(12), m, {500, 3});
  const auto closed = exact_expected_pairs_uniform(12, m);
  for (const auto& [key, cell] : closed.by_type)
    CHECK(u.value(key.first, key.second) == doctest::Approx(cell.value).epsilon(1e-12));
}

TEST_CASE("worked example expectations") {
  const auto g = load_graph_file(HYPERSIMP_FIXTURES "/nested_chain.txt");
  const auto e = estimate_expected_pairs(degree_sequence(g), edge_size_sequence(g), {10000, 1});
  CHECK(e.value(3, 4) == doctest::Approx(0.26).epsilon(0.1));
  CHECK(e.value(3, 5) == doctest::Approx(0.59).epsilon(0.1));
  CHECK(e.value(3, 6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.value(4, 6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.value(5, 6) == doctest::Approx(1.0).epsilon(1e-12));
  CHECK(e.total == doctest::Approx(4.3).epsilon(0.05));
  double sum = 0;
  for (const auto& [key, cell] : e.by_type) sum += cell.value;
  CHECK(sum == doctest::Approx(e.total).epsilon(1e-14));
}

TEST_CASE("estimates are reproducible") {
  const DegreeSequence d({4, 1, 3, 2, 2, 5, 1, 1});
  const EdgeSizeSequence m({{2, 3}, {3, 3}, {5, 1}});
  const EstimateOptions o{300, 77, PSimpleMethod::monte_carlo};
  const auto a = estimate_expected_pairs(d, m, o), b = estimate_expected_pairs(d, m, o);
  CHECK(to_json(a).dump() == to_json(b).dump());
  const auto c = estimate_expected_pairs(d, m, {300, 78, PSimpleMethod::monte_carlo});
  CHECK(to_json(a).dump() != to_json(c).dump());
  const auto j = to_json(a);
  for (const char* key : {"seed", "s", "p_simple", "by_type", "total"}) CHECK(j.contains(key));
}

TEST_CASE("cl_graph") {
  Rng rng(5);
  CHECK(cl_graph(DegreeSequence({1, 1}), EdgeSizeSequence(Sizes{}), rng).edges.empty());
  const auto forced = cl_graph(DegreeSequence({1, 1}), EdgeSizeSequence(Sizes{{2, 1}}), rng, true);
  CHECK(forced.edges == std::vector<Edge>{{0, 1}});

  // Degree preservation with multiplicity counted.
  const DegreeSequence d({4, 3, 3, 2, 1, 1, 4, 2});
  const EdgeSizeSequence m({{2, 5}, {3, 2}, {4, 1}});
  const int reps = 4000;
  std::vector<double> sum(d.size()), sq(d.size());
  for (int r = 0; r < reps; ++r) {
    const auto deg = cl_graph(d, m, rng).degrees();
    for (std::size_t v = 0; v < d.size(); ++v) sum[v] += double(deg[v]), sq[v] += double(deg[v] * deg[v]);
  }
  for (std::size_t v = 0; v < d.size(); ++v) {
    const double mean = sum[v] / reps, var = sq[v] / reps - mean * mean;
    CHECK(std::abs(mean - double(d[v])) <= 3.5 * std::sqrt(var / reps));
  }
}
