#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "hypersimp/hypergraph.hpp"
#include "hypersimp/random.hpp"

namespace hypersimp {

/// Pointwise mean and standard deviation of a per-step statistic.
struct Curve {
  std::vector<std::size_t> x;
  std::vector<double> mean;
  std::vector<double> std;
  std::size_t reps = 0;
  /// Divisor applied to the raw statistic (|V| for growth curves, 1 otherwise).
  double normalizer = 1.0;
};

/// Accumulates replicate trajectories. Shorter trajectories are extended
/// with their last value.
class CurveBuilder {
 public:
  void add(std::span<const double> trajectory);
  Curve finish(std::size_t first_x, double normalizer = 1.0) const;

 private:
  std::vector<std::vector<double>> runs_;
};

/// Size of the largest component after each edge of `order` is added,
/// for the first min(|E|, |V|) edges.
std::vector<double> giant_component_trajectory(const Hypergraph& g, std::span<const std::size_t> order);

/// Uniformly shuffled edge order per replicate; normalised by |V|.
Curve random_growth(const Hypergraph& g, std::size_t reps, std::uint64_t seed);

inline constexpr std::size_t kDefaultLineGraphCap = 5000;

/// Shortest-path betweenness of every line-graph node (hyperedge),
/// unweighted and undirected, endpoints excluded.
std::vector<double> edge_betweenness(const Hypergraph& g, std::size_t line_graph_cap = kDefaultLineGraphCap);

/// Adds edges in ascending betweenness with random tie-breaking.
Curve adversarial_growth(const Hypergraph& g, std::size_t reps, std::uint64_t seed,
                         std::size_t line_graph_cap = kDefaultLineGraphCap);
/// Same, reusing precomputed betweenness values.
Curve adversarial_growth(const Hypergraph& g, std::span<const double> betweenness, std::size_t reps,
                         std::uint64_t seed);

enum class DiffusionInit { single_source, fraction };

struct DiffusionState {
  std::vector<double> mass;
  double target = 0;  // uniform level the mass converges to
};

/// Unit mass on one uniform vertex (target 1/|V|) or on a uniform subset of
/// ceil(|V|/10) vertices (target = that count / |V|).
DiffusionState initial_diffusion(std::size_t n, DiffusionInit init, Rng& rng);

/// Replaces the mass of every vertex of `e` by the mean over `e`.
void diffuse_on(std::vector<double>& mass, const Edge& e) noexcept;

/// Wasserstein-1 distance to the constant `target` under the discrete
/// metric: half the L1 distance. Throws Error when the total mass differs
/// from target * |V|.
double wasserstein_to_uniform(std::span<const double> mass, double target);

/// Distance at round 0 and after each of `rounds` uniformly chosen edges.
Curve diffusion(const Hypergraph& g, DiffusionInit init, std::size_t rounds, std::size_t reps,
                std::uint64_t seed);

enum class Experiment { random_growth, adversarial_growth, diffusion_single, diffusion_fraction };

Experiment parse_experiment(const std::string& name);
std::string to_string(Experiment e);

struct SuiteOptions {
  std::vector<double> q_values{0.0, 0.5, 1.0};
  std::size_t reps = 100;
  std::size_t real_reps = 100;  // replicates on the real graph; adversarial growth runs once
  std::size_t rounds = 1000;    // diffusion only
  std::uint64_t seed = 1;
  std::size_t line_graph_cap = kDefaultLineGraphCap;
  int max_size = 11;
};

struct Series {
  std::string label;          // "real" or "q=<value>"
  std::optional<double> q;
  Curve curve;
  std::vector<std::uint64_t> replicate_seeds;
};

/**
 * Runs one process on the real graph and on fresh connected simplicial
 * Chung-Lu graphs matching its degrees and sizes, one graph per replicate.
 * Synthetic graphs are simplified and deduplicated before the process runs.
 */
std::vector<Series> run_experiment_suite(const Hypergraph& real, Experiment which, const SuiteOptions& opts);

}  // namespace hypersimp
