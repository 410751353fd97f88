#pragma once

#include <map>
#include <optional>
#include <string>

#include "hypersimp/nullmodel.hpp"
#include "hypersimp/pairs.hpp"

namespace hypersimp {

/// One non-empty cell of a partial matrix. `unresolved` marks a positive
/// count whose expectation estimate came out as zero.
struct MatrixCell {
  double value = 0;
  bool unresolved = false;

  friend bool operator==(const MatrixCell&, const MatrixCell&) = default;
};

/// Partial matrix: absent keys are empty cells.
using PartialMatrix = std::map<SizePair, MatrixCell>;

/// pairs / E[pairs]; 1 when the expectation is zero. Throws Error when the
/// expectation is zero but pairs were observed.
double simplicial_ratio(const PairCounts& counts, const ExpectationMatrix& exp);

/// Cell (i, j) for every size pair the expectation covers.
PartialMatrix simplicial_matrix(const PairCounts& counts, const ExpectationMatrix& exp);

/// w_ij = E[pairs(i,j)] / E[pairs]; empty when the total expectation is zero.
std::map<SizePair, double> simplicial_weights(const ExpectationMatrix& exp);

struct TemporalRatios {
  double up = 1;
  double down = 1;
};

/// 2 * up / E[pairs] and 2 * down / E[pairs]. Requires temporal counts.
TemporalRatios temporal_ratios(const PairCounts& counts, const ExpectationMatrix& exp);

/// Bottom-up cells at (k, l) and top-down cells at (l, k), each against half
/// of E[pairs(k, l)].
PartialMatrix temporal_matrix(const PairCounts& counts, const ExpectationMatrix& exp);

/// Largest edge the closure-based measures will enumerate.
inline constexpr std::size_t kMaxClosureEdgeSize = 11;

struct LegacyMeasures {
  double simplicial_fraction = 0;
  double edit_simpliciality = 0;
  double face_edit_simpliciality = 0;
  bool simplicial_fraction_defined = true;       // false: no edge of size >= 3
  bool face_edit_simpliciality_defined = true;   // false: no maximal edge of size >= 3
};

/// Share of edges of size >= 3 whose every subset of size >= 2 is an edge.
/// Returns 0 when no such edge exists.
double simplicial_fraction(const Hypergraph& g);

/// |E(G)| / |E(2-closure)|.
double edit_simpliciality(const Hypergraph& g);

/// Mean over maximal edges e with |e| >= 3 of |{f in E : f subset of e}| / (2^|e| - |e| - 1).
double face_edit_simpliciality(const Hypergraph& g);

/// All three; throws Error when an edge exceeds kMaxClosureEdgeSize.
LegacyMeasures legacy_measures(const Hypergraph& g);

struct SimplicialReport {
  double ratio = 1;
  PartialMatrix matrix;
  std::map<SizePair, double> weights;
  std::optional<TemporalRatios> temporal;
  std::optional<PartialMatrix> temporal_matrix;
  std::optional<LegacyMeasures> legacy;
  PairCounts counts;
  ExpectationMatrix expectation;
};

/// Ratio, matrix, weights and (for temporal graphs) the temporal variants,
/// all computed from one expectation object.
SimplicialReport build_report(const PairCounts& counts, const ExpectationMatrix& exp);

/// Non-empty cells only, one "(i,j): value" per line, values above 1000
/// shown as ">1k".
std::string render_matrix(const PartialMatrix& m);

/// Grid over the size range with blank empty cells; header row lists j,
/// first column lists i.
std::string matrix_csv(const PartialMatrix& m);

}  // namespace hypersimp
