#pragma once

#include <string>

#include "json.hpp"

#include "hypersimp/genmodel.hpp"
#include "hypersimp/measures.hpp"
#include "hypersimp/processes.hpp"

namespace hypersimp {

using Json = nlohmann::ordered_json;

Json to_json(const PairCounts& c);
Json to_json(const ExpectationMatrix& e);
Json to_json(const LegacyMeasures& m);
Json to_json(const PartialMatrix& m);
Json to_json(const SimplicialReport& r);

/**
 * GenSpec document:
 *   {"n": 1000, "sizes": {"2": 5000, "3": 1000}, "q": 0.5, "seed": 7, "connected": false}
 * with either "degrees": [d_0, ...] or, when absent, uniform unit degrees
 * over "n" vertices. Missing q/seed/connected take the GenSpec defaults.
 */
GenSpec genspec_from_json(const Json& j);
Json to_json(const GenSpec& spec);

/// Columns step, mean, std, reps; raw_mean and raw_std follow when the curve
/// was normalised.
std::string curve_csv(const Curve& c);

/// One line: |V|, |E|, size histogram, ratio and temporal ratios.
std::string summary_row(const Hypergraph& g, const SimplicialReport& r);

/// Shortest decimal that round-trips ("%.17g" trimmed).
std::string format_number(double x);

}  // namespace hypersimp
