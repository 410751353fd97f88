#pragma once

#include <string>
#include <string_view>

#include "hypersimp/hypergraph.hpp"

namespace hypersimp {

/**
 * Parses the edge-list text format: one edge per line, labels separated by
 * commas and/or whitespace, '#' starting a comment line. With
 * `has_timestamps` the first token of each line is a numeric timestamp and
 * edges are stably sorted by it.
 *
 * Labels become dense ids in order of first appearance. Duplicate edges are
 * kept (see preprocess()).
 */
Hypergraph load_edge_list(std::string_view text, bool has_timestamps = false);

/**
 * Parses a JSON hypergraph. Accepted layouts:
 *   - `[["a","b"], ["b","c","d"]]`
 *   - `[{"nodes": ["a","b"], "timestamp": 3}, ...]`
 *   - the XGI interchange object with "edge-dict" and optional "edge-data"
 *     carrying a "timestamp" attribute per edge
 *   - the canonical `{"n":..,"temporal":..,"edges":[[ids]]}` serialization
 * Timestamps may be numbers or strings (strings compare lexicographically,
 * which orders ISO-8601 stamps correctly); mixing the two is an error.
 */
Hypergraph load_incidence_json(std::string_view text);

/// Canonical `{"n", "temporal", "edges"}` JSON, compact and deterministic.
std::string to_canonical_json(const Hypergraph& g);

/// Edge-list text using the stored labels (or ids); temporal graphs get the
/// edge index as the leading timestamp.
std::string to_edge_list(const Hypergraph& g);

std::string read_file(const std::string& path);
void write_file(const std::string& path, std::string_view contents);

/// Dispatches on extension: ".json" to load_incidence_json, otherwise the
/// edge-list parser.
Hypergraph load_graph_file(const std::string& path, bool has_timestamps = false);

}  // namespace hypersimp
