#include "hypersimp/io.hpp"

#include <algorithm>
#include <charconv>
#include <fstream>
#include <numeric>
#include <sstream>
#include <unordered_map>
#include <variant>

#include "json.hpp"

namespace hypersimp {
namespace {

using Timestamp = std::variant<std::monostate, double, std::string>;

struct RawEdge {
  std::vector<std::string> labels;
  Timestamp stamp;
  std::size_t line = 0;
};

// Shared tail of every loader: relabel, reject multiset edges, sort by
// timestamp when present.
Hypergraph build(std::vector<RawEdge> raw, bool temporal) {
  if (temporal) {
    for (const auto& r : raw) {
      if (r.stamp.index() != raw.front().stamp.index())
        throw ParseError(r.line, "timestamps mix numbers and strings or are missing");
    }
    std::stable_sort(raw.begin(), raw.end(),
                     [](const RawEdge& a, const RawEdge& b) { return a.stamp < b.stamp; });
  }
  std::size_t ties = 0;
  for (std::size_t i = 1; temporal && i < raw.size(); ++i)
    if (raw[i].stamp == raw[i - 1].stamp) ++ties;

  // Ids follow first appearance in the input, not in the sorted order.
  std::vector<std::size_t> by_line(raw.size());
  std::iota(by_line.begin(), by_line.end(), std::size_t{0});
  std::sort(by_line.begin(), by_line.end(),
            [&](std::size_t a, std::size_t b) { return raw[a].line < raw[b].line; });
  std::unordered_map<std::string, Vertex> ids;
  std::vector<std::string> labels;
  for (std::size_t idx : by_line) {
    for (const auto& l : raw[idx].labels) {
      if (ids.emplace(l, static_cast<Vertex>(labels.size())).second) labels.push_back(l);
    }
  }

  std::vector<Edge> edges;
  edges.reserve(raw.size());
  for (const auto& r : raw) {
    if (r.labels.size() < 2) throw ParseError(r.line, "edge has fewer than 2 vertices");
    Edge e;
    e.reserve(r.labels.size());
    for (const auto& l : r.labels) e.push_back(ids.at(l));
    std::sort(e.begin(), e.end());
    if (std::adjacent_find(e.begin(), e.end()) != e.end())
      throw ParseError(r.line, "duplicate vertex in edge");
    edges.push_back(std::move(e));
  }
  const auto n = labels.size();
  Hypergraph g(n, std::move(edges), temporal, std::move(labels));
  g.set_timestamp_ties(ties);
  return g;
}

std::vector<std::string> tokenize(std::string_view line) {
  std::vector<std::string> out;
  std::string cur;
  for (char c : line) {
    if (c == ',' || c == ' ' || c == '\t' || c == '\r') {
      if (!cur.empty()) out.push_back(std::move(cur));
      cur.clear();
    } else {
      cur.push_back(c);
    }
  }
  if (!cur.empty()) out.push_back(std::move(cur));
  return out;
}

std::optional<double> parse_number(std::string_view s) {
  double v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc() || ptr != s.data() + s.size()) return std::nullopt;
  return v;
}

using ojson = nlohmann::ordered_json;

std::string node_label(const ojson& node, std::size_t line) {
  if (node.is_string()) return node.get<std::string>();
  if (node.is_number_integer()) return std::to_string(node.get<long long>());
  throw ParseError(line, "node labels must be strings or integers");
}

Timestamp json_stamp(const ojson& t, std::size_t line) {
  if (t.is_number()) return t.get<double>();
  if (t.is_string()) return t.get<std::string>();
  throw ParseError(line, "timestamp must be a number or a string");
}

RawEdge json_edge(const ojson& nodes, std::size_t index) {
  if (!nodes.is_array()) throw ParseError(index, "edge must be a list of node labels");
  RawEdge r;
  r.line = index;
  for (const auto& node : nodes) r.labels.push_back(node_label(node, index));
  if (r.labels.empty()) throw ParseError(index, "empty edge");
  return r;
}

}  // namespace

Hypergraph load_edge_list(std::string_view text, bool has_timestamps) {
  std::vector<RawEdge> raw;
  std::size_t line_no = 0;
  std::size_t pos = 0;
  while (pos <= text.size()) {
    auto end = text.find('\n', pos);
    if (end == std::string_view::npos) end = text.size();
    std::string_view line = text.substr(pos, end - pos);
    pos = end + 1;
    ++line_no;
    auto first = line.find_first_not_of(" \t\r");
    if (first == std::string_view::npos || line[first] == '#') continue;
    RawEdge r;
    r.line = line_no;
    r.labels = tokenize(line);
    if (has_timestamps) {
      if (r.labels.empty()) throw ParseError(line_no, "missing timestamp");
      auto stamp = parse_number(r.labels.front());
      if (!stamp) throw ParseError(line_no, "malformed timestamp '" + r.labels.front() + "'");
      r.stamp = *stamp;
      r.labels.erase(r.labels.begin());
    }
    if (r.labels.size() < 2) throw ParseError(line_no, "edge has fewer than 2 vertices");
    raw.push_back(std::move(r));
  }
  return build(std::move(raw), has_timestamps);
}

Hypergraph load_incidence_json(std::string_view text) {
  ojson doc;
  try {
    doc = ojson::parse(text);
  } catch (const ojson::parse_error& e) {
    throw Error(std::string("invalid JSON: ") + e.what());
  }

  // Canonical serialization.
  if (doc.is_object() && doc.contains("edges") && doc.contains("n")) {
    try {
      std::vector<Edge> edges;
      for (const auto& e : doc.at("edges")) {
        Edge edge = e.get<Edge>();
        if (edge.empty()) throw Error("empty edge");
        edges.push_back(std::move(edge));
      }
      std::vector<std::string> labels;
      if (doc.contains("labels")) labels = doc.at("labels").get<std::vector<std::string>>();
      return Hypergraph(doc.at("n").get<std::size_t>(), std::move(edges),
                        doc.value("temporal", false), std::move(labels));
    } catch (const ojson::exception& e) {
      throw Error(std::string("schema mismatch: ") + e.what());
    }
  }

  std::vector<RawEdge> raw;
  bool any_stamp = false;
  if (doc.is_object() && doc.contains("edge-dict")) {
    const auto& dict = doc.at("edge-dict");
    const ojson empty = ojson::object();
    const auto& data = doc.contains("edge-data") ? doc.at("edge-data") : empty;
    if (!dict.is_object()) throw Error("schema mismatch: edge-dict must be an object");
    std::size_t index = 0;
    for (const auto& [id, nodes] : dict.items()) {
      ++index;
      RawEdge r = json_edge(nodes, index);
      if (data.contains(id) && data.at(id).contains("timestamp")) {
        r.stamp = json_stamp(data.at(id).at("timestamp"), index);
        any_stamp = true;
      }
      raw.push_back(std::move(r));
    }
  } else if (doc.is_array()) {
    std::size_t index = 0;
    for (const auto& item : doc) {
      ++index;
      if (item.is_object()) {
        if (!item.contains("nodes")) throw ParseError(index, "schema mismatch: edge object needs 'nodes'");
        RawEdge r = json_edge(item.at("nodes"), index);
        if (item.contains("timestamp")) {
          r.stamp = json_stamp(item.at("timestamp"), index);
          any_stamp = true;
        }
        raw.push_back(std::move(r));
      } else {
        raw.push_back(json_edge(item, index));
      }
    }
  } else {
    throw Error("schema mismatch: expected a list of edges or an object with 'edge-dict'");
  }
  return build(std::move(raw), any_stamp);
}

std::string to_canonical_json(const Hypergraph& g) {
  nlohmann::ordered_json doc;
  doc["n"] = g.num_vertices();
  doc["temporal"] = g.temporal();
  doc["edges"] = g.edges();
  return doc.dump();
}

std::string to_edge_list(const Hypergraph& g) {
  std::ostringstream out;
  for (std::size_t i = 0; i < g.num_edges(); ++i) {
    if (g.temporal()) out << i << ',';
    const auto& e = g.edge(i);
    for (std::size_t j = 0; j < e.size(); ++j) out << (j ? "," : "") << g.label(e[j]);
    out << '\n';
  }
  return out.str();
}

std::string read_file(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) throw Error("cannot open '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return buf.str();
}

void write_file(const std::string& path, std::string_view contents) {
  std::ofstream out(path, std::ios::binary);
  if (!out) throw Error("cannot write '" + path + "'");
  out.write(contents.data(), static_cast<std::streamsize>(contents.size()));
  if (!out) throw Error("failed writing '" + path + "'");
}

Hypergraph load_graph_file(const std::string& path, bool has_timestamps) {
  const auto text = read_file(path);
  if (path.size() >= 5 && path.compare(path.size() - 5, 5, ".json") == 0) return load_incidence_json(text);
  return load_edge_list(text, has_timestamps);
}

}  // namespace hypersimp
