#include "hypersimp/report.hpp"

#include <charconv>
#include <sstream>

namespace hypersimp {
namespace {

Json type_counts(const TypeCounts& t) {
  Json out = Json::array();
  for (const auto& [key, c] : t) out.push_back({key.first, key.second, c});
  return out;
}

std::uint64_t require_count(const Json& v, const char* what) {
  if (!v.is_number_integer() || v.get<std::int64_t>() < 0)
    throw Error(std::string(what) + " must be a non-negative integer");
  return v.get<std::uint64_t>();
}

}  // namespace

std::string format_number(double x) {
  char buf[64];
  const auto res = std::to_chars(buf, buf + sizeof buf, x);
  return std::string(buf, res.ptr);
}

Json to_json(const PairCounts& c) {
  Json j;
  j["total"] = c.total;
  j["by_type"] = type_counts(c.by_type);
  j["up_by_type"] = c.up_by_type ? type_counts(*c.up_by_type) : Json(nullptr);
  j["down_by_type"] = c.down_by_type ? type_counts(*c.down_by_type) : Json(nullptr);
  return j;
}

Json to_json(const ExpectationMatrix& e) {
  Json j;
  j["seed"] = e.seed;
  j["s"] = e.samples;
  j["p_simple_method"] = e.p_simple_method == PSimpleMethod::exact ? "exact" : "monte_carlo";
  Json p = Json::object();
  for (auto [k, v] : e.p_simple) p[std::to_string(k)] = v;
  j["p_simple"] = std::move(p);
  Json cells = Json::array();
  for (const auto& [key, cell] : e.by_type)
    cells.push_back({{"i", key.first}, {"j", key.second}, {"value", cell.value}, {"std_error", cell.std_error}});
  j["by_type"] = std::move(cells);
  j["total"] = e.total;
  j["total_std_error"] = e.total_std_error;
  return j;
}

Json to_json(const LegacyMeasures& m) {
  Json j;
  j["simplicial_fraction"] = m.simplicial_fraction_defined ? Json(m.simplicial_fraction) : Json(nullptr);
  j["edit_simpliciality"] = m.edit_simpliciality;
  j["face_edit_simpliciality"] =
      m.face_edit_simpliciality_defined ? Json(m.face_edit_simpliciality) : Json(nullptr);
  return j;
}

Json to_json(const PartialMatrix& m) {
  Json out = Json::array();
  for (const auto& [key, cell] : m) {
    Json c{{"i", key.first}, {"j", key.second}};
    if (cell.unresolved) {
      c["value"] = nullptr;
      c["unresolved"] = true;
    } else {
      c["value"] = cell.value;
    }
    out.push_back(std::move(c));
  }
  return out;
}

Json to_json(const SimplicialReport& r) {
  Json j;
  j["ratio"] = r.ratio;
  if (r.temporal) {
    j["up_ratio"] = r.temporal->up;
    j["down_ratio"] = r.temporal->down;
  }
  j["matrix"] = to_json(r.matrix);
  if (r.temporal_matrix) j["temporal_matrix"] = to_json(*r.temporal_matrix);
  Json w = Json::array();
  for (const auto& [key, v] : r.weights) w.push_back({key.first, key.second, v});
  j["weights"] = std::move(w);
  if (r.legacy) j["legacy"] = to_json(*r.legacy);
  j["counts"] = to_json(r.counts);
  j["expectation"] = to_json(r.expectation);
  return j;
}

GenSpec genspec_from_json(const Json& j) {
  if (!j.is_object()) throw Error("a generation spec must be a JSON object");
  GenSpec spec;
  if (j.contains("degrees")) {
    std::vector<std::uint64_t> d;
    for (const auto& v : j.at("degrees")) d.push_back(require_count(v, "degree"));
    spec.degrees = DegreeSequence(std::move(d));
    if (j.contains("n") && require_count(j.at("n"), "n") != spec.degrees.size())
      throw Error("\"n\" disagrees with the length of \"degrees\"");
  } else if (j.contains("n")) {
    spec.degrees = DegreeSequence::uniform(require_count(j.at("n"), "n"));
  } else {
    throw Error("a generation spec needs \"degrees\" or \"n\"");
  }
  if (!j.contains("sizes") || !j.at("sizes").is_object()) throw Error("a generation spec needs a \"sizes\" object");
  std::map<int, std::uint64_t> sizes;
  for (const auto& [key, v] : j.at("sizes").items()) {
    int k = 0;
    const auto res = std::from_chars(key.data(), key.data() + key.size(), k);
    if (res.ec != std::errc{} || res.ptr != key.data() + key.size()) throw Error("bad edge size key '" + key + "'");
    sizes[k] = require_count(v, "edge count");
  }
  spec.sizes = EdgeSizeSequence(std::move(sizes));
  if (j.contains("q")) spec.q = j.at("q").get<double>();
  if (j.contains("seed")) spec.seed = require_count(j.at("seed"), "seed");
  if (j.contains("connected")) spec.require_connected = j.at("connected").get<bool>();
  validate(spec);
  return spec;
}

Json to_json(const GenSpec& spec) {
  Json j;
  j["n"] = spec.degrees.size();
  j["degrees"] = spec.degrees.values();
  Json sizes = Json::object();
  for (auto [k, c] : spec.sizes.counts()) sizes[std::to_string(k)] = c;
  j["sizes"] = std::move(sizes);
  j["q"] = spec.q;
  j["seed"] = spec.seed;
  j["connected"] = spec.require_connected;
  return j;
}

std::string curve_csv(const Curve& c) {
  const bool raw = c.normalizer != 1.0;
  std::ostringstream out;
  out << "step,mean,std,reps" << (raw ? ",raw_mean,raw_std" : "") << '\n';
  for (std::size_t i = 0; i < c.x.size(); ++i) {
    out << c.x[i] << ',' << format_number(c.mean[i]) << ',' << format_number(c.std[i]) << ',' << c.reps;
    if (raw) out << ',' << format_number(c.mean[i] * c.normalizer) << ',' << format_number(c.std[i] * c.normalizer);
    out << '\n';
  }
  return out.str();
}

std::string summary_row(const Hypergraph& g, const SimplicialReport& r) {
  std::ostringstream out;
  out << "|V|=" << g.num_vertices() << " |E|=" << g.num_edges() << " sizes=";
  bool first = true;
  const auto sizes = edge_size_sequence(g);
  for (auto [k, c] : sizes.counts()) {
    out << (first ? "" : ",") << k << ':' << c;
    first = false;
  }
  char buf[96];
  std::snprintf(buf, sizeof buf, " sigma=%.2f", r.ratio);
  out << buf;
  if (r.temporal) {
    std::snprintf(buf, sizeof buf, " sigma_up=%.2f sigma_down=%.2f", r.temporal->up, r.temporal->down);
    out << buf;
  }
  return out.str();
}

}  // namespace hypersimp
