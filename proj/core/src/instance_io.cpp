#include "compaug/instance_io.hpp"

#include <json.hpp>

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

namespace compaug {

namespace {

using json = nlohmann::json;
using ordered = nlohmann::ordered_json;

Scalar scalar_of(const json& v) {
  if (v.is_string()) return parse_scalar(v.get<std::string>());
  if (v.is_number_integer()) return Scalar(v.get<long>());
  throw FormatError("coordinate must be a string \"p/q\" or an integer");
}

ordered point_json(const Point2& p) { return ordered::array({to_string(p.x), to_string(p.y)}); }

ordered instance_json(const Instance& in) {
  const LabelledGraph& g = *in.graph;
  ordered doc;
  doc["vertices"] = g.labels();
  std::vector<std::pair<int, int>> edges;
  for (const auto& [a, b] : g.edges()) edges.emplace_back(g.label(a), g.label(b));
  std::sort(edges.begin(), edges.end());
  ordered ej = ordered::array();
  for (const auto& [a, b] : edges) ej.push_back({a, b});
  doc["edges"] = std::move(ej);
  ordered dj = ordered::array();
  for (const auto& d : in.drawings) {
    ordered pos = ordered::object();
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      pos[std::to_string(g.label(static_cast<int>(v)))] = point_json(d.position[v]);
    }
    dj.push_back({{"name", d.name}, {"pos", std::move(pos)}});
  }
  doc["drawings"] = std::move(dj);
  return doc;
}

Instance instance_of(const json& doc) {
  if (!doc.is_object() || !doc.contains("vertices") || !doc.contains("edges") || !doc.contains("drawings")) {
    throw FormatError("instance needs \"vertices\", \"edges\" and \"drawings\"");
  }
  std::vector<int> labels = doc["vertices"].get<std::vector<int>>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : doc["edges"]) {
    if (!e.is_array() || e.size() != 2) throw FormatError("edges must be [u, v] pairs");
    edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  Instance in;
  try {
    in.graph = std::make_shared<const LabelledGraph>(LabelledGraph::from_labels(labels, edges));
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
  const LabelledGraph& g = *in.graph;
  int i = 0;
  for (const auto& dj : doc["drawings"]) {
    PlanarDrawing d;
    d.graph = in.graph;
    d.name = dj.value("name", "drawing " + std::to_string(i));
    d.position.resize(g.vertex_count());
    std::vector<char> seen(g.vertex_count(), 0);
    if (!dj.contains("pos") || !dj["pos"].is_object()) throw FormatError(d.name + ": missing \"pos\" object");
    for (const auto& [key, value] : dj["pos"].items()) {
      int label;
      try {
        std::size_t used = 0;
        label = std::stoi(key, &used);
        if (used != key.size()) throw std::invalid_argument(key);
      } catch (const std::exception&) {
        throw FormatError(d.name + ": bad vertex id \"" + key + "\"");
      }
      const int v = g.index_of(label);
      if (v < 0) throw FormatError(d.name + ": unknown vertex " + key);
      if (!value.is_array() || value.size() != 2) throw FormatError(d.name + ": position of " + key + " is not [x, y]");
      d.position[v] = Point2(scalar_of(value[0]), scalar_of(value[1]));
      seen[v] = 1;
    }
    for (std::size_t v = 0; v < g.vertex_count(); ++v) {
      if (!seen[v]) throw FormatError(d.name + ": vertex " + std::to_string(g.label(static_cast<int>(v))) + " has no position");
    }
    in.drawings.push_back(std::move(d));
    ++i;
  }
  if (in.drawings.empty()) throw FormatError("instance has no drawings");
  return in;
}

json parse_json(std::string_view text) {
  try {
    return json::parse(text.begin(), text.end());
  } catch (const json::exception& e) {
    throw FormatError(std::string("malformed JSON: ") + e.what());
  }
}

}  // namespace

Instance parse_instance(std::string_view text) {
  try {
    return instance_of(parse_json(text));
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad instance: ") + e.what());
  } catch (const std::invalid_argument& e) {
    throw FormatError(e.what());
  }
}

Instance read_instance_file(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw FormatError("cannot open " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse_instance(ss.str());
}

std::string emit_instance(const Instance& instance) { return instance_json(instance).dump(2) + "\n"; }

std::string emit_result(const Instance& instance, const CompatibleResult& result) {
  ordered doc = instance_json(instance);
  const LabelledGraph& h = *result.graph;
  ordered added = ordered::array();
  for (int label : result.added_labels) {
    const int v = h.index_of(label);
    ordered pos = ordered::array();
    for (const auto& d : result.drawings) pos.push_back(point_json(d.position[v]));
    added.push_back({{"id", label}, {"pos", std::move(pos)}});
  }
  doc["added_vertices"] = std::move(added);
  ordered edges = ordered::array();
  for (const auto& [a, b] : result.added_edges) edges.push_back({a, b});
  doc["added_edges"] = std::move(edges);
  doc["report"] = {{"added_vertex_count", result.added_vertex_count()},
                   {"added_edge_count", result.added_edge_count()},
                   {"envelope_constant", result.envelope_constant()}};
  return doc.dump(2) + "\n";
}

Instance parse_result_as_instance(std::string_view text) {
  json doc = parse_json(text);
  try {
    const std::size_t k = doc.at("drawings").size();
    for (const auto& v : doc.at("added_vertices")) {
      const std::string id = std::to_string(v.at("id").get<int>());
      doc["vertices"].push_back(v.at("id"));
      if (v.at("pos").size() != k) throw FormatError("added vertex " + id + " needs one position per drawing");
      for (std::size_t i = 0; i < k; ++i) doc["drawings"][i]["pos"][id] = v["pos"][i];
    }
    for (const auto& e : doc.at("added_edges")) doc["edges"].push_back(e);
    return instance_of(doc);
  } catch (const json::exception& e) {
    throw FormatError(std::string("bad result: ") + e.what());
  }
}

std::vector<GridPoint> parse_points(std::string_view text) {
  json doc = parse_json(text);
  if (!doc.is_array()) throw FormatError("points must be a JSON array");
  std::vector<GridPoint> points;
  for (const auto& p : doc) {
    if (!p.is_array() || p.empty()) throw FormatError("each point must be a non-empty array");
    GridPoint g;
    g.label = static_cast<int>(points.size());
    for (const auto& c : p) {
      if (!c.is_number_integer()) throw FormatError("point coordinates must be integers");
      g.coords.emplace_back(c.get<long>());
    }
    if (!points.empty() && g.coords.size() != points[0].coords.size()) {
      throw FormatError("points have different dimensions");
    }
    points.push_back(std::move(g));
  }
  return points;
}

}  // namespace compaug
