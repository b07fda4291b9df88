#pragma once
// JSON wire formats: polylines, drawings, trees, verdicts, point sets.
// Exact-rational mode additionally accepts coordinates as "p/q" strings.

#include <string>

#include <json.hpp>

#include "sapath/graph.hpp"
#include "sapath/graph_search.hpp"
#include "sapath/path_check.hpp"
#include "sapath/steiner.hpp"
#include "sapath/tree.hpp"

namespace sapath {

using json = nlohmann::json;

inline double coord_from_json_double(const json& j) {
  if (j.is_number()) return j.get<double>();
  if (j.is_string()) {
    // Accept "p/q" in float mode too, evaluated in double arithmetic.
    const std::string s = j.get<std::string>();
    auto pos = s.find('/');
    if (pos == std::string::npos) return std::stod(s);
    return std::stod(s.substr(0, pos)) / std::stod(s.substr(pos + 1));
  }
  throw std::invalid_argument("coordinate must be a number or \"p/q\" string");
}

inline Rational coord_from_json_rational(const json& j) {
  if (j.is_number_integer()) return Rational(j.get<long long>());
  if (j.is_number()) {
    // A double is an exact binary rational.
    double d = j.get<double>();
    if (!std::isfinite(d)) throw std::invalid_argument("non-finite coordinate");
    return Rational(d);
  }
  if (j.is_string()) {
    const std::string s = j.get<std::string>();
    auto pos = s.find('/');
    if (pos == std::string::npos) return Rational(boost::multiprecision::cpp_int(s));
    return Rational(boost::multiprecision::cpp_int(s.substr(0, pos)),
                    boost::multiprecision::cpp_int(s.substr(pos + 1)));
  }
  throw std::invalid_argument("coordinate must be a number or \"p/q\" string");
}

template <class T>
T coord_from_json(const json& j) {
  if constexpr (is_exact_scalar<T>)
    return coord_from_json_rational(j);
  else
    return coord_from_json_double(j);
}

template <class T>
Point<T> point_from_json(const json& arr, int dim) {
  if (!arr.is_array() || static_cast<int>(arr.size()) != dim)
    throw std::invalid_argument("point arity does not match dim");
  Point<T> p;
  p.dim = dim;
  for (int k = 0; k < dim; ++k) p.c[k] = coord_from_json<T>(arr[k]);
  return p;
}

template <class T>
json point_to_json(const Point<T>& p) {
  json arr = json::array();
  for (int k = 0; k < p.dim; ++k) arr.push_back(to_double(p.c[k]));
  return arr;
}

template <class T>
Polyline<T> polyline_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
  Polyline<T> p;
  for (const auto& v : j.at("vertices")) p.v.push_back(point_from_json<T>(v, dim));
  p.validate();
  return p;
}

template <class T>
json polyline_to_json(const Polyline<T>& p) {
  json j;
  j["dim"] = p.dim();
  j["vertices"] = json::array();
  for (const auto& v : p.v) j["vertices"].push_back(point_to_json(v));
  return j;
}

inline json verdict_to_json(const CheckVerdict& v) {
  json j;
  j["ok"] = v.ok;
  j["witness"] = v.witness ? json{v.witness->first, v.witness->second} : json(nullptr);
  switch (v.direction) {
    case CheckDirection::Forward: j["direction"] = "forward"; break;
    case CheckDirection::Reverse: j["direction"] = "reverse"; break;
    default: j["direction"] = nullptr;
  }
  return j;
}

template <class T>
GraphDrawing<T> drawing_from_json(const json& j) {
  int dim = j.at("dim").get<int>();
  if (dim != 2 && dim != 3) throw std::invalid_argument("dim must be 2 or 3");
  GraphDrawing<T> g;
  for (const auto& v : j.at("vertices")) g.vertices.push_back(point_from_json<T>(v, dim));
  for (const auto& e : j.at("edges")) {
    if (!e.is_array() || e.size() != 2) throw std::invalid_argument("edge must be [i, j]");
    g.edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  }
  g.normalize();
  g.validate();
  return g;
}

template <class T>
json drawing_to_json(const GraphDrawing<T>& g) {
  json j;
  j["dim"] = g.dim();
  j["vertices"] = json::array();
  for (const auto& v : g.vertices) j["vertices"].push_back(point_to_json(v));
  j["edges"] = json::array();
  for (const auto& e : g.edges) j["edges"].push_back({e.first, e.second});
  return j;
}

inline TreeShape tree_from_json(const json& j) {
  int n = j.at("n").get<int>();
  std::vector<std::pair<int, int>> edges;
  for (const auto& e : j.at("edges")) edges.emplace_back(e[0].get<int>(), e[1].get<int>());
  return TreeShape::from_edges(n, edges);
}

inline json tree_to_json(const TreeShape& t) {
  json j;
  j["n"] = t.n;
  j["edges"] = json::array();
  for (int v = 0; v < t.n; ++v)
    for (int w : t.adj[v])
      if (v < w) j["edges"].push_back({v, w});
  return j;
}

template <class T>
std::vector<Point<T>> points_from_json(const json& j) {
  std::vector<Point<T>> pts;
  for (const auto& v : j.at("points")) pts.push_back(point_from_json<T>(v, 2));
  return pts;
}

template <class T>
json points_to_json(const std::vector<Point<T>>& pts) {
  json j;
  j["points"] = json::array();
  for (const auto& p : pts) j["points"].push_back(point_to_json(p));
  return j;
}

inline json square_to_json(const SquareRegion& s) { return json{s.cx, s.cy, s.half}; }

inline SquareRegion square_from_json(const json& j) {
  return SquareRegion{j.at(0).get<double>(), j.at(1).get<double>(), j.at(2).get<double>()};
}

inline json wspd_pairs_to_json(const std::vector<WspdPair>& pairs) {
  json arr = json::array();
  for (const auto& p : pairs) {
    json jp;
    jp["a"] = square_to_json(p.a);
    jp["b"] = square_to_json(p.b);
    jp["sep_h"] = p.separated_h;
    jp["sep_v"] = p.separated_v;
    jp["bridge"] = p.bridge ? json{point_to_json(p.bridge->first),
                                   point_to_json(p.bridge->second)}
                            : json(nullptr);
    arr.push_back(std::move(jp));
  }
  return arr;
}

inline std::vector<WspdPair> wspd_pairs_from_json(const json& arr) {
  std::vector<WspdPair> pairs;
  for (const auto& jp : arr) {
    WspdPair p;
    p.a = square_from_json(jp.at("a"));
    p.b = square_from_json(jp.at("b"));
    p.separated_h = jp.at("sep_h").get<bool>();
    p.separated_v = jp.at("sep_v").get<bool>();
    if (!jp.at("bridge").is_null())
      p.bridge = std::make_pair(point_from_json<double>(jp.at("bridge")[0], 2),
                                point_from_json<double>(jp.at("bridge")[1], 2));
    pairs.push_back(std::move(p));
  }
  return pairs;
}

inline json network_to_json(const SteinerNetwork& net) {
  json j;
  j["eps"] = net.eps;
  j["points"] = points_to_json(net.points).at("points");
  j["g"] = drawing_to_json(net.g());
  j["g_rot"] = drawing_to_json(net.g_rot());
  json terms = json::array();
  for (std::size_t i = 0; i < net.points.size(); ++i)
    terms.push_back({net.axis.terminal_vertex[i], net.rotated.terminal_vertex[i]});
  j["terminals"] = terms;
  j["pairs"] = wspd_pairs_to_json(net.pairs());
  j["pairs_rot"] = wspd_pairs_to_json(net.pairs_rot());
  return j;
}

/// Rebuild a routable network from its serialized form. The quadtrees are
/// not serialized; routing only needs the drawings and terminal maps.
inline SteinerNetwork network_from_json(const json& j) {
  SteinerNetwork net;
  net.eps = j.at("eps").get<double>();
  for (const auto& p : j.at("points")) net.points.push_back(point_from_json<double>(p, 2));
  net.axis.g = drawing_from_json<double>(j.at("g"));
  net.rotated.g = drawing_from_json<double>(j.at("g_rot"));
  for (const auto& t : j.at("terminals")) {
    net.axis.terminal_vertex.push_back(t.at(0).get<int>());
    net.rotated.terminal_vertex.push_back(t.at(1).get<int>());
  }
  if (net.axis.terminal_vertex.size() != net.points.size())
    throw std::invalid_argument("network: terminal map size mismatch");
  net.axis.pairs = wspd_pairs_from_json(j.at("pairs"));
  net.rotated.pairs = wspd_pairs_from_json(j.at("pairs_rot"));
  net.axis.routing = detail::build_routing(net.axis.g);
  net.rotated.routing = detail::build_routing(net.rotated.g);
  return net;
}

}  // namespace sapath
