#pragma once

#include <fstream>
#include <sstream>
#include <string>
#include <vector>

#include <json.hpp>

#include "tsurf/error.hpp"
#include "tsurf/families.hpp"
#include "tsurf/surface.hpp"

namespace tsurf {

namespace detail {

inline Scalar scalar_from_json(const nlohmann::json& j) {
  if (j.is_string()) return Scalar::parse(j.get<std::string>());
  if (j.is_number_integer()) return Scalar(Rational(j.get<std::int64_t>()));
  if (j.is_number()) return Scalar(j.get<double>());
  throw Error(ErrorKind::ParseError, "expected a number or numeric string");
}

inline EdgeRef edge_from_json(const nlohmann::json& j) {
  if (!j.is_array() || j.size() != 2) throw Error(ErrorKind::ParseError, "edge reference must be [polygon, edge]");
  return {j[0].get<std::size_t>(), j[1].get<std::size_t>()};
}

}  // namespace detail

inline nlohmann::json to_json(const Surface& s) {
  nlohmann::json polys = nlohmann::json::array();
  for (const auto& p : s.polygons()) {
    nlohmann::json verts = nlohmann::json::array();
    for (const auto& v : p.vertices()) verts.push_back({v.x.to_string(), v.y.to_string()});
    polys.push_back(verts);
  }
  nlohmann::json glue = nlohmann::json::array();
  for (const auto& g : s.gluings())
    glue.push_back({{"a", {g.a.polygon, g.a.edge}}, {"b", {g.b.polygon, g.b.edge}}, {"reversed", g.reversed}, {"label", g.label}});
  return {{"polygons", polys}, {"gluings", glue}};
}

inline Surface surface_from_json(const nlohmann::json& j) {
  try {
    std::vector<Polygon> polys;
    for (const auto& pj : j.at("polygons")) {
      std::vector<Vec2> verts;
      for (const auto& vj : pj) {
        if (!vj.is_array() || vj.size() != 2) throw Error(ErrorKind::ParseError, "vertex must be [x, y]");
        verts.push_back({detail::scalar_from_json(vj[0]), detail::scalar_from_json(vj[1])});
      }
      polys.emplace_back(std::move(verts));
    }
    std::vector<Gluing> glue;
    for (const auto& gj : j.at("gluings")) {
      Gluing g{detail::edge_from_json(gj.at("a")), detail::edge_from_json(gj.at("b")), gj.value("reversed", false),
               gj.value("label", std::string{})};
      glue.push_back(std::move(g));
    }
    return build_surface(std::move(polys), std::move(glue));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline Surface surface_from_string(const std::string& text) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(text);
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return surface_from_json(j);
}

inline std::string read_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw Error(ErrorKind::ParseError, "cannot open " + path);
  std::ostringstream os;
  os << in.rdbuf();
  return os.str();
}

inline Surface load_surface(const std::string& path) { return surface_from_string(read_file(path)); }

/// {"n_squares": n, "right": [...], "top": [...]}
inline SquareTiledSpec square_tiled_from_json(const nlohmann::json& j) {
  try {
    return {j.at("n_squares").get<std::size_t>(), j.at("right").get<std::vector<std::size_t>>(),
            j.at("top").get<std::vector<std::size_t>>()};
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
}

inline SquareTiledSpec load_square_tiled(const std::string& path) {
  nlohmann::json j;
  try {
    j = nlohmann::json::parse(read_file(path));
  } catch (const nlohmann::json::exception& e) {
    throw Error(ErrorKind::ParseError, e.what());
  }
  return square_tiled_from_json(j);
}

}  // namespace tsurf
