#pragma once

// JSON records for paths and superpolynomials. Schemas live in docs/schemas.

#include "torsuper/dyck.hpp"
#include "torsuper/format.hpp"
#include "torsuper/superpoly.hpp"

namespace torsuper {

inline json point_json(lattice_point p) { return json::array({p.x, p.y}); }

/// {"m","n","steps"} plus, with `stats`, area, h, p0, V (with k) and rugged.
inline json path_record(const dyck_path& p, bool stats) {
  json j = json::object();
  j["m"] = p.shape().m();
  j["n"] = p.shape().n();
  j["steps"] = p.to_string();
  if (!stats) return j;
  const auto ov = outer_vertices(p);
  j["area"] = area(p);
  j["h"] = h_statistic(p);
  j["p0"] = point_json(ov.p0.point);
  json vs = json::array();
  for (const auto& v : ov.others) {
    json e = json::object();
    e["p"] = point_json(v.point);
    e["k"] = v.counts.k;
    vs.push_back(std::move(e));
  }
  j["V"] = std::move(vs);
  j["rugged"] = ov.others.size() + 1 == static_cast<std::size_t>(p.shape().n());
  return j;
}

inline json superpoly_record(const superpoly_result& r) {
  json j = json::object();
  j["m"] = r.shape.m();
  j["n"] = r.shape.n();
  j["pathCount"] = r.path_count;
  j["ruggedCount"] = r.rugged_count;
  j["alphaRange"] = json::array({r.shape.lower_alpha_degree(), r.shape.upper_alpha_degree()});
  j["terms"] = to_json(r.poly);
  return j;
}

}  // namespace torsuper
