#include "geomforge_cli/geometry_io.hpp"

#include <fstream>

namespace geomforge::cli {

Json to_json(const Vec& v) {
  Json out = Json::array();
  for (Fe c : v.coords()) out.push_back(static_cast<int>(c.value));
  return out;
}

Json to_json(const Subspace& s) {
  Json out = Json::array();
  for (const Vec& row : s.basis()) out.push_back(to_json(row));
  return out;
}

Json geometry_to_json(const IncidenceGeometry& G) {
  Json out = Json::object();
  if (G.embedded()) {
    out["q"] = G.field().order();
    Json pts = Json::array();
    for (const Vec& v : G.coords()) pts.push_back(to_json(v));
    out["points"] = std::move(pts);
  } else {
    out["points"] = G.point_count();
  }
  out["lines"] = G.lines();
  return out;
}

IncidenceGeometry geometry_from_json(const Json& j) {
  try {
    if (!j.is_object() || !j.contains("points") || !j.contains("lines")) {
      throw GeometryError("geometry needs \"points\" and \"lines\"");
    }
    auto lines = j.at("lines").get<std::vector<std::vector<int>>>();
    const Json& pts = j.at("points");
    if (pts.is_number_integer()) return IncidenceGeometry(pts.get<int>(), std::move(lines));
    if (!j.contains("q")) throw GeometryError("embedded geometry needs \"q\"");
    const Field F = Field::of_order(j.at("q").get<int>());
    std::vector<Vec> coords;
    int dim = -1;
    for (const Json& p : pts) {
      const auto c = p.get<std::vector<int>>();
      if (dim < 0) dim = static_cast<int>(c.size());
      if (static_cast<int>(c.size()) != dim) throw GeometryError("points have different lengths");
      if (dim < 1 || dim > kMaxDim) throw GeometryError("point dimension out of range");
      Vec v(dim);
      for (int i = 0; i < dim; ++i) {
        if (c[i] < 0 || c[i] >= F.order()) throw GeometryError("coordinate outside the field");
        v[i] = F.element(c[i]);
      }
      if (v.is_zero()) throw GeometryError("zero vector is not a point");
      coords.push_back(v);
    }
    return IncidenceGeometry(F, std::move(coords), std::move(lines));
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError(std::string("malformed geometry: ") + e.what());
  }
}

IncidenceGeometry load_geometry(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw GeometryError("cannot open " + path);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const nlohmann::json::exception& e) {
    throw GeometryError("invalid JSON in " + path + ": " + e.what());
  }
  return geometry_from_json(j);
}

void save_geometry(const std::string& path, const IncidenceGeometry& G) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << geometry_to_json(G).dump() << "\n";
}

}  // namespace geomforge::cli
