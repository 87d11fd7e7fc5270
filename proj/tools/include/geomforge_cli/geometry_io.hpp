#pragma once

#include <string>

#include "geomforge/incidence.hpp"
#include "geomforge_cli/report.hpp"

namespace geomforge::cli {

Json to_json(const Vec& v);
Json to_json(const Subspace& s);

/// Incidence format: {"q": q, "points": [[coords]...], "lines": [[ids]...]}.
/// Abstract geometries carry no "q" and give "points" as a count.
Json geometry_to_json(const IncidenceGeometry& G);
/// Throws GeometryError on malformed input.
IncidenceGeometry geometry_from_json(const Json& j);

IncidenceGeometry load_geometry(const std::string& path);
void save_geometry(const std::string& path, const IncidenceGeometry& G);

}  // namespace geomforge::cli
