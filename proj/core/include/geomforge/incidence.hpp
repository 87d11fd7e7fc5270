#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "geomforge/constraints.hpp"
#include "geomforge/linear.hpp"

namespace geomforge {

class GeometryError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Points 0..n-1 and lines as sorted point lists, optionally embedded in GF(q)^dim.
class IncidenceGeometry {
 public:
  /// Throws GeometryError on out-of-range ids, repeated points on a line, or
  /// two points sharing more than one line.
  IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines);
  /// Embedded geometry; coordinates are normalized on entry.
  IncidenceGeometry(const Field& F, std::vector<Vec> coords, std::vector<std::vector<int>> lines);

  int point_count() const { return num_points_; }
  int line_count() const { return static_cast<int>(lines_.size()); }
  const std::vector<std::vector<int>>& lines() const { return lines_; }
  const std::vector<int>& lines_through(int point) const { return point_lines_[point]; }

  bool embedded() const { return field_.has_value(); }
  const Field& field() const;
  const std::vector<Vec>& coords() const { return coords_; }
  int ambient_dim() const { return coords_.empty() ? 0 : coords_[0].size(); }

 private:
  void index_lines();

  int num_points_ = 0;
  std::vector<std::vector<int>> lines_;
  std::vector<std::vector<int>> point_lines_;
  std::optional<Field> field_;
  std::vector<Vec> coords_;
};

/// Simple undirected graph with all-pairs BFS distances.
class Graph {
 public:
  static constexpr std::uint8_t kUnreachable = 0xff;

  explicit Graph(std::vector<std::vector<int>> adjacency);

  int size() const { return static_cast<int>(adj_.size()); }
  const std::vector<int>& neighbours(int v) const { return adj_[v]; }
  std::uint8_t distance(int a, int b) const { return dist_[static_cast<std::size_t>(a) * adj_.size() + b]; }
  bool connected() const { return components_ == 1; }
  int components() const { return components_; }
  /// Largest finite distance.
  int diameter() const { return diameter_; }

 private:
  std::vector<std::vector<int>> adj_;
  std::vector<std::uint8_t> dist_;
  int components_ = 0;
  int diameter_ = 0;
};

/// Collinearity graph: distinct points joined when they share a line.
Graph point_graph(const IncidenceGeometry& G);
/// Bipartite point-line incidence graph; points first, then lines.
Graph levi_graph(const IncidenceGeometry& G);

struct RegularityProfile {
  int diameter = 0;
  std::vector<std::uint64_t> sizes;  // |Gamma_i(x)|, i = 0..d
  std::vector<int> c;                // |Gamma_1(y) cap Gamma_{i-1}(x)|
  std::vector<int> a;                // |Gamma_1(y) cap Gamma_i(x)|
  std::vector<int> b;                // |Gamma_1(y) cap Gamma_{i+1}(x)|
};

struct RegularityResult {
  bool regular = false;
  std::optional<RegularityProfile> profile;
  /// First violating pair in canonical order (x, y); y == -1 means the sphere size at x differs.
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

RegularityResult check_metrically_regular(const Graph& g);

/// Feit-Higman restriction for thick finite generalized n-gons.
bool feit_higman_allows(int n, int s, int t);

struct NgonResult {
  bool ok = false;
  int n = 0;
  std::optional<int> s;
  std::optional<int> t;
  bool thick = false;
  bool feit_higman = false;
  /// Pair of Levi vertices with two shortest paths, or an unreachable pair.
  std::optional<std::pair<int, int>> witness;
  std::string reason;
};

/// Verifies that the geometry is a generalized n-gon (n = half the Levi
/// diameter): unique shortest paths between elements at distance < n and
/// diameter n. Thin geometries are rejected unless allow_thin is set.
NgonResult check_generalized_ngon(const IncidenceGeometry& G, bool allow_thin = false);

struct LeviStats {
  int girth = 0;  // 0 when acyclic
  int diameter = 0;
};
/// Independent brute-force girth/diameter of the Levi graph.
LeviStats levi_girth_diameter(const IncidenceGeometry& G);

/// Sets W_i(x) of points at distance <= i from x, as sorted id lists.
std::vector<std::vector<int>> distance_balls(const Graph& g, int x);

struct EmbeddingParams {
  /// axiom letter -> satisfied
  std::map<char, bool> axioms;
  std::optional<char> failed_axiom;
  std::string witness;
  int m = 0;
  int h = 0;
  int d = 0;
  std::vector<int> e;  // e[i] for 1 <= i <= d (e[0] unused)
  std::vector<int> f;
  bool identity_holds = false;
  /// Case classification; empty when an axiom fails.
  std::optional<Case31Result> classification;
  /// Case (i): x <-> W_1(x) is a symplectic polarity (W_1 hyperplanes).
  bool w1_polarity = false;
  /// Case (ii): W_2(x), W_3(x) subspaces and W_2(x) a hyperplane for all x.
  bool w2_hyperplanes = false;
};

/// Checks axioms (a)-(g) for an embedded geometry and computes the
/// parameters m, h, e_i, f_i together with the case classification.
EmbeddingParams check_embedding_axioms(const IncidenceGeometry& G);

}  // namespace geomforge
