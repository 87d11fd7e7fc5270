#include "geomforge/incidence.hpp"

#include <algorithm>
#include <deque>
#include <sstream>
#include <unordered_set>

#include "geomforge/parallel.hpp"

namespace geomforge {

IncidenceGeometry::IncidenceGeometry(int num_points, std::vector<std::vector<int>> lines)
    : num_points_(num_points), lines_(std::move(lines)) {
  if (num_points_ < 0) throw GeometryError("negative point count");
  index_lines();
}

IncidenceGeometry::IncidenceGeometry(const Field& F, std::vector<Vec> coords, std::vector<std::vector<int>> lines)
    : num_points_(static_cast<int>(coords.size())), lines_(std::move(lines)), field_(F) {
  coords_.reserve(coords.size());
  for (const Vec& v : coords) {
    if (v.is_zero()) throw GeometryError("zero vector is not a point");
    if (!coords_.empty() && v.size() != coords_[0].size()) throw GeometryError("mixed ambient dimensions");
    coords_.push_back(normalize(F, v));
  }
  index_lines();
}

const Field& IncidenceGeometry::field() const {
  if (!field_) throw GeometryError("geometry is not embedded");
  return *field_;
}

void IncidenceGeometry::index_lines() {
  point_lines_.assign(num_points_, {});
  std::unordered_set<std::uint64_t> pairs;
  for (std::size_t li = 0; li < lines_.size(); ++li) {
    auto& L = lines_[li];
    std::sort(L.begin(), L.end());
    if (std::adjacent_find(L.begin(), L.end()) != L.end()) {
      throw GeometryError("line " + std::to_string(li) + " repeats a point");
    }
    for (int p : L) {
      if (p < 0 || p >= num_points_) throw GeometryError("line " + std::to_string(li) + " has an invalid point id");
      point_lines_[p].push_back(static_cast<int>(li));
    }
    for (std::size_t a = 0; a < L.size(); ++a) {
      for (std::size_t b = a + 1; b < L.size(); ++b) {
        const std::uint64_t key = static_cast<std::uint64_t>(L[a]) * static_cast<std::uint64_t>(num_points_) + L[b];
        if (!pairs.insert(key).second) {
          throw GeometryError("points " + std::to_string(L[a]) + " and " + std::to_string(L[b]) +
                              " lie on two lines");
        }
      }
    }
  }
}

Graph::Graph(std::vector<std::vector<int>> adjacency) : adj_(std::move(adjacency)) {
  const std::size_t n = adj_.size();
  for (auto& nb : adj_) {
    std::sort(nb.begin(), nb.end());
    nb.erase(std::unique(nb.begin(), nb.end()), nb.end());
  }
  dist_.assign(n * n, kUnreachable);
  // One BFS per source, each writing only its own row.
  parallel_for(n, [&](std::size_t s) {
    std::uint8_t* d = &dist_[s * n];
    std::vector<int> queue;
    queue.reserve(n);
    d[s] = 0;
    queue.push_back(static_cast<int>(s));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      const int u = queue[head];
      for (int v : adj_[u]) {
        if (d[v] != kUnreachable) continue;
        if (d[u] + 1 >= kUnreachable) throw GeometryError("graph distance exceeds 254");
        d[v] = static_cast<std::uint8_t>(d[u] + 1);
        queue.push_back(v);
      }
    }
  });
  std::vector<char> assigned(n, 0);
  for (std::size_t s = 0; s < n; ++s) {
    const std::uint8_t* d = &dist_[s * n];
    if (!assigned[s]) {
      ++components_;
      for (std::size_t v = 0; v < n; ++v) {
        if (d[v] != kUnreachable) assigned[v] = 1;
      }
    }
    for (std::size_t v = 0; v < n; ++v) {
      if (d[v] != kUnreachable) diameter_ = std::max(diameter_, static_cast<int>(d[v]));
    }
  }
}

Graph point_graph(const IncidenceGeometry& G) {
  std::vector<std::vector<int>> adj(G.point_count());
  for (const auto& L : G.lines()) {
    for (int a : L) {
      for (int b : L) {
        if (a != b) adj[a].push_back(b);
      }
    }
  }
  return Graph(std::move(adj));
}

Graph levi_graph(const IncidenceGeometry& G) {
  const int np = G.point_count();
  std::vector<std::vector<int>> adj(np + G.line_count());
  for (int li = 0; li < G.line_count(); ++li) {
    for (int p : G.lines()[li]) {
      adj[p].push_back(np + li);
      adj[np + li].push_back(p);
    }
  }
  return Graph(std::move(adj));
}

RegularityResult check_metrically_regular(const Graph& g) {
  RegularityResult res;
  const int n = g.size();
  if (n == 0) {
    res.reason = "empty graph";
    return res;
  }
  if (!g.connected()) {
    res.reason = "graph is disconnected";
    res.witness = std::make_pair(0, -1);
    return res;
  }
  RegularityProfile prof;
  prof.diameter = g.diameter();
  const int d = prof.diameter;
  prof.sizes.assign(d + 1, 0);
  prof.c.assign(d + 1, -1);
  prof.a.assign(d + 1, -1);
  prof.b.assign(d + 1, -1);
  std::vector<std::uint64_t> sizes(d + 1);
  for (int x = 0; x < n; ++x) {
    std::fill(sizes.begin(), sizes.end(), 0);
    for (int y = 0; y < n; ++y) ++sizes[g.distance(x, y)];
    if (x == 0) {
      prof.sizes = sizes;
    } else if (sizes != prof.sizes) {
      res.witness = std::make_pair(x, -1);
      res.reason = "sphere sizes differ at point " + std::to_string(x);
      return res;
    }
    for (int y = 0; y < n; ++y) {
      const int i = g.distance(x, y);
      int c = 0;
      int a = 0;
      int b = 0;
      for (int z : g.neighbours(y)) {
        const int dz = g.distance(x, z);
        if (dz == i - 1) {
          ++c;
        } else if (dz == i) {
          ++a;
        } else {
          ++b;
        }
      }
      if (prof.c[i] < 0) {
        prof.c[i] = c;
        prof.a[i] = a;
        prof.b[i] = b;
      } else if (prof.c[i] != c || prof.a[i] != a || prof.b[i] != b) {
        res.witness = std::make_pair(x, y);
        res.reason = "intersection numbers at distance " + std::to_string(i) + " depend on the pair";
        return res;
      }
    }
  }
  res.regular = true;
  res.profile = std::move(prof);
  return res;
}

bool feit_higman_allows(int n, int s, int t) {
  if (n != 3 && n != 4 && n != 6 && n != 8) return false;
  return !(n == 8 && s == t);
}

namespace {

// BFS from src recording distances and shortest-path counts capped at 2.
void bfs_counts(const Graph& g, int src, std::vector<int>& dist, std::vector<std::uint8_t>& count,
                std::vector<int>& queue) {
  std::fill(dist.begin(), dist.end(), -1);
  std::fill(count.begin(), count.end(), 0);
  dist[src] = 0;
  count[src] = 1;
  std::size_t head = 0;
  std::size_t tail = 0;
  queue[tail++] = src;
  while (head < tail) {
    const int u = queue[head++];
    for (int v : g.neighbours(u)) {
      if (dist[v] < 0) {
        dist[v] = dist[u] + 1;
        count[v] = count[u];
        queue[tail++] = v;
      } else if (dist[v] == dist[u] + 1) {
        count[v] = static_cast<std::uint8_t>(std::min(2, count[v] + count[u]));
      }
    }
  }
}

}  // namespace

NgonResult check_generalized_ngon(const IncidenceGeometry& G, bool allow_thin) {
  NgonResult res;
  const Graph levi = levi_graph(G);
  const int nv = levi.size();
  if (nv == 0 || G.line_count() == 0) {
    res.reason = "geometry has no lines";
    return res;
  }
  if (!levi.connected()) {
    res.reason = "incidence graph is disconnected";
    for (int v = 1; v < nv; ++v) {
      if (levi.distance(0, v) == Graph::kUnreachable) {
        res.witness = std::make_pair(0, v);
        break;
      }
    }
    return res;
  }
  res.n = levi.diameter();

  std::vector<int> dist(nv);
  std::vector<std::uint8_t> count(nv);
  std::vector<int> queue(nv);
  for (int src = 0; src < nv && !res.witness; ++src) {
    bfs_counts(levi, src, dist, count, queue);
    for (int v = 0; v < nv; ++v) {
      if (dist[v] < res.n && count[v] > 1) {
        res.witness = std::make_pair(src, v);
        res.reason = "two shortest paths between elements at distance " + std::to_string(dist[v]);
        break;
      }
    }
  }

  const auto& lines = G.lines();
  bool uniform_s = true;
  for (const auto& L : lines) uniform_s &= L.size() == lines[0].size();
  if (uniform_s) res.s = static_cast<int>(lines[0].size()) - 1;
  bool uniform_t = true;
  for (int p = 0; p < G.point_count(); ++p) uniform_t &= G.lines_through(p).size() == G.lines_through(0).size();
  if (uniform_t) res.t = static_cast<int>(G.lines_through(0).size()) - 1;

  bool thick = true;
  for (const auto& L : lines) thick &= L.size() >= 3;
  for (int p = 0; p < G.point_count(); ++p) thick &= G.lines_through(p).size() >= 3;
  res.thick = thick;
  res.feit_higman = thick && res.s && res.t && feit_higman_allows(res.n, *res.s, *res.t);

  if (res.witness) return res;
  // Unique short paths give girth >= 2n; degree >= 2 forces a cycle, hence girth exactly 2n.
  for (int v = 0; v < nv; ++v) {
    if (levi.neighbours(v).size() < 2) {
      res.witness = std::make_pair(v, v);
      res.reason = "element incident with fewer than two elements";
      return res;
    }
  }
  if (res.n < 2) {
    res.reason = "incidence graph diameter below 2";
    return res;
  }
  if (!thick) {
    res.ok = allow_thin;
    if (!allow_thin) res.reason = "geometry is thin";
    return res;
  }
  if (!res.feit_higman) {
    res.reason = "parameters excluded by Feit-Higman";
    return res;
  }
  res.ok = true;
  return res;
}

LeviStats levi_girth_diameter(const IncidenceGeometry& G) {
  const Graph levi = levi_graph(G);
  const int nv = levi.size();
  LeviStats st;
  st.diameter = levi.diameter();
  int girth = 0;
  std::vector<int> dist(nv);
  std::vector<int> parent(nv);
  std::deque<int> queue;
  for (int src = 0; src < nv; ++src) {
    std::fill(dist.begin(), dist.end(), -1);
    dist[src] = 0;
    parent[src] = -1;
    queue.assign(1, src);
    while (!queue.empty()) {
      const int u = queue.front();
      queue.pop_front();
      for (int v : levi.neighbours(u)) {
        if (dist[v] < 0) {
          dist[v] = dist[u] + 1;
          parent[v] = u;
          queue.push_back(v);
        } else if (v != parent[u]) {
          const int cycle = dist[u] + dist[v] + 1;
          if (girth == 0 || cycle < girth) girth = cycle;
        }
      }
    }
  }
  st.girth = girth;
  return st;
}

std::vector<std::vector<int>> distance_balls(const Graph& g, int x) {
  std::vector<std::vector<int>> balls(g.diameter() + 1);
  for (int y = 0; y < g.size(); ++y) {
    const int d = g.distance(x, y);
    if (d == Graph::kUnreachable) continue;
    for (int i = d; i <= g.diameter(); ++i) balls[i].push_back(y);
  }
  return balls;
}

namespace {

using Bits = std::vector<std::uint64_t>;

int popcount_and(const Bits& a, const Bits& b) {
  int c = 0;
  for (std::size_t i = 0; i < a.size(); ++i) c += __builtin_popcountll(a[i] & b[i]);
  return c;
}

// k with (q^k - 1)/(q - 1) = count, or -1.
int proj_dim(std::uint64_t count, int q) {
  std::uint64_t c = 0;
  std::uint64_t pw = 1;
  for (int k = 0; k <= 64; ++k) {
    if (c == count) return k;
    if (c > count) return -1;
    c += pw;
    pw *= static_cast<std::uint64_t>(q);
  }
  return -1;
}

}  // namespace

EmbeddingParams check_embedding_axioms(const IncidenceGeometry& G) {
  EmbeddingParams out;
  if (!G.embedded()) throw GeometryError("embedding axioms need coordinates");
  const Field& F = G.field();
  const int q = F.order();
  const int n = G.ambient_dim();
  const int np = G.point_count();
  const auto& X = G.coords();
  std::ostringstream w;

  auto fail = [&](char axiom, const std::string& why) {
    out.axioms[axiom] = false;
    if (!out.failed_axiom) {
      out.failed_axiom = axiom;
      out.witness = why;
    }
  };

  // (a)
  out.axioms['a'] = rank(F, X) == n;
  if (!out.axioms['a']) fail('a', "points do not span the ambient space");

  // (b)
  out.axioms['b'] = true;
  for (int li = 0; li < G.line_count(); ++li) {
    const auto& L = G.lines()[li];
    Matrix rows;
    for (int p : L) rows.push_back(X[p]);
    if (static_cast<int>(L.size()) != q + 1 || rank(F, rows) != 2) {
      fail('b', "line " + std::to_string(li) + " is not a full projective line");
      break;
    }
  }

  // (c)
  out.axioms['c'] = true;
  for (int p = 0; p < np; ++p) {
    if (G.lines_through(p).empty()) {
      fail('c', "point " + std::to_string(p) + " is on no line");
      break;
    }
  }

  // (d)
  const Graph g = point_graph(G);
  const RegularityResult reg = check_metrically_regular(g);
  out.d = g.diameter();
  out.axioms['d'] = reg.regular && out.d >= 2;
  if (!out.axioms['d']) fail('d', reg.regular ? "diameter below 2" : reg.reason);

  if (out.failed_axiom) return out;
  const int d = out.d;

  // Balls as bitsets, spans, axioms (e)-(g).
  const std::size_t words = (static_cast<std::size_t>(np) + 63) / 64;
  std::vector<std::vector<Bits>> ball(np, std::vector<Bits>(d + 1, Bits(words, 0)));
  std::vector<std::vector<int>> ball_size(np, std::vector<int>(d + 1, 0));
  out.axioms['e'] = true;
  out.axioms['f'] = true;
  out.axioms['g'] = true;
  bool w1_hyper = true;
  bool w2_hyper = true;
  bool w23_subspaces = true;
  for (int x = 0; x < np; ++x) {
    const auto balls = distance_balls(g, x);
    for (int i = 0; i <= d; ++i) {
      for (int y : balls[i]) ball[x][i][y / 64] |= 1ULL << (y % 64);
      ball_size[x][i] = static_cast<int>(balls[i].size());
    }
    for (int i = 1; i <= d; ++i) {
      Matrix rows;
      for (int y : balls[i]) rows.push_back(X[y]);
      const Subspace U = rref(F, n, rows);
      int omega_in_u = 0;
      for (int y = 0; y < np; ++y) omega_in_u += U.contains(X[y]);
      if (omega_in_u != ball_size[x][i]) {
        fail('f', "W_" + std::to_string(i) + "(" + std::to_string(x) + ") is not Omega cut by a subspace");
      }
      const bool is_subspace = U.point_count() == static_cast<std::uint64_t>(ball_size[x][i]);
      if (i == 1) {
        if (!is_subspace) fail('e', "W_1(" + std::to_string(x) + ") is not a subspace");
        if (x == 0) out.m = U.dim();
        if (U.dim() != out.m) fail('e', "dim W_1 varies");
        w1_hyper &= U.dim() == n - 1;
      }
      if (i == 2) {
        const int h = proj_dim(static_cast<std::uint64_t>(ball_size[x][2]), q);
        if (h < 0) fail('g', "|W_2(" + std::to_string(x) + ")| is not a projective count");
        if (x == 0) out.h = h;
        if (h != out.h) fail('g', "h varies");
        w2_hyper &= is_subspace && U.dim() == n - 1;
      }
      if (i == 2 || i == 3) w23_subspaces &= is_subspace;
    }
  }
  if (out.failed_axiom) return out;

  // e_i, f_i over all pairs.
  out.e.assign(d + 1, -1);
  out.f.assign(d + 1, -1);
  for (int x = 0; x < np && !out.failed_axiom; ++x) {
    for (int y = 0; y < np; ++y) {
      const int i = g.distance(x, y);
      if (i == 0) continue;
      const int ei = proj_dim(static_cast<std::uint64_t>(popcount_and(ball[x][1], ball[y][i - 1])), q);
      const int fi = proj_dim(static_cast<std::uint64_t>(popcount_and(ball[x][1], ball[y][i])), q);
      if (ei < 0 || fi < 0) {
        fail('f', "W_1(x) cap W_i(y) is not a subspace for x=" + std::to_string(x) + ", y=" + std::to_string(y));
        break;
      }
      if (out.e[i] < 0) {
        out.e[i] = ei;
        out.f[i] = fi;
      } else if (out.e[i] != ei || out.f[i] != fi) {
        fail('d', "e_i/f_i depend on the pair x=" + std::to_string(x) + ", y=" + std::to_string(y));
        break;
      }
    }
  }
  if (out.failed_axiom) return out;

  out.classification = classify_31_case(q, out.m, out.h, out.f[1], out.e[2]);
  out.identity_holds = out.classification->identity_holds;
  out.w1_polarity = out.classification->which == Case31::CaseI && w1_hyper;
  out.w2_hyperplanes = out.classification->which == Case31::CaseII && w23_subspaces && w2_hyper;
  return out;
}

}  // namespace geomforge
