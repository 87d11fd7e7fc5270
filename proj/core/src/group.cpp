#include "geomforge/group.hpp"

#include <algorithm>
#include <map>
#include <numeric>
#include <set>
#include <unordered_map>
#include <unordered_set>

#include "geomforge/parallel.hpp"

namespace geomforge {

Group::Group(std::string name, Field F, int n, std::vector<SemilinearMap> generators, std::optional<Form> form)
    : name_(std::move(name)), field_(std::move(F)), n_(n), gens_(std::move(generators)), form_(std::move(form)) {
  if (n_ < 1 || n_ > kMaxDim) throw GroupError("group dimension out of range");
  if (form_ && form_->dim() != n_) throw GroupError("form dimension does not match the group");
  for (std::size_t i = 0; i < gens_.size(); ++i) {
    const SemilinearMap& g = gens_[i];
    if (static_cast<int>(g.m.size()) != n_ || g.k < 0 || g.k >= field_.e()) {
      throw GroupError(name_ + ": generator " + std::to_string(i) + " has the wrong shape");
    }
    for (const Vec& r : g.m) {
      if (r.size() != n_) throw GroupError(name_ + ": generator " + std::to_string(i) + " has the wrong shape");
    }
    if (rank(field_, g.m) != n_) throw GroupError(name_ + ": generator " + std::to_string(i) + " is singular");
    if (form_ && !similarity_scalar(*form_, g)) {
      throw GroupError(name_ + ": generator " + std::to_string(i) + " does not preserve the form");
    }
  }
}

Perm compose(const Perm& a, const Perm& b) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[i] = b[a[i]];
  return out;
}

Perm inverse(const Perm& a) {
  Perm out(a.size());
  for (std::size_t i = 0; i < a.size(); ++i) out[a[i]] = static_cast<int>(i);
  return out;
}

bool is_identity(const Perm& a) {
  for (std::size_t i = 0; i < a.size(); ++i) {
    if (a[i] != static_cast<int>(i)) return false;
  }
  return true;
}

Action act_on_points(const Group& G, const PointSet& points) {
  const Field& F = G.field();
  Action out;
  out.degree = points.size();
  for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
    const SemilinearMap& g = G.generators()[gi];
    Perm p(points.size());
    parallel_for(points.size(), [&](std::size_t i) { p[i] = points.find(apply_point(F, g, points[static_cast<int>(i)])); });
    for (int i = 0; i < points.size(); ++i) {
      if (p[i] < 0) {
        throw ClosureError(G.name() + ": generator " + std::to_string(gi) + " maps point " + to_string(points[i]) +
                               " outside the point set",
                           static_cast<int>(gi), i);
      }
    }
    if (static_cast<int>(std::unordered_set<int>(p.begin(), p.end()).size()) != points.size()) {
      throw ClosureError(G.name() + ": generator is not injective on the point set", static_cast<int>(gi), -1);
    }
    out.perms.push_back(std::move(p));
  }
  return out;
}

Action act_on_subspaces(const Group& G, const std::vector<Subspace>& subspaces) {
  std::unordered_map<Subspace, int> index;
  for (std::size_t i = 0; i < subspaces.size(); ++i) index.emplace(subspaces[i], static_cast<int>(i));
  Action out;
  out.degree = static_cast<int>(subspaces.size());
  for (std::size_t gi = 0; gi < G.generators().size(); ++gi) {
    const SemilinearMap& g = G.generators()[gi];
    Perm p(subspaces.size());
    parallel_for(subspaces.size(), [&](std::size_t i) {
      const auto it = index.find(apply(g, subspaces[i]));
      p[i] = it == index.end() ? -1 : it->second;
    });
    for (std::size_t i = 0; i < p.size(); ++i) {
      if (p[i] < 0) {
        throw ClosureError(G.name() + ": generator " + std::to_string(gi) + " maps subspace " + std::to_string(i) +
                               " outside the list",
                           static_cast<int>(gi), static_cast<int>(i));
      }
    }
    out.perms.push_back(std::move(p));
  }
  return out;
}

Action act_on_tuples(const std::vector<const Action*>& components, const std::vector<std::vector<int>>& tuples) {
  if (components.empty()) throw GroupError("tuple action needs at least one component");
  const std::size_t gens = components[0]->perms.size();
  for (const Action* a : components) {
    if (a->perms.size() != gens) throw GroupError("tuple components have different generator counts");
  }
  std::map<std::vector<int>, int> index;
  for (std::size_t i = 0; i < tuples.size(); ++i) {
    if (tuples[i].size() != components.size()) throw GroupError("tuple length does not match the components");
    index.emplace(tuples[i], static_cast<int>(i));
  }
  Action out;
  out.degree = static_cast<int>(tuples.size());
  for (std::size_t gi = 0; gi < gens; ++gi) {
    Perm p(tuples.size());
    std::vector<int> image(components.size());
    for (std::size_t i = 0; i < tuples.size(); ++i) {
      for (std::size_t c = 0; c < components.size(); ++c) image[c] = components[c]->perms[gi][tuples[i][c]];
      const auto it = index.find(image);
      if (it == index.end()) {
        throw ClosureError("generator " + std::to_string(gi) + " maps tuple " + std::to_string(i) + " outside the list",
                           static_cast<int>(gi), static_cast<int>(i));
      }
      p[i] = it->second;
    }
    out.perms.push_back(std::move(p));
  }
  return out;
}

std::vector<int> orbit(const std::vector<Perm>& gens, int degree, int seed) {
  if (seed < 0 || seed >= degree) throw GroupError("orbit seed out of range");
  std::vector<char> seen(degree, 0);
  std::vector<int> out{seed};
  seen[seed] = 1;
  std::vector<int> frontier{seed};
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int x : frontier) {
      for (const Perm& g : gens) {
        const int y = g[x];
        if (!seen[y]) {
          seen[y] = 1;
          next.push_back(y);
        }
      }
    }
    std::sort(next.begin(), next.end());
    out.insert(out.end(), next.begin(), next.end());
    frontier = std::move(next);
  }
  return out;
}

std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree) {
  std::vector<char> seen(degree, 0);
  std::vector<std::vector<int>> out;
  for (int x = 0; x < degree; ++x) {
    if (seen[x]) continue;
    std::vector<int> o = orbit(gens, degree, x);
    for (int y : o) seen[y] = 1;
    out.push_back(std::move(o));
  }
  return out;
}

std::uint64_t tuple_orbit_size(const std::vector<Perm>& gens, const std::vector<int>& tuple) {
  std::set<std::vector<int>> seen{tuple};
  std::vector<std::vector<int>> stack{tuple};
  std::vector<int> image(tuple.size());
  while (!stack.empty()) {
    const std::vector<int> t = std::move(stack.back());
    stack.pop_back();
    for (const Perm& g : gens) {
      for (std::size_t c = 0; c < t.size(); ++c) image[c] = g[t[c]];
      if (seen.insert(image).second) stack.push_back(image);
    }
  }
  return seen.size();
}

Stabilizer schreier_stabilizer(const Group& G, const Action& on, int seed, const std::vector<const Action*>& induce) {
  const Field& F = G.field();
  const auto& gens = G.generators();
  if (on.perms.size() != gens.size()) throw GroupError("action does not match the group's generators");
  for (const Action* a : induce) {
    if (a->perms.size() != gens.size()) throw GroupError("induced action does not match the group's generators");
  }
  Stabilizer out{Group(G.name() + "_stab", F, G.dim(), {}, G.form()), {}, {}, {}, {}, {}};
  out.orbit = orbit(on.perms, on.degree, seed);
  out.position.assign(on.degree, -1);
  for (std::size_t i = 0; i < out.orbit.size(); ++i) out.position[out.orbit[i]] = static_cast<int>(i);

  // Transversal by first discovery in the canonical orbit order.
  const std::size_t len = out.orbit.size();
  std::vector<int> parent(len, -1), via(len, -1);
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const int j = out.position[on.perms[gi][out.orbit[i]]];
      if (j != 0 && parent[j] < 0) {
        parent[j] = static_cast<int>(i);
        via[j] = static_cast<int>(gi);
      }
    }
  }
  // Process in an order where parents come first (BFS order by depth).
  std::vector<std::vector<int>> children(len);
  for (std::size_t j = 1; j < len; ++j) children[parent[j]].push_back(static_cast<int>(j));
  std::vector<int> order{0};
  order.reserve(len);
  for (std::size_t head = 0; head < order.size(); ++head) {
    for (int c : children[order[head]]) order.push_back(c);
  }
  const int domains = static_cast<int>(induce.size()) + 1;
  auto domain_action = [&](int d) -> const Action& { return d == 0 ? on : *induce[d - 1]; };
  out.transversal.assign(len, identity_map(F, G.dim()));
  std::vector<std::vector<Perm>> tperm(domains, std::vector<Perm>(len));
  for (int d = 0; d < domains; ++d) {
    tperm[d][0].resize(domain_action(d).degree);
    std::iota(tperm[d][0].begin(), tperm[d][0].end(), 0);
  }
  for (std::size_t idx = 1; idx < order.size(); ++idx) {
    const int j = order[idx];
    out.transversal[j] = compose(F, out.transversal[parent[j]], gens[via[j]]);
    for (int d = 0; d < domains; ++d) tperm[d][j] = compose(tperm[d][parent[j]], domain_action(d).perms[via[j]]);
  }

  std::vector<SemilinearMap> sgens;
  std::vector<std::vector<Perm>> sperms(domains);
  std::unordered_set<std::string> keys;
  for (std::size_t i = 0; i < len; ++i) {
    for (std::size_t gi = 0; gi < gens.size(); ++gi) {
      const int j = out.position[on.perms[gi][out.orbit[i]]];
      if (parent[j] == static_cast<int>(i) && via[j] == static_cast<int>(gi)) continue;  // tree edge: trivial
      SemilinearMap s = compose(F, compose(F, out.transversal[i], gens[gi]), inverse(F, out.transversal[j]));
      if (is_projective_identity(F, s)) continue;
      if (!keys.insert(projective_key(F, s)).second) continue;
      for (int d = 0; d < domains; ++d) {
        sperms[d].push_back(
            compose(compose(tperm[d][i], domain_action(d).perms[gi]), inverse(tperm[d][j])));
      }
      sgens.push_back(projective_normalize(F, s));
    }
  }
  out.group = Group(G.name() + "_stab", F, G.dim(), std::move(sgens), G.form());
  out.perms = std::move(sperms[0]);
  for (int d = 1; d < domains; ++d) out.induced.push_back(std::move(sperms[d]));
  return out;
}

RankResult rank_of(const Group& G, const Action& on, int x) {
  RankResult out;
  out.transitive = static_cast<int>(orbit(on.perms, on.degree, x).size()) == on.degree;
  if (!out.transitive) return out;
  const Stabilizer st = schreier_stabilizer(G, on, x);
  out.suborbits = orbits(st.perms, on.degree);
  out.rank = static_cast<int>(out.suborbits.size());
  for (const auto& o : out.suborbits) out.subdegrees.push_back(static_cast<int>(o.size()));
  std::sort(out.subdegrees.begin(), out.subdegrees.end());
  return out;
}

namespace {

AntiflagResult orbit_summary(const std::vector<Perm>& gens, int degree) {
  AntiflagResult out;
  out.antiflags = static_cast<std::uint64_t>(degree);
  for (const auto& o : orbits(gens, degree)) out.orbit_sizes.push_back(o.size());
  std::sort(out.orbit_sizes.rbegin(), out.orbit_sizes.rend());
  out.transitive = out.orbit_sizes.size() == 1;
  return out;
}

}  // namespace

AntiflagResult antiflag_transitive(const Group& G, AntiflagMode mode, const PolarSpace* P) {
  const Field& F = G.field();
  const int n = G.dim();
  if (mode == AntiflagMode::Linear) {
    const PointSet pts = PointSet::projective_space(F, n);
    const std::vector<Subspace> hyps = hyperplanes(F, n);
    const Action pa = act_on_points(G, pts);
    const Action ha = act_on_subspaces(G, hyps);
    std::vector<std::vector<int>> tuples;
    for (const Antiflag& af : antiflags(F, n)) tuples.push_back({af.point, af.hyperplane});
    const Action ta = act_on_tuples({&pa, &ha}, tuples);
    return orbit_summary(ta.perms, ta.degree);
  }
  if (!P) throw GroupError("classical antiflags need a polar space");
  const PointSet& omega = P->points();
  const Action pa = act_on_points(G, omega);
  std::vector<std::vector<int>> tuples;
  for (int x = 0; x < omega.size(); ++x) {
    for (int y = 0; y < omega.size(); ++y) {
      if (!P->perpendicular(omega[x], omega[y])) tuples.push_back({x, y});
    }
  }
  const Action ta = act_on_tuples({&pa, &pa}, tuples);
  return orbit_summary(ta.perms, ta.degree);
}

LineCriterionResult line_criterion_4_1(const Group& G) {
  const Field& F = G.field();
  const int n = G.dim();
  LineCriterionResult out;
  const PointSet pts = PointSet::projective_space(F, n);
  const Action pa = act_on_points(G, pts);
  out.point_transitive = static_cast<int>(orbit(pa.perms, pa.degree, 0).size()) == pa.degree;
  const std::vector<Subspace> lines = enumerate_subspaces(F, n, 2);
  const Action la = act_on_subspaces(G, lines);
  const auto line_orbits = orbits(la.perms, la.degree);
  out.line_orbits = static_cast<int>(line_orbits.size());
  const std::uint64_t q = static_cast<std::uint64_t>(F.order());
  out.lines_two_transitive = true;
  for (const auto& o : line_orbits) {
    const int rep = o.front();
    const Stabilizer st = schreier_stabilizer(G, la, rep, {&pa});
    const std::vector<int> on_line = pts.ids_in(lines[rep]);
    if (tuple_orbit_size(st.induced[0], {on_line[0], on_line[1]}) != (q + 1) * q) {
      out.lines_two_transitive = false;
      out.failing_line = lines[rep];
      break;
    }
  }
  out.passes = out.lines_two_transitive;
  return out;
}

namespace {

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  bool unite(int a, int b) {
    a = find(a);
    b = find(b);
    if (a == b) return false;
    if (a > b) std::swap(a, b);
    parent[b] = a;
    return true;
  }
};

std::vector<int> minimal_block(const std::vector<Perm>& gens, int degree, int b) {
  UnionFind uf(degree);
  std::vector<std::pair<int, int>> queue{{0, b}};
  uf.unite(0, b);
  for (std::size_t head = 0; head < queue.size(); ++head) {
    const auto [x, y] = queue[head];
    for (const Perm& g : gens) {
      if (uf.unite(g[x], g[y])) queue.emplace_back(g[x], g[y]);
    }
  }
  std::vector<int> block;
  const int root = uf.find(0);
  for (int i = 0; i < degree; ++i) {
    if (uf.find(i) == root) block.push_back(i);
  }
  return block;
}

}  // namespace

BlockResult imprimitivity_blocks(const std::vector<Perm>& gens, int degree, const PointSet* embedding) {
  BlockResult out;
  out.transitive = static_cast<int>(orbit(gens, degree, 0).size()) == degree;
  if (!out.transitive) return out;
  for (int b = 1; b < degree; ++b) {
    std::vector<int> block = minimal_block(gens, degree, b);
    if (static_cast<int>(block.size()) == degree) continue;
    if (out.block.empty() || block.size() < out.block.size()) out.block = std::move(block);
  }
  out.primitive = out.block.empty();
  if (out.primitive) return out;
  out.block_count = degree / static_cast<int>(out.block.size());
  if (embedding) {
    Matrix rows;
    for (int i : out.block) rows.push_back((*embedding)[i]);
    const Subspace span = rref(embedding->field(), embedding->ambient_dim(), rows);
    out.is_subspace = embedding->ids_in(span) == out.block;
  }
  return out;
}

InvariantChain invariant_chain(const Group& G, const PointSet& omega, int x, const PolarSpace* P) {
  const Field& F = G.field();
  const int n = G.dim();
  InvariantChain out;
  out.base = x;
  const Action on = act_on_points(G, omega);
  if (static_cast<int>(orbit(on.perms, on.degree, x).size()) != on.degree) {
    out.failure = "group is not transitive on the point set";
    return out;
  }
  const Stabilizer st = schreier_stabilizer(G, on, x);
  std::vector<std::vector<int>> sub = orbits(st.perms, on.degree);
  std::stable_sort(sub.begin(), sub.end(), [](const auto& a, const auto& b) { return a.size() < b.size(); });

  std::vector<char> in(omega.size(), 0);
  std::vector<int> current{x};
  in[x] = 1;
  Matrix rows{omega[x]};
  out.spaces.push_back(rref(F, n, rows));
  out.layers.push_back({x});
  out.layers_are_orbits = true;
  out.full_subspaces = true;
  std::vector<char> used(sub.size(), 0);
  for (std::size_t i = 0; i < sub.size(); ++i) {
    if (sub[i].size() == 1 && sub[i][0] == x) used[i] = 1;
  }
  auto closes = [&](const std::vector<int>& extra, Subspace& span) {
    Matrix r = rows;
    for (int p : extra) r.push_back(omega[p]);
    span = rref(F, n, r);
    std::vector<int> inside = omega.ids_in(span);
    if (inside.size() != current.size() + extra.size()) return false;
    for (int p : inside) {
      if (!in[p] && std::find(extra.begin(), extra.end(), p) == extra.end()) return false;
    }
    return true;
  };
  while (static_cast<int>(current.size()) < omega.size()) {
    bool added = false;
    for (std::size_t i = 0; i < sub.size() && !added; ++i) {
      if (used[i]) continue;
      Subspace span(F, n);
      if (!closes(sub[i], span)) continue;
      used[i] = 1;
      added = true;
      for (int p : sub[i]) {
        in[p] = 1;
        current.push_back(p);
        rows.push_back(omega[p]);
      }
      std::vector<int> layer = sub[i];
      std::sort(layer.begin(), layer.end());
      out.layers.push_back(std::move(layer));
      out.spaces.push_back(span);
    }
    if (!added) {
      // No single suborbit extends the chain: take everything that is left.
      out.layers_are_orbits = false;
      std::vector<int> layer;
      for (std::size_t i = 0; i < sub.size(); ++i) {
        if (used[i]) continue;
        used[i] = 1;
        layer.insert(layer.end(), sub[i].begin(), sub[i].end());
      }
      for (int p : layer) {
        in[p] = 1;
        current.push_back(p);
        rows.push_back(omega[p]);
      }
      std::sort(layer.begin(), layer.end());
      out.layers.push_back(std::move(layer));
      out.spaces.push_back(rref(F, n, rows));
    }
  }
  std::size_t covered = 0;
  for (std::size_t i = 0; i < out.spaces.size(); ++i) {
    covered += out.layers[i].size();
    out.dims.push_back(out.spaces[i].dim());
    if (i + 1 < out.spaces.size() && out.spaces[i].point_count() != covered) out.full_subspaces = false;
  }
  if (out.spaces.back().dim() != n) {
    out.failure = "the points do not span the ambient space";
    return out;
  }
  const int d = static_cast<int>(out.spaces.size()) - 1;
  if (P) {
    bool ok = true;
    for (int i = 0; i <= d; ++i) {
      const Subspace want = d - i - 1 >= 0 ? out.spaces[d - i - 1] : Subspace(F, n);
      if (!(P->perp(out.spaces[i]) == want)) ok = false;
    }
    out.perp_relation = ok;
  }
  if (d >= 4 && out.layers.size() > 1) {
    bool ok = true;
    const Subspace& w1 = out.spaces[1];
    for (int y : out.layers[1]) {
      const Subspace w1y = apply(st.transversal[st.position[y]], w1);
      if (intersect(w1, w1y).dim() != w1.dim() - 1) {
        ok = false;
        break;
      }
    }
    out.hyperplane_property = ok;
  }
  out.ok = out.layers_are_orbits && out.perp_relation.value_or(true) && out.hyperplane_property.value_or(true);
  if (!out.ok && out.failure.empty()) {
    out.failure = !out.layers_are_orbits ? "a chain step needed more than one suborbit"
                  : !out.perp_relation.value_or(true) ? "W_i^perp differs from W_(d-i-1)"
                                                      : "W_1(x) cap W_1(y) is not a hyperplane of W_1(x)";
  }
  return out;
}

bool dickson_in_omega(const Form& form, const Matrix& g) {
  const Field& F = form.field();
  if (F.p() != 2) throw GroupError("Omega membership is implemented in characteristic 2 only");
  if (form.kind() != FormKind::Quadratic) throw GroupError("Dickson invariant needs a quadratic form");
  if (!preserves_exactly(form, linear_map(g))) throw GroupError("map does not preserve the quadratic form");
  return dickson_invariant(F, g) == 0;
}

namespace {

/// Closure of frame images under a set of semilinear maps, with every map acting
/// through a permutation table of PG(n-1, q) indexed by vec_key.
class BaseClosure {
 public:
  BaseClosure(const Field& F, int n) : F_(F), n_(n) {
    std::uint64_t size = 1;
    for (int i = 0; i < n; ++i) {
      size *= static_cast<std::uint64_t>(F.order());
      if (size > (1ULL << 24)) throw GroupError("projective space too large for base-image closure");
    }
    table_size_ = size;
    bits_ = 1;
    while ((1ULL << bits_) < size) ++bits_;
    for (int i = 0; i < n; ++i) {
      Vec v(n);
      v[i] = F.one();
      base_.push_back(v);
    }
    Vec all(n);
    for (int i = 0; i < n; ++i) all[i] = F.one();
    base_.push_back(all);
    if (F.e() > 1 && n >= 2) {
      Vec w(n);
      w[0] = F.one();
      w[1] = F.gen();
      base_.push_back(w);
    }
    if (static_cast<int>(base_.size()) * bits_ > 128) throw GroupError("base-image key exceeds 128 bits");
  }

  struct Key {
    std::uint64_t lo = 0, hi = 0;
    friend bool operator==(const Key&, const Key&) = default;
  };
  struct KeyHash {
    std::size_t operator()(const Key& k) const noexcept { return std::hash<std::uint64_t>{}(k.lo * 0x9e3779b97f4a7c15ULL ^ k.hi); }
  };

  std::vector<std::uint32_t> table(const SemilinearMap& g) const {
    std::vector<std::uint32_t> t(table_size_, 0);
    parallel_for(table_size_, [&](std::size_t key) {
      const Vec v = vec_from_key(F_, n_, key);
      if (v.is_zero() || normalize(F_, v) != v) return;
      t[key] = static_cast<std::uint32_t>(vec_key(F_, apply_point(F_, g, v)));
    });
    return t;
  }

  std::vector<std::uint32_t> base_keys() const {
    std::vector<std::uint32_t> out;
    for (const Vec& b : base_) out.push_back(static_cast<std::uint32_t>(vec_key(F_, normalize(F_, b))));
    return out;
  }

  Key pack(const std::vector<std::uint32_t>& t) const {
    Key k;
    int shift = 0;
    for (std::uint32_t v : t) {
      for (int b = 0; b < bits_; ++b, ++shift) {
        if ((v >> b) & 1U) (shift < 64 ? k.lo : k.hi) |= 1ULL << (shift % 64);
      }
    }
    return k;
  }

  std::vector<std::uint32_t> image_of(const SemilinearMap& g) const {
    std::vector<std::uint32_t> out;
    for (const Vec& b : base_) out.push_back(static_cast<std::uint32_t>(vec_key(F_, apply_point(F_, g, b))));
    return out;
  }

  /// Breadth-first closure from the identity; false when the cap is exceeded.
  bool close(const std::vector<std::vector<std::uint32_t>>& tables, std::uint64_t cap) {
    seen_.clear();
    std::vector<std::vector<std::uint32_t>> queue{base_keys()};
    seen_.insert(pack(queue[0]));
    for (std::size_t head = 0; head < queue.size(); ++head) {
      for (const auto& t : tables) {
        std::vector<std::uint32_t> img(queue[head].size());
        for (std::size_t i = 0; i < img.size(); ++i) img[i] = t[queue[head][i]];
        if (seen_.insert(pack(img)).second) {
          if (seen_.size() > cap) return false;
          queue.push_back(std::move(img));
        }
      }
      queue[head].clear();
      queue[head].shrink_to_fit();
    }
    return true;
  }

  bool contains(const SemilinearMap& g) const { return seen_.count(pack(image_of(g))) > 0; }
  std::uint64_t size() const { return seen_.size(); }

 private:
  Field F_;
  int n_;
  std::uint64_t table_size_ = 0;
  int bits_ = 0;
  std::vector<Vec> base_;
  std::unordered_set<Key, KeyHash> seen_;
};

}  // namespace

std::optional<std::uint64_t> group_order(const Group& G, std::uint64_t cap) {
  BaseClosure bc(G.field(), G.dim());
  std::vector<std::vector<std::uint32_t>> tables;
  for (const auto& g : G.generators()) tables.push_back(bc.table(g));
  if (!bc.close(tables, cap)) return std::nullopt;
  return bc.size();
}

std::vector<SemilinearMap> greedy_generators(const Field& F, int n, const std::vector<SemilinearMap>& elements) {
  BaseClosure bc(F, n);
  std::vector<SemilinearMap> kept;
  std::vector<std::vector<std::uint32_t>> tables;
  bc.close(tables, ~0ULL);
  for (const SemilinearMap& g : elements) {
    if (bc.contains(g)) continue;
    kept.push_back(g);
    tables.push_back(bc.table(g));
    bc.close(tables, ~0ULL);
  }
  return kept;
}

}  // namespace geomforge
