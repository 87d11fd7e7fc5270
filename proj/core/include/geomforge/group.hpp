#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "geomforge/polar.hpp"
#include "geomforge/semilinear.hpp"

namespace geomforge {

class GroupError : public std::invalid_argument {
 public:
  using std::invalid_argument::invalid_argument;
};

/// Raised when a generator maps an element of a domain outside it.
class ClosureError : public GroupError {
 public:
  ClosureError(const std::string& what, int generator, int element)
      : GroupError(what), generator(generator), element(element) {}
  int generator;
  int element;
};

/// Group given by semilinear generators acting on GF(q)^n (projectively).
/// When a form is attached, every generator is checked to be a similarity of it.
class Group {
 public:
  Group(std::string name, Field F, int n, std::vector<SemilinearMap> generators,
        std::optional<Form> form = std::nullopt);

  const std::string& name() const { return name_; }
  const Field& field() const { return field_; }
  int dim() const { return n_; }
  const std::vector<SemilinearMap>& generators() const { return gens_; }
  const std::optional<Form>& form() const { return form_; }

 private:
  std::string name_;
  Field field_;
  int n_;
  std::vector<SemilinearMap> gens_;
  std::optional<Form> form_;
};

/// i -> perm[i]; products act left to right.
using Perm = std::vector<int>;
Perm compose(const Perm& a, const Perm& b);
Perm inverse(const Perm& a);
bool is_identity(const Perm& a);

/// Permutations induced by the generators on a finite domain.
struct Action {
  int degree = 0;
  std::vector<Perm> perms;
};

/// Throws ClosureError if a generator leaves the point set.
Action act_on_points(const Group& G, const PointSet& points);
Action act_on_subspaces(const Group& G, const std::vector<Subspace>& subspaces);
/// Coordinate c of each tuple is moved by components[c]; the tuple list must be closed.
Action act_on_tuples(const std::vector<const Action*>& components, const std::vector<std::vector<int>>& tuples);

/// Orbit in breadth-first order with each frontier sorted.
std::vector<int> orbit(const std::vector<Perm>& gens, int degree, int seed);
/// All orbits, ordered by least element.
std::vector<std::vector<int>> orbits(const std::vector<Perm>& gens, int degree);
/// Orbit size of an ordered tuple under the coordinatewise action.
std::uint64_t tuple_orbit_size(const std::vector<Perm>& gens, const std::vector<int>& tuple);

struct Stabilizer {
  Group group;                              // deduplicated Schreier generators
  std::vector<int> orbit;                   // orbit of the seed on the acting domain
  std::vector<SemilinearMap> transversal;   // transversal[i]: seed -> orbit[i]
  std::vector<int> position;                // domain element -> orbit index or -1
  std::vector<Perm> perms;                  // generators on the acting domain
  std::vector<std::vector<Perm>> induced;   // generators on each extra domain
};

/// Schreier generators u_y g u_{y^g}^{-1} of the stabilizer of `seed`, normalized
/// projectively and deduplicated; permutations on the acting domain and on the
/// extra domains are obtained by composing the generators' permutations.
Stabilizer schreier_stabilizer(const Group& G, const Action& on, int seed,
                               const std::vector<const Action*>& induce = {});

struct RankResult {
  bool transitive = false;
  int rank = 0;
  std::vector<int> subdegrees;                 // ascending
  std::vector<std::vector<int>> suborbits;     // ordered by least element
};
RankResult rank_of(const Group& G, const Action& on, int x = 0);

enum class AntiflagMode { Linear, Classical };

struct AntiflagResult {
  bool transitive = false;
  std::uint64_t antiflags = 0;
  std::vector<std::uint64_t> orbit_sizes;  // descending
};
/// Linear: (point, hyperplane not through it) in PG(n-1, q).
/// Classical: ordered nonperpendicular pairs of points of Omega.
AntiflagResult antiflag_transitive(const Group& G, AntiflagMode mode, const PolarSpace* P = nullptr);

struct LineCriterionResult {
  bool point_transitive = false;
  bool lines_two_transitive = false;
  bool passes = false;
  int line_orbits = 0;
  std::optional<Subspace> failing_line;
};
/// Transitive on points and every line stabilizer 2-transitive on its line (PG(n-1, q)).
LineCriterionResult line_criterion_4_1(const Group& G);

struct BlockResult {
  bool transitive = false;
  bool primitive = false;
  std::vector<int> block;      // smallest nontrivial block through element 0
  int block_count = 0;
  std::optional<bool> is_subspace;
};
/// Minimal blocks through {0, b} by union-find closure; the smallest one is returned.
BlockResult imprimitivity_blocks(const std::vector<Perm>& gens, int degree, const PointSet* embedding = nullptr);

struct InvariantChain {
  int base = 0;
  bool ok = false;
  std::string failure;
  std::vector<Subspace> spaces;              // W_0(x), ..., W_d(x)
  std::vector<int> dims;
  std::vector<std::vector<int>> layers;      // point ids of W_i - W_{i-1}
  bool layers_are_orbits = false;
  bool full_subspaces = false;               // every W_i's points all lie in Omega
  std::optional<bool> perp_relation;         // W_i^perp = W_{d-i-1}
  std::optional<bool> hyperplane_property;   // W_1(x) cap W_1(y) hyperplane of W_1(x), d >= 4
};
/// Chain of stabilizer-invariant subspaces through point x of `omega`.
InvariantChain invariant_chain(const Group& G, const PointSet& omega, int x, const PolarSpace* P = nullptr);

/// Membership of g in Omega for characteristic 2 (g must preserve phi exactly).
bool dickson_in_omega(const Form& form, const Matrix& g);

/// Order of the projective group, by closure of base images on PG(n-1, q);
/// nothing if it exceeds `cap`.
std::optional<std::uint64_t> group_order(const Group& G, std::uint64_t cap = 2'000'000);

/// Greedy generating subset of a list of elements: an element is kept when it is
/// not already in the group generated so far.
std::vector<SemilinearMap> greedy_generators(const Field& F, int n, const std::vector<SemilinearMap>& elements);

}  // namespace geomforge
