#pragma once

#include <map>
#include <span>
#include <vector>

#include "orbisect/group.hpp"
#include "orbisect/rational.hpp"

namespace orbisect {

// Finite abstract simplicial complex on vertices 0..num_vertices-1. The
// simplex list is closed under faces, contains every vertex as a 0-simplex,
// and is kept in canonical order: by dimension, then lexicographically.
struct SimplicialComplex {
  int num_vertices = 0;
  std::vector<std::vector<int>> simplices;

  bool contains(const std::vector<int>& simplex) const;
  int dimension() const;
};

SimplicialComplex complex_from_maximal(int num_vertices,
                                       std::vector<std::vector<int>> maximal);

// A simplicial action of a finite group, one vertex permutation per element.
// The group must outlive the complex.
struct EquivariantComplex {
  SimplicialComplex complex;
  const FiniteGroup* group = nullptr;
  std::vector<std::vector<int>> vertex_action;  // [element][vertex] -> vertex

  std::vector<int> simplex_image(int element, const std::vector<int>& simplex) const;
  // Order of the stabilizer of a vertex.
  Subgroup vertex_stabilizer(int v) const;
};

// Validates that the assignment element -> vertex permutation is an action
// by simplicial automorphisms: identity acts trivially, composition is
// respected, every simplex image is a simplex.
EquivariantComplex make_equivariant(SimplicialComplex complex, const FiniteGroup& g,
                                    std::vector<std::vector<int>> vertex_action);

// Builds the action from one vertex permutation per construction generator
// of a permutation-built group, extending along each element's generator
// word, then validates as above.
EquivariantComplex action_from_generator_perms(SimplicialComplex complex,
                                               const FiniteGroup& g,
                                               const std::vector<std::vector<int>>& gen_perms);

// A subcomplex of a fixed parent, in parent vertex ids. `simplices` is the
// full subcomplex on `vertices`, canonical order.
struct Subcomplex {
  std::vector<int> vertices;
  std::vector<std::vector<int>> simplices;

  bool empty() const { return vertices.empty(); }
};

// Orbit data for a (sub)complex under a subgroup action. Orbits are numbered
// by their least representative simplex in canonical order, so orbits of
// vertices come first.
struct QuotientComplex {
  std::vector<long long> cells_per_dim;
  std::vector<int> vertex_orbit_map;         // parent vertex -> orbit id, -1 outside
  std::vector<int> stabilizer_orders;        // per orbit (setwise = pointwise here)
  std::vector<int> orbit_dims;
  std::vector<std::vector<int>> orbit_reps;  // least simplex of each orbit
  std::vector<std::vector<int>> adjacency;   // per orbit: orbit ids of the rep's facets
  std::map<std::vector<int>, int> orbit_of;  // every simplex of the subcomplex -> orbit
  int subdivisions = 0;                      // subdivisions applied before quotienting
};

// True iff every simplex that some element stabilizes setwise is fixed
// pointwise by that element, exhaustively over (element, simplex) pairs.
// This is exactly the property the fixed-set, quotient-count and component
// machinery relies on; one barycentric subdivision always establishes it.
bool is_admissible(const EquivariantComplex& e);
// Same check restricted to the given elements' action.
bool is_admissible_for(const EquivariantComplex& e, std::span<const int> elements);

EquivariantComplex barycentric_subdivide(const EquivariantComplex& e);

// Subdivides until admissible, at most twice. Reports the count applied.
EquivariantComplex regularize(const EquivariantComplex& e, int* subdivisions_applied);

// Full subcomplex on the vertices fixed by every listed element. Requires an
// admissible action.
Subcomplex fixed_subcomplex(const EquivariantComplex& e, std::span<const int> elements);
Subcomplex fixed_subcomplex(const EquivariantComplex& e, const Subgroup& h);
Subcomplex full_subcomplex(const EquivariantComplex& e);

// Orbits of the whole complex under a subgroup. Subdivides first (at most
// twice) if the subgroup action is not admissible.
QuotientComplex quotient(const EquivariantComplex& e, const Subgroup& by);

// Orbits of an invariant subcomplex of an admissible action.
QuotientComplex quotient_of(const EquivariantComplex& e, const Subgroup& by,
                            const Subcomplex& s);

// Component id per vertex; components numbered by least contained vertex.
std::vector<int> connected_components(const SimplicialComplex& c);
// Component id per orbit, via orbit-level edges; numbered by least contained
// vertex orbit.
std::vector<int> connected_components(const QuotientComplex& q);
// Component id per position in s.vertices.
std::vector<int> connected_components(const Subcomplex& s);

long long euler_characteristic(const SimplicialComplex& c);
long long euler_characteristic(const Subcomplex& s);
long long euler_characteristic(const QuotientComplex& q);

// Sum of (-1)^dim / |stabilizer| over orbit cells, exact.
Rational orbifold_euler_characteristic(const QuotientComplex& q);

}  // namespace orbisect
