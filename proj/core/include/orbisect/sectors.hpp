#pragma once

#include <compare>
#include <map>
#include <optional>
#include <string>
#include <vector>

#include "orbisect/complex.hpp"
#include "orbisect/hom.hpp"

namespace orbisect {

// One twisted sector: the centralizer of a homomorphism class representative
// acting on the representative's fixed subcomplex.
struct SectorGroupoid {
  Subgroup acting_group;
  Subcomplex space;
  int hom_class = -1;
};

struct CoarseSector {
  HomClass cls;
  SectorGroupoid sector;
  QuotientComplex quot;                // space / acting_group
  std::vector<int> component_of_orbit; // per orbit of quot
  int num_components = 0;
};

// A connected component of a sector's orbit space.
struct RefinedSector {
  int class_id = 0;
  int component_id = 0;
  long long chi = 0;
  std::vector<long long> cells_per_dim;
  std::vector<int> isotropy_orders;   // sorted stabilizer orders of its cells
  std::vector<int> projection;        // sorted base orbit ids its cells land on
};

struct SectorDecomposition {
  EquivariantComplex regularized;     // complex all sector data lives on
  int subdivisions = 0;
  QuotientComplex base;               // regularized / full group
  std::vector<int> base_components;
  std::vector<CoarseSector> coarse;   // ordered by class representative
  std::vector<RefinedSector> refined; // ordered by (class, component)
  long long hom_count = 0;
  int dropped_empty_classes = 0;      // classes whose fixed set is empty
  std::string gamma_name;
};

// Census of one orbit-space component, comparable across constructions.
struct ComponentCensus {
  std::vector<long long> cells_per_dim;
  std::vector<int> isotropy_orders;
  long long chi = 0;
  auto operator<=>(const ComponentCensus&) const = default;
};
// Sorted multiset of component censuses; equality is the invariant-level
// agreement notion used throughout.
using MoritaCensus = std::vector<ComponentCensus>;

struct Certificate {
  bool ok = true;
  std::string check;
  std::vector<std::pair<std::string, long long>> counts;
  std::string counterexample;  // empty when ok
  int subdivisions = 0;        // applied to the complex before checking
};

// The decomposition of the action into twisted sectors for a presented
// group: one coarse sector per conjugacy class of homomorphisms with a
// nonempty fixed subcomplex, refined by connected components of the sector
// orbit spaces. The input is subdivided first (at most twice) if the action
// is not admissible.
SectorDecomposition gamma_sectors(const EquivariantComplex& e, const GroupPresentation& p,
                                  const Budgets& budgets = {});

// Base orbit ids a refined sector's cells map onto.
const std::vector<int>& sector_projection(const SectorDecomposition& d, int refined_id);

// leq[s][t]: does refined sector s project into the image of t.
std::vector<std::vector<bool>> sector_poset(const SectorDecomposition& d);

// Sectors for a single loop, i.e. the inertia decomposition. Cross-checked
// against the conjugacy classes of elements with nonempty fixed set.
SectorDecomposition inertia(const EquivariantComplex& e, const Budgets& budgets = {});

// Sectors for k unconstrained loops. Cross-checked by counting, two ways,
// the pairs (vertex, k-tuple inside its stabilizer).
SectorDecomposition multisectors(const EquivariantComplex& e, int k,
                                 const Budgets& budgets = {});

MoritaCensus morita_census(const SectorDecomposition& d);
MoritaCensus morita_census(const CoarseSector& c);

// Fixed-point sectors: one entry per conjugacy class of subgroups with a
// nonempty fixed set, carrying the components of the normalizer acting on
// the fixed subcomplex.
struct FixedPointSector {
  Subgroup subgroup;            // class representative, least element set
  Subgroup normalizer;
  Subcomplex fixed;
  QuotientComplex quot;         // fixed / normalizer
  int num_components = 0;
  MoritaCensus census;
  std::vector<int> projection;  // base orbit ids covered
};

struct LeidaDecomposition {
  EquivariantComplex regularized;
  int subdivisions = 0;
  QuotientComplex base;
  std::vector<FixedPointSector> sectors;
};

LeidaDecomposition leida_sectors(const EquivariantComplex& e, const Budgets& budgets = {});

// Covering data tying a sector decomposition to the fixed-point sectors:
// index [N_G(im phi) : C_G(phi)] per coarse class, plus which subgroup class
// the image lands in.
struct SectorCovering {
  int class_id = 0;
  int subgroup_class = -1;  // index into LeidaDecomposition::sectors, -1 if absent
  int covering_index = 1;
};
std::vector<SectorCovering> covering_data(const SectorDecomposition& d,
                                          const LeidaDecomposition& l);

// Is every subgroup with a nonempty fixed set reachable as the image of some
// homomorphism from the presented group.
struct CoversWitness {
  Subgroup subgroup;
  std::vector<int> witness_images;  // empty when this subgroup is the refuter
};
struct CoversResult {
  bool covers = true;
  std::vector<CoversWitness> witnesses;
  std::optional<Subgroup> refuter;
  int subdivisions = 0;
};
CoversResult covers_local_groups(const EquivariantComplex& e, const GroupPresentation& p,
                                 const Budgets& budgets = {});

// Object-level isomorphism between the vertex-stabilizer model (pairs of a
// vertex and a homomorphism into its stabilizer) and the global model (pairs
// of a homomorphism into the whole group and a vertex it fixes), including
// equivariance of the identification. Works on the regularized complex.
Certificate verify_object_bijection(const EquivariantComplex& e, const GroupPresentation& p,
                                    const Budgets& budgets = {});

// Per homomorphism class: the strong equivalence between the whole-group
// action on the disjoint union of the class members' fixed sets and the
// centralizer action on the representative's fixed set. Checks object
// surjection, functoriality, centralizer membership, the fibered-product
// bijection, and equal orbit-space censuses.
Certificate verify_class_equivalence(const EquivariantComplex& e, const GroupPresentation& p,
                                     const Budgets& budgets = {});

// Object count of the k-loop sectors counted two ways.
Certificate verify_multisector_count(const EquivariantComplex& e, int k,
                                     const Budgets& budgets = {});

enum class TupleRelators { Free, Commuting };

// Builds the disjoint union of centralizer actions on fixed sets directly
// from s-tuples of group elements (naive filter, no presentation machinery)
// and returns its census.
MoritaCensus commuting_tuple_sectors(const EquivariantComplex& e, int s, TupleRelators mode,
                                     const Budgets& budgets = {});

// commuting_tuple_sectors against the sector decomposition census.
Certificate verify_constants_census(const EquivariantComplex& e, int s, TupleRelators mode,
                                    const Budgets& budgets = {});

}  // namespace orbisect
