#pragma once

#include <cstdint>
#include <vector>

#include "orbisect/group.hpp"
#include "orbisect/presentation.hpp"

namespace orbisect {

struct Budgets {
  // Cap on candidate image tuples considered during homomorphism
  // enumeration: |G|^k must stay within it.
  std::int64_t hom_nodes = 10'000'000;
  int subgroup_order_cap = 64;
};

// A homomorphism from a presented group into a finite group, stored as the
// generator image tuple. Two homs with equal images are equal.
struct GroupHom {
  const GroupPresentation* presentation = nullptr;
  const FiniteGroup* codomain = nullptr;
  std::vector<int> images;
};

struct HomClass {
  GroupHom representative;       // lexicographically least image tuple
  std::vector<int> members;      // indices into the enumerated hom list
  Subgroup centralizer;          // elements commuting with every image
  Subgroup image;                // subgroup generated by the images
  Subgroup normalizer_of_image;
};

// All homomorphisms, ordered lexicographically by image tuple. Depth-first
// assignment over generator images; each relator is checked as soon as the
// deepest generator it mentions has been assigned.
std::vector<GroupHom> enumerate_homs(const GroupPresentation& p, const FiniteGroup& g,
                                     const Budgets& budgets = {});

GroupHom conjugate_hom(int by, const GroupHom& phi);

// Conjugation orbits, ordered by representative.
std::vector<HomClass> classify_homs(const std::vector<GroupHom>& homs);

bool is_surjective(const GroupHom& phi, const Subgroup& onto);

}  // namespace orbisect
