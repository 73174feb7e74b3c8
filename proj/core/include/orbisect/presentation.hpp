#pragma once

#include <optional>
#include <string>
#include <vector>

#include "orbisect/group.hpp"

namespace orbisect {

// A finitely presented group: generators x1..xk and relator words. Letters
// are nonzero signed ints, +i for xi and -i for xi^-1, 1-based. Words are
// stored as given, never freely reduced.
struct GroupPresentation {
  int num_generators = 0;
  std::vector<std::vector<int>> relators;
  std::string name;

  void validate() const;
};

namespace presentation {

GroupPresentation integers();            // one generator, no relators
GroupPresentation free_abelian(int k);   // pairwise commutators
GroupPresentation free_group(int k);     // k == 1 coincides with integers()
GroupPresentation cyclic(int n);
GroupPresentation dihedral(int n);       // r^n, s^2, (rs)^2

}  // namespace presentation

// Evaluates a word at the given generator images. The word may mention only
// generators 1..images.size().
int evaluate_word(const std::vector<int>& word, const std::vector<int>& images,
                  const FiniteGroup& g);

// k when p is structurally the free abelian presentation on k generators in
// canonical commutator form (k == 1: one generator, no relators).
std::optional<int> as_free_abelian(const GroupPresentation& p);

}  // namespace orbisect
