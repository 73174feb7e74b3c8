#include "orbisect/models.hpp"

namespace orbisect {

Model football_model() {
  auto group = std::make_shared<FiniteGroup>(
      FiniteGroup::from_permutations(3, {{1, 2, 0}}, {"e", "r", "r2"}));
  // Vertices: 0 north, 1 south, 2..4 equator.
  auto complex = complex_from_maximal(
      5, {{0, 2, 3}, {0, 3, 4}, {0, 4, 2}, {1, 2, 3}, {1, 3, 4}, {1, 4, 2}});
  auto space = action_from_generator_perms(std::move(complex), *group, {{0, 1, 3, 4, 2}});
  return Model{std::move(group), std::move(space)};
}

Model s3_cone_model() {
  auto group = std::make_shared<FiniteGroup>(FiniteGroup::from_permutations(
      3, {{1, 0, 2}, {1, 2, 0}}, {"e", "(12)", "(01)", "(012)", "(021)", "(02)"}));
  // Vertex 0 the tip, 1..6 the rim orbit (one vertex per group element, left
  // translation), 7 and 8 the isolated pair.
  auto complex = complex_from_maximal(
      9, {{0, 1}, {0, 2}, {0, 3}, {0, 4}, {0, 5}, {0, 6}, {7}, {8}});
  auto space = action_from_generator_perms(
      std::move(complex), *group,
      {{0, 3, 4, 1, 2, 6, 5, 8, 7}, {0, 4, 3, 6, 5, 1, 2, 7, 8}});
  return Model{std::move(group), std::move(space)};
}

}  // namespace orbisect
