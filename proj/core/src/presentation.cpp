#include "orbisect/presentation.hpp"

#include <algorithm>
#include <set>

#include "orbisect/errors.hpp"

namespace orbisect {

void GroupPresentation::validate() const {
  if (num_generators < 1)
    throw InputError("presentation needs at least one generator");
  for (const auto& w : relators)
    for (int letter : w)
      if (letter == 0 || std::abs(letter) > num_generators)
        throw InputError("relator letter out of range");
}

namespace presentation {

GroupPresentation integers() { return GroupPresentation{1, {}, "Z"}; }

GroupPresentation free_abelian(int k) {
  if (k < 1) throw InputError("free abelian rank must be positive");
  if (k == 1) return integers();
  GroupPresentation p{k, {}, "Z^" + std::to_string(k)};
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      p.relators.push_back({i, j, -i, -j});
  return p;
}

GroupPresentation free_group(int k) {
  if (k < 1) throw InputError("free rank must be positive");
  if (k == 1) return integers();
  return GroupPresentation{k, {}, "F" + std::to_string(k)};
}

GroupPresentation cyclic(int n) {
  if (n < 1) throw InputError("cyclic order must be positive");
  GroupPresentation p{1, {std::vector<int>(n, 1)}, "C" + std::to_string(n)};
  return p;
}

GroupPresentation dihedral(int n) {
  if (n < 1) throw InputError("dihedral parameter must be positive");
  GroupPresentation p{2, {}, "D" + std::to_string(n)};
  p.relators.push_back(std::vector<int>(n, 1));
  p.relators.push_back({2, 2});
  p.relators.push_back({1, 2, 1, 2});
  return p;
}

}  // namespace presentation

int evaluate_word(const std::vector<int>& word, const std::vector<int>& images,
                  const FiniteGroup& g) {
  int acc = g.identity();
  for (int letter : word) {
    if (letter == 0 || std::abs(letter) > static_cast<int>(images.size()))
      throw InputError("word letter out of range");
    int x = images[std::abs(letter) - 1];
    acc = g.mul(acc, letter > 0 ? x : g.inv(x));
  }
  return acc;
}

std::optional<int> as_free_abelian(const GroupPresentation& p) {
  const int k = p.num_generators;
  if (k == 1) return p.relators.empty() ? std::optional<int>(1) : std::nullopt;
  std::set<std::vector<int>> want;
  for (int i = 1; i <= k; ++i)
    for (int j = i + 1; j <= k; ++j)
      want.insert({i, j, -i, -j});
  std::set<std::vector<int>> have(p.relators.begin(), p.relators.end());
  if (have == want) return k;
  return std::nullopt;
}

}  // namespace orbisect
