#include "orbisect/hom.hpp"

#include <algorithm>
#include <map>
#include <set>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

int deepest_generator(const std::vector<int>& word) {
  int d = 0;
  for (int letter : word) d = std::max(d, std::abs(letter));
  return d;
}

}  // namespace

std::vector<GroupHom> enumerate_homs(const GroupPresentation& p, const FiniteGroup& g,
                                     const Budgets& budgets) {
  p.validate();
  const int k = p.num_generators;
  const int n = g.order();

  std::int64_t tuples = 1;
  for (int i = 0; i < k; ++i) {
    tuples *= n;
    if (tuples > budgets.hom_nodes)
      throw CapacityError("homomorphism enumeration budget exceeded: |G|^k with |G|=" +
                          std::to_string(n) + ", k=" + std::to_string(k) +
                          " is above the bound of " + std::to_string(budgets.hom_nodes));
  }

  // Relators grouped by the deepest generator they mention. Relators that
  // mention no generator are identities by themselves.
  std::vector<std::vector<const std::vector<int>*>> at(k + 1);
  for (const auto& r : p.relators) at[deepest_generator(r)].push_back(&r);

  std::vector<GroupHom> out;
  std::vector<int> images(k, 0);
  auto holds_at = [&](int depth) {
    for (const auto* r : at[depth])
      if (evaluate_word(*r, images, g) != g.identity()) return false;
    return true;
  };
  if (!holds_at(0)) return out;

  int depth = 0;
  while (depth >= 0) {
    if (depth == k) {
      out.push_back(GroupHom{&p, &g, images});
      --depth;
      ++images[depth];
      continue;
    }
    if (images[depth] >= n) {
      images[depth] = 0;
      --depth;
      if (depth >= 0) ++images[depth];
      continue;
    }
    if (holds_at(depth + 1)) {
      ++depth;
    } else {
      ++images[depth];
    }
  }
  return out;
}

GroupHom conjugate_hom(int by, const GroupHom& phi) {
  GroupHom out = phi;
  for (int& x : out.images) x = phi.codomain->conj(by, x);
  return out;
}

std::vector<HomClass> classify_homs(const std::vector<GroupHom>& homs) {
  std::vector<HomClass> classes;
  if (homs.empty()) return classes;
  const FiniteGroup& g = *homs.front().codomain;

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < homs.size(); ++i)
    index[homs[i].images] = static_cast<int>(i);

  std::vector<char> done(homs.size(), 0);
  for (size_t i = 0; i < homs.size(); ++i) {
    if (done[i]) continue;
    // The sweep is in lexicographic order, so homs[i] is the least member.
    std::set<int> members;
    for (int c = 0; c < g.order(); ++c) {
      auto conj = conjugate_hom(c, homs[i]);
      auto it = index.find(conj.images);
      if (it == index.end())
        throw CheckFailure("conjugate of an enumerated homomorphism is missing");
      members.insert(it->second);
    }
    for (int m : members) done[m] = 1;
    HomClass cls{homs[i],
                 std::vector<int>(members.begin(), members.end()),
                 centralizer_of_set(g, homs[i].images),
                 subgroup_generated(g, homs[i].images),
                 Subgroup{}};
    cls.normalizer_of_image = normalizer_of_subgroup(g, cls.image);
    // Orbit-stabilizer: |members| * |centralizer| == |G|.
    if (static_cast<int>(cls.members.size()) * cls.centralizer.order() != g.order())
      throw CheckFailure("orbit-stabilizer count failed for a homomorphism class");
    classes.push_back(std::move(cls));
  }
  return classes;
}

bool is_surjective(const GroupHom& phi, const Subgroup& onto) {
  auto img = subgroup_generated(*phi.codomain, phi.images);
  return img.elements == onto.elements;
}

}  // namespace orbisect
