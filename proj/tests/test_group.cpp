#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <set>

#include "orbisect/errors.hpp"
#include "orbisect/group.hpp"

using namespace orbisect;

namespace {

FiniteGroup s3() { return FiniteGroup::from_permutations(3, {{1, 0, 2}, {1, 2, 0}}); }

FiniteGroup a4() { return FiniteGroup::from_permutations(4, {{1, 2, 0, 3}, {1, 0, 3, 2}}); }

}  // namespace

TEST_CASE("permutation closure assigns sorted canonical ids") {
  auto g = FiniteGroup::from_permutations(3, {{1, 2, 0}});
  CHECK(g.order() == 3);
  CHECK(g.identity() == 0);
  CHECK(g.permutation(0) == std::vector<int>{0, 1, 2});
  CHECK(g.permutation(1) == std::vector<int>{1, 2, 0});
  CHECK(g.permutation(2) == std::vector<int>{2, 0, 1});
  CHECK(g.inv(1) == 2);
  CHECK(g.mul(1, 1) == 2);
  CHECK(g.mul(1, 2) == 0);

  // Same subgroup of Sym(3) from a different generating set, same ids.
  auto g2 = FiniteGroup::from_permutations(3, {{2, 0, 1}});
  CHECK(g2.order() == 3);
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b) CHECK(g.mul(a, b) == g2.mul(a, b));
}

TEST_CASE("s3 table structure") {
  auto g = s3();
  CHECK(g.order() == 6);
  CHECK(g.identity() == 0);
  // id 1 = (12), id 2 = (01), id 3 = (012), id 4 = (021), id 5 = (02)
  CHECK(g.permutation(1) == std::vector<int>{0, 2, 1});
  CHECK(g.permutation(3) == std::vector<int>{1, 2, 0});
  CHECK(g.inv(3) == 4);
  CHECK(g.inv(1) == 1);
  CHECK(g.mul(3, 3) == 4);
  CHECK(g.conj(3, 1) != 1);  // conjugating a transposition by a 3-cycle moves it

  for (int a = 0; a < g.order(); ++a) {
    auto w = g.generator_word(a);
    int acc = g.identity();
    for (int gi : w) acc = g.mul(acc, g.generator_ids()[gi]);
    CHECK(acc == a);
  }
}

TEST_CASE("table constructor validates") {
  auto c2 = FiniteGroup::from_table({{0, 1}, {1, 0}});
  CHECK(c2.order() == 2);
  CHECK(c2.identity() == 0);
  CHECK_FALSE(c2.from_permutation_form());

  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {0, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{1, 0}, {1, 0}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 2}, {2, 0}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_permutations(3, {{1, 1, 0}}), InputError);
  CHECK_THROWS_AS(FiniteGroup::from_table({{0, 1}, {1, 0}}, {"only-one"}), InputError);
}

TEST_CASE("subgroups of s3") {
  auto g = s3();
  auto subs = all_subgroups(g);
  REQUIRE(subs.size() == 6);
  std::vector<int> orders;
  for (const auto& h : subs) orders.push_back(h.order());
  CHECK(orders == std::vector<int>{1, 2, 2, 2, 3, 6});
  CHECK(subs[4].elements == std::vector<int>{0, 3, 4});

  auto classes = subgroup_conjugacy_classes(g, subs);
  REQUIRE(classes.size() == 4);
  CHECK(classes[1].size() == 3);  // the three transposition subgroups fuse

  auto h = subgroup_generated(g, std::vector<int>{1});
  CHECK(h.elements == std::vector<int>{0, 1});
  CHECK(normalizer_of_subgroup(g, h).order() == 2);
  CHECK(centralizer_of_set(g, std::vector<int>{3}).elements == std::vector<int>{0, 3, 4});
  CHECK(centralizer_of_set(g, std::vector<int>{1}).order() == 2);

  auto conj = conjugate_subgroup(3, h);
  CHECK(conj.order() == 2);
  CHECK(conj.elements != h.elements);
  CHECK_NOTHROW(Subgroup::of(g, conj.elements));
}

TEST_CASE("subgroup validation") {
  auto g = s3();
  CHECK_THROWS_AS(Subgroup::of(g, {0, 3}), InputError);   // not closed
  CHECK_THROWS_AS(Subgroup::of(g, {1}), InputError);      // no identity
  CHECK_THROWS_AS(Subgroup::of(g, {0, 9}), InputError);   // out of range
  CHECK_NOTHROW(Subgroup::of(g, {0, 3, 4}));
}

TEST_CASE("element conjugacy classes of s3") {
  auto g = s3();
  auto classes = element_conjugacy_classes(g);
  REQUIRE(classes.size() == 3);
  CHECK(classes[0] == std::vector<int>{0});
  CHECK(classes[1] == std::vector<int>{1, 2, 5});
  CHECK(classes[2] == std::vector<int>{3, 4});
}

TEST_CASE("a4 subgroup census") {
  auto g = a4();
  CHECK(g.order() == 12);
  auto subs = all_subgroups(g);
  CHECK(subs.size() == 10);  // 1 + 3 C2 + 4 C3 + V4 + A4
  std::multiset<int> orders;
  for (const auto& h : subs) orders.insert(h.order());
  CHECK(orders == std::multiset<int>{1, 2, 2, 2, 3, 3, 3, 3, 4, 12});
  CHECK(subgroup_conjugacy_classes(g, subs).size() == 5);

  // Lagrange plus orbit-stabilizer spot checks.
  for (const auto& h : subs) CHECK(g.order() % h.order() == 0);
  for (const auto& cls : element_conjugacy_classes(g)) {
    const int c = centralizer_of_set(g, std::vector<int>{cls.front()}).order();
    CHECK(static_cast<int>(cls.size()) * c == g.order());
  }
}

TEST_CASE("reindexed subgroup is the same group") {
  auto g = s3();
  auto a3 = Subgroup::of(g, {0, 3, 4});
  auto rg = as_group(a3);
  CHECK(rg.group.order() == 3);
  CHECK(rg.to_parent == std::vector<int>{0, 3, 4});
  for (int a = 0; a < 3; ++a)
    for (int b = 0; b < 3; ++b)
      CHECK(rg.to_parent[rg.group.mul(a, b)] == g.mul(rg.to_parent[a], rg.to_parent[b]));
}

TEST_CASE("closure and subgroup caps") {
  // |S5| = 120 closes fine but exceeds the subgroup enumeration cap.
  auto s5 = FiniteGroup::from_permutations(5, {{1, 2, 3, 4, 0}, {1, 0, 2, 3, 4}});
  CHECK(s5.order() == 120);
  CHECK_THROWS_AS(all_subgroups(s5, 64), CapacityError);
  // |S7| = 5040 exceeds the closure cap.
  CHECK_THROWS_AS(
      FiniteGroup::from_permutations(7, {{1, 2, 3, 4, 5, 6, 0}, {1, 0, 2, 3, 4, 5, 6}}),
      CapacityError);
}
