#pragma once

#include <span>
#include <string>
#include <vector>

namespace orbisect {

// A finite group as a multiplication table over element ids 0..order-1.
//
// Constructed either from an explicit table or by closing a set of
// permutation generators. In the permutation case ids index the sorted list
// of element permutations, so equal generating sets always produce the same
// ids, and each element keeps a factorization into the given generators
// (used to extend generator-level data, e.g. complex actions, to the whole
// group).
class FiniteGroup {
 public:
  static FiniteGroup from_table(std::vector<std::vector<int>> table,
                                std::vector<std::string> labels = {});
  static FiniteGroup from_permutations(int degree,
                                       const std::vector<std::vector<int>>& generators,
                                       std::vector<std::string> labels = {});

  int order() const { return order_; }
  int identity() const { return identity_; }
  int mul(int a, int b) const { return table_[a * order_ + b]; }
  int inv(int a) const { return inv_[a]; }
  int conj(int g, int a) const { return mul(mul(g, a), inv(g)); }

  bool has_labels() const { return !labels_.empty(); }
  const std::string& label(int a) const { return labels_[a]; }

  // Permutation-built groups only; empty otherwise.
  bool from_permutation_form() const { return degree_ > 0; }
  int degree() const { return degree_; }
  const std::vector<int>& generator_ids() const { return generator_ids_; }
  // Factorization of an element into indices of the construction generators,
  // multiplying left to right. Empty word is the identity.
  const std::vector<int>& generator_word(int a) const { return words_[a]; }
  const std::vector<int>& permutation(int a) const { return perms_[a]; }

 private:
  FiniteGroup() = default;
  void finish_validate(bool exhaustive_associativity);

  int order_ = 0;
  int identity_ = 0;
  std::vector<int> table_;  // row-major order_ x order_
  std::vector<int> inv_;
  std::vector<std::string> labels_;

  int degree_ = 0;
  std::vector<int> generator_ids_;
  std::vector<std::vector<int>> words_;
  std::vector<std::vector<int>> perms_;
};

// Subgroup of a fixed parent group: sorted element ids. The parent must
// outlive the subgroup.
struct Subgroup {
  const FiniteGroup* parent = nullptr;
  std::vector<int> elements;  // sorted, always contains the identity

  int order() const { return static_cast<int>(elements.size()); }
  bool contains(int g) const;

  // Validates closure under product and inverse.
  static Subgroup of(const FiniteGroup& parent, std::vector<int> elements);
};

// A subgroup reindexed as a standalone group. to_parent maps the new ids
// back to parent ids.
struct ReindexedGroup {
  FiniteGroup group;
  std::vector<int> to_parent;
};

Subgroup trivial_subgroup(const FiniteGroup& g);
Subgroup full_subgroup(const FiniteGroup& g);
Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens);
Subgroup centralizer_of_set(const FiniteGroup& g, std::span<const int> set);
Subgroup normalizer_of_subgroup(const FiniteGroup& g, const Subgroup& h);
Subgroup conjugate_subgroup(int by, const Subgroup& h);

// Every subgroup exactly once, sorted by (order, element set). Guarded by a
// capacity bound on the group order (default 64).
std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_cap = 64);

// Partition of `subs` indices into conjugacy classes; classes keyed by their
// least member index, listed in index order.
std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& g,
                                                         const std::vector<Subgroup>& subs);

// Conjugacy classes of elements; each class sorted, classes ordered by least
// element.
std::vector<std::vector<int>> element_conjugacy_classes(const FiniteGroup& g);

ReindexedGroup as_group(const Subgroup& h);

}  // namespace orbisect
