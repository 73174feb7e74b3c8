#include "orbisect/group.hpp"

#include <algorithm>
#include <map>
#include <random>
#include <set>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

bool is_permutation(const std::vector<int>& p, int n) {
  if (static_cast<int>(p.size()) != n) return false;
  std::vector<char> seen(n, 0);
  for (int v : p) {
    if (v < 0 || v >= n || seen[v]) return false;
    seen[v] = 1;
  }
  return true;
}

// compose(a, b)(x) == a[b[x]]
std::vector<int> compose(const std::vector<int>& a, const std::vector<int>& b) {
  std::vector<int> r(b.size());
  for (size_t i = 0; i < b.size(); ++i) r[i] = a[b[i]];
  return r;
}

}  // namespace

FiniteGroup FiniteGroup::from_table(std::vector<std::vector<int>> table,
                                    std::vector<std::string> labels) {
  FiniteGroup g;
  g.order_ = static_cast<int>(table.size());
  if (g.order_ == 0) throw InputError("group table is empty");
  g.table_.reserve(static_cast<size_t>(g.order_) * g.order_);
  for (const auto& row : table) {
    if (static_cast<int>(row.size()) != g.order_)
      throw InputError("group table is not square");
    for (int v : row) {
      if (v < 0 || v >= g.order_)
        throw InputError("group table entry out of range");
      g.table_.push_back(v);
    }
  }
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order_)
    throw InputError("label count does not match group order");
  g.labels_ = std::move(labels);
  g.words_.assign(g.order_, {});
  g.finish_validate(g.order_ <= 64);
  return g;
}

FiniteGroup FiniteGroup::from_permutations(int degree,
                                           const std::vector<std::vector<int>>& generators,
                                           std::vector<std::string> labels) {
  if (degree <= 0) throw InputError("permutation degree must be positive");
  for (const auto& p : generators)
    if (!is_permutation(p, degree))
      throw InputError("generator is not a permutation of the stated degree");

  std::vector<int> id(degree);
  for (int i = 0; i < degree; ++i) id[i] = i;

  // BFS closure; keep the discovery word for each element.
  std::map<std::vector<int>, std::vector<int>> word_of;
  word_of[id] = {};
  std::vector<std::vector<int>> frontier{id};
  constexpr int kClosureCap = 4096;
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& p : frontier) {
      for (size_t gi = 0; gi < generators.size(); ++gi) {
        auto q = compose(p, generators[gi]);
        if (word_of.count(q)) continue;
        auto w = word_of[p];
        w.push_back(static_cast<int>(gi));
        word_of[q] = std::move(w);
        next.push_back(std::move(q));
        if (static_cast<int>(word_of.size()) > kClosureCap)
          throw CapacityError("permutation closure exceeded cap of " +
                              std::to_string(kClosureCap) + " elements");
      }
    }
    frontier = std::move(next);
  }

  FiniteGroup g;
  g.degree_ = degree;
  g.order_ = static_cast<int>(word_of.size());
  g.perms_.reserve(g.order_);
  for (const auto& [p, w] : word_of) {  // map iteration = sorted element list
    g.perms_.push_back(p);
    g.words_.push_back(w);
  }
  std::map<std::vector<int>, int> index;
  for (int i = 0; i < g.order_; ++i) index[g.perms_[i]] = i;
  g.table_.assign(static_cast<size_t>(g.order_) * g.order_, 0);
  for (int a = 0; a < g.order_; ++a)
    for (int b = 0; b < g.order_; ++b)
      g.table_[a * g.order_ + b] = index[compose(g.perms_[a], g.perms_[b])];
  for (const auto& p : generators) g.generator_ids_.push_back(index[p]);
  if (!labels.empty() && static_cast<int>(labels.size()) != g.order_)
    throw InputError("label count does not match group order");
  g.labels_ = std::move(labels);
  g.finish_validate(g.order_ <= 64);
  return g;
}

void FiniteGroup::finish_validate(bool exhaustive_associativity) {
  const int n = order_;
  // Two-sided identity.
  int e = -1;
  for (int c = 0; c < n && e < 0; ++c) {
    bool ok = true;
    for (int x = 0; x < n && ok; ++x)
      ok = mul(c, x) == x && mul(x, c) == x;
    if (ok) e = c;
  }
  if (e < 0) throw InputError("group table has no identity element");
  identity_ = e;

  // Rows and columns must be permutations, and every element needs a
  // two-sided inverse.
  inv_.assign(n, -1);
  for (int a = 0; a < n; ++a) {
    std::vector<char> row(n, 0), col(n, 0);
    for (int b = 0; b < n; ++b) {
      row[mul(a, b)] = 1;
      col[mul(b, a)] = 1;
      if (mul(a, b) == e && mul(b, a) == e) inv_[a] = b;
    }
    for (int v = 0; v < n; ++v)
      if (!row[v] || !col[v])
        throw InputError("group table row/column is not a permutation");
    if (inv_[a] < 0) throw InputError("group element has no two-sided inverse");
  }

  if (exhaustive_associativity) {
    for (int a = 0; a < n; ++a)
      for (int b = 0; b < n; ++b)
        for (int c = 0; c < n; ++c)
          if (mul(mul(a, b), c) != mul(a, mul(b, c)))
            throw InputError("group table is not associative");
  } else {
    std::mt19937 rng(0x5ec7u);
    std::uniform_int_distribution<int> d(0, n - 1);
    for (int t = 0; t < 200000; ++t) {
      int a = d(rng), b = d(rng), c = d(rng);
      if (mul(mul(a, b), c) != mul(a, mul(b, c)))
        throw InputError("group table is not associative");
    }
  }
}

bool Subgroup::contains(int g) const {
  return std::binary_search(elements.begin(), elements.end(), g);
}

Subgroup Subgroup::of(const FiniteGroup& parent, std::vector<int> elements) {
  std::sort(elements.begin(), elements.end());
  elements.erase(std::unique(elements.begin(), elements.end()), elements.end());
  Subgroup h{&parent, std::move(elements)};
  for (int a : h.elements) {
    if (a < 0 || a >= parent.order())
      throw InputError("subgroup element id out of range");
    if (!h.contains(parent.inv(a)))
      throw InputError("subgroup is not closed under inverse");
    for (int b : h.elements)
      if (!h.contains(parent.mul(a, b)))
        throw InputError("subgroup is not closed under product");
  }
  if (h.elements.empty() || !h.contains(parent.identity()))
    throw InputError("subgroup does not contain the identity");
  return h;
}

Subgroup trivial_subgroup(const FiniteGroup& g) {
  return Subgroup{&g, {g.identity()}};
}

Subgroup full_subgroup(const FiniteGroup& g) {
  Subgroup h{&g, {}};
  h.elements.resize(g.order());
  for (int i = 0; i < g.order(); ++i) h.elements[i] = i;
  return h;
}

Subgroup subgroup_generated(const FiniteGroup& g, std::span<const int> gens) {
  std::set<int> have{g.identity()};
  std::vector<int> frontier{g.identity()};
  for (int s : gens) {
    if (s < 0 || s >= g.order()) throw InputError("generator id out of range");
    if (have.insert(s).second) frontier.push_back(s);
  }
  while (!frontier.empty()) {
    std::vector<int> next;
    for (int a : frontier)
      for (int b : have)
        for (int p : {g.mul(a, b), g.mul(b, a)})
          if (have.insert(p).second) next.push_back(p);
    frontier = std::move(next);
  }
  return Subgroup{&g, std::vector<int>(have.begin(), have.end())};
}

Subgroup centralizer_of_set(const FiniteGroup& g, std::span<const int> set) {
  std::vector<int> out;
  for (int c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (int s : set) {
      if (s < 0 || s >= g.order()) throw InputError("element id out of range");
      if (g.mul(c, s) != g.mul(s, c)) { ok = false; break; }
    }
    if (ok) out.push_back(c);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup normalizer_of_subgroup(const FiniteGroup& g, const Subgroup& h) {
  if (h.parent != &g) throw InputError("subgroup belongs to a different group");
  Subgroup::of(g, h.elements);  // rejects non-subgroups
  std::vector<int> out;
  for (int c = 0; c < g.order(); ++c) {
    bool ok = true;
    for (int a : h.elements)
      if (!h.contains(g.conj(c, a))) { ok = false; break; }
    if (ok) out.push_back(c);
  }
  return Subgroup{&g, std::move(out)};
}

Subgroup conjugate_subgroup(int by, const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  std::vector<int> out;
  out.reserve(h.elements.size());
  for (int a : h.elements) out.push_back(g.conj(by, a));
  std::sort(out.begin(), out.end());
  return Subgroup{&g, std::move(out)};
}

std::vector<Subgroup> all_subgroups(const FiniteGroup& g, int order_cap) {
  if (g.order() > order_cap)
    throw CapacityError("subgroup enumeration capped at order " +
                        std::to_string(order_cap) + ", group has order " +
                        std::to_string(g.order()));
  // Seed with cyclic subgroups, then extend each known subgroup by one
  // element until nothing new appears. Every subgroup arises this way.
  std::set<std::vector<int>> found;
  found.insert(trivial_subgroup(g).elements);
  std::vector<std::vector<int>> frontier{trivial_subgroup(g).elements};
  while (!frontier.empty()) {
    std::vector<std::vector<int>> next;
    for (const auto& base : frontier) {
      for (int x = 0; x < g.order(); ++x) {
        if (std::binary_search(base.begin(), base.end(), x)) continue;
        auto gens = base;
        gens.push_back(x);
        auto h = subgroup_generated(g, gens);
        if (found.insert(h.elements).second) next.push_back(h.elements);
      }
    }
    frontier = std::move(next);
  }
  std::vector<Subgroup> out;
  out.reserve(found.size());
  for (const auto& e : found) out.push_back(Subgroup{&g, e});
  std::stable_sort(out.begin(), out.end(), [](const Subgroup& a, const Subgroup& b) {
    if (a.order() != b.order()) return a.order() < b.order();
    return a.elements < b.elements;
  });
  return out;
}

std::vector<std::vector<int>> subgroup_conjugacy_classes(const FiniteGroup& g,
                                                         const std::vector<Subgroup>& subs) {
  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < subs.size(); ++i) index[subs[i].elements] = static_cast<int>(i);
  std::vector<char> done(subs.size(), 0);
  std::vector<std::vector<int>> classes;
  for (size_t i = 0; i < subs.size(); ++i) {
    if (done[i]) continue;
    std::set<int> cls;
    for (int c = 0; c < g.order(); ++c) {
      auto conj = conjugate_subgroup(c, subs[i]);
      auto it = index.find(conj.elements);
      if (it == index.end())
        throw InputError("subgroup list is not closed under conjugation");
      cls.insert(it->second);
    }
    for (int j : cls) done[j] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

std::vector<std::vector<int>> element_conjugacy_classes(const FiniteGroup& g) {
  std::vector<char> done(g.order(), 0);
  std::vector<std::vector<int>> classes;
  for (int a = 0; a < g.order(); ++a) {
    if (done[a]) continue;
    std::set<int> cls;
    for (int c = 0; c < g.order(); ++c) cls.insert(g.conj(c, a));
    for (int x : cls) done[x] = 1;
    classes.emplace_back(cls.begin(), cls.end());
  }
  return classes;
}

ReindexedGroup as_group(const Subgroup& h) {
  const FiniteGroup& g = *h.parent;
  const int m = h.order();
  std::map<int, int> to_new;
  for (int i = 0; i < m; ++i) to_new[h.elements[i]] = i;
  std::vector<std::vector<int>> table(m, std::vector<int>(m));
  for (int a = 0; a < m; ++a)
    for (int b = 0; b < m; ++b)
      table[a][b] = to_new.at(g.mul(h.elements[a], h.elements[b]));
  return ReindexedGroup{FiniteGroup::from_table(std::move(table)), h.elements};
}

}  // namespace orbisect
