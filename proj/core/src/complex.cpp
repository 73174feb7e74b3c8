#include "orbisect/complex.hpp"

#include <algorithm>
#include <numeric>
#include <set>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

// Canonical simplex order: dimension first, then lexicographic.
bool simplex_less(const std::vector<int>& a, const std::vector<int>& b) {
  if (a.size() != b.size()) return a.size() < b.size();
  return a < b;
}

struct UnionFind {
  std::vector<int> parent;
  explicit UnionFind(int n) : parent(n) { std::iota(parent.begin(), parent.end(), 0); }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// Renumber union-find roots so components are ordered by least member.
std::vector<int> number_components(UnionFind& uf, int n) {
  std::vector<int> comp(n, -1);
  int next = 0;
  for (int i = 0; i < n; ++i) {
    int r = uf.find(i);
    if (comp[r] < 0) comp[r] = next++;
    comp[i] = comp[r];
  }
  return comp;
}

}  // namespace

bool SimplicialComplex::contains(const std::vector<int>& simplex) const {
  return std::binary_search(simplices.begin(), simplices.end(), simplex, simplex_less);
}

int SimplicialComplex::dimension() const {
  if (simplices.empty()) return -1;
  return static_cast<int>(simplices.back().size()) - 1;
}

SimplicialComplex complex_from_maximal(int num_vertices,
                                       std::vector<std::vector<int>> maximal) {
  if (num_vertices < 0) throw InputError("vertex count must be nonnegative");
  std::set<std::vector<int>> closed;
  for (int v = 0; v < num_vertices; ++v) closed.insert({v});
  for (auto& s : maximal) {
    std::sort(s.begin(), s.end());
    if (std::adjacent_find(s.begin(), s.end()) != s.end())
      throw InputError("simplex repeats a vertex");
    for (int v : s)
      if (v < 0 || v >= num_vertices)
        throw InputError("simplex vertex id out of range");
    if (s.empty()) throw InputError("empty simplex in input");
    // All nonempty subsets.
    const int k = static_cast<int>(s.size());
    for (int mask = 1; mask < (1 << k); ++mask) {
      std::vector<int> face;
      for (int i = 0; i < k; ++i)
        if (mask & (1 << i)) face.push_back(s[i]);
      closed.insert(std::move(face));
    }
  }
  SimplicialComplex c;
  c.num_vertices = num_vertices;
  c.simplices.assign(closed.begin(), closed.end());
  std::sort(c.simplices.begin(), c.simplices.end(), simplex_less);
  return c;
}

std::vector<int> EquivariantComplex::simplex_image(int element,
                                                   const std::vector<int>& simplex) const {
  const auto& act = vertex_action[element];
  std::vector<int> out;
  out.reserve(simplex.size());
  for (int v : simplex) out.push_back(act[v]);
  std::sort(out.begin(), out.end());
  return out;
}

Subgroup EquivariantComplex::vertex_stabilizer(int v) const {
  std::vector<int> out;
  for (int g = 0; g < group->order(); ++g)
    if (vertex_action[g][v] == v) out.push_back(g);
  return Subgroup{group, std::move(out)};
}

namespace {

void validate_action(const EquivariantComplex& e) {
  const FiniteGroup& g = *e.group;
  const int n = e.complex.num_vertices;
  if (static_cast<int>(e.vertex_action.size()) != g.order())
    throw InputError("action must assign a permutation to every group element");
  for (const auto& p : e.vertex_action) {
    if (static_cast<int>(p.size()) != n)
      throw InputError("action permutation has wrong length");
    std::vector<char> seen(n, 0);
    for (int v : p) {
      if (v < 0 || v >= n || seen[v])
        throw InputError("action entry is not a vertex permutation");
      seen[v] = 1;
    }
  }
  for (int v = 0; v < n; ++v)
    if (e.vertex_action[g.identity()][v] != v)
      throw InputError("identity element must act trivially");
  for (int a = 0; a < g.order(); ++a)
    for (int b = 0; b < g.order(); ++b) {
      const auto& pa = e.vertex_action[a];
      const auto& pb = e.vertex_action[b];
      const auto& pab = e.vertex_action[g.mul(a, b)];
      for (int v = 0; v < n; ++v)
        if (pab[v] != pa[pb[v]])
          throw InputError("vertex action is not a group homomorphism");
    }
  for (int a = 0; a < g.order(); ++a)
    for (const auto& s : e.complex.simplices)
      if (!e.complex.contains(e.simplex_image(a, s)))
        throw InputError("action does not preserve the simplex set");
}

}  // namespace

EquivariantComplex make_equivariant(SimplicialComplex complex, const FiniteGroup& g,
                                    std::vector<std::vector<int>> vertex_action) {
  EquivariantComplex e{std::move(complex), &g, std::move(vertex_action)};
  validate_action(e);
  return e;
}

EquivariantComplex action_from_generator_perms(SimplicialComplex complex,
                                               const FiniteGroup& g,
                                               const std::vector<std::vector<int>>& gen_perms) {
  if (!g.from_permutation_form())
    throw InputError("generator-level action needs a group given by generators");
  if (gen_perms.size() != g.generator_ids().size())
    throw InputError("action generator count does not match the group's generators");
  const int n = complex.num_vertices;
  std::vector<int> id(n);
  std::iota(id.begin(), id.end(), 0);
  std::vector<std::vector<int>> action(g.order());
  for (int a = 0; a < g.order(); ++a) {
    // Compose generator permutations along the element's word; each step
    // puts the new factor innermost, so the rightmost letter acts first and
    // the result is a left action.
    std::vector<int> p = id;
    for (int letter : g.generator_word(a)) {
      const auto& q = gen_perms[letter];
      if (static_cast<int>(q.size()) != n)
        throw InputError("action permutation has wrong length");
      std::vector<int> r(n);
      for (int v = 0; v < n; ++v) r[v] = p[q[v]];
      p = std::move(r);
    }
    action[a] = std::move(p);
  }
  return make_equivariant(std::move(complex), g, std::move(action));
}

bool is_admissible_for(const EquivariantComplex& e, std::span<const int> elements) {
  for (int a : elements) {
    for (const auto& s : e.complex.simplices) {
      auto img = e.simplex_image(a, s);
      if (img != s) continue;
      // Setwise stabilized: every vertex must be fixed.
      for (int v : s)
        if (e.vertex_action[a][v] != v) return false;
    }
  }
  return true;
}

bool is_admissible(const EquivariantComplex& e) {
  std::vector<int> all(e.group->order());
  std::iota(all.begin(), all.end(), 0);
  return is_admissible_for(e, all);
}

EquivariantComplex barycentric_subdivide(const EquivariantComplex& e) {
  const auto& simps = e.complex.simplices;
  const int m = static_cast<int>(simps.size());
  // New vertex ids = positions in the canonical simplex list, so a proper
  // face always has a smaller id than the simplex itself.
  std::map<std::vector<int>, int> vertex_of;
  for (int i = 0; i < m; ++i) vertex_of[simps[i]] = i;

  // Simplices of the subdivision are chains of proper faces; a chain listed
  // by new vertex id is automatically sorted. Build chains bottom-up: for
  // each simplex, all chains in which it is the top element.
  std::vector<std::vector<int>> chains;
  std::vector<std::vector<std::vector<int>>> chains_topped(m);
  for (int i = 0; i < m; ++i) {
    chains_topped[i].push_back({i});
    const auto& top = simps[i];
    const int k = static_cast<int>(top.size());
    for (int mask = 1; mask < (1 << k) - 1; ++mask) {
      std::vector<int> face;
      for (int b = 0; b < k; ++b)
        if (mask & (1 << b)) face.push_back(top[b]);
      int fi = vertex_of.at(face);
      for (const auto& sub : chains_topped[fi]) {
        auto chain = sub;
        chain.push_back(i);
        chains_topped[i].push_back(std::move(chain));
      }
    }
  }
  for (auto& per : chains_topped)
    for (auto& c : per) chains.push_back(std::move(c));
  std::sort(chains.begin(), chains.end(), simplex_less);

  SimplicialComplex sd;
  sd.num_vertices = m;
  sd.simplices = std::move(chains);

  std::vector<std::vector<int>> action(e.group->order(), std::vector<int>(m));
  for (int a = 0; a < e.group->order(); ++a)
    for (int i = 0; i < m; ++i)
      action[a][vertex_of.at(simps[i])] = vertex_of.at(e.simplex_image(a, simps[i]));

  // Construction guarantees a valid simplicial action; skip revalidation.
  return EquivariantComplex{std::move(sd), e.group, std::move(action)};
}

EquivariantComplex regularize(const EquivariantComplex& e, int* subdivisions_applied) {
  EquivariantComplex cur = e;
  int count = 0;
  while (count < 2 && !is_admissible(cur)) {
    cur = barycentric_subdivide(cur);
    ++count;
  }
  if (!is_admissible(cur))
    throw CheckFailure("complex is still not admissible after two subdivisions");
  if (subdivisions_applied) *subdivisions_applied = count;
  return cur;
}

namespace {

Subcomplex induced_subcomplex(const EquivariantComplex& e, std::vector<int> vertices) {
  Subcomplex s;
  s.vertices = std::move(vertices);
  for (const auto& simplex : e.complex.simplices) {
    bool inside = true;
    for (int v : simplex)
      if (!std::binary_search(s.vertices.begin(), s.vertices.end(), v)) {
        inside = false;
        break;
      }
    if (inside) s.simplices.push_back(simplex);
  }
  return s;
}

}  // namespace

Subcomplex fixed_subcomplex(const EquivariantComplex& e, std::span<const int> elements) {
  if (!is_admissible(e))
    throw InputError("fixed sets need an admissible action; subdivide first");
  std::vector<int> fixed;
  for (int v = 0; v < e.complex.num_vertices; ++v) {
    bool ok = true;
    for (int a : elements)
      if (e.vertex_action[a][v] != v) { ok = false; break; }
    if (ok) fixed.push_back(v);
  }
  return induced_subcomplex(e, std::move(fixed));
}

Subcomplex fixed_subcomplex(const EquivariantComplex& e, const Subgroup& h) {
  return fixed_subcomplex(e, std::span<const int>(h.elements));
}

Subcomplex full_subcomplex(const EquivariantComplex& e) {
  std::vector<int> all(e.complex.num_vertices);
  std::iota(all.begin(), all.end(), 0);
  Subcomplex s;
  s.vertices = std::move(all);
  s.simplices = e.complex.simplices;
  return s;
}

QuotientComplex quotient_of(const EquivariantComplex& e, const Subgroup& by,
                            const Subcomplex& s) {
  QuotientComplex q;
  q.vertex_orbit_map.assign(e.complex.num_vertices, -1);

  std::map<std::vector<int>, int>& orbit_of = q.orbit_of;
  for (const auto& simplex : s.simplices) orbit_of[simplex] = -1;

  for (const auto& simplex : s.simplices) {
    if (orbit_of.at(simplex) >= 0) continue;
    const int oid = static_cast<int>(q.orbit_reps.size());
    int stab = 0;
    for (int a : by.elements) {
      auto img = e.simplex_image(a, simplex);
      auto it = orbit_of.find(img);
      if (it == orbit_of.end())
        throw InputError("subcomplex is not invariant under the acting subgroup");
      it->second = oid;
      if (img == simplex) ++stab;
    }
    // The canonical sweep reaches the least member of each orbit first.
    q.orbit_reps.push_back(simplex);
    q.orbit_dims.push_back(static_cast<int>(simplex.size()) - 1);
    q.stabilizer_orders.push_back(stab);
    if (simplex.size() == 1) q.vertex_orbit_map[simplex[0]] = oid;
  }
  // Orbit ids for every vertex of the subcomplex, not only reps.
  for (int v : s.vertices) q.vertex_orbit_map[v] = orbit_of.at(std::vector<int>{v});

  const int dim_top = q.orbit_dims.empty()
                          ? -1
                          : *std::max_element(q.orbit_dims.begin(), q.orbit_dims.end());
  q.cells_per_dim.assign(dim_top + 1, 0);
  for (int d : q.orbit_dims) ++q.cells_per_dim[d];

  q.adjacency.resize(q.orbit_reps.size());
  for (size_t oid = 0; oid < q.orbit_reps.size(); ++oid) {
    const auto& rep = q.orbit_reps[oid];
    if (rep.size() < 2) continue;
    std::set<int> facets;
    for (size_t drop = 0; drop < rep.size(); ++drop) {
      std::vector<int> facet;
      for (size_t i = 0; i < rep.size(); ++i)
        if (i != drop) facet.push_back(rep[i]);
      facets.insert(orbit_of.at(facet));
    }
    q.adjacency[oid].assign(facets.begin(), facets.end());
  }
  return q;
}

QuotientComplex quotient(const EquivariantComplex& e, const Subgroup& by) {
  EquivariantComplex cur = e;
  int count = 0;
  while (count < 2 && !is_admissible_for(cur, by.elements)) {
    cur = barycentric_subdivide(cur);
    ++count;
  }
  if (!is_admissible_for(cur, by.elements))
    throw CheckFailure("subgroup action is still not admissible after two subdivisions");
  auto q = quotient_of(cur, by, full_subcomplex(cur));
  q.subdivisions = count;
  return q;
}

std::vector<int> connected_components(const SimplicialComplex& c) {
  UnionFind uf(c.num_vertices);
  for (const auto& s : c.simplices)
    if (s.size() == 2) uf.unite(s[0], s[1]);
  return number_components(uf, c.num_vertices);
}

std::vector<int> connected_components(const QuotientComplex& q) {
  const int orbits = static_cast<int>(q.orbit_reps.size());
  UnionFind uf(orbits);
  for (int oid = 0; oid < orbits; ++oid)
    if (q.orbit_dims[oid] == 1) {
      const auto& rep = q.orbit_reps[oid];
      uf.unite(q.vertex_orbit_map[rep[0]], q.vertex_orbit_map[rep[1]]);
    }
  // Components live on vertex orbits, which come first in the numbering;
  // higher cells join the component of their first vertex.
  std::vector<int> comp(orbits, -1);
  std::vector<int> root_number(orbits, -1);
  int next = 0;
  for (int oid = 0; oid < orbits && q.orbit_dims[oid] == 0; ++oid) {
    int r = uf.find(oid);
    if (root_number[r] < 0) root_number[r] = next++;
    comp[oid] = root_number[r];
  }
  for (int oid = 0; oid < orbits; ++oid)
    if (q.orbit_dims[oid] != 0)
      comp[oid] = comp[q.vertex_orbit_map[q.orbit_reps[oid][0]]];
  return comp;
}

std::vector<int> connected_components(const Subcomplex& s) {
  const int n = static_cast<int>(s.vertices.size());
  std::map<int, int> pos;
  for (int i = 0; i < n; ++i) pos[s.vertices[i]] = i;
  UnionFind uf(n);
  for (const auto& simplex : s.simplices)
    if (simplex.size() == 2) uf.unite(pos.at(simplex[0]), pos.at(simplex[1]));
  return number_components(uf, n);
}

long long euler_characteristic(const SimplicialComplex& c) {
  long long chi = 0;
  for (const auto& s : c.simplices) chi += (s.size() % 2 == 1) ? 1 : -1;
  return chi;
}

long long euler_characteristic(const Subcomplex& s) {
  long long chi = 0;
  for (const auto& simplex : s.simplices) chi += (simplex.size() % 2 == 1) ? 1 : -1;
  return chi;
}

long long euler_characteristic(const QuotientComplex& q) {
  long long chi = 0;
  for (int d : q.orbit_dims) chi += (d % 2 == 0) ? 1 : -1;
  return chi;
}

Rational orbifold_euler_characteristic(const QuotientComplex& q) {
  Rational sum(0);
  for (size_t i = 0; i < q.orbit_dims.size(); ++i) {
    Rational term(q.orbit_dims[i] % 2 == 0 ? 1 : -1, q.stabilizer_orders[i]);
    sum += term;
  }
  return sum;
}

}  // namespace orbisect
