#include "orbisect/sectors.hpp"

#include <algorithm>
#include <functional>
#include <numeric>
#include <set>
#include <sstream>

#include "orbisect/errors.hpp"

namespace orbisect {

namespace {

std::string tuple_str(const std::vector<int>& t) {
  std::ostringstream os;
  os << "(";
  for (size_t i = 0; i < t.size(); ++i) os << (i ? "," : "") << t[i];
  os << ")";
  return os.str();
}

std::vector<int> fixed_vertices(const EquivariantComplex& e, std::span<const int> elements) {
  std::vector<int> out;
  for (int v = 0; v < e.complex.num_vertices; ++v) {
    bool ok = true;
    for (int a : elements)
      if (e.vertex_action[a][v] != v) { ok = false; break; }
    if (ok) out.push_back(v);
  }
  return out;
}

// Full subcomplex on the given sorted vertex set; assumes an admissible
// action was established by the caller.
Subcomplex subcomplex_on(const EquivariantComplex& e, std::vector<int> vertices) {
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

std::string default_gamma_name(const GroupPresentation& p) {
  if (!p.name.empty()) return p.name;
  return "presentation(k=" + std::to_string(p.num_generators) +
         ",relators=" + std::to_string(p.relators.size()) + ")";
}

// Census of the orbit space of a labeled family of subcomplexes: items are
// (label, cell) pairs, an acting subgroup permutes labels and cells. This is
// deliberately its own orbit machinery so censuses obtained through it can
// cross-check the quotient-based route.
MoritaCensus family_census(const EquivariantComplex& e, const std::vector<Subcomplex>& parts,
                           const std::function<int(int, int)>& act_label,
                           const std::vector<int>& acting) {
  using Item = std::pair<int, std::vector<int>>;
  std::map<Item, int> orbit_of;
  for (size_t j = 0; j < parts.size(); ++j)
    for (const auto& cell : parts[j].simplices)
      orbit_of[{static_cast<int>(j), cell}] = -1;

  struct Orbit { int dim; int stab; Item rep; };
  std::vector<Orbit> orbits;
  for (auto& [item, oid] : orbit_of) {
    if (oid >= 0) continue;
    const int id = static_cast<int>(orbits.size());
    int stab = 0;
    for (int g : acting) {
      Item img{act_label(g, item.first), e.simplex_image(g, item.second)};
      auto it = orbit_of.find(img);
      if (it == orbit_of.end())
        throw CheckFailure("labeled family is not closed under the action");
      it->second = id;
      if (img == item) ++stab;
    }
    orbits.push_back(Orbit{static_cast<int>(item.second.size()) - 1, stab, item});
  }

  // Orbit-level components: vertex-item orbits joined through edge items.
  std::map<Item, int> vkey;
  for (const auto& [item, oid] : orbit_of)
    if (item.second.size() == 1 && !vkey.count(item)) vkey[item] = oid;
  std::vector<int> parent(orbits.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<int(int)> find = [&](int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  for (const auto& [item, oid] : orbit_of) {
    if (item.second.size() != 2) continue;
    int a = orbit_of.at({item.first, {item.second[0]}});
    int b = orbit_of.at({item.first, {item.second[1]}});
    parent[find(a)] = find(b);
  }

  std::map<int, std::vector<int>> orbits_by_root;
  for (size_t oid = 0; oid < orbits.size(); ++oid) {
    Item v0{orbits[oid].rep.first, {orbits[oid].rep.second[0]}};
    orbits_by_root[find(orbit_of.at(v0))].push_back(static_cast<int>(oid));
  }

  MoritaCensus census;
  for (const auto& [root, members] : orbits_by_root) {
    ComponentCensus c;
    int maxdim = 0;
    for (int oid : members) maxdim = std::max(maxdim, orbits[oid].dim);
    c.cells_per_dim.assign(maxdim + 1, 0);
    for (int oid : members) {
      ++c.cells_per_dim[orbits[oid].dim];
      c.isotropy_orders.push_back(orbits[oid].stab);
      c.chi += (orbits[oid].dim % 2 == 0) ? 1 : -1;
    }
    std::sort(c.isotropy_orders.begin(), c.isotropy_orders.end());
    census.push_back(std::move(c));
  }
  std::sort(census.begin(), census.end());
  return census;
}

long long powll(long long base, int exp) {
  long long r = 1;
  for (int i = 0; i < exp; ++i) r *= base;
  return r;
}

}  // namespace

SectorDecomposition gamma_sectors(const EquivariantComplex& e, const GroupPresentation& p,
                                  const Budgets& budgets) {
  p.validate();
  const FiniteGroup& g = *e.group;

  SectorDecomposition d;
  d.gamma_name = default_gamma_name(p);
  d.regularized = regularize(e, &d.subdivisions);
  d.base = quotient_of(d.regularized, full_subgroup(g), full_subcomplex(d.regularized));
  d.base_components = connected_components(d.base);

  auto homs = enumerate_homs(p, g, budgets);
  d.hom_count = static_cast<long long>(homs.size());
  auto classes = classify_homs(homs);

  for (const auto& cls : classes) {
    auto fixed = subcomplex_on(d.regularized,
                               fixed_vertices(d.regularized, cls.representative.images));
    if (fixed.empty()) {
      ++d.dropped_empty_classes;
      continue;
    }
    CoarseSector cs;
    cs.cls = cls;
    cs.sector = SectorGroupoid{cls.centralizer, fixed,
                               static_cast<int>(d.coarse.size())};
    cs.quot = quotient_of(d.regularized, cls.centralizer, cs.sector.space);
    cs.component_of_orbit = connected_components(cs.quot);
    cs.num_components = cs.component_of_orbit.empty()
                            ? 0
                            : 1 + *std::max_element(cs.component_of_orbit.begin(),
                                                    cs.component_of_orbit.end());
    const int class_id = static_cast<int>(d.coarse.size());
    for (int comp = 0; comp < cs.num_components; ++comp) {
      RefinedSector r;
      r.class_id = class_id;
      r.component_id = comp;
      int maxdim = 0;
      std::set<int> proj;
      for (size_t oid = 0; oid < cs.quot.orbit_reps.size(); ++oid)
        if (cs.component_of_orbit[oid] == comp)
          maxdim = std::max(maxdim, cs.quot.orbit_dims[oid]);
      r.cells_per_dim.assign(maxdim + 1, 0);
      for (size_t oid = 0; oid < cs.quot.orbit_reps.size(); ++oid) {
        if (cs.component_of_orbit[oid] != comp) continue;
        const int dim = cs.quot.orbit_dims[oid];
        ++r.cells_per_dim[dim];
        r.chi += (dim % 2 == 0) ? 1 : -1;
        r.isotropy_orders.push_back(cs.quot.stabilizer_orders[oid]);
        proj.insert(d.base.orbit_of.at(cs.quot.orbit_reps[oid]));
      }
      std::sort(r.isotropy_orders.begin(), r.isotropy_orders.end());
      r.projection.assign(proj.begin(), proj.end());
      d.refined.push_back(std::move(r));
    }
    d.coarse.push_back(std::move(cs));
  }
  return d;
}

const std::vector<int>& sector_projection(const SectorDecomposition& d, int refined_id) {
  if (refined_id < 0 || refined_id >= static_cast<int>(d.refined.size()))
    throw InputError("unknown refined sector id " + std::to_string(refined_id));
  return d.refined[refined_id].projection;
}

std::vector<std::vector<bool>> sector_poset(const SectorDecomposition& d) {
  const int n = static_cast<int>(d.refined.size());
  std::vector<std::vector<bool>> leq(n, std::vector<bool>(n, false));
  for (int s = 0; s < n; ++s)
    for (int t = 0; t < n; ++t)
      leq[s][t] = std::includes(d.refined[t].projection.begin(),
                                d.refined[t].projection.end(),
                                d.refined[s].projection.begin(),
                                d.refined[s].projection.end());
  return leq;
}

SectorDecomposition inertia(const EquivariantComplex& e, const Budgets& budgets) {
  auto d = gamma_sectors(e, presentation::integers(), budgets);
  // Coarse classes must match conjugacy classes of elements with nonempty
  // fixed sets, both represented by their least element.
  std::vector<int> expected;
  for (const auto& cls : element_conjugacy_classes(*e.group)) {
    const int rep = cls.front();
    if (!fixed_vertices(d.regularized, std::vector<int>{rep}).empty())
      expected.push_back(rep);
  }
  std::vector<int> got;
  for (const auto& cs : d.coarse) got.push_back(cs.cls.representative.images[0]);
  if (expected != got)
    throw CheckFailure("single-loop sectors do not match element conjugacy classes");
  return d;
}

Certificate verify_multisector_count(const EquivariantComplex& e, int k,
                                     const Budgets& budgets) {
  Certificate cert;
  cert.check = "multik";
  auto reg = regularize(e, &cert.subdivisions);
  long long by_stabilizers = 0;
  for (int v = 0; v < reg.complex.num_vertices; ++v)
    by_stabilizers += powll(reg.vertex_stabilizer(v).order(), k);
  long long by_homs = 0;
  auto p = presentation::free_group(k);
  for (const auto& hom : enumerate_homs(p, *e.group, budgets))
    by_homs += static_cast<long long>(fixed_vertices(reg, hom.images).size());
  cert.counts.emplace_back("objects_by_stabilizers", by_stabilizers);
  cert.counts.emplace_back("objects_by_homomorphisms", by_homs);
  cert.counts.emplace_back("tuples", k);
  if (by_stabilizers != by_homs) {
    cert.ok = false;
    cert.counterexample = "object counts disagree: " + std::to_string(by_stabilizers) +
                          " via stabilizers vs " + std::to_string(by_homs) +
                          " via homomorphisms";
  }
  return cert;
}

SectorDecomposition multisectors(const EquivariantComplex& e, int k,
                                 const Budgets& budgets) {
  auto cert = verify_multisector_count(e, k, budgets);
  if (!cert.ok) throw CheckFailure(cert.counterexample);
  return gamma_sectors(e, presentation::free_group(k), budgets);
}

MoritaCensus morita_census(const SectorDecomposition& d) {
  MoritaCensus census;
  for (const auto& r : d.refined)
    census.push_back(ComponentCensus{r.cells_per_dim, r.isotropy_orders, r.chi});
  std::sort(census.begin(), census.end());
  return census;
}

MoritaCensus morita_census(const CoarseSector& c) {
  MoritaCensus census;
  std::map<int, ComponentCensus> per_comp;
  std::map<int, int> maxdim;
  for (size_t oid = 0; oid < c.quot.orbit_reps.size(); ++oid) {
    int comp = c.component_of_orbit[oid];
    maxdim[comp] = std::max(maxdim[comp], c.quot.orbit_dims[oid]);
  }
  for (auto& [comp, md] : maxdim)
    per_comp[comp].cells_per_dim.assign(md + 1, 0);
  for (size_t oid = 0; oid < c.quot.orbit_reps.size(); ++oid) {
    int comp = c.component_of_orbit[oid];
    const int dim = c.quot.orbit_dims[oid];
    auto& cc = per_comp[comp];
    ++cc.cells_per_dim[dim];
    cc.isotropy_orders.push_back(c.quot.stabilizer_orders[oid]);
    cc.chi += (dim % 2 == 0) ? 1 : -1;
  }
  for (auto& [comp, cc] : per_comp) {
    std::sort(cc.isotropy_orders.begin(), cc.isotropy_orders.end());
    census.push_back(std::move(cc));
  }
  std::sort(census.begin(), census.end());
  return census;
}

LeidaDecomposition leida_sectors(const EquivariantComplex& e, const Budgets& budgets) {
  const FiniteGroup& g = *e.group;
  LeidaDecomposition l;
  l.regularized = regularize(e, &l.subdivisions);
  l.base = quotient_of(l.regularized, full_subgroup(g), full_subcomplex(l.regularized));

  auto subs = all_subgroups(g, budgets.subgroup_order_cap);
  for (const auto& cls : subgroup_conjugacy_classes(g, subs)) {
    const Subgroup& rep = subs[cls.front()];
    auto fixed = subcomplex_on(l.regularized, fixed_vertices(l.regularized, rep.elements));
    if (fixed.empty()) continue;
    FixedPointSector s;
    s.subgroup = rep;
    s.normalizer = normalizer_of_subgroup(g, rep);
    s.fixed = std::move(fixed);
    s.quot = quotient_of(l.regularized, s.normalizer, s.fixed);
    auto comps = connected_components(s.quot);
    s.num_components = comps.empty() ? 0 : 1 + *std::max_element(comps.begin(), comps.end());
    CoarseSector shim;
    shim.quot = s.quot;
    shim.component_of_orbit = comps;
    s.census = morita_census(shim);
    std::set<int> proj;
    for (const auto& rep_cell : s.quot.orbit_reps)
      proj.insert(l.base.orbit_of.at(rep_cell));
    s.projection.assign(proj.begin(), proj.end());
    l.sectors.push_back(std::move(s));
  }
  return l;
}

std::vector<SectorCovering> covering_data(const SectorDecomposition& d,
                                          const LeidaDecomposition& l) {
  const FiniteGroup& g = *d.regularized.group;
  std::vector<SectorCovering> out;
  for (size_t i = 0; i < d.coarse.size(); ++i) {
    const auto& cls = d.coarse[i].cls;
    SectorCovering c;
    c.class_id = static_cast<int>(i);
    if (cls.normalizer_of_image.order() % cls.centralizer.order() != 0)
      throw CheckFailure("centralizer order does not divide normalizer order");
    c.covering_index = cls.normalizer_of_image.order() / cls.centralizer.order();
    for (size_t j = 0; j < l.sectors.size() && c.subgroup_class < 0; ++j)
      for (int by = 0; by < g.order(); ++by)
        if (conjugate_subgroup(by, cls.image).elements == l.sectors[j].subgroup.elements) {
          c.subgroup_class = static_cast<int>(j);
          break;
        }
    if (c.subgroup_class < 0)
      throw CheckFailure("image subgroup of a sector has no fixed-point sector");
    out.push_back(c);
  }
  return out;
}

CoversResult covers_local_groups(const EquivariantComplex& e, const GroupPresentation& p,
                                 const Budgets& budgets) {
  p.validate();
  const FiniteGroup& g = *e.group;
  CoversResult result;
  auto reg = regularize(e, &result.subdivisions);
  for (const auto& h : all_subgroups(g, budgets.subgroup_order_cap)) {
    if (fixed_vertices(reg, h.elements).empty()) continue;
    auto rg = as_group(h);
    std::vector<int> witness;
    for (const auto& hom : enumerate_homs(p, rg.group, budgets)) {
      if (subgroup_generated(rg.group, hom.images).order() != h.order()) continue;
      witness.reserve(hom.images.size());
      for (int x : hom.images) witness.push_back(rg.to_parent[x]);
      break;
    }
    if (witness.empty() && h.order() > 1) {
      result.covers = false;
      result.refuter = h;
      return result;
    }
    if (witness.empty()) {
      // Trivial subgroup: the trivial homomorphism is always a surjection.
      witness.assign(p.num_generators, g.identity());
    }
    result.witnesses.push_back(CoversWitness{h, std::move(witness)});
    witness = {};
  }
  return result;
}

Certificate verify_object_bijection(const EquivariantComplex& e, const GroupPresentation& p,
                                    const Budgets& budgets) {
  p.validate();
  const FiniteGroup& g = *e.group;
  Certificate cert;
  cert.check = "thm31";
  auto reg = regularize(e, &cert.subdivisions);

  using Object = std::pair<int, std::vector<int>>;
  std::set<Object> local_side;
  for (int v = 0; v < reg.complex.num_vertices; ++v) {
    auto rg = as_group(reg.vertex_stabilizer(v));
    for (const auto& hom : enumerate_homs(p, rg.group, budgets)) {
      std::vector<int> images;
      images.reserve(hom.images.size());
      for (int x : hom.images) images.push_back(rg.to_parent[x]);
      local_side.insert({v, std::move(images)});
    }
  }

  std::set<Object> global_side;
  for (const auto& hom : enumerate_homs(p, g, budgets))
    for (int v : fixed_vertices(reg, hom.images))
      global_side.insert({v, hom.images});

  cert.counts.emplace_back("objects_local", static_cast<long long>(local_side.size()));
  cert.counts.emplace_back("objects_global", static_cast<long long>(global_side.size()));
  cert.counts.emplace_back("arrows", static_cast<long long>(g.order()) *
                                         static_cast<long long>(local_side.size()));

  if (local_side != global_side) {
    cert.ok = false;
    for (const auto& o : local_side)
      if (!global_side.count(o)) {
        cert.counterexample = "object (vertex " + std::to_string(o.first) + ", images " +
                              tuple_str(o.second) + ") only on the stabilizer side";
        return cert;
      }
    for (const auto& o : global_side)
      if (!local_side.count(o)) {
        cert.counterexample = "object (vertex " + std::to_string(o.first) + ", images " +
                              tuple_str(o.second) + ") only on the global side";
        return cert;
      }
  }

  // Equivariance: conjugating a homomorphism and moving its anchor vertex
  // stays inside the object set, so the identification intertwines the two
  // actions and extends to all arrows.
  for (const auto& o : local_side) {
    for (int a = 0; a < g.order(); ++a) {
      Object moved{reg.vertex_action[a][o.first], {}};
      moved.second.reserve(o.second.size());
      for (int x : o.second) moved.second.push_back(g.conj(a, x));
      if (!local_side.count(moved)) {
        cert.ok = false;
        cert.counterexample = "acting by element " + std::to_string(a) + " on (vertex " +
                              std::to_string(o.first) + ", images " + tuple_str(o.second) +
                              ") leaves the object set";
        return cert;
      }
    }
  }
  return cert;
}

Certificate verify_class_equivalence(const EquivariantComplex& e, const GroupPresentation& p,
                                     const Budgets& budgets) {
  p.validate();
  const FiniteGroup& g = *e.group;
  Certificate cert;
  cert.check = "lem23";
  auto reg = regularize(e, &cert.subdivisions);

  auto homs = enumerate_homs(p, g, budgets);
  auto classes = classify_homs(homs);
  long long classes_checked = 0, objects_total = 0, arrows_total = 0, triples_total = 0;

  auto fail = [&](std::string what) {
    cert.ok = false;
    cert.counterexample = std::move(what);
    return cert;
  };

  for (const auto& cls : classes) {
    const auto& rep = cls.representative.images;
    auto rep_fixed = fixed_vertices(reg, rep);
    if (rep_fixed.empty()) continue;
    ++classes_checked;

    // Member tuples and a transporter to the representative for each; the
    // representative's own transporter must be the identity.
    std::vector<std::vector<int>> member(cls.members.size());
    std::map<std::vector<int>, int> member_pos;
    for (size_t j = 0; j < cls.members.size(); ++j) {
      member[j] = homs[cls.members[j]].images;
      member_pos[member[j]] = static_cast<int>(j);
    }
    std::vector<int> transporter(member.size(), -1);
    for (size_t j = 0; j < member.size(); ++j) {
      if (member[j] == rep) {
        transporter[j] = g.identity();
        continue;
      }
      for (int a = 0; a < g.order(); ++a) {
        bool ok = true;
        for (size_t t = 0; t < rep.size() && ok; ++t)
          ok = g.conj(a, member[j][t]) == rep[t];
        if (ok) { transporter[j] = a; break; }
      }
      if (transporter[j] < 0)
        return fail("class member " + tuple_str(member[j]) + " has no transporter to " +
                    tuple_str(rep));
    }

    std::vector<std::vector<int>> member_fixed(member.size());
    for (size_t j = 0; j < member.size(); ++j)
      member_fixed[j] = fixed_vertices(reg, member[j]);

    std::set<int> rep_fixed_set(rep_fixed.begin(), rep_fixed.end());
    auto in_rep_fixed = [&](int v) { return rep_fixed_set.count(v) > 0; };

    // Object map: (j, x) -> transporter_j . x, onto the representative's
    // fixed vertices.
    std::set<int> image_of_objects;
    for (size_t j = 0; j < member.size(); ++j)
      for (int x : member_fixed[j]) {
        ++objects_total;
        int z = reg.vertex_action[transporter[j]][x];
        if (!in_rep_fixed(z))
          return fail("object map leaves the representative fixed set at member " +
                      tuple_str(member[j]) + ", vertex " + std::to_string(x));
        image_of_objects.insert(z);
      }
    if (image_of_objects != rep_fixed_set)
      return fail("object map is not onto the representative fixed set for class " +
                  tuple_str(rep));

    // Arrow map: (a, (j, x)) -> (c, z) with c the conjugated transporter
    // ratio; c must centralize the representative, and the arrow heads must
    // match.
    for (size_t j = 0; j < member.size(); ++j) {
      for (int x : member_fixed[j]) {
        for (int a = 0; a < g.order(); ++a) {
          ++arrows_total;
          std::vector<int> conj_tuple(member[j].size());
          for (size_t t = 0; t < member[j].size(); ++t)
            conj_tuple[t] = g.conj(a, member[j][t]);
          auto it = member_pos.find(conj_tuple);
          if (it == member_pos.end())
            return fail("conjugating member " + tuple_str(member[j]) + " by " +
                        std::to_string(a) + " leaves the class");
          const int jp = it->second;
          const int c = g.mul(transporter[jp], g.mul(a, g.inv(transporter[j])));
          if (!cls.centralizer.contains(c))
            return fail("arrow image " + std::to_string(c) +
                        " does not centralize the representative " + tuple_str(rep));
          const int z = reg.vertex_action[transporter[j]][x];
          const int xp = reg.vertex_action[a][x];
          if (reg.vertex_action[c][z] != reg.vertex_action[transporter[jp]][xp])
            return fail("arrow heads disagree for element " + std::to_string(a) +
                        " at member " + tuple_str(member[j]) + ", vertex " +
                        std::to_string(x));
          if (a == g.identity() && c != g.identity())
            return fail("unit arrow maps to nonunit " + std::to_string(c));
        }
      }
    }

    // Functoriality: composing two arrows then mapping equals mapping then
    // composing.
    for (size_t j = 0; j < member.size(); ++j) {
      for (int x : member_fixed[j]) {
        for (int a = 0; a < g.order(); ++a) {
          std::vector<int> conj_tuple(member[j].size());
          for (size_t t = 0; t < member[j].size(); ++t)
            conj_tuple[t] = g.conj(a, member[j][t]);
          const int jp = member_pos.at(conj_tuple);
          const int c1 = g.mul(transporter[jp], g.mul(a, g.inv(transporter[j])));
          for (int b = 0; b < g.order(); ++b) {
            std::vector<int> conj2(member[j].size());
            for (size_t t = 0; t < member[j].size(); ++t)
              conj2[t] = g.conj(b, conj_tuple[t]);
            const int jpp = member_pos.at(conj2);
            const int c2 = g.mul(transporter[jpp], g.mul(b, g.inv(transporter[jp])));
            const int ba = g.mul(b, a);
            const int jc = member_pos.at([&] {
              std::vector<int> ct(member[j].size());
              for (size_t t = 0; t < member[j].size(); ++t)
                ct[t] = g.conj(ba, member[j][t]);
              return ct;
            }());
            const int c3 = g.mul(transporter[jc], g.mul(ba, g.inv(transporter[j])));
            if (c3 != g.mul(c2, c1))
              return fail("composition is not preserved at member " + tuple_str(member[j]) +
                          ", elements " + std::to_string(a) + "," + std::to_string(b));
          }
        }
      }
    }

    // The graph map to the fibered product is a bijection: counts match and
    // every fibered triple is hit exactly once.
    using Triple = std::tuple<std::pair<int, int>, std::pair<int, int>, std::pair<int, int>>;
    std::set<Triple> image;
    for (size_t j = 0; j < member.size(); ++j)
      for (int x : member_fixed[j])
        for (int a = 0; a < g.order(); ++a) {
          std::vector<int> conj_tuple(member[j].size());
          for (size_t t = 0; t < member[j].size(); ++t)
            conj_tuple[t] = g.conj(a, member[j][t]);
          const int jp = member_pos.at(conj_tuple);
          const int c = g.mul(transporter[jp], g.mul(a, g.inv(transporter[j])));
          const int z = reg.vertex_action[transporter[j]][x];
          image.insert(Triple{{static_cast<int>(j), x},
                              {jp, reg.vertex_action[a][x]},
                              {c, z}});
        }
    long long object_count = 0;
    for (const auto& f : member_fixed) object_count += static_cast<long long>(f.size());
    const long long domain = static_cast<long long>(g.order()) * object_count;
    if (static_cast<long long>(image.size()) != domain)
      return fail("graph map into the fibered product is not injective for class " +
                  tuple_str(rep));
    std::set<Triple> fibered;
    for (int c : cls.centralizer.elements)
      for (int z : rep_fixed)
        for (size_t j = 0; j < member.size(); ++j)
          for (size_t jp = 0; jp < member.size(); ++jp) {
            const int x = reg.vertex_action[g.inv(transporter[j])][z];
            const int cz = reg.vertex_action[c][z];
            const int xp = reg.vertex_action[g.inv(transporter[jp])][cz];
            fibered.insert(Triple{{static_cast<int>(j), x},
                                  {static_cast<int>(jp), xp},
                                  {c, z}});
          }
    triples_total += static_cast<long long>(fibered.size());
    if (image != fibered)
      return fail("graph map does not fill the fibered product for class " + tuple_str(rep));

    // Orbit spaces of both sides carry the same census.
    std::vector<Subcomplex> parts;
    parts.reserve(member.size());
    for (size_t j = 0; j < member.size(); ++j)
      parts.push_back(subcomplex_on(reg, member_fixed[j]));
    std::vector<int> all_elements(g.order());
    std::iota(all_elements.begin(), all_elements.end(), 0);
    auto act_label = [&](int a, int label) {
      std::vector<int> ct(member[label].size());
      for (size_t t = 0; t < member[label].size(); ++t)
        ct[t] = g.conj(a, member[label][t]);
      return member_pos.at(ct);
    };
    auto lhs = family_census(reg, parts, act_label, all_elements);

    CoarseSector shim;
    shim.quot = quotient_of(reg, cls.centralizer, parts[member_pos.at(rep)]);
    shim.component_of_orbit = connected_components(shim.quot);
    auto rhs = morita_census(shim);
    if (lhs != rhs)
      return fail("orbit space censuses of the two sides differ for class " + tuple_str(rep));
  }

  cert.counts.emplace_back("classes_checked", classes_checked);
  cert.counts.emplace_back("objects", objects_total);
  cert.counts.emplace_back("arrows", arrows_total);
  cert.counts.emplace_back("fibered_triples", triples_total);
  return cert;
}

MoritaCensus commuting_tuple_sectors(const EquivariantComplex& e, int s, TupleRelators mode,
                                     const Budgets& budgets) {
  if (s < 1) throw InputError("tuple length must be positive");
  const FiniteGroup& g = *e.group;
  std::int64_t total = 1;
  for (int i = 0; i < s; ++i) {
    total *= g.order();
    if (total > budgets.hom_nodes)
      throw CapacityError("tuple enumeration budget exceeded: |G|^s with |G|=" +
                          std::to_string(g.order()) + ", s=" + std::to_string(s) +
                          " is above the bound of " + std::to_string(budgets.hom_nodes));
  }
  int subdivisions = 0;
  auto reg = regularize(e, &subdivisions);

  // Plain odometer enumeration with a direct relation filter; no
  // presentation machinery on this route.
  std::vector<std::vector<int>> tuples;
  std::vector<int> t(s, 0);
  while (true) {
    bool keep = true;
    if (mode == TupleRelators::Commuting) {
      for (int i = 0; i < s && keep; ++i)
        for (int j = i + 1; j < s && keep; ++j)
          keep = g.mul(t[i], t[j]) == g.mul(t[j], t[i]);
    }
    if (keep) tuples.push_back(t);
    int pos = s - 1;
    while (pos >= 0 && ++t[pos] == g.order()) t[pos--] = 0;
    if (pos < 0) break;
  }

  std::map<std::vector<int>, int> index;
  for (size_t i = 0; i < tuples.size(); ++i) index[tuples[i]] = static_cast<int>(i);

  MoritaCensus census;
  std::vector<char> done(tuples.size(), 0);
  for (size_t i = 0; i < tuples.size(); ++i) {
    if (done[i]) continue;
    for (int a = 0; a < g.order(); ++a) {
      std::vector<int> conj(s);
      for (int j = 0; j < s; ++j) conj[j] = g.conj(a, tuples[i][j]);
      done[index.at(conj)] = 1;
    }
    auto fixed = fixed_vertices(reg, tuples[i]);
    if (fixed.empty()) continue;
    auto cent = centralizer_of_set(g, tuples[i]);
    std::vector<Subcomplex> part{subcomplex_on(reg, fixed)};
    auto one = family_census(reg, part, [](int, int) { return 0; }, cent.elements);
    for (auto& c : one) census.push_back(std::move(c));
  }
  std::sort(census.begin(), census.end());
  return census;
}

Certificate verify_constants_census(const EquivariantComplex& e, int s, TupleRelators mode,
                                    const Budgets& budgets) {
  Certificate cert;
  cert.check = "constants";
  regularize(e, &cert.subdivisions);
  auto direct = commuting_tuple_sectors(e, s, mode, budgets);
  auto p = mode == TupleRelators::Free ? presentation::free_group(s)
                                       : presentation::free_abelian(s);
  auto via_sectors = morita_census(gamma_sectors(e, p, budgets));
  cert.counts.emplace_back("components_direct", static_cast<long long>(direct.size()));
  cert.counts.emplace_back("components_via_sectors", static_cast<long long>(via_sectors.size()));
  if (direct != via_sectors) {
    cert.ok = false;
    cert.counterexample = "tuple-built census differs from the sector census for s=" +
                          std::to_string(s);
  }
  return cert;
}

}  // namespace orbisect
