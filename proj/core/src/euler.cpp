#include "orbisect/euler.hpp"

namespace orbisect {

namespace {

// Euler characteristic of the full subcomplex on the jointly fixed vertices.
long long fixed_chi(const EquivariantComplex& e, const std::vector<int>& elements) {
  std::vector<char> fixed(e.complex.num_vertices, 1);
  for (int v = 0; v < e.complex.num_vertices; ++v)
    for (int a : elements)
      if (e.vertex_action[a][v] != v) { fixed[v] = 0; break; }
  long long chi = 0;
  for (const auto& s : e.complex.simplices) {
    bool inside = true;
    for (int v : s)
      if (!fixed[v]) { inside = false; break; }
    if (inside) chi += (s.size() % 2 == 1) ? 1 : -1;
  }
  return chi;
}

}  // namespace

EulerReport gamma_euler(const EquivariantComplex& e, const GroupPresentation& p,
                        const Budgets& budgets) {
  auto d = gamma_sectors(e, p, budgets);
  EulerReport report;
  report.gamma_name = d.gamma_name;
  report.subdivisions = d.subdivisions;
  for (const auto& r : d.refined) report.sector_sum += r.chi;

  auto k = as_free_abelian(p);
  if (!k) return report;

  const FiniteGroup& g = *e.group;
  std::int64_t tuple_count = 1;
  bool feasible = true;
  for (int i = 0; i <= *k; ++i) {
    tuple_count *= g.order();
    if (tuple_count > budgets.hom_nodes) { feasible = false; break; }
  }
  if (!feasible) return report;

  // Average, over pairwise commuting (k+1)-tuples, of the Euler
  // characteristic of the joint fixed subcomplex.
  long long sum = 0;
  std::vector<int> t(*k + 1, 0);
  while (true) {
    bool commuting = true;
    for (size_t i = 0; i + 1 < t.size() && commuting; ++i)
      for (size_t j = i + 1; j < t.size() && commuting; ++j)
        commuting = g.mul(t[i], t[j]) == g.mul(t[j], t[i]);
    if (commuting) sum += fixed_chi(d.regularized, t);
    int pos = static_cast<int>(t.size()) - 1;
    while (pos >= 0 && ++t[pos] == g.order()) t[pos--] = 0;
    if (pos < 0) break;
  }
  report.oracle = Rational(sum, g.order());
  report.oracle_integral = report.oracle->is_integer();
  report.agree = report.oracle_integral && *report.oracle == Rational(report.sector_sum);
  return report;
}

Rational orbifold_euler_total(const EquivariantComplex& e) {
  int subdivisions = 0;
  auto reg = regularize(e, &subdivisions);
  auto q = quotient_of(reg, full_subgroup(*e.group), full_subcomplex(reg));
  return orbifold_euler_characteristic(q);
}

}  // namespace orbisect
