#pragma once

#include <optional>
#include <string>

#include "orbisect/complex.hpp"
#include "orbisect/presentation.hpp"
#include "orbisect/rational.hpp"
#include "orbisect/sectors.hpp"

namespace orbisect {

// Total Euler characteristic of a sector decomposition, with an independent
// averaging oracle when the presentation is structurally free abelian on k
// generators: the oracle averages, over all commuting (k+1)-tuples, the
// Euler characteristic of the joint fixed subcomplex.
struct EulerReport {
  std::string gamma_name;
  long long sector_sum = 0;
  std::optional<Rational> oracle;
  bool oracle_integral = true;
  bool agree = true;
  int subdivisions = 0;
};

EulerReport gamma_euler(const EquivariantComplex& e, const GroupPresentation& p,
                        const Budgets& budgets = {});

// Stabilizer-weighted Euler characteristic of the quotient, as an exact
// rational.
Rational orbifold_euler_total(const EquivariantComplex& e);

}  // namespace orbisect
