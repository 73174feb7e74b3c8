#pragma once

#include <memory>

#include "orbisect/complex.hpp"
#include "orbisect/group.hpp"

namespace orbisect {

// A group together with an action on a complex, with the group owned so the
// pair can be passed around as a unit.
struct Model {
  std::shared_ptr<const FiniteGroup> group;
  EquivariantComplex space;
};

// Order-3 rotation of a triangulated sphere: two poles and a 3-cycle on the
// equator, six triangles. The poles are the only fixed points.
Model football_model();

// S3 acting on the cone over a free orbit of six rim vertices, plus a
// two-point orbit with order-3 stabilizers. The tip is the only global fixed
// point; 3-cycles also fix the isolated pair, transpositions swap it.
Model s3_cone_model();

}  // namespace orbisect
