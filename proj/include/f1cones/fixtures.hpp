#pragma once

// Standard complexes: affine and projective spaces, blow-ups, doubled lines,
// Tate-type loops and their unrolled chains, formal completions.

#include <string>
#include <vector>

#include "f1cones/complex.hpp"

namespace f1cones::fixtures {

/// Cone in Z^d spanned by rays.
Cone cone_of(std::size_t d, const std::vector<IntVec>& rays);
/// The cone with the faces cut by the given cutters (and everything below) punctured.
PuncturedCone punctured(const Cone& c, const std::vector<IntVec>& cutters);

/// Fan in Z^d: every pair of cones meeting in a common face is glued along it
/// with the identity charmap.
ConeComplex fan(std::size_t d, const std::vector<std::vector<IntVec>>& cones);

ConeComplex a1();
ConeComplex p1();
ConeComplex doubled_line();
ConeComplex a2();
ConeComplex p2();
ConeComplex bl0_a2();
ConeComplex formal_disc();
ConeComplex formal_plane();
/// A^2 completed along the axis v1 = 0: origin and that ray punctured.
ConeComplex formal_axis();
/// Two cones whose far rays are glued by the shear [[1,1],[0,1]]; origins punctured.
ConeComplex tate_loop();
/// n consecutive cones of the developed Tate loop; origins punctured.
ConeComplex tate_chain(std::size_t n);
/// The shear generating the monodromy of tate_loop.
IntMatrix tate_shear();

/// Named corpus of at least 25 complexes of dimension <= 3 and <= 12 cones.
struct Named {
  std::string name;
  ConeComplex complex;
};
std::vector<Named> corpus();

}  // namespace f1cones::fixtures
