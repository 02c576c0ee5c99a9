#pragma once

// Decision procedures: separatedness, overconvergence, properness, the
// finiteness flags of a complex, and an integer-jet oracle that recounts lifts
// pointwise as an independent cross-check.

#include <optional>
#include <string>
#include <vector>

#include "f1cones/complex.hpp"

namespace f1cones {

/// Outcome of a check. A negative verdict always carries a witness.
struct Verdict {
  std::string property;
  bool holds = true;
  std::string witness_kind;          // cone_pair, uncovered_direction, missing_jet, multiple_jet
  std::vector<std::size_t> cones;    // source cone indices
  std::vector<std::size_t> face;     // ray indices of the face involved, in cones.front()
  std::vector<IntVec> vectors;       // directions or points
  std::string detail;
};

/// Every contiguous pair meets in a single face F with
/// delta(sigma_1) ∩ delta(sigma_2) = delta(F).
Verdict check_separated(const ConeComplex& s);
/// Separatedness of each preimage of a target cone.
Verdict check_separated(const ComplexMorphism& f);

/// Around every kept face, the small star covers the preimage of each target
/// cone over it (exact wall-crossing).
Verdict check_overconvergent(const ComplexMorphism& f);
Verdict check_overconvergent(const ConeComplex& s);

/// Overconvergent, finitely many cones and quasi-separated.
Verdict check_proper(const ComplexMorphism& f);
Verdict check_proper(const ConeComplex& s);

struct Classification {
  bool quasi_compact = true;      // finitely many cones
  bool rational_polyhedral = true;
  bool noetherian = true;         // integer points span each cone's span
  bool normal = true;             // spec charts are normal
  bool connected = true;
  std::size_t components = 0;
  std::size_t cones = 0;
  std::size_t points = 0;         // kept face classes
};
Classification classify(const ConeComplex& s);

enum class JetGroup { Z, Q };

struct JetSample {
  std::size_t cone = 0;               // cone of the face class representative
  std::vector<std::size_t> face;      // its ray indices
  IntVec direction;                   // point of N_cone near the face
  std::size_t lifts = 0;              // distinct point classes containing it
};

struct JetReport {
  std::size_t samples = 0;
  std::size_t missing = 0;            // samples over the target with no lift
  std::size_t multiple = 0;           // samples with two or more lifts
  std::optional<JetSample> first_missing;
  std::optional<JetSample> first_multiple;
  Verdict overconvergent;
  Verdict separated;
};

/// For every kept face class and every H-point in the box of the given
/// radius, counts the distinct points of the small star (punctures excluded)
/// mapping to each target lift.
JetReport jet_oracle(const ComplexMorphism& f, JetGroup h, long radius);
JetReport jet_oracle(const ConeComplex& s, JetGroup h, long radius);

/// Number of distinct points over v in the star of the origin of cone i.
std::size_t lifts_at(const ConeComplex& s, std::size_t i, const IntVec& v);

}  // namespace f1cones
