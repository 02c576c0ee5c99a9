#pragma once

// The dictionary between atlases of F1-algebras and cone complexes, and the
// geometric constructions performed through it: normalization, blow-ups,
// formal completion, algebraisation and expansions.

#include <optional>
#include <vector>

#include "f1cones/complex.hpp"
#include "f1cones/f1algebra.hpp"

namespace f1cones {

/// Identifies A_from[from_f^-1] with A_to[to_f^-1]; charmap is K_to -> K_from
/// on free parts.
struct ChartGluing {
  std::size_t from = 0;
  Element from_f;
  std::size_t to = 0;
  Element to_f;
  IntMatrix charmap;
  bool operator==(const ChartGluing&) const = default;
};

struct SchemeAtlas {
  std::vector<F1Algebra> charts;
  std::vector<ChartGluing> gluings;
};

/// An atlas with an ideal of definition per chart; nullopt leaves the chart
/// uncompleted.
struct FormalSchemeAtlas {
  SchemeAtlas atlas;
  std::vector<std::optional<MonomialIdeal>> ideals;
};

/// Checks that gluing elements are monoid elements and that the localizations
/// agree under the charmap (torsion-free charts), then that the cone data is a
/// valid complex. Throws InvariantError or the complex validation errors.
void validate_atlas(const SchemeAtlas& x);

ConeComplex sigma(const SchemeAtlas& x);
/// Punctures come from the ideals of definition. Gluings along faces punctured
/// on both sides disappear; punctured on one side only is IncompatibleIdeals.
ConeComplex sigma(const FormalSchemeAtlas& x);

/// Normal chart per cone (Hilbert basis of the polar monoid) and the ideal of
/// definition generated by the cutters of the maximal punctures.
FormalSchemeAtlas spec(const ConeComplex& s);
/// The normal algebra whose polar cone is c.
F1Algebra chart_algebra(const Cone& c);

SchemeAtlas normalize_scheme(const SchemeAtlas& x);

/// Refinement of every cone by the domains of linearity of max of the given
/// characters, glued along common faces.
struct Subdivision {
  ConeComplex complex;
  ComplexMorphism morphism;          // piece -> parent cone
  std::vector<std::size_t> parent;   // parent cone of each piece
  std::vector<std::size_t> dominant; // index of the maximal function on each piece
};
/// Throws IncompatibleIdeals when pieces fail to meet in faces across a gluing.
Subdivision subdivide(const ConeComplex& s, const std::vector<std::vector<IntVec>>& functions,
                      bool include_zero = false);

struct BlowUp {
  SchemeAtlas atlas;
  ConeComplex complex;
  ComplexMorphism morphism;
  std::vector<bool> chart_was_normal;  // before the optional normalization
};
/// Blow-up along per-chart monomial ideals. Throws ZeroIdeal.
BlowUp blow_up(const SchemeAtlas& x, const std::vector<MonomialIdeal>& ideals, bool normalize_charts = false);

struct Completion {
  FormalSchemeAtlas formal;
  std::vector<std::size_t> krull_warnings;  // charts where Krull injectivity fails
  bool krull_warning() const { return !krull_warnings.empty(); }
};
/// Throws ZeroIdeal, and IncompatibleIdeals when the punctures disagree
/// across a gluing.
Completion complete(const SchemeAtlas& x, const std::vector<std::optional<MonomialIdeal>>& ideals);

struct Algebraisation {
  SchemeAtlas atlas;
  std::vector<std::optional<MonomialIdeal>> markings;
  ConeComplex filled;  // the unpunctured complex
};
/// Fills every pair of cones: along their shared faces when contiguous, at the
/// origin otherwise, transported by the developing map. Throws
/// NonConstantCharactersError when the local system has monodromy.
Algebraisation algebraise(const ConeComplex& s);

enum class ExpansionKind { Etale, Sur, SurSmall };
const char* expansion_kind_name(ExpansionKind k);

/// U is the face of v cut by f; the center Z is the monomial ideal generated
/// by the characters in `center`.
struct ExpansionDatum {
  Cone v;
  IntVec f;
  std::vector<IntVec> center;
};
struct Expansion {
  std::vector<ConeComplex> stages;  // stages 1..k
  bool stabilized = false;          // the last two stages agree
};
/// Iterated blow-ups along Z and (f = 0) with strict transforms (Sur, SurSmall)
/// or pullbacks (Etale). Etale reports U_i, Sur reports V_i and SurSmall U_i.
/// Throws ZeroCenter.
Expansion expansion_stages(const ExpansionDatum& d, ExpansionKind kind, std::size_t k);

/// The formally embedded closure of an open subcomplex spanned by faces of a
/// single cone: the big star of that cone. U covering every cone returns s.
ConeComplex embedded_closure(const ConeComplex& s, const Subcomplex& u);

}  // namespace f1cones
