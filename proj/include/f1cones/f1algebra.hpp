#pragma once

// Finitely generated F1-algebras: monoids with an absorbing zero, described
// either by generators inside a character group (embedded mode, always
// cancellative) or by a finite presentation (presented mode).

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f1cones/character_group.hpp"
#include "f1cones/cone.hpp"

namespace f1cones {

enum class AlgebraMode { Embedded, Presented };

/// lhs ~ rhs between monomials in the generators. A side equal to nullopt
/// stands for the zero element, which presentations reject.
struct Relation {
  std::optional<IntVec> lhs;
  std::optional<IntVec> rhs;
};

class F1Algebra {
 public:
  F1Algebra() = default;
  /// Submonoid of `characters` generated by `generators`.
  static F1Algebra embedded(CharacterGroup characters, std::vector<Element> generators);
  /// Shorthand for free character groups.
  static F1Algebra embedded(std::size_t rank, const std::vector<IntVec>& generators);

  AlgebraMode mode() const { return mode_; }
  bool is_presented() const { return mode_ == AlgebraMode::Presented; }
  const CharacterGroup& characters() const { return characters_; }
  /// Log images of the monoid generators.
  const std::vector<Element>& generators() const { return generators_; }
  const std::vector<Relation>& relations() const { return relations_; }
  std::size_t generator_count() const { return generators_.size(); }

  /// log of the monomial with the given exponents in the generators.
  Element log(const IntVec& exponents) const;

  std::string to_string() const;

 private:
  friend F1Algebra from_presentation(std::size_t, std::vector<Relation>);
  AlgebraMode mode_ = AlgebraMode::Embedded;
  CharacterGroup characters_;
  std::vector<Element> generators_;
  std::vector<Relation> relations_;
};

/// Presented algebra; the characters are the cokernel of the relation lattice.
/// Throws EmptyPresentation (relations without generators) and ZeroRelation.
F1Algebra from_presentation(std::size_t n_generators, std::vector<Relation> relations);

/// Embedded algebra on the log images of the generators (idempotent).
F1Algebra underlying_integral(const F1Algebra& a);

/// Cancellativity. Presented algebras are checked on all monomials up to the
/// degree bound; an inconclusive search throws UndecidedWithinBound.
bool is_integral(const F1Algebra& a, std::optional<std::size_t> degree_bound = std::nullopt);

/// Membership of a character in the monoid A \ 0 of the underlying integral
/// algebra. Throws BudgetExceeded when the search grows past the budget.
bool monoid_contains(const F1Algebra& a, const Element& x);

/// Same character group and same monoid.
bool same_algebra(const F1Algebra& a, const F1Algebra& b);

struct Normalization {
  F1Algebra algebra;
  bool was_normal = false;
};
/// Saturation of A \ 0 in the group it generates, given by a Hilbert basis
/// (plus torsion generators). Presented input is first made integral.
Normalization normalize(const F1Algebra& a);

/// The unit group A^x as an abstract group, and generators of it in K.
/// Presented algebras report the units of their underlying integral algebra.
CharacterGroup units(const F1Algebra& a);
std::vector<Element> unit_generators(const F1Algebra& a);

/// A[f^-1]. nullopt stands for f = 0 and throws ZeroElement.
F1Algebra localize(const F1Algebra& a, const std::optional<Element>& f);

/// sigma_A = {v : v(a) <= 0 for all a in A \ 0}, without punctures.
PuncturedCone polar_cone(const F1Algebra& a);

/// Faces of c cut by an element of A \ 0; each cutter is the sum of the
/// generators vanishing on the face.
std::vector<Face> faces_cut_by(const Cone& c, const F1Algebra& a);

struct PrimeRecord {
  Face face;                        // face of the polar cone
  std::vector<Element> complement;  // generators vanishing on the face
  bool operator==(const PrimeRecord& o) const { return face == o.face; }
};
/// One prime per face of the polar cone, in face order. The origin face is
/// the zero prime, the whole cone the maximal ideal.
std::vector<PrimeRecord> primes(const F1Algebra& a);

/// A / p: the algebra on the complement, over the subgroup it generates.
F1Algebra quotient_by_prime(const F1Algebra& a, const PrimeRecord& p);

class MonomialIdeal {
 public:
  MonomialIdeal() = default;
  /// Generators must be monoid elements (checked).
  MonomialIdeal(F1Algebra owner, std::vector<Element> generators);
  /// Generators given as exponent vectors in the algebra generators.
  static MonomialIdeal from_exponents(const F1Algebra& owner, const std::vector<IntVec>& exponents);

  const F1Algebra& owner() const { return owner_; }
  const std::vector<Element>& generators() const { return generators_; }
  bool is_zero() const { return generators_.empty(); }

 private:
  F1Algebra owner_;
  std::vector<Element> generators_;
};

/// f in t_i + A \ 0 for some generator t_i.
bool ideal_membership(const MonomialIdeal& t, const Element& f);

/// Affine blow-up chart O{T/s}: generated by A and t_i - s. Zero, repeated
/// and redundant generators are dropped. Throws SNotInIdeal.
F1Algebra rees_chart(const F1Algebra& a, const MonomialIdeal& t, const Element& s);

/// Drop identity, duplicate and redundant generators (same monoid).
F1Algebra prune_generators(const F1Algebra& a);

/// Proper faces of the polar cone on which some generator of T vanishes.
/// Throws ZeroIdeal.
std::set<Face> completion_punctures(const F1Algebra& a, const MonomialIdeal& t);

/// False iff some generator of T vanishes on the whole polar cone.
bool krull_injective(const F1Algebra& a, const MonomialIdeal& t);

/// Every finitely generated algebra has enough jets: the span of its monoid is
/// polyhedral, hence reflexive, so every rational jet pulls back effectively.
inline bool has_enough_jets(const F1Algebra&) { return true; }

}  // namespace f1cones
