#pragma once

// Finitely generated abelian groups Z^rank + Z/d_1 + ... + Z/d_k, the homes of
// all exponent vectors (character groups of F1-algebras).

#include <cstddef>
#include <optional>
#include <string>
#include <vector>

#include "f1cones/lattice.hpp"

namespace f1cones {

/// Element of a CharacterGroup: free coordinates plus residues mod the
/// torsion invariants (always reduced into [0, d_i)).
struct Element {
  IntVec free;
  IntVec torsion;

  Element() = default;
  explicit Element(IntVec f, IntVec t = {}) : free(std::move(f)), torsion(std::move(t)) {}

  bool operator==(const Element&) const = default;
  auto operator<=>(const Element& other) const {
    if (auto c = free <=> other.free; c != 0) return c;
    return torsion <=> other.torsion;
  }
};

std::string to_string(const Element& e);

struct Cokernel;

class CharacterGroup {
 public:
  CharacterGroup() = default;
  /// Throws InvalidArgument unless torsion is a divisibility chain of d_i >= 2.
  CharacterGroup(std::size_t rank, std::vector<Integer> torsion = {});
  static CharacterGroup free(std::size_t rank) { return CharacterGroup(rank); }

  std::size_t rank() const { return rank_; }
  const std::vector<Integer>& torsion() const { return torsion_; }
  bool is_free() const { return torsion_.empty(); }
  bool is_trivial() const { return rank_ == 0 && torsion_.empty(); }

  Element zero() const;
  Element make(IntVec free, IntVec torsion = {}) const;  // reduces residues
  Element add(const Element& a, const Element& b) const;
  Element sub(const Element& a, const Element& b) const;
  Element negate(const Element& a) const;
  Element scale(const Element& a, const Integer& k) const;
  bool contains(const Element& e) const;  // shape check
  bool is_zero(const Element& e) const;

  /// Z^(rank + #torsion) representative of an element.
  IntVec lift(const Element& e) const;
  /// Columns d_i e_(rank+i) generating the kernel of the lift.
  std::vector<IntVec> torsion_relations() const;

  /// Is x in the subgroup generated by gens?
  bool in_subgroup(const std::vector<Element>& gens, const Element& x) const;
  /// Coefficients a with sum a_j gens_j = x, if x is in the subgroup.
  std::optional<IntVec> subgroup_coordinates(const std::vector<Element>& gens,
                                             const Element& x) const;
  /// Isomorphism type of the subgroup generated by gens.
  CharacterGroup subgroup_type(const std::vector<Element>& gens) const;
  /// The subgroup generated by gens as an abstract group, with the images
  /// of gens in it (coordinates for the subgroup).
  Cokernel subgroup_presentation(const std::vector<Element>& gens) const;
  /// Generators of the torsion part of the subgroup generated by gens.
  std::vector<Element> subgroup_torsion(const std::vector<Element>& gens) const;

  bool operator==(const CharacterGroup&) const = default;
  std::string to_string() const;

 private:
  std::size_t rank_ = 0;
  std::vector<Integer> torsion_;
};

/// Structure of Z^n / (lattice spanned by relation rows): the group together
/// with the images of the standard generators.
struct Cokernel {
  CharacterGroup group;
  std::vector<Element> images;
};
Cokernel cokernel(const std::vector<IntVec>& relations, std::size_t n);

}  // namespace f1cones
