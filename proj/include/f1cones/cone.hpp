#pragma once

// Rational polyhedral cones in N(Q) = Hom(K, Q).
//
// Sign convention: an inequality f (a character) means v(f) <= 0, so the polar
// cone of a monoid is where every monoid element is nonpositive. Torsion of
// the character group is carried along but is invisible to the geometry.

#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f1cones/character_group.hpp"
#include "f1cones/lattice.hpp"

namespace f1cones {

/// A face of a cone: the rays it contains (indices into the parent's rays)
/// and a cutter, a character nonpositive on the parent whose zero locus is
/// exactly the face. The cutter of the whole cone is 0.
struct Face {
  std::vector<std::size_t> rays;
  std::size_t dim = 0;
  IntVec cutter;

  bool operator==(const Face& o) const { return rays == o.rays; }
  auto operator<=>(const Face& o) const {
    if (dim != o.dim) return dim <=> o.dim;
    return rays <=> o.rays;
  }
};

class Cone {
 public:
  /// The zero cone in the rank-0 group.
  Cone();
  Cone(CharacterGroup group, std::vector<Element> inequalities);
  static Cone from_inequalities(std::size_t rank, const std::vector<IntVec>& inequalities);
  static Cone from_rays(const CharacterGroup& group, const std::vector<IntVec>& rays,
                        const std::vector<IntVec>& lineality = {});
  static Cone from_rays(std::size_t rank, const std::vector<IntVec>& rays) {
    return from_rays(CharacterGroup::free(rank), rays);
  }
  static Cone whole_space(std::size_t rank);
  static Cone origin(std::size_t rank);

  const CharacterGroup& group() const { return group_; }
  std::size_t ambient_dim() const { return group_.rank(); }
  const std::vector<Element>& inequalities() const { return inequalities_; }
  std::vector<IntVec> inequality_vectors() const;

  /// Extreme rays, primitive and sorted; throws NotPointed when the cone has lineality.
  const std::vector<IntVec>& rays() const;
  /// Ray representatives modulo the lineality space (never throws).
  const std::vector<IntVec>& generators() const { return rays_; }
  /// Basis of the saturated lattice of the lineality space.
  const std::vector<IntVec>& lineality() const { return lineality_; }
  bool is_pointed() const { return lineality_.empty(); }
  std::size_t dim() const { return dim_; }
  bool is_full_dimensional() const { return dim_ == ambient_dim(); }

  /// Canonical H-description: HNF basis of the orthogonal complement of the
  /// span, and facet normals projected onto the span, primitive and sorted.
  const std::vector<IntVec>& equations() const { return equations_; }
  const std::vector<IntVec>& facets() const { return facets_; }
  /// Ray index sets of the facets, aligned with facets().
  const std::vector<std::vector<std::size_t>>& facet_rays() const { return facet_rays_; }
  /// Basis of the saturated lattice spanned by the cone.
  std::vector<IntVec> span_basis() const;

  bool contains(const IntVec& v) const;
  bool contains_relint(const IntVec& v) const;
  bool contains_cone(const Cone& other) const;
  /// Sum of the rays: an integral point of the relative interior.
  IntVec interior_point() const;

  /// All faces, ordered by dimension then ray indices.
  std::vector<Face> faces() const;
  Face make_face(std::vector<std::size_t> rays) const;
  Face whole_face() const;
  Face origin_face() const;  // the minimal face (the lineality space)
  /// The face {v(f) = 0}, if f is nonpositive on the cone.
  std::optional<Face> face_cut_by(const IntVec& f) const;
  /// Smallest face containing a point of the cone.
  Face minimal_face_containing(const IntVec& v) const;
  /// The face as a cone in its own right (same ambient group).
  Cone face_cone(const Face& f) const;
  std::vector<IntVec> face_ray_vectors(const Face& f) const;
  /// Locate a face by its ray vectors (must be exactly a face).
  std::optional<Face> face_with_rays(const std::vector<IntVec>& rays) const;

  bool operator==(const Cone& other) const;
  std::string to_string() const;

 private:
  void compute();

  CharacterGroup group_;
  std::vector<Element> inequalities_;
  std::vector<IntVec> rays_;
  std::vector<IntVec> lineality_;
  std::vector<IntVec> equations_;
  std::vector<IntVec> facets_;
  std::vector<std::vector<std::size_t>> facet_rays_;
  std::size_t dim_ = 0;
};

/// Rays and lineality of {v : a.v <= 0 for all a}, by double description.
struct DoubleDescription {
  std::vector<IntVec> rays;       // primitive, sorted, orthogonal to the lineality
  std::vector<IntVec> lineality;  // HNF basis of the saturated lineality lattice
};
DoubleDescription double_description(const std::vector<IntVec>& inequalities, std::size_t dim);

/// Primitive integer vector on the ray of the orthogonal projection of a onto
/// the rational span of basis (zero if a is orthogonal to it).
IntVec project_onto_span(const IntVec& a, const std::vector<IntVec>& basis);

Cone intersect(const Cone& a, const Cone& b);

/// Domains of linearity of max_i v(f_i) (with the constant 0 prepended when
/// include_zero) intersected with c, restricted to those of full dimension.
std::vector<Cone> refine_by_function(const Cone& c, const std::vector<IntVec>& fs, bool include_zero);

/// Minimal generating set of the polar monoid {a in K : a <= 0 on c}: the
/// Hilbert basis of the free part plus generators of the torsion subgroup.
/// Throws DimensionBound when the rank exceeds the bound.
std::vector<Element> hilbert_basis(const Cone& c, std::optional<std::size_t> dim_bound = std::nullopt);

/// Hilbert basis of cone(generators) intersected with Z^dim. Lineality is
/// allowed; it contributes a basis of its lattice together with negatives.
std::vector<IntVec> hilbert_basis_of_span(const std::vector<IntVec>& generators, std::size_t dim);

/// Linear quotient by the saturated lattice spanned by a face.
struct FaceQuotient {
  IntMatrix projection;            // (r - k) x r, N -> N / <tau>
  IntMatrix section;               // r x (r - k), columns complete the face lattice
  Cone cone;                       // image of c
  /// Pull a quotient inequality back to a character of the original cone.
  IntVec pullback(const IntVec& quotient_inequality) const;
  /// Image in the quotient's dual of a character vanishing on the face.
  IntVec push_character(const IntVec& character) const;
};
FaceQuotient quotient_by_face(const Cone& c, const Face& tau);

/// A cone with a downward-closed set of proper punctured faces.
class PuncturedCone {
 public:
  PuncturedCone() = default;
  explicit PuncturedCone(Cone cone, std::set<Face> punctures = {});

  const Cone& cone() const { return cone_; }
  const std::set<Face>& punctures() const { return punctures_; }
  bool is_punctured(const Face& f) const { return punctures_.count(f) > 0; }
  bool has_punctures() const { return !punctures_.empty(); }
  /// Cutters of the maximal punctured faces.
  std::vector<Face> maximal_punctures() const;
  /// Faces not punctured, in face order.
  std::vector<Face> kept_faces() const;

  bool operator==(const PuncturedCone& other) const;
  std::string to_string() const;

 private:
  Cone cone_;
  std::set<Face> punctures_;
};

/// Every face of the cone below some element of the set (throws
/// InvariantError if an element is the whole cone).
std::set<Face> downward_closure(const Cone& c, const std::set<Face>& faces);

enum class Membership { Kept, Punctured, Outside };
const char* membership_name(Membership m);
/// Classify an integral vector (a rational point scaled to be integral).
Membership membership(const PuncturedCone& pc, const IntVec& v);

}  // namespace f1cones
