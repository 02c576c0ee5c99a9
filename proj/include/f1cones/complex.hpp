#pragma once

// Punctured cone complexes: finite atlases of punctured cones glued along
// principal faces, with the derived identification of faces, stars, the
// character local system and its developing map.
//
// Conventions. A gluing (from, from_cutter, to, to_cutter, charmap) identifies
// the face of cone `from` cut by from_cutter with the face of cone `to` cut by
// to_cutter. The charmap is an isomorphism K_to -> K_from of free parts acting
// on column vectors; points move the other way, N_from -> N_to, by its
// transpose. Monodromy and developing maps are reported as such point maps.

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "f1cones/cone.hpp"

namespace f1cones {

struct Gluing {
  std::size_t from = 0;
  IntVec from_cutter;
  std::size_t to = 0;
  IntVec to_cutter;
  IntMatrix charmap;  // K_to -> K_from

  /// N_from -> N_to.
  IntMatrix point_map() const { return charmap.transpose(); }
  bool operator==(const Gluing&) const = default;
};

/// A kept face of one cone of a complex, as a vertex of the identification graph.
struct FaceNode {
  std::size_t cone = 0;
  Face face;
  std::size_t cls = 0;  // identification class
  IntMatrix to_root;    // N_cone -> N of the class representative
};

class ConeComplex {
 public:
  ConeComplex() = default;
  /// Checks every invariant and returns the canonical form: gluing cutters are
  /// replaced by the canonical face cutters, gluings are oriented from the
  /// smaller to the larger cone index, sorted and deduplicated. Throws
  /// NotPointed, NonIsomorphicGluing, SelfGluedFaces or IncoherentTransition.
  static ConeComplex validate(std::vector<PuncturedCone> cones, std::vector<Gluing> gluings);

  std::size_t size() const { return cones_.size(); }
  const std::vector<PuncturedCone>& cones() const { return cones_; }
  const PuncturedCone& cone(std::size_t i) const { return cones_.at(i); }
  const std::vector<Gluing>& gluings() const { return gluings_; }

  /// Identification graph of kept faces, closed under restriction to faces.
  const std::vector<FaceNode>& nodes() const { return nodes_; }
  std::optional<std::size_t> node_of(std::size_t cone, const Face& face) const;
  std::size_t class_count() const { return class_members_.size(); }
  const std::vector<std::size_t>& class_members(std::size_t cls) const { return class_members_.at(cls); }
  /// Point map N_a -> N_b between two nodes of one class.
  IntMatrix transport(std::size_t node_a, std::size_t node_b) const;

  /// Connected components (by shared kept faces), as sorted cone index lists.
  std::vector<std::vector<std::size_t>> components() const;

  bool operator==(const ConeComplex& other) const {
    return cones_ == other.cones_ && gluings_ == other.gluings_;
  }
  std::string to_string() const;

 private:
  std::vector<PuncturedCone> cones_;
  std::vector<Gluing> gluings_;
  std::vector<FaceNode> nodes_;
  std::vector<std::vector<std::size_t>> class_members_;
  std::map<std::pair<std::size_t, std::vector<std::size_t>>, std::size_t> index_;
};

/// Image of a cone under a point map N -> N' (rays pushed forward).
Cone map_cone(const Cone& c, const IntMatrix& point_map, const CharacterGroup& target);
/// The face of `target` whose rays are the images of the rays of `f`, if any.
std::optional<Face> map_face(const Cone& source, const Face& f, const IntMatrix& point_map, const Cone& target);

/// Maximal kept faces of cone i identified with faces of cone j (for i == j,
/// the whole cone). Several entries mean the pair meets in several faces.
std::vector<Face> shared_faces(const ConeComplex& s, std::size_t i, std::size_t j);
/// The largest shared face, if cones i and j are contiguous.
std::optional<Face> contiguous(const ConeComplex& s, std::size_t i, std::size_t j);

/// A region around one cone, unrolled on the cover that trivialises the
/// characters: every cone may occur several times with different transports.
struct Star {
  ConeComplex complex;
  std::size_t center = 0;               // index of the central cone in `complex`
  std::vector<std::size_t> source;      // original cone of each star cone
  std::vector<IntMatrix> transport;     // N_source -> N_center for each star cone
  /// Image of star cone k in N_center.
  Cone developed(std::size_t k) const;
  /// Image of a face of star cone k in N_center.
  Cone developed_face(std::size_t k, const Face& f) const;
};

/// Cones contiguous with cone i, with every face identified with a face of a
/// discontiguous cone punctured.
Star big_star(const ConeComplex& s, std::size_t i);
/// The cones of the big star containing the given kept face of cone i
/// (default: cone i itself) as a face.
Star small_star(const ConeComplex& s, std::size_t i, const std::optional<Face>& face = std::nullopt);

struct Loop {
  std::size_t gluing = 0;            // the non-tree gluing closing the loop
  std::vector<std::size_t> cones;    // base, ..., base
  IntMatrix matrix;                  // point transport N_base -> N_base
};

struct LocalSystem {
  std::size_t base = 0;
  std::vector<std::size_t> tree;                  // gluing indices of the spanning tree
  std::vector<std::optional<IntMatrix>> transport;  // N_i -> N_base along the tree
  std::vector<Loop> loops;                        // one per non-tree gluing
  bool is_constant() const;
  /// First loop with nontrivial monodromy.
  const Loop* first_nontrivial() const;
};
LocalSystem monodromy(const ConeComplex& s, std::size_t base);

/// Per-cone embeddings into N_base for the component of base. Throws
/// NonConstantSystem when some loop has monodromy.
struct Development {
  std::size_t base = 0;
  std::vector<std::optional<IntMatrix>> maps;  // N_i -> N_base
};
Development develop(const ConeComplex& s, std::size_t base);

/// Per-cone sets of kept faces forming an open subcomplex.
using Subcomplex = std::vector<std::set<Face>>;
/// Enlarge the punctures by U, closed downward and under identification.
/// Throws NotASubcomplex when a face is foreign or a whole cone would vanish.
ConeComplex puncture_along(const ConeComplex& s, const Subcomplex& u);

/// k-fold cyclic cover unrolling every non-tree gluing once. Cone i of copy m
/// has index m * size + i.
ConeComplex cyclic_cover(const ConeComplex& s, std::size_t k);

struct ConeAssignment {
  std::size_t target = 0;
  IntMatrix charmap;  // K_target -> K_source; points move by the transpose
  IntMatrix point_map() const { return charmap.transpose(); }
  bool operator==(const ConeAssignment&) const = default;
};

class ComplexMorphism {
 public:
  ComplexMorphism() = default;
  /// Checks cone containment, punctures and gluing compatibility (InvariantError).
  ComplexMorphism(ConeComplex source, ConeComplex target, std::vector<ConeAssignment> assignments);

  const ConeComplex& source() const { return source_; }
  const ConeComplex& target() const { return target_; }
  const std::vector<ConeAssignment>& assignments() const { return assignments_; }

  static ComplexMorphism identity(const ConeComplex& s);
  /// The unique morphism to the rank-zero point.
  static ComplexMorphism to_point(const ConeComplex& s);

  bool operator==(const ComplexMorphism&) const = default;

 private:
  ConeComplex source_;
  ConeComplex target_;
  std::vector<ConeAssignment> assignments_;
};

/// The complex of cones sigma_i cut down to the preimage of target cone j,
/// over the source cones assigned to j, with induced punctures and gluings.
ConeComplex preimage(const ComplexMorphism& f, std::size_t j);

/// Cones renumbered by perm (new index of old cone i is perm[i]).
ConeComplex relabel(const ConeComplex& s, const std::vector<std::size_t>& perm);
/// Cones sorted by their printed form, ties kept in order.
ConeComplex canonical_relabeling(const ConeComplex& s);

/// The one-point complex in rank zero.
ConeComplex point_complex();

}  // namespace f1cones
