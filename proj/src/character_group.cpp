#include "f1cones/character_group.hpp"

#include <sstream>

#include "f1cones/errors.hpp"

namespace f1cones {

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

}  // namespace

std::string to_string(const Element& e) {
  if (e.torsion.empty()) return to_string(e.free);
  return to_string(e.free) + "+" + to_string(e.torsion);
}

CharacterGroup::CharacterGroup(std::size_t rank, std::vector<Integer> torsion)
    : rank_(rank), torsion_(std::move(torsion)) {
  for (std::size_t i = 0; i < torsion_.size(); ++i) {
    if (torsion_[i] < 2)
      throw Error(ErrorKind::InvalidArgument, "torsion invariants must be >= 2");
    if (i > 0 && torsion_[i] % torsion_[i - 1] != 0)
      throw Error(ErrorKind::InvalidArgument, "torsion invariants must form a divisibility chain");
  }
}

Element CharacterGroup::zero() const {
  return Element(zero_vec(rank_), zero_vec(torsion_.size()));
}

Element CharacterGroup::make(IntVec free, IntVec torsion) const {
  if (torsion.empty() && !torsion_.empty()) torsion = zero_vec(torsion_.size());
  if (free.size() != rank_ || torsion.size() != torsion_.size())
    throw Error(ErrorKind::CharacterMismatch,
                "element " + f1cones::to_string(Element(free, torsion)) + " does not fit group " + to_string());
  for (std::size_t i = 0; i < torsion.size(); ++i) torsion[i] = mod_pos(torsion[i], torsion_[i]);
  return Element(std::move(free), std::move(torsion));
}

Element CharacterGroup::add(const Element& a, const Element& b) const {
  return make(f1cones::add(a.free, b.free), f1cones::add(a.torsion, b.torsion));
}

Element CharacterGroup::sub(const Element& a, const Element& b) const {
  return make(f1cones::sub(a.free, b.free), f1cones::sub(a.torsion, b.torsion));
}

Element CharacterGroup::negate(const Element& a) const {
  return make(f1cones::negate(a.free), f1cones::negate(a.torsion));
}

Element CharacterGroup::scale(const Element& a, const Integer& k) const {
  return make(f1cones::scale(a.free, k), f1cones::scale(a.torsion, k));
}

bool CharacterGroup::contains(const Element& e) const {
  return e.free.size() == rank_ && e.torsion.size() == torsion_.size();
}

bool CharacterGroup::is_zero(const Element& e) const {
  return f1cones::is_zero(e.free) && f1cones::is_zero(e.torsion);
}

IntVec CharacterGroup::lift(const Element& e) const {
  IntVec v = e.free;
  v.insert(v.end(), e.torsion.begin(), e.torsion.end());
  return v;
}

std::vector<IntVec> CharacterGroup::torsion_relations() const {
  std::vector<IntVec> out;
  const std::size_t dim = rank_ + torsion_.size();
  for (std::size_t i = 0; i < torsion_.size(); ++i) out.push_back(f1cones::scale(unit_vec(dim, rank_ + i), torsion_[i]));
  return out;
}

std::optional<IntVec> CharacterGroup::subgroup_coordinates(const std::vector<Element>& gens,
                                                           const Element& x) const {
  const std::size_t dim = rank_ + torsion_.size();
  std::vector<IntVec> cols;
  for (const auto& g : gens) cols.push_back(lift(g));
  for (const auto& r : torsion_relations()) cols.push_back(r);
  if (cols.empty()) return f1cones::is_zero(lift(x)) ? std::optional<IntVec>(IntVec{}) : std::nullopt;
  auto sol = solve_integer(IntMatrix::from_columns(cols, dim), lift(x));
  if (!sol) return std::nullopt;
  sol->resize(gens.size());
  return sol;
}

bool CharacterGroup::in_subgroup(const std::vector<Element>& gens, const Element& x) const {
  return subgroup_coordinates(gens, x).has_value();
}

namespace {

// Relation lattice {a : sum a_j g_j = 0} of the generators, as rows.
std::vector<IntVec> relation_lattice(const CharacterGroup& g, const std::vector<Element>& gens) {
  const std::size_t dim = g.rank() + g.torsion().size();
  const std::size_t m = gens.size();
  std::vector<IntVec> cols;
  for (const auto& x : gens) cols.push_back(g.lift(x));
  for (const auto& r : g.torsion_relations()) cols.push_back(r);
  if (cols.empty()) return {};
  auto ker = kernel_basis(IntMatrix::from_columns(cols, dim));
  std::vector<IntVec> rel;
  for (auto& k : ker) {
    k.resize(m);
    rel.push_back(std::move(k));
  }
  return lattice_basis(rel, m);
}

}  // namespace

CharacterGroup CharacterGroup::subgroup_type(const std::vector<Element>& gens) const {
  return subgroup_presentation(gens).group;
}

Cokernel CharacterGroup::subgroup_presentation(const std::vector<Element>& gens) const {
  if (gens.empty()) return Cokernel{CharacterGroup(0), {}};
  return cokernel(relation_lattice(*this, gens), gens.size());
}

std::vector<Element> CharacterGroup::subgroup_torsion(const std::vector<Element>& gens) const {
  // Combinations with vanishing free part.
  std::vector<Element> out;
  if (gens.empty() || torsion_.empty()) return out;
  std::vector<IntVec> free_cols;
  for (const auto& g : gens) free_cols.push_back(g.free);
  std::vector<IntVec> ker;
  if (rank_ == 0) {
    for (std::size_t j = 0; j < gens.size(); ++j) ker.push_back(unit_vec(gens.size(), j));
  } else {
    ker = kernel_basis(IntMatrix::from_columns(free_cols, rank_));
  }
  for (const auto& a : ker) {
    Element e = zero();
    for (std::size_t j = 0; j < gens.size(); ++j) e = add(e, scale(gens[j], a[j]));
    if (!is_zero(e)) out.push_back(e);
  }
  return out;
}

std::string CharacterGroup::to_string() const {
  std::ostringstream os;
  os << "Z^" << rank_;
  for (const auto& d : torsion_) os << " + Z/" << d;
  return os.str();
}

Cokernel cokernel(const std::vector<IntVec>& relations, std::size_t n) {
  Cokernel out;
  if (n == 0) {
    out.group = CharacterGroup(0);
    return out;
  }
  IntMatrix v = IntMatrix::identity(n);
  std::vector<Integer> inv;
  if (!relations.empty()) {
    SmithForm s = smith_normal_form(IntMatrix::from_rows(relations, n));
    v = s.right;
    inv = s.invariants;
  }
  inv.resize(n, Integer(0));
  // Row j of V is the image of e_j in the diagonal coordinates.
  std::vector<std::size_t> free_idx, tors_idx;
  std::vector<Integer> tors;
  for (std::size_t i = 0; i < n; ++i) {
    if (inv[i] == 0)
      free_idx.push_back(i);
    else if (inv[i] != 1) {
      tors_idx.push_back(i);
      tors.push_back(inv[i]);
    }
  }
  out.group = CharacterGroup(free_idx.size(), tors);
  // Canonicalize the free coordinates by the Hermite form of the image matrix.
  IntMatrix free_img(free_idx.size(), n);
  for (std::size_t r = 0; r < free_idx.size(); ++r)
    for (std::size_t j = 0; j < n; ++j) free_img(r, j) = v(j, free_idx[r]);
  if (!free_idx.empty()) free_img = row_echelon(free_img).hermite;
  for (std::size_t j = 0; j < n; ++j) {
    IntVec f(free_idx.size()), t(tors_idx.size());
    for (std::size_t r = 0; r < free_idx.size(); ++r) f[r] = free_img(r, j);
    for (std::size_t r = 0; r < tors_idx.size(); ++r) t[r] = v(j, tors_idx[r]);
    out.images.push_back(out.group.make(std::move(f), std::move(t)));
  }
  return out;
}

}  // namespace f1cones
