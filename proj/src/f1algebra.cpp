#include "f1cones/f1algebra.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>
#include <sstream>

#include "f1cones/config.hpp"
#include "f1cones/errors.hpp"

namespace f1cones {

F1Algebra F1Algebra::embedded(CharacterGroup characters, std::vector<Element> generators) {
  for (const auto& g : generators)
    if (!characters.contains(g))
      throw Error(ErrorKind::CharacterMismatch,
                  "generator " + f1cones::to_string(g) + " is not in " + characters.to_string());
  F1Algebra a;
  a.mode_ = AlgebraMode::Embedded;
  a.characters_ = std::move(characters);
  for (auto& g : generators) a.generators_.push_back(a.characters_.make(g.free, g.torsion));
  return a;
}

F1Algebra F1Algebra::embedded(std::size_t rank, const std::vector<IntVec>& generators) {
  CharacterGroup g = CharacterGroup::free(rank);
  std::vector<Element> gens;
  for (const auto& v : generators) gens.push_back(g.make(v));
  return embedded(g, std::move(gens));
}

Element F1Algebra::log(const IntVec& exponents) const {
  if (exponents.size() != generators_.size())
    throw Error(ErrorKind::InvalidArgument, "monomial " + f1cones::to_string(exponents) + " has wrong length");
  Element out = characters_.zero();
  for (std::size_t i = 0; i < exponents.size(); ++i)
    if (exponents[i] != 0) out = characters_.add(out, characters_.scale(generators_[i], exponents[i]));
  return out;
}

std::string F1Algebra::to_string() const {
  std::ostringstream os;
  if (mode_ == AlgebraMode::Presented) {
    os << "F1<" << generators_.size() << " generators";
    for (const auto& r : relations_) os << " | " << f1cones::to_string(*r.lhs) << "~" << f1cones::to_string(*r.rhs);
    os << "> with characters " << characters_.to_string();
    return os.str();
  }
  os << "F1[";
  for (std::size_t i = 0; i < generators_.size(); ++i) os << (i ? ", " : "") << f1cones::to_string(generators_[i]);
  os << "] in " << characters_.to_string();
  return os.str();
}

F1Algebra from_presentation(std::size_t n, std::vector<Relation> relations) {
  if (n == 0 && !relations.empty())
    throw Error(ErrorKind::EmptyPresentation, "relations without generators");
  std::vector<IntVec> diffs;
  for (const auto& r : relations) {
    if (!r.lhs || !r.rhs) throw Error(ErrorKind::ZeroRelation, "a relation equates a monomial with zero");
    for (const IntVec* side : {&*r.lhs, &*r.rhs}) {
      if (side->size() != n)
        throw Error(ErrorKind::InvalidArgument, "relation side " + to_string(*side) + " has wrong length");
      for (const auto& e : *side)
        if (e < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in " + to_string(*side));
    }
    IntVec d = sub(*r.lhs, *r.rhs);
    if (!is_zero(d)) diffs.push_back(std::move(d));
  }
  Cokernel c = cokernel(diffs, n);
  F1Algebra a;
  a.mode_ = AlgebraMode::Presented;
  a.characters_ = c.group;
  a.generators_ = c.images;
  a.relations_ = std::move(relations);
  return a;
}

F1Algebra underlying_integral(const F1Algebra& a) {
  if (!a.is_presented()) return a;
  return F1Algebra::embedded(a.characters(), a.generators());
}

// ---------------------------------------------------------------------------
// Monoid membership

namespace {

// Splits the generators into units (vanishing on the polar cone) and the
// rest, each of which has a positive weight against an interior point.
// Membership is decided in K modulo the unit group, layer by layer in weight.
struct MonoidIndex {
  CharacterGroup ambient;
  IntVec ell;
  std::vector<Element> units;
  std::vector<Element> images;  // non-unit generators in K / units
  std::vector<Integer> weights;
  Cokernel quotient;            // K / units, via the lift to Z^(r+t)

  explicit MonoidIndex(const F1Algebra& a) : ambient(a.characters()) {
    const std::size_t r = ambient.rank();
    std::vector<Element> gens = a.generators();
    Cone sigma(ambient, gens);
    ell = sigma.interior_point();
    std::vector<IntVec> rel;
    std::vector<Element> nonunits;
    for (const auto& g : gens) {
      Integer w = -dot(ell, g.free);
      if (w == 0) {
        units.push_back(g);
        rel.push_back(ambient.lift(g));
      } else {
        nonunits.push_back(g);
        weights.push_back(w);
      }
    }
    for (const auto& t : ambient.torsion_relations()) rel.push_back(t);
    quotient = cokernel(rel, r + ambient.torsion().size());
    for (const auto& g : nonunits) images.push_back(project(g));
  }

  Element project(const Element& x) const {
    IntVec lifted = ambient.lift(x);
    Element out = quotient.group.zero();
    for (std::size_t i = 0; i < lifted.size(); ++i)
      if (lifted[i] != 0) out = quotient.group.add(out, quotient.group.scale(quotient.images[i], lifted[i]));
    return out;
  }

  bool contains(const Element& x) const {
    Integer total = -dot(ell, x.free);
    if (total < 0) return false;
    Element target = project(x);
    if (total == 0) return quotient.group.is_zero(target);
    const std::size_t budget = membership_budget();
    const std::size_t w = static_cast<std::size_t>(total);
    std::vector<std::set<Element>> layers(w + 1);
    layers[0].insert(quotient.group.zero());
    std::size_t explored = 1;
    for (std::size_t k = 1; k <= w; ++k) {
      for (std::size_t j = 0; j < images.size(); ++j) {
        if (weights[j] > k) continue;
        std::size_t prev = k - static_cast<std::size_t>(weights[j]);
        for (const auto& s : layers[prev]) {
          if (layers[k].insert(quotient.group.add(s, images[j])).second) ++explored;
        }
      }
      if (explored > budget)
        throw Error(ErrorKind::BudgetExceeded, "monoid membership search exceeded " + std::to_string(budget) +
                                                   " partial sums");
    }
    return layers[w].count(target) > 0;
  }
};

}  // namespace

bool monoid_contains(const F1Algebra& a, const Element& x) {
  if (!a.characters().contains(x))
    throw Error(ErrorKind::CharacterMismatch, f1cones::to_string(x) + " is not in " + a.characters().to_string());
  MonoidIndex idx(underlying_integral(a));
  return idx.contains(a.characters().make(x.free, x.torsion));
}

bool same_algebra(const F1Algebra& a, const F1Algebra& b) {
  if (!(a.characters() == b.characters())) return false;
  F1Algebra ia = underlying_integral(a), ib = underlying_integral(b);
  MonoidIndex in_a(ia), in_b(ib);
  for (const auto& g : ia.generators())
    if (!in_b.contains(g)) return false;
  for (const auto& g : ib.generators())
    if (!in_a.contains(g)) return false;
  return true;
}

// ---------------------------------------------------------------------------

bool is_integral(const F1Algebra& a, std::optional<std::size_t> degree_bound) {
  if (!a.is_presented()) return true;
  const std::size_t bound = degree_bound.value_or(normal_form_degree_bound());
  const std::size_t n = a.generator_count();
  if (n == 0) return true;

  std::vector<IntVec> monomials;
  std::map<IntVec, std::size_t> index;
  IntVec cur = zero_vec(n);
  std::function<void(std::size_t, std::size_t)> gen = [&](std::size_t i, std::size_t left) {
    if (i == n) {
      index.emplace(cur, monomials.size());
      monomials.push_back(cur);
      return;
    }
    for (std::size_t e = 0; e <= left; ++e) {
      cur[i] = e;
      gen(i + 1, left - e);
    }
    cur[i] = 0;
  };
  gen(0, bound);

  std::vector<std::size_t> parent(monomials.size());
  std::iota(parent.begin(), parent.end(), 0);
  std::function<std::size_t(std::size_t)> find = [&](std::size_t x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  };
  std::vector<bool> blocked(monomials.size(), false);
  auto degree = [](const IntVec& m) {
    Integer s = 0;
    for (const auto& e : m) s += e;
    return s;
  };
  for (std::size_t i = 0; i < monomials.size(); ++i) {
    const IntVec& m = monomials[i];
    for (const auto& r : a.relations()) {
      for (int dir = 0; dir < 2; ++dir) {
        const IntVec& from = dir == 0 ? *r.lhs : *r.rhs;
        const IntVec& to = dir == 0 ? *r.rhs : *r.lhs;
        bool applies = true;
        for (std::size_t k = 0; k < n && applies; ++k) applies = m[k] >= from[k];
        if (!applies) continue;
        IntVec moved = add(sub(m, from), to);
        if (degree(moved) > bound) {
          blocked[i] = true;
          continue;
        }
        parent[find(i)] = find(index.at(moved));
      }
    }
  }
  std::map<Element, std::vector<std::size_t>> classes;
  for (std::size_t i = 0; i < monomials.size(); ++i) classes[a.log(monomials[i])].push_back(i);
  bool undecided = false;
  for (const auto& [log, members] : classes) {
    std::map<std::size_t, bool> closed;  // component root -> no blocked member
    for (std::size_t i : members) {
      auto [it, fresh] = closed.emplace(find(i), true);
      if (blocked[i]) it->second = false;
      (void)fresh;
    }
    if (closed.size() < 2) continue;
    for (const auto& [root, is_closed] : closed)
      if (is_closed) return false;
    undecided = true;
  }
  if (undecided)
    throw Error(ErrorKind::UndecidedWithinBound,
                "cancellativity undecided up to degree " + std::to_string(bound));
  return true;
}

// ---------------------------------------------------------------------------

Normalization normalize(const F1Algebra& a) {
  F1Algebra ia = underlying_integral(a);
  const CharacterGroup& k = ia.characters();
  const auto& gens = ia.generators();
  const std::size_t r = k.rank();
  std::vector<Element> out;
  std::vector<IntVec> free_rows;
  for (const auto& g : gens) free_rows.push_back(g.free);
  if (!gens.empty()) {
    RowEchelon e = row_echelon(IntMatrix::from_rows(free_rows, r));
    const std::size_t rank = e.rank;
    if (rank > hilbert_dimension_bound())
      throw Error(ErrorKind::DimensionBound, "normalization in rank " + std::to_string(rank));
    std::vector<IntVec> basis;
    std::vector<Element> lifts;
    for (std::size_t i = 0; i < rank; ++i) {
      basis.push_back(e.hermite.row(i));
      Element l = k.zero();
      for (std::size_t j = 0; j < gens.size(); ++j)
        if (e.transform(i, j) != 0) l = k.add(l, k.scale(gens[j], e.transform(i, j)));
      lifts.push_back(l);
    }
    std::vector<IntVec> coords;
    if (rank > 0) {
      IntMatrix b = IntMatrix::from_columns(basis, r);
      for (const auto& g : gens) coords.push_back(*solve_integer(b, g.free));
    }
    for (const auto& h : hilbert_basis_of_span(coords, rank)) {
      Element x = k.zero();
      for (std::size_t i = 0; i < rank; ++i)
        if (h[i] != 0) x = k.add(x, k.scale(lifts[i], h[i]));
      out.push_back(x);
    }
    for (const auto& t : k.subgroup_torsion(gens))
      if (std::find(out.begin(), out.end(), t) == out.end()) out.push_back(t);
  }
  Normalization res;
  res.algebra = F1Algebra::embedded(k, out);
  MonoidIndex in_a(ia);
  res.was_normal = std::all_of(out.begin(), out.end(), [&](const Element& x) { return in_a.contains(x); });
  return res;
}

CharacterGroup units(const F1Algebra& a) {
  std::vector<Element> u = unit_generators(a);
  return a.characters().subgroup_type(u);
}

std::vector<Element> unit_generators(const F1Algebra& a) {
  return MonoidIndex(underlying_integral(a)).units;
}

F1Algebra localize(const F1Algebra& a, const std::optional<Element>& f) {
  if (!f) throw Error(ErrorKind::ZeroElement, "localizing at zero gives the empty scheme");
  F1Algebra ia = underlying_integral(a);
  if (!monoid_contains(ia, *f))
    throw Error(ErrorKind::InvalidArgument, f1cones::to_string(*f) + " is not an element of the algebra");
  std::vector<Element> gens = ia.generators();
  gens.push_back(ia.characters().negate(*f));
  return F1Algebra::embedded(ia.characters(), std::move(gens));
}

PuncturedCone polar_cone(const F1Algebra& a) {
  F1Algebra ia = underlying_integral(a);
  return PuncturedCone(Cone(ia.characters(), ia.generators()));
}

namespace {

bool vanishes_on(const Cone& c, const Face& f, const IntVec& x) {
  for (const auto& l : c.lineality())
    if (dot(x, l) != 0) return false;
  for (std::size_t i : f.rays)
    if (dot(x, c.generators()[i]) != 0) return false;
  return true;
}

}  // namespace

std::vector<Face> faces_cut_by(const Cone& c, const F1Algebra& a) {
  F1Algebra ia = underlying_integral(a);
  std::vector<Face> out;
  for (const auto& f : c.faces()) {
    IntVec s = zero_vec(c.ambient_dim());
    for (const auto& g : ia.generators())
      if (vanishes_on(c, f, g.free)) s = add(s, g.free);
    auto cut = c.face_cut_by(s);
    if (!cut || cut->rays != f.rays) continue;
    Face g = f;
    g.cutter = s;
    out.push_back(g);
  }
  return out;
}

std::vector<PrimeRecord> primes(const F1Algebra& a) {
  F1Algebra ia = underlying_integral(a);
  Cone sigma = polar_cone(ia).cone();
  std::vector<PrimeRecord> out;
  for (const auto& f : faces_cut_by(sigma, ia)) {
    PrimeRecord p;
    p.face = f;
    for (const auto& g : ia.generators())
      if (vanishes_on(sigma, f, g.free)) p.complement.push_back(g);
    out.push_back(std::move(p));
  }
  return out;
}

F1Algebra quotient_by_prime(const F1Algebra& a, const PrimeRecord& p) {
  F1Algebra ia = underlying_integral(a);
  Cokernel c = ia.characters().subgroup_presentation(p.complement);
  return F1Algebra::embedded(c.group, c.images);
}

// ---------------------------------------------------------------------------

MonomialIdeal::MonomialIdeal(F1Algebra owner, std::vector<Element> generators) : owner_(std::move(owner)) {
  MonoidIndex idx(underlying_integral(owner_));
  for (const auto& g : generators) {
    if (!owner_.characters().contains(g))
      throw Error(ErrorKind::CharacterMismatch, "ideal generator " + f1cones::to_string(g) + " has wrong shape");
    Element x = owner_.characters().make(g.free, g.torsion);
    if (!idx.contains(x))
      throw Error(ErrorKind::InvalidArgument, "ideal generator " + f1cones::to_string(x) + " is not in the algebra");
    generators_.push_back(std::move(x));
  }
}

MonomialIdeal MonomialIdeal::from_exponents(const F1Algebra& owner, const std::vector<IntVec>& exponents) {
  std::vector<Element> gens;
  for (const auto& e : exponents) {
    for (const auto& x : e)
      if (x < 0) throw Error(ErrorKind::InvalidArgument, "negative exponent in ideal generator");
    gens.push_back(owner.log(e));
  }
  return MonomialIdeal(owner, std::move(gens));
}

bool ideal_membership(const MonomialIdeal& t, const Element& f) {
  const CharacterGroup& k = t.owner().characters();
  MonoidIndex idx(underlying_integral(t.owner()));
  for (const auto& g : t.generators())
    if (idx.contains(k.sub(f, g))) return true;
  return false;
}

F1Algebra prune_generators(const F1Algebra& a) {
  F1Algebra ia = underlying_integral(a);
  const CharacterGroup& k = ia.characters();
  std::vector<Element> kept;
  for (const auto& g : ia.generators())
    if (!k.is_zero(g) && std::find(kept.begin(), kept.end(), g) == kept.end()) kept.push_back(g);
  for (std::size_t i = 0; i < kept.size();) {
    std::vector<Element> others = kept;
    others.erase(others.begin() + static_cast<std::ptrdiff_t>(i));
    if (MonoidIndex(F1Algebra::embedded(k, others)).contains(kept[i])) {
      kept = std::move(others);
    } else {
      ++i;
    }
  }
  return F1Algebra::embedded(k, std::move(kept));
}

F1Algebra rees_chart(const F1Algebra& a, const MonomialIdeal& t, const Element& s) {
  F1Algebra ia = underlying_integral(a);
  if (t.is_zero()) throw Error(ErrorKind::ZeroIdeal, "blow-up center is the zero ideal");
  if (!ideal_membership(t, s))
    throw Error(ErrorKind::SNotInIdeal, f1cones::to_string(s) + " is not in the ideal");
  const CharacterGroup& k = ia.characters();
  std::vector<Element> gens = ia.generators();
  for (const auto& g : t.generators()) gens.push_back(k.sub(g, s));
  return prune_generators(F1Algebra::embedded(k, std::move(gens)));
}

std::set<Face> completion_punctures(const F1Algebra& a, const MonomialIdeal& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroIdeal, "completion along the zero ideal");
  Cone sigma = polar_cone(a).cone();
  const Face whole = sigma.whole_face();
  std::set<Face> out;
  for (const auto& f : sigma.faces()) {
    if (f.rays == whole.rays && f.dim == whole.dim) continue;
    for (const auto& g : t.generators())
      if (vanishes_on(sigma, f, g.free)) {
        out.insert(f);
        break;
      }
  }
  return out;
}

bool krull_injective(const F1Algebra& a, const MonomialIdeal& t) {
  if (t.is_zero()) throw Error(ErrorKind::ZeroIdeal, "Krull test along the zero ideal");
  Cone sigma = polar_cone(a).cone();
  const Face whole = sigma.whole_face();
  for (const auto& g : t.generators())
    if (vanishes_on(sigma, whole, g.free)) return false;
  return true;
}

}  // namespace f1cones
