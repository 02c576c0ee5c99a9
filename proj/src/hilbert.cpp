// Hilbert bases of rational cones.
//
// The cone is split off its lineality, restricted to the saturated lattice of
// its span, covered by simplicial cones (a pulling triangulation), and the
// lattice points of every fundamental parallelepiped are enumerated through
// the Smith form of the simplex. Irreducible candidates form the basis.

#include <algorithm>
#include <set>

#include "f1cones/config.hpp"
#include "f1cones/cone.hpp"
#include "f1cones/errors.hpp"

namespace f1cones {

namespace {

Integer mod_pos(const Integer& a, const Integer& m) {
  Integer r = a % m;
  if (r < 0) r += m;
  return r;
}

// v^T m
IntVec row_times(const IntVec& v, const IntMatrix& m) { return m.transpose().apply(v); }

void triangulate(const std::vector<IntVec>& rays, std::size_t ambient,
                 std::vector<std::vector<IntVec>>& out) {
  Cone c = Cone::from_rays(ambient, rays);
  const auto& r = c.generators();
  if (r.size() == c.dim()) {
    out.push_back(r);
    return;
  }
  for (std::size_t k = 0; k < c.facets().size(); ++k) {
    const auto& fr = c.facet_rays()[k];
    if (std::find(fr.begin(), fr.end(), 0) != fr.end()) continue;
    std::vector<IntVec> facet;
    for (std::size_t i : fr) facet.push_back(r[i]);
    std::vector<std::vector<IntVec>> sub;
    triangulate(facet, ambient, sub);
    for (auto& s : sub) {
      s.push_back(r[0]);
      out.push_back(std::move(s));
    }
  }
}

// Nonzero lattice points of the half-open parallelepiped of a full-rank
// simplicial cone, together with its generators.
void parallelepiped_points(const std::vector<IntVec>& gens, std::set<IntVec>& out) {
  const std::size_t p = gens.size();
  IntMatrix g = IntMatrix::from_columns(gens, p);
  SmithForm s = smith_normal_form(g);
  IntMatrix uinv = *unimodular_inverse(s.left);
  auto [adj, det] = scaled_inverse(g);
  if (det < 0) {
    det = -det;
    for (std::size_t i = 0; i < p; ++i)
      for (std::size_t j = 0; j < p; ++j) adj(i, j) = -adj(i, j);
  }
  for (const auto& x : gens) out.insert(x);
  IntVec y = zero_vec(p);
  while (true) {
    IntVec x = uinv.apply(y);
    IntVec lam = adj.apply(x);
    for (auto& l : lam) l = mod_pos(l, det);
    IntVec point = g.apply(lam);
    for (auto& c : point) c /= det;
    if (!is_zero(point)) out.insert(point);
    std::size_t i = 0;
    for (; i < p; ++i) {
      y[i] += 1;
      if (y[i] < s.invariants[i]) break;
      y[i] = 0;
    }
    if (i == p) break;
  }
}

// Hilbert basis of a pointed full-dimensional cone in Z^p.
std::vector<IntVec> pointed_hilbert_basis(const std::vector<IntVec>& gens, std::size_t p) {
  Cone c = Cone::from_rays(p, gens);
  std::vector<std::vector<IntVec>> simplices;
  triangulate(c.generators(), p, simplices);
  std::set<IntVec> candidates;
  for (const auto& s : simplices) parallelepiped_points(s, candidates);
  std::vector<IntVec> cand(candidates.begin(), candidates.end());
  std::vector<IntVec> out;
  for (const auto& x : cand) {
    bool reducible = false;
    for (const auto& y : cand) {
      if (y == x) continue;
      if (c.contains(sub(x, y))) {
        reducible = true;
        break;
      }
    }
    if (!reducible) out.push_back(x);
  }
  return out;
}

}  // namespace

std::vector<IntVec> hilbert_basis_of_span(const std::vector<IntVec>& generators, std::size_t d) {
  std::vector<IntVec> gens;
  for (const auto& g : generators)
    if (!is_zero(g)) gens.push_back(g);
  if (gens.empty()) return {};
  Cone c = Cone::from_rays(d, gens);
  const std::vector<IntVec>& lin = c.lineality();
  const std::size_t k = lin.size();
  IntMatrix u = complete_to_unimodular(lin, d);
  IntMatrix uinv = *unimodular_inverse(u);

  std::vector<IntVec> quotient;
  for (const auto& g : gens) {
    IntVec coords = row_times(g, uinv);
    IntVec q(coords.begin() + static_cast<std::ptrdiff_t>(k), coords.end());
    if (!is_zero(q)) quotient.push_back(q);
  }
  std::vector<IntVec> out;
  for (const auto& l : lin) {
    out.push_back(l);
    out.push_back(negate(l));
  }
  const std::size_t dq = d - k;
  if (!quotient.empty()) {
    std::vector<IntVec> span = lattice_basis(saturate_lattice(quotient, dq), dq);
    const std::size_t p = span.size();
    IntMatrix u2 = complete_to_unimodular(span, dq);
    IntMatrix u2inv = *unimodular_inverse(u2);
    std::vector<IntVec> reduced;
    for (const auto& q : quotient) {
      IntVec coords = row_times(q, u2inv);
      reduced.emplace_back(coords.begin(), coords.begin() + static_cast<std::ptrdiff_t>(p));
    }
    for (const auto& h : pointed_hilbert_basis(reduced, p)) {
      IntVec xq = zero_vec(dq);
      for (std::size_t i = 0; i < p; ++i) xq = add(xq, scale(span[i], h[i]));
      IntVec x = zero_vec(d);
      for (std::size_t j = 0; j < dq; ++j) x = add(x, scale(u.row(k + j), xq[j]));
      out.push_back(std::move(x));
    }
  }
  std::sort(out.begin(), out.end());
  out.erase(std::unique(out.begin(), out.end()), out.end());
  return out;
}

std::vector<Element> hilbert_basis(const Cone& c, std::optional<std::size_t> dim_bound) {
  const std::size_t bound = dim_bound.value_or(hilbert_dimension_bound());
  if (c.ambient_dim() > bound)
    throw Error(ErrorKind::DimensionBound, "Hilbert basis requested in rank " +
                                               std::to_string(c.ambient_dim()) + " > bound " +
                                               std::to_string(bound));
  std::vector<Element> out;
  for (const auto& h : hilbert_basis_of_span(c.inequality_vectors(), c.ambient_dim()))
    out.push_back(c.group().make(h));
  const auto& tors = c.group().torsion();
  for (std::size_t i = 0; i < tors.size(); ++i)
    out.push_back(c.group().make(zero_vec(c.ambient_dim()), unit_vec(tors.size(), i)));
  return out;
}

}  // namespace f1cones
