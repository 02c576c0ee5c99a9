#include "f1cones/cone.hpp"

#include <algorithm>
#include <boost/dynamic_bitset.hpp>
#include <map>
#include <sstream>

#include "f1cones/errors.hpp"

namespace f1cones {

namespace {

std::vector<IntVec> free_parts(const std::vector<Element>& xs) {
  std::vector<IntVec> out;
  out.reserve(xs.size());
  for (const auto& x : xs) out.push_back(x.free);
  return out;
}

std::vector<Element> as_elements(const CharacterGroup& g, const std::vector<IntVec>& vs) {
  std::vector<Element> out;
  out.reserve(vs.size());
  for (const auto& v : vs) out.push_back(g.make(v));
  return out;
}

void sort_unique(std::vector<IntVec>& vs) {
  std::sort(vs.begin(), vs.end());
  vs.erase(std::unique(vs.begin(), vs.end()), vs.end());
}

bool is_subset(const std::vector<std::size_t>& a, const std::vector<std::size_t>& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

}  // namespace

IntVec project_onto_span(const IntVec& a, const std::vector<IntVec>& basis_in) {
  const std::size_t n = a.size();
  if (basis_in.empty()) return zero_vec(n);
  std::vector<IntVec> basis = lattice_basis(basis_in, n);
  const std::size_t k = basis.size();
  IntMatrix gram(k, k);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t j = 0; j < k; ++j) gram(i, j) = dot(basis[i], basis[j]);
  auto [adj, det] = scaled_inverse(gram);
  IntVec ba(k);
  for (std::size_t i = 0; i < k; ++i) ba[i] = dot(basis[i], a);
  IntVec y = adj.apply(ba);
  IntVec out = zero_vec(n);
  for (std::size_t i = 0; i < k; ++i)
    for (std::size_t c = 0; c < n; ++c) out[c] += y[i] * basis[i][c];
  if (det < 0) out = negate(out);
  return primitive(out);
}

DoubleDescription double_description(const std::vector<IntVec>& inequalities, std::size_t d) {
  struct Ray {
    IntVec v;
    boost::dynamic_bitset<> tight;
  };
  const std::size_t m = inequalities.size();
  std::vector<IntVec> lin;
  for (std::size_t i = 0; i < d; ++i) lin.push_back(unit_vec(d, i));
  std::vector<Ray> rays;

  for (std::size_t idx = 0; idx < m; ++idx) {
    const IntVec& a = inequalities[idx];
    if (a.size() != d) throw Error(ErrorKind::CharacterMismatch, "inequality of wrong length");
    std::size_t piv = lin.size();
    for (std::size_t i = 0; i < lin.size(); ++i)
      if (dot(a, lin[i]) != 0) {
        piv = i;
        break;
      }
    if (piv < lin.size()) {
      // The inequality cuts the lineality space: one direction becomes a ray.
      IntVec l0 = lin[piv];
      Integer c = dot(a, l0);
      if (c > 0) {
        l0 = negate(l0);
        c = -c;
      }
      std::vector<IntVec> next;
      for (std::size_t i = 0; i < lin.size(); ++i) {
        if (i == piv) continue;
        Integer al = dot(a, lin[i]);
        next.push_back(al == 0 ? lin[i] : primitive(add(scale(lin[i], -c), scale(l0, al))));
      }
      for (auto& r : rays) {
        Integer ar = dot(a, r.v);
        if (ar != 0) r.v = primitive(add(scale(r.v, -c), scale(l0, ar)));
        r.tight.set(idx);
      }
      Ray nr{l0, boost::dynamic_bitset<>(m)};
      for (std::size_t j = 0; j < idx; ++j) nr.tight.set(j);
      rays.push_back(std::move(nr));
      lin = std::move(next);
      continue;
    }
    std::vector<std::size_t> plus, minus;
    std::vector<Ray> next;
    std::vector<Integer> val(rays.size());
    for (std::size_t i = 0; i < rays.size(); ++i) {
      val[i] = dot(a, rays[i].v);
      if (val[i] > 0) {
        plus.push_back(i);
      } else {
        Ray r = rays[i];
        if (val[i] == 0) r.tight.set(idx);
        next.push_back(std::move(r));
        if (val[i] < 0) minus.push_back(i);
      }
    }
    for (std::size_t p : plus)
      for (std::size_t q : minus) {
        boost::dynamic_bitset<> common = rays[p].tight & rays[q].tight;
        bool adjacent = true;
        for (std::size_t t = 0; t < rays.size() && adjacent; ++t) {
          if (t == p || t == q) continue;
          if (common.is_subset_of(rays[t].tight)) adjacent = false;
        }
        if (!adjacent) continue;
        IntVec v = primitive(add(scale(rays[q].v, val[p]), scale(rays[p].v, -val[q])));
        common.set(idx);
        next.push_back(Ray{std::move(v), std::move(common)});
      }
    rays = std::move(next);
  }

  DoubleDescription out;
  if (!lin.empty()) out.lineality = lattice_basis(saturate_lattice(lin, d), d);
  std::vector<IntVec> complement;
  if (!out.lineality.empty()) complement = orthogonal_complement(out.lineality, d);
  for (const auto& r : rays) {
    IntVec v = out.lineality.empty() ? primitive(r.v) : project_onto_span(r.v, complement);
    if (!is_zero(v)) out.rays.push_back(std::move(v));
  }
  sort_unique(out.rays);
  return out;
}

// ---------------------------------------------------------------------------

Cone::Cone() { compute(); }

Cone::Cone(CharacterGroup group, std::vector<Element> inequalities)
    : group_(std::move(group)), inequalities_(std::move(inequalities)) {
  for (const auto& e : inequalities_)
    if (!group_.contains(e))
      throw Error(ErrorKind::CharacterMismatch, "inequality " + f1cones::to_string(e) +
                                                    " is not in " + group_.to_string());
  compute();
}

Cone Cone::from_inequalities(std::size_t rank, const std::vector<IntVec>& inequalities) {
  CharacterGroup g = CharacterGroup::free(rank);
  return Cone(g, as_elements(g, inequalities));
}

Cone Cone::from_rays(const CharacterGroup& group, const std::vector<IntVec>& rays,
                     const std::vector<IntVec>& lineality) {
  const std::size_t d = group.rank();
  std::vector<IntVec> dual_ineqs;
  for (const auto& r : rays) {
    if (r.size() != d) throw Error(ErrorKind::CharacterMismatch, "ray of wrong length");
    dual_ineqs.push_back(r);
  }
  for (const auto& l : lineality) {
    dual_ineqs.push_back(l);
    dual_ineqs.push_back(negate(l));
  }
  DoubleDescription dual = double_description(dual_ineqs, d);
  std::vector<IntVec> ineqs = dual.rays;
  for (const auto& l : dual.lineality) {
    ineqs.push_back(l);
    ineqs.push_back(negate(l));
  }
  return Cone(group, as_elements(group, ineqs));
}

Cone Cone::whole_space(std::size_t rank) { return from_inequalities(rank, {}); }

Cone Cone::origin(std::size_t rank) { return from_rays(rank, {}); }

std::vector<IntVec> Cone::inequality_vectors() const { return free_parts(inequalities_); }

const std::vector<IntVec>& Cone::rays() const {
  if (!lineality_.empty()) throw Error(ErrorKind::NotPointed, "cone " + to_string() + " has lineality");
  return rays_;
}

void Cone::compute() {
  const std::size_t d = group_.rank();
  std::vector<IntVec> ineqs;
  for (const auto& e : inequalities_)
    if (!is_zero(e.free)) ineqs.push_back(e.free);
  DoubleDescription dd = double_description(ineqs, d);
  rays_ = std::move(dd.rays);
  lineality_ = std::move(dd.lineality);

  std::vector<IntVec> span = lineality_;
  span.insert(span.end(), rays_.begin(), rays_.end());
  dim_ = rank_of(span, d);
  equations_ = lattice_basis(orthogonal_complement(span, d), d);

  std::map<std::vector<std::size_t>, IntVec> found;
  for (const auto& a : ineqs) {
    std::vector<std::size_t> tight;
    for (std::size_t i = 0; i < rays_.size(); ++i)
      if (dot(a, rays_[i]) == 0) tight.push_back(i);
    if (tight.size() == rays_.size()) continue;
    if (found.count(tight)) continue;
    std::vector<IntVec> sub = lineality_;
    for (std::size_t i : tight) sub.push_back(rays_[i]);
    if (rank_of(sub, d) + 1 != dim_) continue;
    found.emplace(tight, project_onto_span(a, span));
  }
  std::vector<std::pair<IntVec, std::vector<std::size_t>>> facets;
  for (auto& [tight, normal] : found) facets.emplace_back(normal, tight);
  std::sort(facets.begin(), facets.end());
  facets_.clear();
  facet_rays_.clear();
  for (auto& [normal, tight] : facets) {
    facets_.push_back(normal);
    facet_rays_.push_back(tight);
  }
}

std::vector<IntVec> Cone::span_basis() const {
  std::vector<IntVec> span = lineality_;
  span.insert(span.end(), rays_.begin(), rays_.end());
  if (span.empty()) return {};
  return lattice_basis(saturate_lattice(span, ambient_dim()), ambient_dim());
}

bool Cone::contains(const IntVec& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::CharacterMismatch, "point of wrong length");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) > 0) return false;
  return true;
}

bool Cone::contains_relint(const IntVec& v) const {
  if (v.size() != ambient_dim()) throw Error(ErrorKind::CharacterMismatch, "point of wrong length");
  for (const auto& e : equations_)
    if (dot(e, v) != 0) return false;
  for (const auto& f : facets_)
    if (dot(f, v) >= 0) return false;
  return true;
}

bool Cone::contains_cone(const Cone& other) const {
  for (const auto& r : other.rays_)
    if (!contains(r)) return false;
  for (const auto& l : other.lineality_)
    if (!contains(l) || !contains(negate(l))) return false;
  return true;
}

IntVec Cone::interior_point() const {
  IntVec p = zero_vec(ambient_dim());
  for (const auto& r : rays_) p = add(p, r);
  return p;
}

Face Cone::make_face(std::vector<std::size_t> rays) const {
  std::sort(rays.begin(), rays.end());
  Face f;
  std::vector<IntVec> sub = lineality_;
  for (std::size_t i : rays) sub.push_back(rays_.at(i));
  f.dim = rank_of(sub, ambient_dim());
  f.cutter = zero_vec(ambient_dim());
  for (std::size_t k = 0; k < facets_.size(); ++k)
    if (is_subset(rays, facet_rays_[k])) f.cutter = add(f.cutter, facets_[k]);
  f.rays = std::move(rays);
  return f;
}

Face Cone::whole_face() const {
  std::vector<std::size_t> all(rays_.size());
  for (std::size_t i = 0; i < all.size(); ++i) all[i] = i;
  return make_face(all);
}

Face Cone::origin_face() const { return minimal_face_containing(zero_vec(ambient_dim())); }

std::vector<Face> Cone::faces() const {
  std::set<std::vector<std::size_t>> seen;
  std::vector<std::vector<std::size_t>> queue;
  queue.push_back(whole_face().rays);
  seen.insert(queue.back());
  for (std::size_t q = 0; q < queue.size(); ++q) {
    for (const auto& fr : facet_rays_) {
      std::vector<std::size_t> meet;
      std::set_intersection(queue[q].begin(), queue[q].end(), fr.begin(), fr.end(),
                            std::back_inserter(meet));
      if (seen.insert(meet).second) queue.push_back(meet);
    }
  }
  std::vector<Face> out;
  for (const auto& s : seen) out.push_back(make_face(s));
  std::sort(out.begin(), out.end());
  return out;
}

std::optional<Face> Cone::face_cut_by(const IntVec& f) const {
  if (f.size() != ambient_dim()) throw Error(ErrorKind::CharacterMismatch, "cutter of wrong length");
  for (const auto& l : lineality_)
    if (dot(f, l) != 0) return std::nullopt;
  std::vector<std::size_t> tight;
  for (std::size_t i = 0; i < rays_.size(); ++i) {
    Integer x = dot(f, rays_[i]);
    if (x > 0) return std::nullopt;
    if (x == 0) tight.push_back(i);
  }
  return make_face(std::move(tight));
}

Face Cone::minimal_face_containing(const IntVec& v) const {
  if (!contains(v)) throw Error(ErrorKind::InvalidArgument, "point " + f1cones::to_string(v) + " not in cone");
  std::vector<std::size_t> rays(rays_.size());
  for (std::size_t i = 0; i < rays.size(); ++i) rays[i] = i;
  for (std::size_t k = 0; k < facets_.size(); ++k) {
    if (dot(facets_[k], v) != 0) continue;
    std::vector<std::size_t> meet;
    std::set_intersection(rays.begin(), rays.end(), facet_rays_[k].begin(), facet_rays_[k].end(),
                          std::back_inserter(meet));
    rays = std::move(meet);
  }
  return make_face(std::move(rays));
}

std::vector<IntVec> Cone::face_ray_vectors(const Face& f) const {
  std::vector<IntVec> out;
  for (std::size_t i : f.rays) out.push_back(rays_.at(i));
  return out;
}

Cone Cone::face_cone(const Face& f) const { return from_rays(group_, face_ray_vectors(f), lineality_); }

std::optional<Face> Cone::face_with_rays(const std::vector<IntVec>& rays) const {
  std::vector<std::size_t> idx;
  IntVec sum = zero_vec(ambient_dim());
  for (const auto& r : rays) {
    IntVec p = primitive(r);
    auto it = std::find(rays_.begin(), rays_.end(), p);
    if (it == rays_.end()) return std::nullopt;
    idx.push_back(static_cast<std::size_t>(it - rays_.begin()));
    sum = add(sum, p);
  }
  std::sort(idx.begin(), idx.end());
  idx.erase(std::unique(idx.begin(), idx.end()), idx.end());
  Face f = minimal_face_containing(sum);
  if (f.rays != idx) return std::nullopt;
  return f;
}

bool Cone::operator==(const Cone& other) const {
  return group_ == other.group_ && equations_ == other.equations_ && facets_ == other.facets_;
}

std::string Cone::to_string() const {
  std::ostringstream os;
  os << "cone(";
  for (std::size_t i = 0; i < rays_.size(); ++i) os << (i ? "," : "") << f1cones::to_string(rays_[i]);
  if (!lineality_.empty()) {
    os << "; lineality ";
    for (std::size_t i = 0; i < lineality_.size(); ++i)
      os << (i ? "," : "") << "+-" << f1cones::to_string(lineality_[i]);
  }
  os << " in Q^" << ambient_dim() << ")";
  return os.str();
}

// ---------------------------------------------------------------------------

Cone intersect(const Cone& a, const Cone& b) {
  if (!(a.group() == b.group()))
    throw Error(ErrorKind::CharacterMismatch,
                "intersecting cones over " + a.group().to_string() + " and " + b.group().to_string());
  std::vector<Element> ineqs = a.inequalities();
  ineqs.insert(ineqs.end(), b.inequalities().begin(), b.inequalities().end());
  return Cone(a.group(), std::move(ineqs));
}

std::vector<Cone> refine_by_function(const Cone& c, const std::vector<IntVec>& fs, bool include_zero) {
  if (fs.empty()) throw Error(ErrorKind::InvalidArgument, "refine_by_function needs at least one function");
  std::vector<IntVec> pieces;
  if (include_zero) pieces.push_back(zero_vec(c.ambient_dim()));
  for (const auto& f : fs) {
    if (f.size() != c.ambient_dim()) throw Error(ErrorKind::CharacterMismatch, "function of wrong length");
    pieces.push_back(f);
  }
  std::vector<Cone> out;
  for (std::size_t i = 0; i < pieces.size(); ++i) {
    std::vector<Element> ineqs = c.inequalities();
    for (std::size_t j = 0; j < pieces.size(); ++j)
      if (j != i) ineqs.push_back(c.group().make(sub(pieces[j], pieces[i])));
    Cone domain(c.group(), std::move(ineqs));
    if (domain.dim() != c.dim()) continue;
    if (std::find(out.begin(), out.end(), domain) != out.end()) continue;
    out.push_back(std::move(domain));
  }
  return out;
}

// ---------------------------------------------------------------------------

IntVec FaceQuotient::pullback(const IntVec& q) const { return projection.transpose().apply(q); }

IntVec FaceQuotient::push_character(const IntVec& character) const {
  return section.transpose().apply(character);
}

FaceQuotient quotient_by_face(const Cone& c, const Face& tau) {
  const std::size_t r = c.ambient_dim();
  std::vector<IntVec> span = c.lineality();
  for (std::size_t i : tau.rays) span.push_back(c.generators().at(i));
  std::vector<IntVec> sat;
  if (!span.empty()) sat = lattice_basis(saturate_lattice(span, r), r);
  const std::size_t k = sat.size();
  IntMatrix u = complete_to_unimodular(sat, r);
  IntMatrix uinv = *unimodular_inverse(u);
  FaceQuotient out;
  out.projection = IntMatrix(r - k, r);
  out.section = IntMatrix(r, r - k);
  for (std::size_t j = 0; j < r - k; ++j)
    for (std::size_t col = 0; col < r; ++col) {
      out.projection(j, col) = uinv(col, k + j);
      out.section(col, j) = u(k + j, col);
    }
  std::vector<IntVec> images;
  for (const auto& g : c.generators()) {
    IntVec p = out.projection.apply(g);
    if (!is_zero(p)) images.push_back(primitive(p));
  }
  out.cone = Cone::from_rays(r - k, images);
  return out;
}

// ---------------------------------------------------------------------------

std::set<Face> downward_closure(const Cone& c, const std::set<Face>& faces) {
  const Face whole = c.whole_face();
  std::set<Face> out;
  for (const auto& f : faces)
    if (f.rays == whole.rays)
      throw Error(ErrorKind::InvariantError, "the whole cone cannot be punctured");
  for (const auto& g : c.faces())
    for (const auto& f : faces)
      if (is_subset(g.rays, f.rays)) {
        out.insert(g);
        break;
      }
  return out;
}

PuncturedCone::PuncturedCone(Cone cone, std::set<Face> punctures)
    : cone_(std::move(cone)) {
  const Face whole = cone_.whole_face();
  std::set<Face> canonical;
  for (const auto& f : punctures) {
    if (f.rays == whole.rays) throw Error(ErrorKind::InvariantError, "the whole cone cannot be punctured");
    for (std::size_t i : f.rays)
      if (i >= cone_.generators().size()) throw Error(ErrorKind::InvariantError, "puncture is not a face");
    auto check = cone_.face_with_rays(cone_.face_ray_vectors(f));
    if (!check) throw Error(ErrorKind::InvariantError, "puncture is not a face of " + cone_.to_string());
    canonical.insert(*check);
  }
  for (const auto& g : cone_.faces())
    for (const auto& f : canonical)
      if (is_subset(g.rays, f.rays) && !canonical.count(g))
        throw Error(ErrorKind::InvariantError,
                    "punctures are not downward closed: missing face with cutter " +
                        f1cones::to_string(g.cutter));
  punctures_ = std::move(canonical);
}

std::vector<Face> PuncturedCone::maximal_punctures() const {
  std::vector<Face> out;
  for (const auto& f : punctures_) {
    bool maximal = true;
    for (const auto& g : punctures_)
      if (g.rays != f.rays && is_subset(f.rays, g.rays)) maximal = false;
    if (maximal) out.push_back(f);
  }
  return out;
}

std::vector<Face> PuncturedCone::kept_faces() const {
  std::vector<Face> out;
  for (const auto& f : cone_.faces())
    if (!punctures_.count(f)) out.push_back(f);
  return out;
}

bool PuncturedCone::operator==(const PuncturedCone& other) const {
  return cone_ == other.cone_ && punctures_ == other.punctures_;
}

std::string PuncturedCone::to_string() const {
  std::ostringstream os;
  os << cone_.to_string();
  if (!punctures_.empty()) {
    os << " punctured along";
    for (const auto& f : maximal_punctures()) os << " " << f1cones::to_string(f.cutter);
  }
  return os.str();
}

const char* membership_name(Membership m) {
  switch (m) {
    case Membership::Kept: return "kept";
    case Membership::Punctured: return "punctured";
    case Membership::Outside: return "outside";
  }
  return "?";
}

Membership membership(const PuncturedCone& pc, const IntVec& v) {
  if (!pc.cone().contains(v)) return Membership::Outside;
  return pc.is_punctured(pc.cone().minimal_face_containing(v)) ? Membership::Punctured : Membership::Kept;
}

}  // namespace f1cones
