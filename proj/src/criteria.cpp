#include "f1cones/criteria.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <tuple>

#include "f1cones/errors.hpp"
#include "f1cones/functors.hpp"

namespace f1cones {

namespace {

constexpr std::size_t kNone = static_cast<std::size_t>(-1);

Verdict positive(std::string property) {
  Verdict v;
  v.property = std::move(property);
  return v;
}

Cone with_inequality(const Cone& c, const IntVec& f) {
  std::vector<Element> ineqs = c.inequalities();
  ineqs.push_back(c.group().make(f));
  return Cone(c.group(), std::move(ineqs));
}

bool vanishes_on(const IntVec& f, const Cone& c) {
  for (const auto& r : c.generators())
    if (dot(f, r) != 0) return false;
  for (const auto& l : c.lineality())
    if (dot(f, l) != 0) return false;
  return true;
}

// Exact covering of a convex cone by closed subcones of it. Every facet of a
// full-dimensional piece that is not on the boundary of w must be covered,
// from the other side, by the other pieces.
bool covers(const Cone& w, const std::vector<Cone>& pieces) {
  const std::size_t s = w.dim();
  std::vector<const Cone*> full;
  for (const auto& p : pieces)
    if (p.dim() == s) full.push_back(&p);
  if (full.empty()) return false;
  for (std::size_t a = 0; a < full.size(); ++a) {
    const Cone& p = *full[a];
    for (const auto& f : p.facets()) {
      Cone phi = with_inequality(p, negate(f));
      bool boundary = std::any_of(w.facets().begin(), w.facets().end(),
                                  [&](const IntVec& wf) { return vanishes_on(wf, phi); });
      if (boundary) continue;
      std::vector<Cone> across;
      for (std::size_t b = 0; b < full.size(); ++b) {
        if (b == a) continue;
        Cone other_side = with_inequality(*full[b], negate(f));
        if (other_side.dim() != s) continue;
        Cone wall = intersect(other_side, phi);
        if (wall.dim() + 1 == s) across.push_back(wall);
      }
      if (!covers(phi, across)) return false;
    }
  }
  return true;
}

// Integer points of the box of the given radius, by max-norm then lexicographic.
std::vector<IntVec> box_points(std::size_t d, long r) {
  std::vector<IntVec> out;
  std::vector<long> cur(d, -r);
  while (true) {
    IntVec v(d);
    for (std::size_t i = 0; i < d; ++i) v[i] = cur[i];
    out.push_back(v);
    std::size_t i = 0;
    while (i < d && cur[i] == r) cur[i++] = -r;
    if (i == d) break;
    ++cur[i];
  }
  std::stable_sort(out.begin(), out.end(), [](const IntVec& x, const IntVec& y) {
    Integer nx = 0, ny = 0;
    for (const auto& c : x) nx = std::max(nx, Integer(abs(c)));
    for (const auto& c : y) ny = std::max(ny, Integer(abs(c)));
    return nx < ny;
  });
  return out;
}

// Pull back a cone of N_t to N_i along a point map N_i -> N_t.
Cone pullback(const Cone& c, const IntMatrix& point_map, const CharacterGroup& source) {
  std::vector<Element> ineqs;
  IntMatrix t = point_map.transpose();
  for (const auto& f : c.facets()) ineqs.push_back(source.make(t.apply(f)));
  for (const auto& e : c.equations()) {
    ineqs.push_back(source.make(t.apply(e)));
    ineqs.push_back(source.make(negate(t.apply(e))));
  }
  return Cone(source, std::move(ineqs));
}

Cone tangent_cone(const Cone& c, const std::vector<IntVec>& face_rays) {
  return Cone::from_rays(c.group(), c.rays(), face_rays);
}

struct LocalLift {
  std::size_t source = 0;
  IntMatrix transport;  // N_source -> N_i
  Cone developed;
  Cone tangent;
  std::size_t target_lift = kNone;
};

// The neighbourhood of one kept face of cone i: the lifts of its small star,
// the target lifts around the image face, and the pullback of each target
// lift's tangent cone.
struct LocalPicture {
  std::size_t cone = 0;
  Face face;
  IntVec anchor;  // relint point of the face
  std::vector<LocalLift> lifts;
  std::vector<Cone> regions;  // per target lift, in N_i
};

LocalPicture local_picture(const ComplexMorphism& f, std::size_t node) {
  const ConeComplex& s = f.source();
  const ConeComplex& t = f.target();
  LocalPicture out;
  out.cone = s.nodes()[node].cone;
  out.face = s.nodes()[node].face;
  const Cone& ci = s.cone(out.cone).cone();
  out.anchor = ci.face_cone(out.face).interior_point();
  std::vector<IntVec> face_rays = ci.face_ray_vectors(out.face);

  const ConeAssignment& ai = f.assignments()[out.cone];
  IntMatrix psi = ai.point_map();
  const Cone& ct = t.cone(ai.target).cone();
  Face g = ct.minimal_face_containing(psi.apply(out.anchor));
  Star ts = small_star(t, ai.target, g);
  std::vector<IntVec> g_rays = ct.face_ray_vectors(g);
  for (std::size_t l = 0; l < ts.source.size(); ++l)
    out.regions.push_back(pullback(tangent_cone(ts.developed(l), g_rays), psi, ci.group()));

  Star ss = small_star(s, out.cone, out.face);
  for (std::size_t k = 0; k < ss.source.size(); ++k) {
    LocalLift lift{ss.source[k], ss.transport[k], ss.developed(k), {}, kNone};
    lift.tangent = tangent_cone(lift.developed, face_rays);
    const ConeAssignment& aj = f.assignments()[lift.source];
    IntMatrix image = psi * lift.transport;
    for (std::size_t l = 0; l < ts.source.size(); ++l)
      if (ts.source[l] == aj.target && ts.transport[l] * aj.point_map() == image) {
        lift.target_lift = l;
        break;
      }
    out.lifts.push_back(std::move(lift));
  }
  return out;
}

std::vector<std::size_t> class_representatives(const ConeComplex& s) {
  std::vector<std::size_t> reps;
  for (std::size_t c = 0; c < s.class_count(); ++c) reps.push_back(s.class_members(c).front());
  return reps;
}

bool is_finite(const ConeComplex&) { return true; }

}  // namespace

Verdict check_separated(const ConeComplex& s) {
  Verdict v = positive("separated");
  for (std::size_t i = 0; i < s.size(); ++i) {
    Star star = big_star(s, i);
    Cone center = star.developed(star.center);
    for (std::size_t k = 0; k < star.source.size(); ++k) {
      if (k == star.center) continue;
      std::vector<Face> shared = shared_faces(star.complex, star.center, k);
      Cone meet = intersect(center, star.developed(k));
      bool single = shared.size() == 1;
      if (single && meet == star.developed_face(star.center, shared.front())) continue;
      v.holds = false;
      v.witness_kind = "cone_pair";
      v.cones = {i, star.source[k]};
      if (!shared.empty()) v.face = shared.front().rays;
      v.vectors = meet.rays();
      v.detail = single ? "developed images meet beyond the glued face"
                        : "glued intersection consists of " + std::to_string(shared.size()) + " faces";
      return v;
    }
  }
  return v;
}

Verdict check_separated(const ComplexMorphism& f) {
  for (std::size_t j = 0; j < f.target().size(); ++j) {
    std::vector<std::size_t> over;
    for (std::size_t i = 0; i < f.source().size(); ++i)
      if (f.assignments()[i].target == j) over.push_back(i);
    if (over.empty()) continue;
    Verdict v = check_separated(preimage(f, j));
    if (!v.holds) {
      for (auto& c : v.cones) c = over.at(c);
      v.detail += " (over target cone " + std::to_string(j) + ")";
      return v;
    }
  }
  return positive("separated");
}

Verdict check_overconvergent(const ComplexMorphism& f) {
  Verdict v = positive("overconvergent");
  for (std::size_t node : class_representatives(f.source())) {
    LocalPicture pic = local_picture(f, node);
    for (std::size_t l = 0; l < pic.regions.size(); ++l) {
      const Cone& w = pic.regions[l];
      std::vector<Cone> pieces;
      for (const auto& lift : pic.lifts)
        if (lift.target_lift == l) pieces.push_back(intersect(lift.tangent, w));
      if (covers(w, pieces)) continue;
      v.holds = false;
      v.witness_kind = "uncovered_direction";
      v.cones = {pic.cone};
      v.face = pic.face.rays;
      v.detail = "small star does not cover the preimage of target lift " + std::to_string(l);
      const Cone& ci = f.source().cone(pic.cone).cone();
      Cone face_span = Cone::from_rays(ci.group(), {}, ci.face_ray_vectors(pic.face));
      for (long r = 1; r <= 8 && v.vectors.empty(); ++r)
        for (const auto& x : box_points(w.ambient_dim(), r)) {
          if (!w.contains(x) || face_span.contains(x)) continue;
          if (std::any_of(pieces.begin(), pieces.end(), [&](const Cone& p) { return p.contains(x); })) continue;
          v.vectors.push_back(x);
          break;
        }
      return v;
    }
  }
  return v;
}

Verdict check_overconvergent(const ConeComplex& s) { return check_overconvergent(ComplexMorphism::to_point(s)); }

Verdict check_proper(const ComplexMorphism& f) {
  Verdict v = check_overconvergent(f);
  v.property = "proper";
  if (!v.holds) return v;
  if (!is_finite(f.source())) {
    v.holds = false;
    v.witness_kind = "infinite";
    v.detail = "infinitely many cones";
  }
  return v;
}

Verdict check_proper(const ConeComplex& s) { return check_proper(ComplexMorphism::to_point(s)); }

Classification classify(const ConeComplex& s) {
  Classification c;
  c.cones = s.size();
  c.points = s.class_count();
  c.components = s.components().size();
  c.connected = c.components == 1;
  c.quasi_compact = is_finite(s);
  for (const auto& pc : s.cones()) {
    const Cone& cone = pc.cone();
    if (rank_of(cone.span_basis(), cone.ambient_dim()) != cone.dim()) c.noetherian = false;
  }
  for (const auto& chart : spec(s).atlas.charts)
    if (!normalize(chart).was_normal) c.normal = false;
  return c;
}

namespace {

using SmallVec = std::vector<long long>;

SmallVec small(const IntVec& v) {
  SmallVec out;
  for (const auto& c : v) out.push_back(static_cast<long long>(c));
  return out;
}

long long sdot(const SmallVec& a, const SmallVec& b) {
  long long s = 0;
  for (std::size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

// Machine-integer H-representation for the sampling loops.
struct FastCone {
  std::vector<SmallVec> facets;
  std::vector<SmallVec> equations;
  explicit FastCone(const Cone& c) {
    for (const auto& f : c.facets()) facets.push_back(small(f));
    for (const auto& e : c.equations()) equations.push_back(small(e));
  }
  bool contains(const SmallVec& x) const {
    for (const auto& e : equations)
      if (sdot(e, x) != 0) return false;
    for (const auto& f : facets)
      if (sdot(f, x) > 0) return false;
    return true;
  }
};

struct OracleLift {
  FastCone tangent;
  std::vector<SmallVec> facets;       // of the developed lift, in N_i
  std::vector<IntVec> rays;           // of the developed lift, in N_i
  IntMatrix back;                     // N_i -> N_source
  std::size_t source = 0;
  std::size_t target_lift = kNone;
};

// Point class of t * anchor + x in a lift: its minimal face, then the
// coordinates of anchor and x at the class representative.
using PointKey = std::tuple<std::size_t, IntVec, IntVec>;

PointKey point_key(const ConeComplex& s, const OracleLift& lift, const SmallVec& anchor, const SmallVec& x,
                   const IntVec& anchor_big, const IntVec& x_big) {
  std::vector<IntVec> face_rays;
  for (const auto& r : lift.rays) {
    SmallVec sr = small(r);
    bool tight = true;
    for (const auto& f : lift.facets)
      if (sdot(f, anchor) == 0 && sdot(f, x) == 0 && sdot(f, sr) != 0) tight = false;
    if (tight) face_rays.push_back(lift.back.apply(r));
  }
  const Cone& cone = s.cone(lift.source).cone();
  auto face = cone.face_with_rays(face_rays);
  if (!face) throw Error(ErrorKind::InvariantError, "jet oracle lost track of a face");
  auto node = s.node_of(lift.source, *face);
  if (!node) throw Error(ErrorKind::InvariantError, "jet lands on a punctured face");
  const FaceNode& n = s.nodes()[*node];
  return {n.cls, n.to_root.apply(lift.back.apply(anchor_big)), n.to_root.apply(lift.back.apply(x_big))};
}

}  // namespace

JetReport jet_oracle(const ComplexMorphism& f, JetGroup h, long radius) {
  const ConeComplex& s = f.source();
  JetReport report;
  report.overconvergent = positive("overconvergent");
  report.separated = positive("separated");
  const long r = h == JetGroup::Q ? 2 * radius : radius;
  for (std::size_t node : class_representatives(s)) {
    LocalPicture pic = local_picture(f, node);
    const Cone& ci = s.cone(pic.cone).cone();
    std::vector<OracleLift> lifts;
    for (const auto& l : pic.lifts) {
      OracleLift o{FastCone(l.tangent), {}, l.developed.rays(), *unimodular_inverse(l.transport), l.source,
                   l.target_lift};
      for (const auto& fct : l.developed.facets()) o.facets.push_back(small(fct));
      for (const auto& e : l.developed.equations()) {
        o.facets.push_back(small(e));
        o.facets.push_back(small(negate(e)));
      }
      lifts.push_back(std::move(o));
    }
    std::vector<FastCone> regions;
    for (const auto& w : pic.regions) regions.emplace_back(w);

    // Quotient coordinates: directions modulo the span of the face.
    FaceQuotient q = quotient_by_face(ci, pic.face);
    SmallVec anchor = small(pic.anchor);
    for (const auto& hq : box_points(q.section.cols(), r)) {
      IntVec x_big = q.section.apply(hq);
      SmallVec x = small(x_big);
      for (std::size_t l = 0; l < regions.size(); ++l) {
        if (!regions[l].contains(x)) continue;
        std::set<PointKey> points;
        for (const auto& lift : lifts)
          if (lift.target_lift == l && lift.tangent.contains(x))
            points.insert(point_key(s, lift, anchor, x, pic.anchor, x_big));
        ++report.samples;
        JetSample sample{pic.cone, pic.face.rays, x_big, points.size()};
        if (points.empty()) {
          ++report.missing;
          if (!report.first_missing) report.first_missing = sample;
        } else if (points.size() > 1) {
          ++report.multiple;
          if (!report.first_multiple) report.first_multiple = sample;
        }
      }
    }
  }
  auto fill = [](Verdict& v, const std::optional<JetSample>& w, const char* kind) {
    if (!w) return;
    v.holds = false;
    v.witness_kind = kind;
    v.cones = {w->cone};
    v.face = w->face;
    v.vectors = {w->direction};
    v.detail = std::to_string(w->lifts) + " lifts";
  };
  fill(report.overconvergent, report.first_missing, "missing_jet");
  fill(report.separated, report.first_multiple, "multiple_jet");
  return report;
}

JetReport jet_oracle(const ConeComplex& s, JetGroup h, long radius) {
  return jet_oracle(ComplexMorphism::to_point(s), h, radius);
}

std::size_t lifts_at(const ConeComplex& s, std::size_t i, const IntVec& v) {
  auto node = s.node_of(i, s.cone(i).cone().origin_face());
  if (!node) throw Error(ErrorKind::InvalidArgument, "the origin of cone " + std::to_string(i) + " is punctured");
  ComplexMorphism f = ComplexMorphism::to_point(s);
  LocalPicture pic = local_picture(f, *node);
  std::set<PointKey> points;
  SmallVec anchor = small(pic.anchor), x = small(v);
  for (const auto& l : pic.lifts) {
    OracleLift o{FastCone(l.tangent), {}, l.developed.rays(), *unimodular_inverse(l.transport), l.source,
                 l.target_lift};
    for (const auto& fct : l.developed.facets()) o.facets.push_back(small(fct));
    for (const auto& e : l.developed.equations()) {
      o.facets.push_back(small(e));
      o.facets.push_back(small(negate(e)));
    }
    if (o.tangent.contains(x)) points.insert(point_key(s, o, anchor, x, pic.anchor, v));
  }
  return points.size();
}

}  // namespace f1cones
