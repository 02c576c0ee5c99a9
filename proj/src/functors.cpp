#include "f1cones/functors.hpp"

#include <algorithm>

#include "f1cones/errors.hpp"
#include "f1cones/fixtures.hpp"

namespace f1cones {

namespace {

IntMatrix inverse_of(const IntMatrix& m) {
  auto inv = unimodular_inverse(m);
  if (!inv) throw Error(ErrorKind::InvariantError, "charmap " + m.to_string() + " is not invertible");
  return *inv;
}

// Image of an algebra of K_to in K_from under a charmap K_to -> K_from.
F1Algebra transported(const F1Algebra& a, const IntMatrix& charmap, std::size_t rank) {
  F1Algebra ia = underlying_integral(a);
  std::vector<IntVec> gens;
  for (const auto& g : ia.generators()) gens.push_back(charmap.apply(g.free));
  return F1Algebra::embedded(rank, gens);
}

// Downward closures of the punctures are recovered from their maximal members.
std::optional<MonomialIdeal> ideal_of_punctures(const F1Algebra& a, const PuncturedCone& pc) {
  if (!pc.has_punctures()) return std::nullopt;
  std::vector<Element> gens;
  for (const auto& f : pc.maximal_punctures()) gens.push_back(a.characters().make(f.cutter));
  return MonomialIdeal(a, gens);
}

PuncturedCone formal_cone(const F1Algebra& a, const std::optional<MonomialIdeal>& t) {
  PuncturedCone polar = polar_cone(a);
  if (!t) return polar;
  return PuncturedCone(polar.cone(), completion_punctures(a, *t));
}

ConeComplex sigma_of(const SchemeAtlas& x, const std::vector<std::optional<MonomialIdeal>>& ideals) {
  std::vector<PuncturedCone> cones;
  for (std::size_t i = 0; i < x.charts.size(); ++i) cones.push_back(formal_cone(x.charts[i], ideals[i]));
  std::vector<Gluing> gluings;
  for (const auto& g : x.gluings) {
    if (g.from >= cones.size() || g.to >= cones.size())
      throw Error(ErrorKind::InvariantError, "gluing refers to a missing chart");
    auto ff = cones[g.from].cone().face_cut_by(g.from_f.free);
    auto ft = cones[g.to].cone().face_cut_by(g.to_f.free);
    if (!ff || !ft) throw Error(ErrorKind::InvariantError, "gluing element is not a character of its chart");
    bool pf = cones[g.from].is_punctured(*ff), pt = cones[g.to].is_punctured(*ft);
    if (pf != pt)
      throw Error(ErrorKind::IncompatibleIdeals, "ideals of definition disagree on a gluing between charts " +
                                                     std::to_string(g.from) + " and " + std::to_string(g.to));
    if (pf) continue;
    gluings.push_back({g.from, g.from_f.free, g.to, g.to_f.free, g.charmap});
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

Element element_of(const F1Algebra& a, const IntVec& free) { return a.characters().make(free); }

// A monoid element of `a` cutting the given face of its polar cone.
Element chart_cutter(const F1Algebra& a, const Cone& c, const Face& f) {
  for (const auto& g : faces_cut_by(c, a))
    if (g == f) return element_of(a, g.cutter);
  throw Error(ErrorKind::InvariantError, "face is not cut by an element of the chart");
}

SchemeAtlas atlas_from(const ConeComplex& s, const std::vector<F1Algebra>& charts) {
  SchemeAtlas x;
  x.charts = charts;
  for (const auto& g : s.gluings()) {
    auto ff = s.cone(g.from).cone().face_cut_by(g.from_cutter);
    auto ft = s.cone(g.to).cone().face_cut_by(g.to_cutter);
    x.gluings.push_back({g.from, chart_cutter(charts[g.from], s.cone(g.from).cone(), *ff), g.to,
                         chart_cutter(charts[g.to], s.cone(g.to).cone(), *ft), g.charmap});
  }
  return x;
}

}  // namespace

void validate_atlas(const SchemeAtlas& x) {
  for (const auto& g : x.gluings) {
    if (g.from >= x.charts.size() || g.to >= x.charts.size())
      throw Error(ErrorKind::InvariantError, "gluing refers to a missing chart");
    const F1Algebra& a = x.charts[g.from];
    const F1Algebra& b = x.charts[g.to];
    if (!monoid_contains(a, g.from_f) || !monoid_contains(b, g.to_f))
      throw Error(ErrorKind::InvariantError, "gluing element is not in its chart");
    if (a.characters().is_free() && b.characters().is_free()) {
      if (g.charmap.rows() != a.characters().rank() || g.charmap.cols() != b.characters().rank())
        throw Error(ErrorKind::InvariantError, "charmap has the wrong shape");
      inverse_of(g.charmap);
      F1Algebra la = localize(a, g.from_f);
      F1Algebra lb = transported(localize(b, g.to_f), g.charmap, a.characters().rank());
      if (!same_algebra(underlying_integral(la), lb))
        throw Error(ErrorKind::InvariantError, "charmap does not identify the localizations of charts " +
                                                   std::to_string(g.from) + " and " + std::to_string(g.to));
    }
  }
  sigma(x);
}

ConeComplex sigma(const SchemeAtlas& x) {
  return sigma_of(x, std::vector<std::optional<MonomialIdeal>>(x.charts.size()));
}

ConeComplex sigma(const FormalSchemeAtlas& x) {
  if (x.ideals.size() != x.atlas.charts.size())
    throw Error(ErrorKind::InvariantError, "one ideal of definition per chart expected");
  return sigma_of(x.atlas, x.ideals);
}

F1Algebra chart_algebra(const Cone& c) {
  const std::size_t d = c.ambient_dim();
  std::vector<IntVec> dual = c.inequality_vectors();
  for (const auto& e : c.equations()) {
    dual.push_back(e);
    dual.push_back(negate(e));
  }
  return F1Algebra::embedded(d, hilbert_basis_of_span(dual, d));
}

FormalSchemeAtlas spec(const ConeComplex& s) {
  FormalSchemeAtlas out;
  std::vector<F1Algebra> charts;
  for (const auto& pc : s.cones()) {
    charts.push_back(chart_algebra(pc.cone()));
    out.ideals.push_back(ideal_of_punctures(charts.back(), pc));
  }
  out.atlas = atlas_from(s, charts);
  return out;
}

SchemeAtlas normalize_scheme(const SchemeAtlas& x) {
  SchemeAtlas out = x;
  for (auto& chart : out.charts) chart = normalize(chart).algebra;
  return out;
}

Subdivision subdivide(const ConeComplex& s, const std::vector<std::vector<IntVec>>& functions, bool include_zero) {
  if (functions.size() != s.size()) throw Error(ErrorKind::InvalidArgument, "one function list per cone expected");
  Subdivision out;
  std::vector<PuncturedCone> pieces;
  std::vector<std::vector<std::size_t>> pieces_of(s.size());
  for (std::size_t i = 0; i < s.size(); ++i) {
    const PuncturedCone& pc = s.cone(i);
    if (functions[i].empty()) throw Error(ErrorKind::ZeroIdeal, "no functions on cone " + std::to_string(i));
    std::vector<IntVec> fs = functions[i];
    if (include_zero) fs.insert(fs.begin(), zero_vec(pc.cone().ambient_dim()));
    for (const Cone& piece : refine_by_function(pc.cone(), functions[i], include_zero)) {
      std::set<Face> punctures;
      for (const auto& f : piece.faces())
        if (membership(pc, piece.face_cone(f).interior_point()) == Membership::Punctured) punctures.insert(f);
      IntVec p = piece.interior_point();
      std::size_t best = 0;
      for (std::size_t k = 1; k < fs.size(); ++k)
        if (dot(fs[k], p) > dot(fs[best], p)) best = k;
      pieces_of[i].push_back(pieces.size());
      pieces.emplace_back(piece, std::move(punctures));
      out.parent.push_back(i);
      out.dominant.push_back(best);
    }
  }

  std::vector<Gluing> gluings;
  auto glue = [&](std::size_t a, std::size_t b, const Cone& meet_in_b, const IntMatrix& point_map,
                  const IntMatrix& charmap) {
    std::vector<IntVec> back;
    IntMatrix inv = inverse_of(point_map);
    for (const auto& r : meet_in_b.rays()) back.push_back(inv.apply(r));
    auto fa = pieces[a].cone().face_with_rays(back);
    auto fb = pieces[b].cone().face_with_rays(meet_in_b.rays());
    if (!fa || !fb)
      throw Error(ErrorKind::IncompatibleIdeals, "refined pieces do not meet in a common face");
    if (pieces[a].is_punctured(*fa) || pieces[b].is_punctured(*fb)) return;
    gluings.push_back({a, fa->cutter, b, fb->cutter, charmap});
  };
  for (std::size_t i = 0; i < s.size(); ++i) {
    const auto& ps = pieces_of[i];
    IntMatrix id = IntMatrix::identity(s.cone(i).cone().ambient_dim());
    for (std::size_t x = 0; x < ps.size(); ++x)
      for (std::size_t y = x + 1; y < ps.size(); ++y)
        glue(ps[x], ps[y], intersect(pieces[ps[x]].cone(), pieces[ps[y]].cone()), id, id);
  }
  for (const auto& g : s.gluings()) {
    const Cone& ci = s.cone(g.from).cone();
    Cone face = ci.face_cone(*ci.face_cut_by(g.from_cutter));
    IntMatrix pm = g.point_map();
    for (std::size_t a : pieces_of[g.from]) {
      Cone image = map_cone(intersect(pieces[a].cone(), face), pm, s.cone(g.to).cone().group());
      for (std::size_t b : pieces_of[g.to]) glue(a, b, intersect(image, pieces[b].cone()), pm, g.charmap);
    }
  }
  out.complex = ConeComplex::validate(std::move(pieces), std::move(gluings));
  // validate keeps the cone order, so piece k still has parent out.parent[k].
  std::vector<ConeAssignment> assignments;
  for (std::size_t k = 0; k < out.parent.size(); ++k)
    assignments.push_back({out.parent[k], IntMatrix::identity(s.cone(out.parent[k]).cone().ambient_dim())});
  out.morphism = ComplexMorphism(out.complex, s, std::move(assignments));
  return out;
}

BlowUp blow_up(const SchemeAtlas& x, const std::vector<MonomialIdeal>& ideals, bool normalize_charts) {
  if (ideals.size() != x.charts.size()) throw Error(ErrorKind::InvalidArgument, "one ideal per chart expected");
  ConeComplex base = sigma(x);
  std::vector<std::vector<IntVec>> fs;
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (ideals[i].is_zero()) throw Error(ErrorKind::ZeroIdeal, "blow-up along the zero ideal on chart " + std::to_string(i));
    fs.emplace_back();
    for (const auto& t : ideals[i].generators()) fs.back().push_back(t.free);
  }
  Subdivision sub = subdivide(base, fs, false);
  BlowUp out{{}, sub.complex, sub.morphism, {}};
  std::vector<F1Algebra> charts;
  for (std::size_t k = 0; k < sub.parent.size(); ++k) {
    const MonomialIdeal& t = ideals[sub.parent[k]];
    F1Algebra chart = rees_chart(x.charts[sub.parent[k]], t, t.generators()[sub.dominant[k]]);
    Normalization n = normalize(chart);
    out.chart_was_normal.push_back(n.was_normal);
    charts.push_back(normalize_charts ? n.algebra : chart);
  }
  out.atlas = atlas_from(sub.complex, charts);
  return out;
}

Completion complete(const SchemeAtlas& x, const std::vector<std::optional<MonomialIdeal>>& ideals) {
  if (ideals.size() != x.charts.size()) throw Error(ErrorKind::InvalidArgument, "one ideal per chart expected");
  Completion out{{x, ideals}, {}};
  for (std::size_t i = 0; i < ideals.size(); ++i) {
    if (!ideals[i]) continue;
    if (ideals[i]->is_zero()) throw Error(ErrorKind::ZeroIdeal, "completion along the zero ideal");
    if (!krull_injective(x.charts[i], *ideals[i])) out.krull_warnings.push_back(i);
  }
  try {
    sigma(out.formal);
  } catch (const Error& e) {
    if (e.kind() == ErrorKind::NonIsomorphicGluing)
      throw Error(ErrorKind::IncompatibleIdeals, std::string("ideals of definition disagree: ") + e.what());
    throw;
  }
  return out;
}

Algebraisation algebraise(const ConeComplex& s) {
  if (s.components().size() != 1) throw Error(ErrorKind::InvalidArgument, "algebraise needs a connected complex");
  LocalSystem ls = monodromy(s, 0);
  if (const Loop* loop = ls.first_nontrivial()) throw NonConstantCharactersError(loop->cones, loop->matrix);
  Development dev = develop(s, 0);

  std::vector<PuncturedCone> cones;
  for (const auto& pc : s.cones()) cones.emplace_back(pc.cone());
  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i < s.size(); ++i)
    for (std::size_t j = i + 1; j < s.size(); ++j) {
      IntMatrix to_j = inverse_of(*dev.maps[j]) * *dev.maps[i];
      IntMatrix charmap = to_j.transpose();
      std::vector<Face> shared = shared_faces(s, i, j);
      if (shared.empty()) shared.push_back(s.cone(i).cone().origin_face());
      std::sort(shared.begin(), shared.end());
      for (const Face& f : shared) {
        auto fj = map_face(s.cone(i).cone(), f, to_j, s.cone(j).cone());
        if (!fj) throw Error(ErrorKind::InvariantError, "shared face does not transport to a face");
        gluings.push_back({i, f.cutter, j, fj->cutter, charmap});
      }
    }
  Algebraisation out;
  out.filled = ConeComplex::validate(std::move(cones), std::move(gluings));
  std::vector<F1Algebra> charts;
  for (const auto& pc : out.filled.cones()) charts.push_back(chart_algebra(pc.cone()));
  out.atlas = atlas_from(out.filled, charts);
  for (std::size_t i = 0; i < s.size(); ++i) out.markings.push_back(ideal_of_punctures(charts[i], s.cone(i)));
  if (!(sigma(complete(out.atlas, out.markings).formal) == s))
    throw Error(ErrorKind::InvariantError, "algebraisation does not complete back to the input");
  return out;
}

const char* expansion_kind_name(ExpansionKind k) {
  switch (k) {
    case ExpansionKind::Etale: return "el";
    case ExpansionKind::Sur: return "Sur";
    case ExpansionKind::SurSmall: return "sur";
  }
  return "?";
}

namespace {

struct ExpansionPiece {
  Cone cone;
  std::vector<IntVec> z;  // local generators of Z; empty when Z misses the piece
  IntVec u;               // local equation of the complement of U; 0 inside U
};

ConeComplex fan_of(std::size_t d, const std::vector<ExpansionPiece>& pieces) {
  std::vector<std::vector<IntVec>> rays;
  for (const auto& p : pieces) rays.push_back(p.cone.rays());
  return fixtures::fan(d, rays);
}

}  // namespace

Expansion expansion_stages(const ExpansionDatum& d, ExpansionKind kind, std::size_t k) {
  if (d.center.empty()) throw Error(ErrorKind::ZeroCenter, "the center of an expansion must be nonzero");
  if (k == 0) throw Error(ErrorKind::InvalidArgument, "at least one expansion stage expected");
  if (!d.v.face_cut_by(d.f)) throw Error(ErrorKind::InvalidArgument, "f does not cut a face of V");
  const std::size_t dim = d.v.ambient_dim();
  const IntVec unit = zero_vec(dim);
  std::vector<ExpansionPiece> state{{d.v, d.center, d.f}};
  Expansion out;
  for (std::size_t stage = 0; stage < k; ++stage) {
    std::vector<ExpansionPiece> next, inside;
    for (const auto& p : state) {
      if (p.z.empty()) {
        next.push_back(p);
        continue;
      }
      // Blow up Z + (u); the u-chart is the affine part of the expansion.
      std::vector<IntVec> fs{p.u};
      fs.insert(fs.end(), p.z.begin(), p.z.end());
      for (const Cone& piece : refine_by_function(p.cone, fs, false)) {
        IntVec x = piece.interior_point();
        std::size_t best = 0;
        for (std::size_t j = 1; j < fs.size(); ++j)
          if (dot(fs[j], x) > dot(fs[best], x)) best = j;
        ExpansionPiece q{piece, p.z, p.u};
        if (best == 0) {
          if (kind != ExpansionKind::Etale)
            for (auto& t : q.z) t = sub(t, p.u);
          q.u = unit;
          inside.push_back(q);
        } else {
          if (kind != ExpansionKind::Etale) q.z.clear();
          q.u = sub(p.u, fs[best]);
        }
        next.push_back(q);
      }
    }
    switch (kind) {
      case ExpansionKind::Etale:
        state = next;
        out.stages.push_back(fan_of(dim, inside));
        break;
      case ExpansionKind::Sur:
        for (auto& q : next) q.u = d.f;
        state = next;
        out.stages.push_back(fan_of(dim, state));
        break;
      case ExpansionKind::SurSmall:
        for (auto& q : inside) q.u = d.f;
        state = inside;
        out.stages.push_back(fan_of(dim, state));
        break;
    }
  }
  out.stabilized = out.stages.size() >= 2 && out.stages[out.stages.size() - 1] == out.stages[out.stages.size() - 2];
  return out;
}

ConeComplex embedded_closure(const ConeComplex& s, const Subcomplex& u) {
  if (u.size() != s.size()) throw Error(ErrorKind::NotASubcomplex, "one face set per cone expected");
  std::vector<std::size_t> touched;
  bool everything = true;
  for (std::size_t i = 0; i < s.size(); ++i) {
    if (!u[i].empty()) touched.push_back(i);
    everything = everything && u[i].count(s.cone(i).cone().whole_face());
  }
  if (everything) return s;
  if (touched.size() != 1)
    throw Error(ErrorKind::InvalidArgument, "the open subcomplex must be spanned by faces of a single cone");
  return big_star(s, touched.front()).complex;
}

}  // namespace f1cones
