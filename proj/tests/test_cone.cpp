#include <algorithm>
#include <random>

#include "doctest.h"
#include "f1cones/cone.hpp"
#include "f1cones/errors.hpp"
#include "oracles.hpp"

using namespace f1cones;

namespace {

Cone quadrant() { return Cone::from_inequalities(2, {make_vec({1, 0}), make_vec({0, 1})}); }

std::optional<IntVec> positive_weight(const std::vector<IntVec>& gens, std::size_t d) {
  for (const auto& w : oracle::box(d, 3)) {
    bool ok = true;
    for (const auto& g : gens) ok = ok && dot(w, g) > 0;
    if (ok) return w;
  }
  return std::nullopt;
}

}  // namespace

TEST_CASE("rays of basic cones") {
  CHECK(quadrant().rays() == std::vector<IntVec>{make_vec({-1, 0}), make_vec({0, -1})});
  CHECK(Cone::origin(2).rays().empty());
  Cone redundant = Cone::from_inequalities(2, {make_vec({1, 0}), make_vec({0, 1}), make_vec({1, 1})});
  CHECK(redundant.rays() == quadrant().rays());
  CHECK(redundant == quadrant());
  CHECK_THROWS_AS(Cone::from_inequalities(2, {make_vec({1, 0})}).rays(), Error);
  Cone half = Cone::from_inequalities(2, {make_vec({1, 0})});
  CHECK(half.lineality() == std::vector<IntVec>{make_vec({0, 1})});
  CHECK(half.generators() == std::vector<IntVec>{make_vec({-1, 0})});
}

TEST_CASE("faces of the quadrant") {
  auto fs = quadrant().faces();
  REQUIRE(fs.size() == 4);
  CHECK(fs[0].dim == 0);
  CHECK(fs[3].dim == 2);
  CHECK(is_zero(fs[3].cutter));
  for (const auto& f : fs) {
    auto again = quadrant().face_cut_by(f.cutter);
    REQUIRE(again.has_value());
    CHECK(*again == f);
  }
  // x = (1,0) cuts the ray v1 = 0
  auto f = quadrant().face_cut_by(make_vec({1, 0}));
  REQUIRE(f.has_value());
  CHECK(quadrant().face_ray_vectors(*f) == std::vector<IntVec>{make_vec({0, -1})});
  CHECK_FALSE(quadrant().face_cut_by(make_vec({-1, 0})).has_value());
}

TEST_CASE("faces of faces are faces, cutters add") {
  Cone c = Cone::from_rays(3, {make_vec({1, 0, 0}), make_vec({0, 1, 0}), make_vec({1, 1, 1}), make_vec({0, 0, 1}) });
  auto fs = c.faces();
  for (const auto& f : fs) {
    Cone fc = c.face_cone(f);
    for (const auto& g : fc.faces()) {
      auto in_c = c.face_with_rays(fc.face_ray_vectors(g));
      REQUIRE(in_c.has_value());
      auto via_sum = c.face_cut_by(add(f.cutter, g.cutter));
      // a cutter of g inside f plus a cutter of f cuts g only if g's cutter is
      // nonpositive on c; the canonical cutters of c itself always work
      auto direct = c.face_cut_by(in_c->cutter);
      REQUIRE(direct.has_value());
      CHECK(*direct == *in_c);
      (void)via_sum;
    }
    for (const auto& g : fs) {
      std::vector<std::size_t> meet;
      std::set_intersection(f.rays.begin(), f.rays.end(), g.rays.begin(), g.rays.end(), std::back_inserter(meet));
      CHECK(std::find_if(fs.begin(), fs.end(), [&](const Face& h) { return h.rays == meet; }) != fs.end());
      auto cut = c.face_cut_by(add(f.cutter, g.cutter));
      REQUIRE(cut.has_value());
      CHECK(cut->rays == meet);
    }
  }
}

TEST_CASE("intersections") {
  Cone opposite = Cone::from_inequalities(2, {make_vec({-1, 0}), make_vec({0, -1})});
  CHECK(intersect(quadrant(), opposite) == Cone::origin(2));
  Cone wedge = Cone::from_inequalities(2, {make_vec({-1, 1})});
  CHECK(intersect(quadrant(), wedge).rays() == std::vector<IntVec>{make_vec({-1, -1}), make_vec({0, -1})});
  CHECK(intersect(quadrant(), quadrant()) == quadrant());
  CHECK_THROWS_AS(intersect(quadrant(), Cone::origin(3)), Error);
}

TEST_CASE("refinement by functions") {
  auto pieces = refine_by_function(quadrant(), {make_vec({1, 0}), make_vec({0, 1})}, false);
  REQUIRE(pieces.size() == 2);
  for (const auto& p : pieces) {
    auto r = p.rays();
    CHECK(std::find(r.begin(), r.end(), make_vec({-1, -1})) != r.end());
  }
  auto single = refine_by_function(quadrant(), {make_vec({1, 1})}, false);
  REQUIRE(single.size() == 1);
  CHECK(single[0] == quadrant());
  auto skew = refine_by_function(quadrant(), {make_vec({1, 0}), make_vec({0, 2})}, false);
  REQUIRE(skew.size() == 2);
  for (const auto& p : skew) {
    auto r = p.rays();
    CHECK(std::find(r.begin(), r.end(), make_vec({-2, -1})) != r.end());
  }
  // with the zero function a nonpositive function never wins on the interior
  CHECK(refine_by_function(quadrant(), {make_vec({1, 0})}, true).size() == 1);
}

TEST_CASE("hilbert bases: examples") {
  Cone ray = Cone::from_inequalities(1, {make_vec({1})});
  auto hb = hilbert_basis(ray);
  REQUIRE(hb.size() == 1);
  CHECK(hb[0].free == make_vec({1}));
  auto q = hilbert_basis(quadrant());
  REQUIRE(q.size() == 2);
  CHECK(q[0].free == make_vec({0, 1}));
  CHECK(q[1].free == make_vec({1, 0}));
  CHECK(hilbert_basis_of_span({make_vec({2}), make_vec({3})}, 1) == std::vector<IntVec>{make_vec({1})});
  auto sq = hilbert_basis_of_span({make_vec({2, 0}), make_vec({1, 1}), make_vec({0, 2})}, 2);
  CHECK(sq == std::vector<IntVec>{make_vec({0, 1}), make_vec({1, 0})});
  auto skew = hilbert_basis_of_span({make_vec({1, 0}), make_vec({1, 3})}, 2);
  CHECK(skew == std::vector<IntVec>{make_vec({1, 0}), make_vec({1, 1}), make_vec({1, 2}), make_vec({1, 3})});
  auto lin = hilbert_basis_of_span({make_vec({1, 0}), make_vec({-1, 0}), make_vec({0, 1})}, 2);
  CHECK(lin == std::vector<IntVec>{make_vec({-1, 0}), make_vec({0, 1}), make_vec({1, 0})});
  CHECK_THROWS_AS(hilbert_basis(Cone::origin(5), 4), Error);
}

TEST_CASE("hilbert bases agree with the brute-force oracle on random cones") {
  std::mt19937 rng(2024);
  int accepted = 0;
  while (accepted < 50) {
    std::size_t d = 1 + rng() % 3;
    std::size_t m = 1 + rng() % 4;
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < m; ++i) {
      IntVec g = oracle::random_vec(rng, d, 3);
      if (!is_zero(g)) gens.push_back(g);
    }
    if (gens.empty()) continue;
    auto w = positive_weight(gens, d);
    if (!w) continue;
    ++accepted;
    auto hb = hilbert_basis_of_span(gens, d);
    for (const auto& h : hb) CHECK(oracle::in_generated_cone(gens, h));
    std::map<IntVec, bool> memo;
    for (const auto& x : oracle::box(d, 5)) {
      if (!oracle::in_generated_cone(gens, x)) continue;
      CHECK(oracle::representable(hb, x, *w, memo));
    }
    for (std::size_t i = 0; i < hb.size(); ++i) {
      std::vector<IntVec> rest = hb;
      rest.erase(rest.begin() + static_cast<std::ptrdiff_t>(i));
      std::map<IntVec, bool> memo2;
      CHECK_FALSE(oracle::representable(rest, hb[i], *w, memo2));
    }
  }
}

TEST_CASE("polar involution on random pointed cones") {
  std::mt19937 rng(99);
  int accepted = 0;
  while (accepted < 100) {
    std::size_t d = 1 + rng() % 4;
    std::size_t m = 1 + rng() % 5;
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < m; ++i) gens.push_back(oracle::random_vec(rng, d, 3));
    Cone c = Cone::from_rays(d, gens);
    if (!c.is_pointed()) continue;
    ++accepted;
    Cone polar = Cone::from_inequalities(d, c.rays());
    std::vector<IntVec> back = polar.generators();
    for (const auto& l : polar.lineality()) {
      back.push_back(l);
      back.push_back(negate(l));
    }
    Cone twice = Cone::from_inequalities(d, back);
    CHECK(twice == c);
    CHECK(twice.rays() == c.rays());
    for (const auto& r : c.rays()) CHECK(oracle::in_generated_cone(gens, r));
    for (const auto& g : gens) CHECK(oracle::in_generated_cone(c.rays(), g));
  }
}

TEST_CASE("refinements partition the cone") {
  std::mt19937 rng(5);
  for (int t = 0; t < 30; ++t) {
    std::size_t d = 2 + rng() % 2;
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < d + 1; ++i) gens.push_back(oracle::random_vec(rng, d, 2));
    Cone c = Cone::from_rays(d, gens);
    if (!c.is_pointed() || c.dim() == 0) continue;
    std::vector<IntVec> fs;
    for (int i = 0; i < 3; ++i) fs.push_back(oracle::random_vec(rng, d, 2));
    bool zero = rng() % 2;
    auto pieces = refine_by_function(c, fs, zero);
    REQUIRE(!pieces.empty());
    // walls are shared or lie on the boundary
    for (std::size_t i = 0; i < pieces.size(); ++i) {
      for (std::size_t k = 0; k < pieces[i].facets().size(); ++k) {
        Face wall = pieces[i].make_face(pieces[i].facet_rays()[k]);
        Cone wall_cone = pieces[i].face_cone(wall);
        bool boundary = false;
        for (const auto& n : c.facets()) {
          bool on = true;
          for (const auto& r : wall_cone.generators()) on = on && dot(n, r) == 0;
          boundary = boundary || on;
        }
        int shared = 0;
        for (std::size_t j = 0; j < pieces.size(); ++j) {
          if (j == i) continue;
          for (std::size_t l = 0; l < pieces[j].facets().size(); ++l)
            if (pieces[j].face_cone(pieces[j].make_face(pieces[j].facet_rays()[l])) == wall_cone) ++shared;
        }
        CHECK((boundary ? shared == 0 : shared == 1));
      }
    }
    // exhaustive grid: every point of c lies in some piece and in at most one relative interior
    std::vector<IntVec> fns = fs;
    if (zero) fns.insert(fns.begin(), zero_vec(d));
    for (const auto& x : oracle::box(d, 5)) {
      bool inside = oracle::in_generated_cone(gens, x);
      int containing = 0, interior = 0;
      for (const auto& p : pieces) {
        containing += p.contains(x) ? 1 : 0;
        if (p.contains_relint(x)) ++interior;
      }
      CHECK((inside ? containing >= 1 : containing == 0));
      CHECK(interior <= 1);
      if (inside) {
        Integer best = dot(fns[0], x);
        for (const auto& f : fns) best = std::max(best, dot(f, x));
        for (const auto& p : pieces) {
          if (!p.contains(x)) continue;
          // the piece's active function attains the maximum
          bool attains = false;
          for (const auto& f : fns) {
            bool linear_here = true;
            for (const auto& r : p.rays())
              for (const auto& g : fns) linear_here = linear_here && dot(f, r) >= dot(g, r);
            if (linear_here && dot(f, x) == best) attains = true;
          }
          CHECK(attains);
        }
      }
    }
  }
}

TEST_CASE("quotients by faces") {
  auto f = quadrant().face_with_rays({make_vec({-1, 0})});
  REQUIRE(f.has_value());
  FaceQuotient q = quotient_by_face(quadrant(), *f);
  CHECK(q.cone.ambient_dim() == 1);
  CHECK(q.cone.dim() == 1);
  CHECK(q.cone.is_pointed());
  // pulled back quotient facets are exactly the facets of c vanishing on the face
  for (const auto& n : q.cone.facets()) {
    IntVec back = q.pullback(n);
    CHECK(dot(back, make_vec({-1, 0})) == 0);
    CHECK(quadrant().face_cut_by(back).has_value());
  }
  FaceQuotient same = quotient_by_face(quadrant(), quadrant().origin_face());
  CHECK(same.cone.dim() == 2);
  FaceQuotient all = quotient_by_face(quadrant(), quadrant().whole_face());
  CHECK(all.cone.ambient_dim() == 0);
}

TEST_CASE("punctured cones and membership") {
  Cone ray = Cone::from_inequalities(1, {make_vec({1})});
  PuncturedCone disc(ray, {ray.origin_face()});
  CHECK(membership(disc, make_vec({-3})) == Membership::Kept);
  CHECK(membership(disc, make_vec({0})) == Membership::Punctured);
  CHECK(membership(disc, make_vec({2})) == Membership::Outside);
  std::set<Face> proper;
  for (const auto& f : quadrant().faces())
    if (f.dim < 2) proper.insert(f);
  PuncturedCone formal_plane(quadrant(), proper);
  CHECK(membership(formal_plane, make_vec({-1, 0})) == Membership::Punctured);
  CHECK(membership(formal_plane, make_vec({-1, -2})) == Membership::Kept);
  // not downward closed
  auto axis = quadrant().face_with_rays({make_vec({-1, 0})});
  CHECK_THROWS_AS(PuncturedCone(quadrant(), {*axis}), Error);
  CHECK_THROWS_AS(PuncturedCone(quadrant(), {quadrant().whole_face()}), Error);
  CHECK(downward_closure(quadrant(), {*axis}).size() == 2);
}
