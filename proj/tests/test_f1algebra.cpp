#include <algorithm>

#include "doctest.h"
#include "f1cones/errors.hpp"
#include "f1cones/f1algebra.hpp"
#include "oracles.hpp"

using namespace f1cones;

namespace {

F1Algebra affine(std::size_t n) {
  std::vector<IntVec> gens;
  for (std::size_t i = 0; i < n; ++i) gens.push_back(unit_vec(n, i));
  return F1Algebra::embedded(n, gens);
}

F1Algebra nonreduced() {  // F1[x, w] / (xw = w)
  return from_presentation(2, {Relation{make_vec({1, 1}), make_vec({0, 1})}});
}

F1Algebra cusp_presented() {  // F1[x, y] / (x^2 = y^3)
  return from_presentation(2, {Relation{make_vec({2, 0}), make_vec({0, 3})}});
}

}  // namespace

TEST_CASE("presentations") {
  F1Algebra t = from_presentation(1, {});
  CHECK(t.characters() == CharacterGroup(1));
  CHECK(t.generators()[0].free == make_vec({1}));
  F1Algebra nr = nonreduced();
  CHECK(nr.characters() == CharacterGroup(1));
  CHECK(nr.generators()[0].free == make_vec({0}));
  CHECK(nr.generators()[1].free == make_vec({1}));
  F1Algebra cusp = cusp_presented();
  CHECK(cusp.generators()[0].free == make_vec({3}));
  CHECK(cusp.generators()[1].free == make_vec({2}));
  CHECK_THROWS_AS(from_presentation(0, {Relation{IntVec{}, IntVec{}}}), Error);
  CHECK(from_presentation(0, {}).characters().is_trivial());
  try {
    from_presentation(1, {Relation{make_vec({1}), std::nullopt}});
    FAIL("expected ZeroRelation");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroRelation);
  }
}

TEST_CASE("underlying integral algebras and integrality") {
  CHECK(same_algebra(underlying_integral(affine(1)), affine(1)));
  F1Algebra w = underlying_integral(nonreduced());
  CHECK_FALSE(w.is_presented());
  CHECK(same_algebra(w, F1Algebra::embedded(1, {make_vec({1})})));
  CHECK(same_algebra(underlying_integral(w), w));
  F1Algebra cusp = underlying_integral(cusp_presented());
  CHECK(same_algebra(cusp, F1Algebra::embedded(1, {make_vec({2}), make_vec({3})})));
  CHECK(is_integral(affine(2)));
  CHECK_FALSE(is_integral(nonreduced()));
  CHECK(is_integral(cusp_presented()));
  CHECK(is_integral(w));
}

TEST_CASE("integrality of presented algebras") {
  // x^3 = y^3 is cancellative: equal logs always differ by whole relation moves
  F1Algebra cubes = from_presentation(2, {Relation{make_vec({3, 0}), make_vec({0, 3})}});
  CHECK(is_integral(cubes, 6));
  // x^2 y = x y^2 forces x = y in the group, yet x and y are never related
  F1Algebra squash = from_presentation(2, {Relation{make_vec({2, 1}), make_vec({1, 2})}});
  CHECK_FALSE(is_integral(squash, 6));
  // degree one monomials never move, so even a tiny bound finds the split
  CHECK_FALSE(is_integral(squash, 1));
}

TEST_CASE("monoid membership") {
  F1Algebra cusp = F1Algebra::embedded(1, {make_vec({2}), make_vec({3})});
  CharacterGroup z(1);
  CHECK_FALSE(monoid_contains(cusp, z.make(make_vec({1}))));
  CHECK(monoid_contains(cusp, z.make(make_vec({5}))));
  CHECK(monoid_contains(cusp, z.make(make_vec({0}))));
  CHECK_FALSE(monoid_contains(cusp, z.make(make_vec({-2}))));
  F1Algebra laurent = F1Algebra::embedded(1, {make_vec({1}), make_vec({-1})});
  CHECK(monoid_contains(laurent, z.make(make_vec({-7}))));
  F1Algebra mixed = F1Algebra::embedded(2, {make_vec({2, 0}), make_vec({-3, 0}), make_vec({0, 1})});
  CHECK(monoid_contains(mixed, CharacterGroup(2).make(make_vec({1, 4}))));
  CHECK_FALSE(monoid_contains(mixed, CharacterGroup(2).make(make_vec({1, -1}))));
}

TEST_CASE("normalization") {
  auto n = normalize(F1Algebra::embedded(1, {make_vec({2}), make_vec({3})}));
  CHECK_FALSE(n.was_normal);
  CHECK(same_algebra(n.algebra, affine(1)));
  auto m = normalize(affine(2));
  CHECK(m.was_normal);
  CHECK(same_algebra(m.algebra, affine(2)));
  F1Algebra square = F1Algebra::embedded(2, {make_vec({2, 0}), make_vec({1, 1}), make_vec({0, 2})});
  auto s = normalize(square);
  CHECK(s.was_normal);
  CHECK(same_algebra(s.algebra, square));
  auto twice = normalize(n.algebra);
  CHECK(same_algebra(twice.algebra, n.algebra));
  CHECK(twice.was_normal);
  // oracle: lattice points of the span cone in the generated group, coordinates <= 4
  for (const auto& x : oracle::box(2, 4)) {
    bool in_group = (x[0] + x[1]) % 2 == 0;
    bool in_cone = x[0] >= 0 && x[1] >= 0;
    CHECK(monoid_contains(square, CharacterGroup(2).make(x)) == (in_group && in_cone));
  }
}

TEST_CASE("units") {
  CHECK(units(affine(1)).is_trivial());
  F1Algebra laurent = F1Algebra::embedded(1, {make_vec({1}), make_vec({-1})});
  CHECK(units(laurent) == CharacterGroup(1));
  CHECK(units(nonreduced()).is_trivial());
}

TEST_CASE("localization") {
  CharacterGroup z(1), z2(2);
  F1Algebra t = affine(1);
  F1Algebra tl = localize(t, z.make(make_vec({1})));
  CHECK(same_algebra(tl, F1Algebra::embedded(1, {make_vec({1}), make_vec({-1})})));
  F1Algebra xy = affine(2);
  F1Algebra lx = localize(xy, z2.make(make_vec({1, 0})));
  auto cone = polar_cone(lx).cone();
  CHECK(cone.rays() == std::vector<IntVec>{make_vec({0, -1})});
  F1Algebra lxy = localize(xy, z2.make(make_vec({1, 1})));
  CHECK(polar_cone(lxy).cone() == Cone::origin(2));
  // localizing twice equals localizing at the product
  F1Algebra a1 = localize(localize(xy, z2.make(make_vec({1, 0}))), z2.make(make_vec({0, 1})));
  CHECK(same_algebra(a1, lxy));
  try {
    localize(t, std::nullopt);
    FAIL("expected ZeroElement");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::ZeroElement);
  }
}

TEST_CASE("polar cones") {
  CHECK(polar_cone(affine(1)).cone().rays() == std::vector<IntVec>{make_vec({-1})});
  CHECK(polar_cone(F1Algebra::embedded(1, {make_vec({1}), make_vec({-1})})).cone() == Cone::origin(1));
  CHECK(polar_cone(affine(2)).cone().rays() == std::vector<IntVec>{make_vec({-1, 0}), make_vec({0, -1})});
  CHECK(polar_cone(affine(2)).punctures().empty());
}

TEST_CASE("faces restricted to an algebra") {
  auto ray = polar_cone(affine(1)).cone();
  auto fs = faces_cut_by(ray, affine(1));
  REQUIRE(fs.size() == 2);
  CHECK(fs[0].cutter == make_vec({1}));
  CHECK(fs[1].cutter == make_vec({0}));
  F1Algebra veronese = F1Algebra::embedded(2, {make_vec({2, 0}), make_vec({1, 1}), make_vec({0, 2})});
  auto q = polar_cone(affine(2)).cone();
  auto vf = faces_cut_by(q, veronese);
  CHECK(vf.size() == 4);
  auto axis = q.face_cut_by(make_vec({2, 0}));
  REQUIRE(axis.has_value());
  bool found = false;
  for (const auto& f : vf)
    if (f == *axis) {
      found = true;
      CHECK(f.cutter == make_vec({2, 0}));
    }
  CHECK(found);
}

TEST_CASE("primes and quotients") {
  CHECK(primes(affine(1)).size() == 2);
  auto ps = primes(affine(2));
  REQUIRE(ps.size() == 4);
  CHECK(primes(F1Algebra::embedded(1, {make_vec({1}), make_vec({-1})})).size() == 1);
  // inclusion reversing: bigger faces have smaller complements
  for (const auto& p : ps)
    for (const auto& q : ps) {
      auto pc = p.complement, qc = q.complement;
      std::sort(pc.begin(), pc.end());
      std::sort(qc.begin(), qc.end());
      bool face_in = std::includes(q.face.rays.begin(), q.face.rays.end(), p.face.rays.begin(), p.face.rays.end());
      bool compl_in = std::includes(pc.begin(), pc.end(), qc.begin(), qc.end());
      CHECK(face_in == compl_in);
    }
  // face v1 = 0 (the ray (0,-1)) keeps x
  auto q = polar_cone(affine(2)).cone();
  auto axis = q.face_cut_by(make_vec({1, 0}));
  const PrimeRecord* p = nullptr;
  for (const auto& r : ps)
    if (r.face == *axis) p = &r;
  REQUIRE(p != nullptr);
  CHECK(same_algebra(quotient_by_prime(affine(2), *p), affine(1)));
  // origin face: the zero prime, quotient is A; whole cone: the maximal ideal
  CHECK(same_algebra(quotient_by_prime(affine(2), ps.front()), affine(2)));
  F1Algebra field = quotient_by_prime(affine(2), ps.back());
  CHECK(field.characters().is_trivial());
}

TEST_CASE("monomial ideals") {
  F1Algebra xy = affine(2);
  CharacterGroup z2(2);
  MonomialIdeal m(xy, {z2.make(make_vec({1, 0})), z2.make(make_vec({0, 1}))});
  CHECK(ideal_membership(m, z2.make(make_vec({1, 1}))));
  MonomialIdeal x2(xy, {z2.make(make_vec({2, 0}))});
  CHECK_FALSE(ideal_membership(x2, z2.make(make_vec({1, 0}))));
  F1Algebra t = affine(1);
  CharacterGroup z(1);
  MonomialIdeal tt(t, {z.make(make_vec({2})), z.make(make_vec({3}))});
  CHECK(ideal_membership(tt, z.make(make_vec({5}))));
  CHECK_THROWS_AS(MonomialIdeal(xy, {z2.make(make_vec({-1, 0}))}), Error);
}

TEST_CASE("Rees charts") {
  F1Algebra xy = affine(2);
  CharacterGroup z2(2);
  MonomialIdeal m(xy, {z2.make(make_vec({1, 0})), z2.make(make_vec({0, 1}))});
  F1Algebra chart = rees_chart(xy, m, z2.make(make_vec({1, 0})));
  REQUIRE(chart.generators().size() == 2);
  CHECK(chart.generators()[0].free == make_vec({1, 0}));
  CHECK(chart.generators()[1].free == make_vec({-1, 1}));
  MonomialIdeal px(xy, {z2.make(make_vec({1, 0}))});
  CHECK(same_algebra(rees_chart(xy, px, z2.make(make_vec({1, 0}))), xy));
  MonomialIdeal mixed(xy, {z2.make(make_vec({1, 0})), z2.make(make_vec({0, 2}))});
  F1Algebra c2 = rees_chart(xy, mixed, z2.make(make_vec({0, 2})));
  CHECK(same_algebra(c2, F1Algebra::embedded(2, {make_vec({0, 1}), make_vec({1, -2})})));
  try {
    rees_chart(xy, px, z2.make(make_vec({0, 1})));
    FAIL("expected SNotInIdeal");
  } catch (const Error& e) {
    CHECK(e.kind() == ErrorKind::SNotInIdeal);
  }
}

TEST_CASE("completion punctures and Krull injectivity") {
  F1Algebra xy = affine(2);
  CharacterGroup z2(2);
  MonomialIdeal m(xy, {z2.make(make_vec({1, 0})), z2.make(make_vec({0, 1}))});
  CHECK(completion_punctures(xy, m).size() == 3);
  MonomialIdeal x(xy, {z2.make(make_vec({1, 0}))});
  auto zx = completion_punctures(xy, x);
  REQUIRE(zx.size() == 2);
  auto cone = polar_cone(xy).cone();
  CHECK(zx.count(cone.origin_face()));
  CHECK(zx.count(*cone.face_with_rays({make_vec({0, -1})})));
  F1Algebra t = affine(1);
  MonomialIdeal tt(t, {CharacterGroup(1).make(make_vec({1}))});
  CHECK(completion_punctures(t, tt).size() == 1);
  CHECK(krull_injective(xy, x));
  F1Algebra nr = nonreduced();
  CHECK_FALSE(krull_injective(nr, MonomialIdeal::from_exponents(nr, {make_vec({1, 0})})));
  CHECK(krull_injective(xy, m));
  CHECK_THROWS_AS(completion_punctures(xy, MonomialIdeal(xy, {})), Error);
}

TEST_CASE("Krull injectivity matches orthogonality on a generated corpus") {
  std::mt19937 rng(3);
  for (int t = 0; t < 40; ++t) {
    std::size_t d = 1 + rng() % 3;
    std::vector<IntVec> gens;
    for (std::size_t i = 0; i < d + 1; ++i) gens.push_back(oracle::random_vec(rng, d, 2));
    F1Algebra a = F1Algebra::embedded(d, gens);
    Cone sigma = polar_cone(a).cone();
    for (const auto& g : gens) {
      MonomialIdeal ideal(a, {CharacterGroup(d).make(g)});
      bool orthogonal = true;
      for (const auto& r : sigma.generators()) orthogonal = orthogonal && dot(r, g) == 0;
      for (const auto& l : sigma.lineality()) orthogonal = orthogonal && dot(l, g) == 0;
      CHECK(krull_injective(a, ideal) == !orthogonal);
    }
  }
}
