#include <functional>

#include "doctest.h"
#include "f1cones/complex.hpp"
#include "f1cones/errors.hpp"
#include "f1cones/fixtures.hpp"

using namespace f1cones;
namespace fx = f1cones::fixtures;

namespace {

void expect_kind(const std::function<void()>& fn, ErrorKind kind) {
  try {
    fn();
    FAIL("expected " << std::string(error_kind_name(kind)));
  } catch (const Error& e) {
    CHECK(e.kind() == kind);
  }
}

IntMatrix power(const IntMatrix& m, std::size_t k) {
  IntMatrix out = IntMatrix::identity(m.rows());
  for (std::size_t i = 0; i < k; ++i) out = out * m;
  return out;
}

Cone quadrant() { return fx::cone_of(2, {make_vec({-1, 0}), make_vec({0, -1})}); }

}  // namespace

TEST_CASE("validation of gluing data") {
  ConeComplex p1 = fx::p1();
  CHECK(p1.size() == 2);
  CHECK(p1.gluings().size() == 1);
  CHECK(p1.class_count() == 3);  // shared origin and the two rays
  CHECK(ConeComplex::validate(p1.cones(), p1.gluings()) == p1);

  Cone q = quadrant();
  IntVec cx = q.face_with_rays({make_vec({-1, 0})})->cutter;
  IntVec cy = q.face_with_rays({make_vec({0, -1})})->cutter;
  IntMatrix swap = IntMatrix::from_nested({{0, 1}, {1, 0}});
  expect_kind([&] { ConeComplex::validate({PuncturedCone(q)}, {{0, cx, 0, cy, swap}}); }, ErrorKind::SelfGluedFaces);

  Cone ray = fx::cone_of(1, {make_vec({-1})});
  expect_kind(
      [&] {
        ConeComplex::validate({PuncturedCone(ray), PuncturedCone(ray)},
                              {{0, make_vec({1}), 1, make_vec({1}), IntMatrix::from_nested({{2}})}});
      },
      ErrorKind::NonIsomorphicGluing);
  expect_kind([&] { ConeComplex::validate({PuncturedCone(Cone::whole_space(1))}, {}); }, ErrorKind::NotPointed);
  // Gluing a kept face to a punctured one.
  expect_kind(
      [&] {
        ConeComplex::validate({PuncturedCone(ray), PuncturedCone(ray, {ray.origin_face()})},
                              {{0, make_vec({1}), 1, make_vec({1}), IntMatrix::identity(1)}});
      },
      ErrorKind::NonIsomorphicGluing);
}

TEST_CASE("corpus complexes are canonical") {
  auto corpus = fx::corpus();
  CHECK(corpus.size() >= 25);
  for (const auto& [name, s] : corpus) {
    CAPTURE(name);
    CHECK(s.size() <= 12);
    CHECK(ConeComplex::validate(s.cones(), s.gluings()) == s);
  }
}

TEST_CASE("contiguity") {
  ConeComplex p1 = fx::p1();
  auto f = contiguous(p1, 0, 1);
  REQUIRE(f);
  CHECK(f->dim == 0);
  CHECK(contiguous(p1, 0, 0)->dim == 1);

  ConeComplex chain = fx::tate_chain(3);
  CHECK(contiguous(chain, 0, 1)->dim == 1);
  CHECK_FALSE(contiguous(chain, 0, 2));
  CHECK(chain.components().size() == 1);

  for (const auto& [name, s] : fx::corpus())
    if (name == "formal_p1_points") {
      CHECK_FALSE(contiguous(s, 0, 1));
      CHECK(s.components().size() == 2);
    }
}

TEST_CASE("stars") {
  Star p1 = big_star(fx::p1(), 0);
  CHECK(p1.complex.size() == 2);
  for (const auto& c : p1.complex.cones()) CHECK_FALSE(c.has_punctures());

  Star single = big_star(fx::a2(), 0);
  CHECK(single.complex.size() == 1);
  CHECK(single.complex.cone(0) == fx::a2().cone(0));

  // In a chain of three cones the far cone is discontiguous with the first;
  // its shared ray with the middle cone becomes punctured.
  ConeComplex chain = fx::tate_chain(3);
  Star star = big_star(chain, 0);
  REQUIRE(star.complex.size() == 2);
  for (std::size_t k = 0; k < star.complex.size(); ++k) {
    const auto& pc = star.complex.cone(k);
    if (star.source[k] == 0) {
      CHECK(k == star.center);
      CHECK(pc.maximal_punctures().size() == 1);  // the origin only
    } else {
      CHECK(star.source[k] == 1);
      auto far = pc.cone().face_with_rays({make_vec({1, -1})});
      REQUIRE(far);
      CHECK(pc.is_punctured(*far));
    }
  }

  ConeComplex p1c = fx::p1();
  Star at_origin = small_star(p1c, 0, p1c.cone(0).cone().origin_face());
  CHECK(at_origin.complex.size() == 2);
  Star at_cone = small_star(p1c, 0);
  CHECK(at_cone.complex.size() == 1);

  ConeComplex bl = fx::bl0_a2();
  auto diagonal = bl.cone(0).cone().face_with_rays({make_vec({-1, -1})});
  REQUIRE(diagonal);
  CHECK(small_star(bl, 0, *diagonal).complex.size() == 2);
  CHECK(small_star(bl, 0, bl.cone(0).cone().origin_face()).complex.size() == 2);
}

TEST_CASE("monodromy and development") {
  ConeComplex tate = fx::tate_loop();
  LocalSystem sys = monodromy(tate, 0);
  REQUIRE(sys.loops.size() == 1);
  CHECK(sys.loops[0].matrix == fx::tate_shear());
  CHECK_FALSE(sys.is_constant());
  CHECK(sys.first_nontrivial() == &sys.loops[0]);
  CHECK(sys.loops[0].cones.front() == 0);
  CHECK(sys.loops[0].cones.back() == 0);
  expect_kind([&] { develop(tate, 0); }, ErrorKind::NonConstantSystem);

  for (std::size_t k = 1; k <= 3; ++k) {
    CAPTURE(k);
    ConeComplex cover = cyclic_cover(tate, k);
    CHECK(cover.size() == 2 * k);
    LocalSystem cs = monodromy(cover, 0);
    REQUIRE(cs.loops.size() == 1);
    CHECK(cs.loops[0].matrix == power(fx::tate_shear(), k));
  }

  CHECK(monodromy(fx::p2(), 0).is_constant());
  CHECK(monodromy(fx::p2(), 0).loops.size() == 1);
  CHECK(monodromy(fx::tate_chain(4), 0).loops.empty());

  ConeComplex p1 = fx::p1();
  Development dev = develop(p1, 0);
  REQUIRE(dev.maps[1]);
  Cone image = map_cone(p1.cone(1).cone(), *dev.maps[1], p1.cone(0).cone().group());
  CHECK(image.rays() == std::vector<IntVec>{make_vec({1})});

  ConeComplex doubled = fx::doubled_line();
  Development dd = develop(doubled, 1);
  CHECK(map_cone(doubled.cone(0).cone(), *dd.maps[0], doubled.cone(1).cone().group()) == doubled.cone(1).cone());
}

TEST_CASE("puncturing along subcomplexes") {
  ConeComplex a2 = fx::a2();
  Subcomplex origin(1);
  origin[0].insert(a2.cone(0).cone().origin_face());
  ConeComplex formal = puncture_along(a2, origin);
  CHECK(formal.cone(0).punctures() == std::set<Face>{a2.cone(0).cone().origin_face()});
  CHECK(puncture_along(formal, origin) == formal);
  CHECK(puncture_along(a2, Subcomplex(1)) == a2);

  Subcomplex whole(1);
  whole[0].insert(a2.cone(0).cone().whole_face());
  expect_kind([&] { puncture_along(a2, whole); }, ErrorKind::NotASubcomplex);
  expect_kind([&] { puncture_along(a2, Subcomplex(2)); }, ErrorKind::NotASubcomplex);

  // Puncturing the shared origin of P^1 on one side punctures both sides.
  ConeComplex p1 = fx::p1();
  Subcomplex u(2);
  u[0].insert(p1.cone(0).cone().origin_face());
  ConeComplex cut = puncture_along(p1, u);
  CHECK(cut.gluings().empty());
  CHECK(cut.cone(1).has_punctures());
}

TEST_CASE("morphisms and preimages") {
  ConeComplex p1 = fx::p1();
  ComplexMorphism id = ComplexMorphism::identity(p1);
  CHECK(preimage(id, 1).size() == 1);
  CHECK(ComplexMorphism::to_point(p1).target().size() == 1);
  CHECK(preimage(ComplexMorphism::to_point(p1), 0).size() == 2);

  ConeComplex bl = fx::bl0_a2();
  ComplexMorphism blow(bl, fx::a2(), {{0, IntMatrix::identity(2)}, {0, IntMatrix::identity(2)}});
  CHECK(preimage(blow, 0).size() == 2);

  expect_kind([&] { ComplexMorphism(p1, fx::a1(), {{0, IntMatrix::identity(1)}, {0, IntMatrix::identity(1)}}); },
              ErrorKind::InvariantError);
  // The completion maps to the plane, not conversely: kept origin would land on a puncture.
  expect_kind([&] { ComplexMorphism(fx::a2(), fx::formal_plane(), {{0, IntMatrix::identity(2)}}); },
              ErrorKind::InvariantError);
  ComplexMorphism(fx::formal_plane(), fx::a2(), {{0, IntMatrix::identity(2)}});
}
