#include "f1cones/fixtures.hpp"

#include "f1cones/errors.hpp"

namespace f1cones::fixtures {

Cone cone_of(std::size_t d, const std::vector<IntVec>& rays) { return Cone::from_rays(d, rays); }

PuncturedCone punctured(const Cone& c, const std::vector<IntVec>& cutters) {
  std::set<Face> faces;
  for (const auto& f : cutters) {
    auto face = c.face_cut_by(f);
    if (!face) throw Error(ErrorKind::InvalidArgument, "cutter " + to_string(f) + " does not cut a face");
    faces.insert(*face);
  }
  return PuncturedCone(c, downward_closure(c, faces));
}

namespace {

PuncturedCone origin_punctured(const Cone& c) {
  return PuncturedCone(c, {c.origin_face()});
}

std::vector<IntVec> rays_of(const Cone& c) { return c.rays(); }

}  // namespace

ConeComplex fan(std::size_t d, const std::vector<std::vector<IntVec>>& rays) {
  std::vector<PuncturedCone> cones;
  for (const auto& r : rays) cones.emplace_back(cone_of(d, r));
  std::vector<Gluing> gluings;
  for (std::size_t i = 0; i < cones.size(); ++i)
    for (std::size_t j = i + 1; j < cones.size(); ++j) {
      Cone meet = intersect(cones[i].cone(), cones[j].cone());
      auto fi = cones[i].cone().face_with_rays(rays_of(meet));
      auto fj = cones[j].cone().face_with_rays(rays_of(meet));
      if (!fi || !fj) throw Error(ErrorKind::InvalidArgument, "cones do not meet in a common face");
      gluings.push_back({i, fi->cutter, j, fj->cutter, IntMatrix::identity(d)});
    }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

ConeComplex a1() { return fan(1, {{make_vec({-1})}}); }
ConeComplex p1() { return fan(1, {{make_vec({-1})}, {make_vec({1})}}); }

ConeComplex doubled_line() {
  Cone ray = cone_of(1, {make_vec({-1})});
  return ConeComplex::validate({PuncturedCone(ray), PuncturedCone(ray)},
                               {{0, make_vec({1}), 1, make_vec({1}), IntMatrix::identity(1)}});
}

ConeComplex a2() { return fan(2, {{make_vec({-1, 0}), make_vec({0, -1})}}); }

ConeComplex p2() {
  IntVec a = make_vec({-1, 0}), b = make_vec({0, -1}), c = make_vec({1, 1});
  return fan(2, {{a, b}, {b, c}, {c, a}});
}

ConeComplex bl0_a2() {
  IntVec a = make_vec({-1, 0}), b = make_vec({0, -1}), d = make_vec({-1, -1});
  return fan(2, {{a, d}, {d, b}});
}

ConeComplex formal_disc() {
  Cone ray = cone_of(1, {make_vec({-1})});
  return ConeComplex::validate({origin_punctured(ray)}, {});
}

ConeComplex formal_plane() {
  Cone q = cone_of(2, {make_vec({-1, 0}), make_vec({0, -1})});
  return ConeComplex::validate({punctured(q, {make_vec({1, 0}), make_vec({0, 1})})}, {});
}

ConeComplex formal_axis() {
  Cone q = cone_of(2, {make_vec({-1, 0}), make_vec({0, -1})});
  return ConeComplex::validate({punctured(q, {make_vec({1, 0})})}, {});
}

IntMatrix tate_shear() { return IntMatrix::from_nested({{1, 1}, {0, 1}}); }

namespace {

// Rays of the developed Tate loop: (m, -1) at even and (2m + 1, -2) at odd positions.
IntVec tate_ray(long long k) {
  if (k % 2 == 0) return make_vec({k / 2, -1});
  return make_vec({k, -2});
}

}  // namespace

ConeComplex tate_loop() {
  Cone a = cone_of(2, {tate_ray(0), tate_ray(1)});
  Cone b = cone_of(2, {tate_ray(1), tate_ray(2)});
  auto cut = [](const Cone& c, const IntVec& ray) { return c.face_with_rays({ray})->cutter; };
  IntMatrix g = tate_shear();
  return ConeComplex::validate(
      {origin_punctured(a), origin_punctured(b)},
      {{0, cut(a, tate_ray(1)), 1, cut(b, tate_ray(1)), IntMatrix::identity(2)},
       {1, cut(b, tate_ray(2)), 0, cut(a, tate_ray(0)), g.transpose()}});
}

ConeComplex tate_chain(std::size_t n) {
  std::vector<PuncturedCone> cones;
  std::vector<Gluing> gluings;
  for (std::size_t m = 0; m < n; ++m) {
    long long k = static_cast<long long>(m);
    cones.push_back(origin_punctured(cone_of(2, {tate_ray(k), tate_ray(k + 1)})));
  }
  for (std::size_t m = 0; m + 1 < n; ++m) {
    IntVec shared = tate_ray(static_cast<long long>(m) + 1);
    gluings.push_back({m, cones[m].cone().face_with_rays({shared})->cutter, m + 1,
                       cones[m + 1].cone().face_with_rays({shared})->cutter, IntMatrix::identity(2)});
  }
  return ConeComplex::validate(std::move(cones), std::move(gluings));
}

std::vector<Named> corpus() {
  IntVec e1 = make_vec({-1, 0, 0}), e2 = make_vec({0, -1, 0}), e3 = make_vec({0, 0, -1});
  IntVec x = make_vec({-1, 0}), y = make_vec({0, -1}), nx = make_vec({1, 0}), ny = make_vec({0, 1});
  std::vector<Named> out;
  out.push_back({"point", point_complex()});
  out.push_back({"a1", a1()});
  out.push_back({"p1", p1()});
  out.push_back({"doubled_line", doubled_line()});
  out.push_back({"a2", a2()});
  out.push_back({"p2", p2()});
  out.push_back({"bl0_a2", bl0_a2()});
  out.push_back({"formal_disc", formal_disc()});
  out.push_back({"formal_plane", formal_plane()});
  out.push_back({"formal_axis", formal_axis()});
  out.push_back({"tate_chain_1", tate_chain(1)});
  out.push_back({"tate_chain_2", tate_chain(2)});
  out.push_back({"tate_chain_3", tate_chain(3)});
  out.push_back({"tate_chain_6", tate_chain(6)});
  out.push_back({"a1_x_p1", fan(2, {{x, y}, {x, ny}})});
  out.push_back({"p1_x_p1", fan(2, {{x, y}, {y, nx}, {nx, ny}, {ny, x}})});
  out.push_back({"hirzebruch_1", fan(2, {{x, y}, {y, make_vec({1, 1})}, {make_vec({1, 1}), ny}, {ny, x}})});
  out.push_back({"a1_x_gm", fan(2, {{y}})});
  out.push_back({"torus_2", fan(2, {{}})});
  out.push_back({"a3", fan(3, {{e1, e2, e3}})});
  {
    IntVec d = make_vec({-1, -1, -1});
    out.push_back({"bl0_a3", fan(3, {{e1, e2, d}, {e2, e3, d}, {e3, e1, d}})});
  }
  out.push_back({"p3_chart_pair", fan(3, {{e1, e2, e3}, {e1, e2, make_vec({1, 1, 1})}})});
  out.push_back({"a1_x_a1_x_p1", fan(3, {{e1, e2, e3}, {e1, e2, make_vec({0, 0, 1})}})});
  {
    // Non-simplicial: the cone over a square.
    out.push_back({"square_cone", fan(3, {{make_vec({-1, -1, -1}), make_vec({1, -1, -1}), make_vec({1, 1, -1}),
                                            make_vec({-1, 1, -1})}})});
  }
  {
    // Formal P^1: both origins punctured, no gluing survives.
    Cone r0 = cone_of(1, {make_vec({-1})}), r1 = cone_of(1, {make_vec({1})});
    out.push_back({"formal_p1_points", ConeComplex::validate({origin_punctured(r0), origin_punctured(r1)}, {})});
  }
  {
    // Doubled line with both origins punctured: two formal discs.
    Cone r = cone_of(1, {make_vec({-1})});
    out.push_back({"formal_doubled_line", ConeComplex::validate({origin_punctured(r), origin_punctured(r)}, {})});
  }
  out.push_back({"tate_loop", tate_loop()});
  {
    // Doubled plane along a ray: two quadrants glued along the axis v1 = 0.
    Cone q = cone_of(2, {x, y});
    auto axis = q.face_with_rays({y})->cutter;
    out.push_back({"doubled_axis",
                   ConeComplex::validate({PuncturedCone(q), PuncturedCone(q)}, {{0, axis, 1, axis, IntMatrix::identity(2)}})});
  }
  {
    // A^2 completed along the toric boundary: only the origin punctured.
    Cone q = cone_of(2, {x, y});
    out.push_back({"a2_along_boundary", ConeComplex::validate({PuncturedCone(q, {q.origin_face()})}, {})});
  }
  out.push_back({"p2_formal_chain", [&] {
                   // The fan of P^2 with the origin punctured everywhere.
                   ConeComplex s = p2();
                   Subcomplex u(s.size());
                   u[0].insert(s.cone(0).cone().origin_face());
                   return puncture_along(s, u);
                 }()});
  return out;
}

}  // namespace f1cones::fixtures
