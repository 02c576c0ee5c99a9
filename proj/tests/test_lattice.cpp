#include <random>

#include "doctest.h"
#include "f1cones/character_group.hpp"
#include "f1cones/errors.hpp"
#include "f1cones/lattice.hpp"
#include "oracles.hpp"

using namespace f1cones;

TEST_CASE("hermite form is U*A with positive reduced pivots") {
  std::mt19937 rng(7);
  for (int t = 0; t < 40; ++t) {
    std::vector<IntVec> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(oracle::random_vec(rng, 4, 6));
    IntMatrix a = IntMatrix::from_rows(rows, 4);
    RowEchelon e = row_echelon(a);
    CHECK(e.transform * a == e.hermite);
    CHECK(unimodular_inverse(e.transform).has_value());
    CHECK(e.rank == oracle::rank(rows, 4));
    for (std::size_t i = 0; i < e.rank; ++i) {
      const Integer& piv = e.hermite(i, e.pivot_cols[i]);
      CHECK(piv > 0);
      for (std::size_t k = 0; k < i; ++k) {
        CHECK(e.hermite(k, e.pivot_cols[i]) >= 0);
        CHECK(e.hermite(k, e.pivot_cols[i]) < piv);
      }
    }
  }
}

TEST_CASE("smith form is diagonal with divisibility chain") {
  std::mt19937 rng(11);
  for (int t = 0; t < 40; ++t) {
    std::vector<IntVec> rows;
    for (int i = 0; i < 3; ++i) rows.push_back(oracle::random_vec(rng, 3, 5));
    IntMatrix a = IntMatrix::from_rows(rows, 3);
    SmithForm s = smith_normal_form(a);
    CHECK(s.left * a * s.right == s.diagonal);
    CHECK(unimodular_inverse(s.left).has_value());
    CHECK(unimodular_inverse(s.right).has_value());
    for (std::size_t i = 0; i + 1 < s.invariants.size(); ++i) {
      if (s.invariants[i] == 0) {
        CHECK(s.invariants[i + 1] == 0);
      } else {
        CHECK(s.invariants[i + 1] % s.invariants[i] == 0);
      }
    }
    Integer prod = 1;
    for (const auto& d : s.invariants) prod *= d;
    Integer det = determinant(a);
    CHECK((det < 0 ? Integer(-det) : det) == prod);
  }
}

TEST_CASE("kernels and integer solutions") {
  IntMatrix m = IntMatrix::from_nested({{2, 4, 6}, {1, 1, 1}});
  auto ker = kernel_basis(m);
  REQUIRE(ker.size() == 1);
  CHECK(m.apply(ker[0]) == zero_vec(2));
  CHECK(content(ker[0]) == 1);
  auto x = solve_integer(m, make_vec({2, 1}));
  REQUIRE(x.has_value());
  CHECK(m.apply(*x) == make_vec({2, 1}));
  CHECK_FALSE(solve_integer(m, make_vec({1, 1})).has_value());
}

TEST_CASE("unimodular completion of a saturated sublattice") {
  std::vector<IntVec> basis{make_vec({1, 2, 3})};
  IntMatrix u = complete_to_unimodular(basis, 3);
  CHECK(u.row(0) == basis[0]);
  Integer det = determinant(u);
  CHECK((det == 1 || det == -1));
}

TEST_CASE("cokernel of relation lattices") {
  SUBCASE("cusp x^2 = y^3") {
    Cokernel c = cokernel({make_vec({2, -3})}, 2);
    CHECK(c.group == CharacterGroup(1));
    CHECK(c.images[0].free == make_vec({3}));
    CHECK(c.images[1].free == make_vec({2}));
  }
  SUBCASE("xw = w kills x") {
    Cokernel c = cokernel({make_vec({1, 0})}, 2);
    CHECK(c.group == CharacterGroup(1));
    CHECK(c.images[0].free == make_vec({0}));
    CHECK(c.images[1].free == make_vec({1}));
  }
  SUBCASE("torsion appears") {
    Cokernel c = cokernel({make_vec({2, 0}), make_vec({0, 6})}, 2);
    CHECK(c.group == CharacterGroup(0, {Integer(2), Integer(6)}));
  }
  SUBCASE("free") {
    Cokernel c = cokernel({}, 2);
    CHECK(c.group == CharacterGroup(2));
    CHECK(c.images[1].free == make_vec({0, 1}));
  }
}

TEST_CASE("character group arithmetic and subgroups") {
  CharacterGroup g(1, {Integer(4)});
  Element a = g.make(make_vec({1}), make_vec({3}));
  Element b = g.make(make_vec({2}), make_vec({3}));
  CHECK(g.add(a, b) == g.make(make_vec({3}), make_vec({2})));
  CHECK(g.in_subgroup({a}, g.scale(a, -5)));
  CHECK_FALSE(g.in_subgroup({g.make(make_vec({2}))}, g.make(make_vec({1}))));
  auto tors = g.subgroup_torsion({a, b});
  REQUIRE(tors.size() == 1);
  CHECK(tors[0].free == make_vec({0}));
  CHECK(g.subgroup_type({a, b}) == CharacterGroup(1, {Integer(4)}));
  CHECK_THROWS_AS(CharacterGroup(0, {Integer(4), Integer(6)}), Error);
}
