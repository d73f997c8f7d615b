#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "torifan/divisor.hpp"

using namespace torifan;
using torifan::test::err_of;
using torifan::test::p3;
using torifan::test::xl;
using torifan::test::xl_minus;

TEST_CASE("divisor arithmetic") {
  Fan f = p3();
  TorusDivisor z = zero_divisor(f);
  CHECK(z.coeff == std::vector<Rat>(4, Rat(0)));
  TorusDivisor d0 = ray_divisor(f, 0);
  CHECK((d0.coeff == std::vector<Rat>{1, 0, 0, 0}));
  TorusDivisor s = add(scale(make_rat(3, 2), d0), ray_divisor(f, 2));
  CHECK((s.coeff == std::vector<Rat>{make_rat(3, 2), 0, 1, 0}));
  CHECK((sub(s, s).coeff == std::vector<Rat>(4, Rat(0))));
  CHECK(err_of([&] { ray_divisor(f, 7); }) == Err::BadParameters);
  CHECK(err_of([&] { add(d0, zero_divisor(xl(6, 5))); }) == Err::DimensionMismatch);

  TorusDivisor k = canonical_divisor(f);
  CHECK(k.coeff == std::vector<Rat>(4, Rat(-1)));

  TorusDivisor p = principal_divisor(f, RationalVector{Rat(1), Rat(2), Rat(3)});
  CHECK((p.coeff == std::vector<Rat>{1, 2, 3, -6}));
}

TEST_CASE("linear equivalence witnesses") {
  Fan f = xl(6, 5);
  TorusDivisor e1 = ray_divisor(f, 0), d1 = ray_divisor(f, 1), d2 = ray_divisor(f, 2),
               d0 = ray_divisor(f, 3), e0 = ray_divisor(f, 4);

  auto m = linearly_equivalent(f, e1, e0);
  REQUIRE(m.has_value());
  CHECK((*m == RationalVector{Rat(1), Rat(0), Rat(0)}));
  // The witness reconstructs the difference exactly.
  CHECK(sub(e1, e0).coeff == principal_divisor(f, *m).coeff);

  CHECK(linearly_equivalent(f, d1, sub(d0, scale(Rat(6), e0))).has_value());
  CHECK(linearly_equivalent(f, d2, sub(d0, scale(Rat(5), e0))).has_value());
  CHECK(!linearly_equivalent(f, d1, d2).has_value());
  CHECK(!linearly_equivalent(f, d0, d1).has_value());

  // On a complete fan the witness of a shift by div(chi^m) is m itself.
  std::mt19937 rng(777);
  std::uniform_int_distribution<int> c(-9, 9);
  for (int iter = 0; iter < 25; ++iter) {
    TorusDivisor a = zero_divisor(f);
    for (Rat& x : a.coeff) x = c(rng);
    RationalVector mv{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))};
    auto w = linearly_equivalent(f, add(a, principal_divisor(f, mv)), a);
    REQUIRE(w.has_value());
    CHECK((*w == mv));
  }
}

TEST_CASE("class group rank") {
  CHECK(class_group_rank(p3()) == 1);
  CHECK(class_group_rank(xl(6, 5)) == 2);
  CHECK(class_group_rank(bundle_over_p2(3)) == 2);
  CHECK(class_group_rank(weighted_projective({1, 1, 4, 6})) == 1);
  CHECK(class_group_rank(star_subdivision(p3(), LatticePoint{1, 1, 1})) == 2);
}

TEST_CASE("Cartier data solves the cone equations") {
  std::mt19937 rng(4242);
  std::uniform_int_distribution<int> c(-6, 6);
  for (Fan f : {xl(6, 5), xl_minus(6, 5), weighted_projective({1, 1, 1, 3})}) {
    TorusDivisor d = zero_divisor(f);
    for (Rat& x : d.coeff) x = c(rng);
    CartierData cd = q_cartier_data(f, d);
    REQUIRE(cd.m.size() == f.cones.size());
    for (size_t ci = 0; ci < f.cones.size(); ++ci)
      for (int r : f.cones[ci].rays) CHECK(dot(cd.m[ci], f.rays[r]) == -d.coeff[r]);
  }

  Fan g = xl_minus(6, 5);
  CartierData kd = q_cartier_data(g, canonical_divisor(g));
  // Cone {E1, D2, E0} sits at index 3 in canonical order.
  CHECK((g.cones[3].rays == std::array<int, 3>{0, 2, 4}));
  CHECK((kd.m[3] == RationalVector{Rat(1), make_rat(-1, 2), Rat(1)}));
}

TEST_CASE("Cartier index") {
  Fan f = p3();
  CHECK(cartier_index(f, canonical_divisor(f)) == 1);

  Fan p1112 = weighted_projective({1, 1, 1, 2});
  CHECK(cartier_index(p1112, canonical_divisor(p1112)) == 2);
  CHECK(cartier_index(p1112, scale(Rat(2), canonical_divisor(p1112))) == 1);

  Fan p1113 = weighted_projective({1, 1, 1, 3});
  CHECK(cartier_index(p1113, canonical_divisor(p1113)) == 1);

  Fan p1146 = weighted_projective({1, 1, 4, 6});
  CHECK(cartier_index(p1146, canonical_divisor(p1146)) == 1);

  Fan g = xl_minus(6, 5);
  CHECK(cartier_index(g, canonical_divisor(g)) == 10);
}
