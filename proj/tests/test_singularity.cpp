#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <tuple>

#include "test_util.hpp"
#include "torifan/singularity.hpp"

using namespace torifan;
using torifan::test::err_of;
using torifan::test::p3;
using torifan::test::xl;
using torifan::test::xl_minus;

TEST_CASE("discrepancies on a smooth fan") {
  Fan f = p3();
  DiscrepancyReport r = discrepancy(f, LatticePoint{1, 1, 1});
  CHECK(r.value == 2);
  CHECK(discrepancy(f, LatticePoint{1, 1, 0}).value == 1);
  CHECK(discrepancy(f, LatticePoint{1, 0, 0}).value == 0);
  CHECK(discrepancy_via_subdivision(f, LatticePoint{1, 1, 1}) == 2);
  CHECK(discrepancy_via_subdivision(f, LatticePoint{1, 1, 0}) == 1);
  CHECK(err_of([&] { discrepancy(f, LatticePoint{2, 2, 2}); }) == Err::NotPrimitive);
}

TEST_CASE("discrepancies at the flipped cone point") {
  std::vector<std::tuple<int, int, Rat>> cases = {
      {6, 5, make_rat(-1, 2)}, {5, 3, make_rat(-1, 5)}, {4, 1, make_rat(1, 4)}};
  for (auto [a, b, v] : cases) {
    Fan g = xl_minus(a, b);
    DiscrepancyReport r = discrepancy(g, LatticePoint{0, 1, 1});
    CHECK(r.value == v);
    CHECK((r.point == LatticePoint{0, 1, 1}));
    CHECK(discrepancy_via_subdivision(g, LatticePoint{0, 1, 1}) == v);
  }
}

TEST_CASE("discrepancy needs the point inside the support") {
  Fan half = make_fan({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}});
  CHECK(err_of([&] { discrepancy(half, LatticePoint{-1, -1, -1}); }) ==
        Err::OutsideSupport);
}

TEST_CASE("terminal and canonical verdicts") {
  for (Fan f : {p3(), xl(6, 5), xl(5, 3), bundle_over_p2(3), bundle_over_p2(0)}) {
    CHECK(is_smooth(f));
    CHECK(is_terminal(f).ok);
    CHECK(is_canonical(f).ok);
  }

  Fan p1112 = weighted_projective({1, 1, 1, 2});
  CHECK(is_terminal(p1112).ok);
  CHECK(is_canonical(p1112).ok);

  Fan p1113 = weighted_projective({1, 1, 1, 3});
  SingularityVerdict t = is_terminal(p1113);
  CHECK(!t.ok);
  REQUIRE(t.witness.has_value());
  CHECK(t.witness->value == 0);
  CHECK(is_canonical(p1113).ok);
  CHECK(discrepancy_via_subdivision(p1113, t.witness->point) == 0);

  Fan p1146 = weighted_projective({1, 1, 4, 6});
  SingularityVerdict t2 = is_terminal(p1146);
  CHECK(!t2.ok);
  REQUIRE(t2.witness.has_value());
  CHECK(t2.witness->value == 0);
  CHECK(is_canonical(p1146).ok);
}

TEST_CASE("flipped fans by discrepancy sign") {
  Fan g65 = xl_minus(6, 5);
  SingularityVerdict t = is_terminal(g65);
  CHECK(!t.ok);
  REQUIRE(t.witness.has_value());
  CHECK((t.witness->point == LatticePoint{0, 1, 1}));
  CHECK(t.witness->value == make_rat(-1, 2));
  CHECK(!is_canonical(g65).ok);

  CHECK(!is_terminal(xl_minus(5, 3)).ok);

  Fan g41 = xl_minus(4, 1);
  CHECK(is_terminal(g41).ok);
  CHECK(is_canonical(g41).ok);
}
