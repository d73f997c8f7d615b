#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>

#include "test_util.hpp"
#include "torifan/intersection.hpp"
#include "torifan/volume.hpp"

using namespace torifan;
using torifan::test::err_of;
using torifan::test::p3;
using torifan::test::xl;
using torifan::test::xl_minus;

static TorusDivisor minus_k(const Fan& f) {
  return scale(Rat(-1), canonical_divisor(f));
}

TEST_CASE("divisor polytopes") {
  Fan f = p3();
  Polytope3 p = divisor_polytope(f, minus_k(f));
  REQUIRE(p.vertices.size() == 4);
  CHECK((p.vertices[0] == RationalVector{Rat(-1), Rat(-1), Rat(-1)}));
  CHECK((p.vertices[3] == RationalVector{Rat(3), Rat(-1), Rat(-1)}));
  CHECK(volume_by_pyramids(p) == make_rat(32, 3));
  CHECK(volume_by_signed_tetrahedra(p) == make_rat(32, 3));
  CHECK(polytope_volume(p) == make_rat(32, 3));

  CHECK(err_of([&] { divisor_polytope(xl(6, 5), minus_k(xl(6, 5))); }) == Err::NotNef);
  Fan half = make_fan({{1, 0, 0}, {0, 1, 0}, {0, 0, 1}}, {{0, 1, 2}});
  CHECK(err_of([&] { divisor_polytope(half, minus_k(half)); }) == Err::Unbounded);
  CHECK(err_of([&] {
          divisor_polytope(f, TorusDivisor{std::vector<Rat>(5, Rat(1))});
        }) == Err::DimensionMismatch);
}

TEST_CASE("flipped-fan polytopes agree across both volume routes") {
  Fan g = xl_minus(6, 5);
  Polytope3 p = divisor_polytope(g, minus_k(g));
  CHECK(p.vertices.size() == 6);
  CHECK(volume_by_pyramids(p) == make_rat(261, 20));
  CHECK(volume_by_signed_tetrahedra(p) == make_rat(261, 20));

  // Degenerate Cartier data: distinct cones share vertices.
  Polytope3 q = divisor_polytope(xl_minus(4, 1), minus_k(xl_minus(4, 1)));
  CHECK(q.vertices.size() == 4);
}

TEST_CASE("anticanonical volumes") {
  CHECK(anticanonical_volume(p3()) == 64);
  CHECK(anticanonical_volume(weighted_projective({1, 1, 1, 2})) == make_rat(125, 2));
  CHECK(anticanonical_volume(weighted_projective({1, 1, 1, 3})) == 72);
  CHECK(anticanonical_volume(weighted_projective({1, 1, 4, 6})) == 72);
  CHECK(anticanonical_volume(bundle_over_p2(0)) == 54);
  CHECK(anticanonical_volume(bundle_over_p2(1)) == 56);
  CHECK(anticanonical_volume(bundle_over_p2(3)) == 72);
  CHECK(anticanonical_volume(xl(6, 5)) == 54);
  CHECK(anticanonical_volume(xl(5, 3)) == 54);
  CHECK(anticanonical_volume(xl(4, 1)) == 54);
  CHECK(anticanonical_volume(xl_minus(6, 5)) == make_rat(783, 10));
  CHECK(anticanonical_volume(xl_minus(5, 3)) == make_rat(342, 5));
  CHECK(anticanonical_volume(xl_minus(4, 1)) == make_rat(243, 4));
}

TEST_CASE("triple products on the rank-two bundle") {
  Fan f = xl(6, 5);
  TorusDivisor d0 = ray_divisor(f, 3), e1 = ray_divisor(f, 0), mk = minus_k(f);
  CHECK(triple(f, d0, d0, d0) == 11);
  CHECK(triple(f, e1, d0, d0) == 1);
  CHECK(triple(f, e1, e1, d0) == 0);
  CHECK(triple(f, e1, e1, e1) == 0);
  CHECK(triple(f, mk, mk, e1) == 9);
  CHECK(triple(f, mk, mk, mk) == 54);

  Fan f53 = xl(5, 3);
  CHECK(triple(f53, ray_divisor(f53, 3), ray_divisor(f53, 3), ray_divisor(f53, 3)) == 8);
}

TEST_CASE("triple is symmetric, trilinear, and descends to classes") {
  std::mt19937 rng(2024);
  std::uniform_int_distribution<int> c(-4, 4);
  for (Fan f : {xl(6, 5), bundle_over_p2(3)}) {
    for (int iter = 0; iter < 6; ++iter) {
      TorusDivisor a = zero_divisor(f), a2 = zero_divisor(f), b = zero_divisor(f),
                   d = zero_divisor(f);
      for (Rat& x : a.coeff) x = c(rng);
      for (Rat& x : a2.coeff) x = c(rng);
      for (Rat& x : b.coeff) x = c(rng);
      for (Rat& x : d.coeff) x = c(rng);

      Rat t = triple(f, a, b, d);
      CHECK(t == triple(f, b, a, d));
      CHECK(t == triple(f, d, b, a));
      CHECK(triple(f, add(a, a2), b, d) == t + triple(f, a2, b, d));
      CHECK(triple(f, scale(make_rat(3, 2), a), b, d) == make_rat(3, 2) * t);

      RationalVector m{Rat(c(rng)), Rat(c(rng)), Rat(c(rng))};
      CHECK(triple(f, add(a, principal_divisor(f, m)), b, d) == t);
    }
  }
}

TEST_CASE("hypersurface volumes in weighted projective space") {
  CHECK(wps_hypersurface_volume(2, {1, 1, 1, 1, 1}) == 54);
  CHECK(wps_hypersurface_volume(4, {1, 1, 1, 1, 1}) == 4);
  CHECK(wps_hypersurface_volume(6, {1, 1, 1, 1, 3}) == 2);
  CHECK(wps_hypersurface_volume(66, {1, 5, 6, 22, 33}) == make_rat(1, 330));
  CHECK(err_of([] { wps_hypersurface_volume(0, {1, 1, 1, 1, 1}); }) == Err::BadParameters);
  CHECK(err_of([] { wps_hypersurface_volume(4, {1, 0, 1, 1, 1}); }) == Err::BadParameters);
  CHECK(err_of([] { wps_hypersurface_volume(5, {1, 1, 1, 1, 1}); }) == Err::BadParameters);
}
