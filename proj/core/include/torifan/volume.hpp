#pragma once

#include "torifan/divisor.hpp"
#include "torifan/fan.hpp"

namespace torifan {

// P_D = {m : <m, u_r> >= -coeff[r] for all rays}. For nef D on a complete fan
// the vertex set equals the Cartier data (checked on construction).
struct Polytope3 {
  std::vector<RationalVector> vertices;                  // deduped, lex-sorted
  std::vector<std::pair<LatticePoint, Rat>> halfspaces;  // <u, m> >= c
};

Polytope3 divisor_polytope(const Fan& f, const TorusDivisor& d);

// Two independent evaluations: facet pyramids from an interior point, and
// signed tetrahedra over a fixed vertex with facets oriented by the known
// outward normals.
Rat volume_by_pyramids(const Polytope3& p);
Rat volume_by_signed_tetrahedra(const Polytope3& p);

// Both routes, compared exactly.
Rat polytope_volume(const Polytope3& p);

// D1.D2.D3 by polarizing N -> N^3 = 6 vol(P_N) over nef decompositions of the
// three classes. Requires a projective fan (full-dimensional nef cone).
Rat triple(const Fan& f, const TorusDivisor& d1, const TorusDivisor& d2, const TorusDivisor& d3);

// (-K)^3; when -K is nef this equals 6 vol(P_{-K}), and both routes are
// compared exactly.
Rat anticanonical_volume(const Fan& f);

// Degree of a quasi-smooth hypersurface of degree d in P(w0..w4) against the
// cube of its anticanonical class: d (sum w - d)^3 / prod w.
Rat wps_hypersurface_volume(const Int& degree, const std::array<Int, 5>& weights);

}  // namespace torifan
