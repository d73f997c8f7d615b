#pragma once

#include <array>
#include <string>
#include <vector>

#include "torifan/lattice.hpp"

namespace torifan {

// Maximal (3-dimensional, simplicial) cone; ray indices ascending.
struct Cone {
  std::array<int, 3> rays;
  Int mult;  // index of Z<generators> in N
};

// Codimension-one face shared by exactly two maximal cones.
struct Wall {
  std::array<int, 2> rays;   // ascending
  int cone_a, cone_b;        // incident maximal cones, cone_a < cone_b
  int off_a, off_b;          // ray of cone_a resp. cone_b not on the wall
  IVec relation;             // circuit over all fan rays: sum relation[r]*u_r = 0,
                             // content 1, off-wall coefficients positive
  Int mult;                  // sublattice index of the wall's ray pair
};

// Simplicial fan in a rank-3 lattice. Rays are primitive and distinct, cones
// are stored in canonical order (indices ascending inside a cone, cones
// sorted lexicographically), and pairwise intersections of maximal cones are
// common faces.
struct Fan {
  std::vector<LatticePoint> rays;
  std::vector<std::string> names;  // parallel to rays, "" when unnamed
  std::vector<Cone> cones;
  bool complete = false;
  std::vector<std::string> warnings;  // non-fatal validation notes

  int ray_index(const LatticePoint& v) const;     // -1 when absent
  int ray_index(const std::string& name) const;   // -1 when absent
  std::string ray_label(int i) const;             // name or coordinate string
};

// Validates and canonicalizes. Non-primitive input rays are normalized with a
// warning; overlap and purity violations are errors.
Fan make_fan(std::vector<LatticePoint> rays, const std::vector<std::vector<int>>& cones,
             std::vector<std::string> names = {});

// All walls of a complete fan, sorted by ray pair.
std::vector<Wall> walls(const Fan& f);

// Bistellar exchange across w: requires circuit sign pattern (2,2); the two
// cones through w are replaced by the two cones through the opposite pair.
Fan flip(const Fan& f, const Wall& w);

// Refines every maximal cone containing w by coning over w; identity when w
// is already a ray.
Fan star_subdivision(const Fan& f, const LatticePoint& w);

// P(O + O(alpha) + O(beta)) over P^1, alpha >= beta >= 0.
// Rays: E1=(1,0,0), D1=(0,1,0), D2=(0,0,1), D0=(0,-1,-1), E0=(-1,alpha,beta).
Fan bundle_over_p1(const Int& alpha, const Int& beta);

// P(O + O(a)) over P^2, a >= 0.
// Rays: U1=(1,0,0), U2=(0,1,0), U0=(-1,-1,a), F+=(0,0,1), F-=(0,0,-1).
Fan bundle_over_p2(const Int& twist);

// P(w0,w1,w2,w3) via the quotient lattice Z^4/Zw; requires every weight
// triple coprime so that all four rays are primitive.
Fan weighted_projective(const std::array<Int, 4>& w);

// Structural equality: same ray table (order included) and same cone set.
bool same_fan(const Fan& a, const Fan& b);

bool is_smooth(const Fan& f);  // every maximal cone unimodular

// Barycentric coordinates of x in the cone, all >= 0, or nullopt.
std::optional<RationalVector> cone_coordinates(const Fan& f, const Cone& c, const LatticePoint& x);

}  // namespace torifan
