#pragma once

#include "torifan/divisor.hpp"
#include "torifan/fan.hpp"

namespace torifan {

// Numerical class of the torus-invariant curve V(wall). profile[r] = D_r . C;
// reduced expresses the profile in the canonical basis of the curve class
// space (the kernel of the ray matrix, rank = #rays - 3).
struct CurveClass {
  Wall wall;
  std::vector<Rat> profile;
  std::vector<Rat> reduced;
};

// Canonical integral basis of the curve class space.
std::vector<IVec> curve_space_basis(const Fan& f);

CurveClass curve_class(const Fan& f, const Wall& w);

Rat dot(const TorusDivisor& d, const CurveClass& c);

// Pairings of d against the curve-space basis; two divisors are numerically
// equivalent iff these coincide.
QVec divisor_class(const Fan& f, const TorusDivisor& d);

// Deterministic divisor with the given pairing vector.
TorusDivisor lift_class(const Fan& f, const QVec& pairing);

struct MoriRay {
  IVec coords;              // primitive integral reduced coordinates
  std::vector<int> walls;   // indices into walls(f) whose classes lie on the ray
  CurveClass representative;
};

struct MoriCone {
  std::vector<IVec> basis;  // curve_space_basis(f)
  std::vector<MoriRay> rays;
  bool pointed = false;     // pointed iff the fan is projective
};

// Cone generated by all wall classes; extremal rays carry the walls mapping
// onto them. Rank is limited to 4 by the exhaustive dual-cone search.
MoriCone mori_cone(const Fan& f);

struct NefCone {
  std::vector<IVec> generators;      // extreme rays of the dual cone, as pairing vectors
  std::vector<TorusDivisor> lifts;   // deterministic divisor representatives
  bool full_dimensional = false;
};

NefCone nef_cone(const Fan& f);

// Nonnegative against every wall curve; checked directly, not via the dual.
bool is_nef(const Fan& f, const TorusDivisor& d);

}  // namespace torifan
