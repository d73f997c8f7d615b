#pragma once

#include <string>
#include <vector>

#include "torifan/fan.hpp"
#include "torifan/intersection.hpp"

namespace torifan {

enum class RayKind { Fiber, Divisorial, Small };

inline const char* ray_kind_name(RayKind k) {
  switch (k) {
    case RayKind::Fiber: return "fiber";
    case RayKind::Divisorial: return "divisorial";
    case RayKind::Small: return "small";
  }
  return "?";
}

// Contraction type of an extremal ray, read off the circuit sign pattern of
// its walls. k_sign is the sign of K.C along the ray; type_label follows the
// "(n,m)^s" convention with n = dim of the contracted locus, m = dim of its
// image (small rays get the bare label "small^s").
struct RayClassification {
  CurveClass ray;
  RayKind kind = RayKind::Small;
  int k_sign = 0;
  std::string type_label;
  int base_dim = -1;        // fiber type: dimension of the base
  int image_dim = -1;       // divisorial: dimension of the divisor's image
  int contracted_ray = -1;  // divisorial: fan ray index of the contracted divisor
};

RayClassification classify_ray(const Fan& f, const CurveClass& c);

// One flip performed during a game. `flipped` is a wall of the previous fan;
// `fan` is the result, with its anticanonical volume and terminality verdict.
struct GameStep {
  Fan fan;
  Wall flipped;
  Rat volume;
  bool terminal = false;
};

struct SideReport {
  IVec start_ray;  // primitive curve-space direction of the side's extremal ray
  std::vector<GameStep> steps;
  RayClassification end;
};

// Runs both extremal rays of a rank-2 fan independently: flip while small,
// stop at the first fiber-type or divisorial classification. After a flip the
// game continues along the new fan's other extremal ray.
struct TwoRayGameReport {
  Rat start_volume;
  bool start_terminal = false;
  SideReport left, right;  // sides ordered by the start fan's extremal rays
};

TwoRayGameReport two_ray_game(const Fan& f, int max_flips = 64);

Rat volume_bound_table(const Rat& b_max, const Rat& kf2, const Rat& ratio);

}  // namespace torifan
