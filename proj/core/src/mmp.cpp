#include "torifan/mmp.hpp"

#include <stdexcept>

#include "torifan/divisor.hpp"
#include "torifan/singularity.hpp"
#include "torifan/volume.hpp"

namespace torifan {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

struct CircuitShape {
  int n_pos = 0, n_neg = 0;
  int neg_ray = -1;
};

CircuitShape circuit_shape(const Wall& w) {
  CircuitShape s;
  for (size_t r = 0; r < w.relation.size(); ++r) {
    if (w.relation[r] > 0) ++s.n_pos;
    if (w.relation[r] < 0) {
      ++s.n_neg;
      s.neg_ray = static_cast<int>(r);
    }
  }
  return s;
}

std::string sign_suffix(int k_sign) {
  return k_sign < 0 ? "^-" : (k_sign > 0 ? "^+" : "^0");
}

const MoriRay* find_ray(const MoriCone& mc, const IVec& dir) {
  for (const MoriRay& r : mc.rays)
    if (r.coords == dir) return &r;
  return nullptr;
}

IVec negated(const IVec& v) {
  IVec r = v;
  for (Int& x : r) x = -x;
  return r;
}

}  // namespace

RayClassification classify_ray(const Fan& f, const CurveClass& c) {
  MoriCone mc = mori_cone(f);
  IVec dir = primitive_direction(c.reduced);
  const MoriRay* ray = find_ray(mc, dir);
  if (!ray) fail(Err::NotExtremal, "curve class does not span an extremal ray of the Mori cone");

  std::vector<Wall> ws = walls(f);
  CircuitShape shape = circuit_shape(ws[ray->walls.front()]);
  for (int wi : ray->walls) {
    CircuitShape s = circuit_shape(ws[wi]);
    check(s.n_pos == shape.n_pos && s.n_neg == shape.n_neg &&
              (s.n_neg != 1 || s.neg_ray == shape.neg_ray),
          "walls on one extremal ray disagree about the contraction type");
  }

  RayClassification rc;
  rc.ray = c;
  Rat kc = dot(canonical_divisor(f), c);
  rc.k_sign = kc < 0 ? -1 : (kc > 0 ? 1 : 0);
  if (shape.n_neg == 0) {
    rc.kind = RayKind::Fiber;
    rc.base_dim = 4 - shape.n_pos;
    rc.type_label = "(3," + std::to_string(rc.base_dim) + ")" + sign_suffix(rc.k_sign);
  } else if (shape.n_neg == 1) {
    rc.kind = RayKind::Divisorial;
    rc.image_dim = 3 - shape.n_pos;
    rc.contracted_ray = shape.neg_ray;
    rc.type_label = "(2," + std::to_string(rc.image_dim) + ")" + sign_suffix(rc.k_sign);
  } else {
    rc.kind = RayKind::Small;
    rc.type_label = std::string("small") + sign_suffix(rc.k_sign);
  }
  return rc;
}

TwoRayGameReport two_ray_game(const Fan& f, int max_flips) {
  if (class_group_rank(f) != 2) fail(Err::NotRankTwo, "two-ray games need Picard rank 2");
  MoriCone mc = mori_cone(f);
  if (!mc.pointed) fail(Err::NotProjective, "Mori cone is not pointed");
  check(mc.rays.size() == 2, "rank-2 pointed Mori cone must have two extremal rays");

  TwoRayGameReport rep;
  rep.start_volume = anticanonical_volume(f);
  rep.start_terminal = is_terminal(f).ok;

  auto play = [&](const IVec& start) {
    SideReport side;
    side.start_ray = start;
    Fan cur = f;
    IVec dir = start;
    int flips = 0;
    for (;;) {
      MoriCone cone = mori_cone(cur);
      const MoriRay* ray = find_ray(cone, dir);
      check(ray != nullptr, "lost the active extremal ray");
      RayClassification cls = classify_ray(cur, ray->representative);
      if (cls.kind != RayKind::Small) {
        side.end = cls;
        return side;
      }

      // Flip every wall on the ray; flips keep all ray indices, so walls stay
      // identifiable by their ray pair while the wall list is re-derived.
      std::vector<std::array<int, 2>> pairs;
      std::vector<Wall> ws = walls(cur);
      for (int wi : ray->walls) pairs.push_back(ws[wi].rays);
      for (const auto& pr : pairs) {
        if (++flips > max_flips) fail(Err::IterationCapExceeded, "flip cap exceeded");
        const Wall* target = nullptr;
        std::vector<Wall> cw = walls(cur);
        for (const Wall& w : cw)
          if (w.rays == pr) target = &w;
        check(target != nullptr, "flip target wall disappeared");
        GameStep step;
        step.flipped = *target;
        cur = flip(cur, *target);
        step.fan = cur;
        step.volume = anticanonical_volume(cur);
        step.terminal = is_terminal(cur).ok;
        side.steps.push_back(std::move(step));
      }

      MoriCone next = mori_cone(cur);
      check(next.rays.size() == 2, "flip changed the extremal ray count");
      IVec neg = negated(dir);
      check(find_ray(next, neg) != nullptr, "flipped wall class is not anti-extremal");
      IVec other;
      for (const MoriRay& r : next.rays)
        if (r.coords != neg) other = r.coords;
      check(!other.empty(), "no continuation ray after the flip");
      dir = other;
    }
  };

  rep.left = play(mc.rays[0].coords);
  rep.right = play(mc.rays[1].coords);
  return rep;
}

Rat volume_bound_table(const Rat& b_max, const Rat& kf2, const Rat& ratio) {
  if (b_max <= 0 || kf2 <= 0 || ratio <= 0)
    fail(Err::BadParameters, "bound table inputs must be positive");
  return ratio * b_max * kf2;
}

}  // namespace torifan
