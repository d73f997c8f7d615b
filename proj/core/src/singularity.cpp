#include "torifan/singularity.hpp"

#include <algorithm>

namespace torifan {

DiscrepancyReport discrepancy(const Fan& f, const LatticePoint& w) {
  if (!is_primitive(w)) fail(Err::NotPrimitive, "blow-up point " + to_string(w));
  CartierData k = q_cartier_data(f, canonical_divisor(f));
  DiscrepancyReport rep;
  bool found = false;
  for (size_t ci = 0; ci < f.cones.size(); ++ci) {
    if (!cone_coordinates(f, f.cones[ci], w)) continue;
    Rat val = dot(k.m[ci], w) - 1;
    if (found && val != rep.value)
      fail(Err::DegenerateCone, "incident cones disagree on the discrepancy at " + to_string(w));
    if (!found) {
      rep = DiscrepancyReport{w, val, static_cast<int>(ci)};
      found = true;
    }
  }
  if (!found) fail(Err::OutsideSupport, to_string(w) + " is outside the fan support");
  return rep;
}

Rat discrepancy_via_subdivision(const Fan& f, const LatticePoint& w) {
  if (!is_primitive(w)) fail(Err::NotPrimitive, "blow-up point " + to_string(w));
  int existing = f.ray_index(w);
  if (existing >= 0) return Rat(0);  // D_w is already a prime divisor, not exceptional

  CartierData k = q_cartier_data(f, canonical_divisor(f));
  Fan g = star_subdivision(f, w);
  const int wi = g.ray_index(w);

  // Pullback of K: extend each m_sigma over the refinement. Every refined
  // cone lies in a unique coarse cone; evaluate there and check consistency.
  TorusDivisor pullback = zero_divisor(g);
  for (size_t r = 0; r < g.rays.size(); ++r) {
    bool set = false;
    for (size_t ci = 0; ci < f.cones.size(); ++ci) {
      if (!cone_coordinates(f, f.cones[ci], g.rays[r])) continue;
      Rat coeff = -dot(k.m[ci], g.rays[r]);
      if (set && coeff != pullback.coeff[r])
        fail(Err::DegenerateCone, "pullback of K is not well defined");
      pullback.coeff[r] = coeff;
      set = true;
    }
    if (!set) fail(Err::OutsideSupport, "refined ray escaped the fan support");
  }

  // The refined fan must carry the pullback as Q-Cartier data agreeing with
  // the coarse data on each refined cone.
  CartierData kg = q_cartier_data(g, pullback);
  for (size_t ci = 0; ci < g.cones.size(); ++ci) {
    LatticePoint probe = add(add(g.rays[g.cones[ci].rays[0]], g.rays[g.cones[ci].rays[1]]),
                             g.rays[g.cones[ci].rays[2]]);
    for (size_t cj = 0; cj < f.cones.size(); ++cj) {
      if (!cone_coordinates(f, f.cones[cj], probe)) continue;
      if (kg.m[ci] != k.m[cj])
        fail(Err::DegenerateCone, "refined Cartier data disagrees with the coarse data");
      break;
    }
  }

  return canonical_divisor(g).coeff[wi] - pullback.coeff[wi];
}

namespace {

// Lattice points of {sum lambda_i u_i : lambda >= 0, sum lambda <= 1} minus
// the origin and generators, visited cone by cone; keeps the lexicographically
// smallest point violating `pred(sum lambda)`.
template <typename Pred>
SingularityVerdict scan_simplices(const Fan& f, Pred violates) {
  std::optional<DiscrepancyReport> worst;
  for (size_t ci = 0; ci < f.cones.size(); ++ci) {
    const Cone& c = f.cones[ci];
    std::array<LatticePoint, 4> corners{LatticePoint{0, 0, 0}, f.rays[c.rays[0]],
                                        f.rays[c.rays[1]], f.rays[c.rays[2]]};
    LatticePoint lo{0, 0, 0}, hi{0, 0, 0};
    for (const LatticePoint& p : corners)
      for (int i = 0; i < 3; ++i) {
        lo[i] = std::min(lo[i], p[i]);
        hi[i] = std::max(hi[i], p[i]);
      }
    for (Int x = lo[0]; x <= hi[0]; ++x)
      for (Int y = lo[1]; y <= hi[1]; ++y)
        for (Int z = lo[2]; z <= hi[2]; ++z) {
          LatticePoint p{x, y, z};
          if (is_zero(p) || p == corners[1] || p == corners[2] || p == corners[3]) continue;
          auto lam = cone_coordinates(f, c, p);
          if (!lam) continue;
          Rat total = (*lam)[0] + (*lam)[1] + (*lam)[2];
          if (total > 1 || !violates(total)) continue;
          if (!worst || lex_less(p, worst->point))
            worst = DiscrepancyReport{p, total - 1, static_cast<int>(ci)};
        }
  }
  if (worst) return {false, worst};
  return {true, std::nullopt};
}

}  // namespace

SingularityVerdict is_terminal(const Fan& f) {
  return scan_simplices(f, [](const Rat&) { return true; });
}

SingularityVerdict is_canonical(const Fan& f) {
  return scan_simplices(f, [](const Rat& total) { return total < 1; });
}

}  // namespace torifan
