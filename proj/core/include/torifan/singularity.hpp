#pragma once

#include "torifan/divisor.hpp"
#include "torifan/fan.hpp"

namespace torifan {

struct DiscrepancyReport {
  LatticePoint point;
  Rat value;
  int cone;  // index of a maximal cone containing the point
};

// Discrepancy of the divisor obtained by blowing up the primitive point w:
// <m_sigma(K), w> - 1. All maximal cones containing w must agree (asserted).
DiscrepancyReport discrepancy(const Fan& f, const LatticePoint& w);

// Same value computed through an actual star subdivision: the pullback of K
// is solved on the refined fan and compared against its canonical divisor.
Rat discrepancy_via_subdivision(const Fan& f, const LatticePoint& w);

struct SingularityVerdict {
  bool ok;
  std::optional<DiscrepancyReport> witness;  // lexicographically smallest violation
};

// Terminal iff for every maximal cone the lattice points of
// {sum lambda_i u_i : lambda_i >= 0, sum lambda_i <= 1} are exactly the
// origin and the generators. Exhaustive enumeration over the bounding box.
SingularityVerdict is_terminal(const Fan& f);

// Canonical iff no nonzero lattice point of that simplex has sum lambda < 1.
SingularityVerdict is_canonical(const Fan& f);

}  // namespace torifan
