#pragma once

#include <optional>

#include "torifan/fan.hpp"

namespace torifan {

// Torus-invariant Q-divisor sum coeff[r] * D_r over the fan's rays.
struct TorusDivisor {
  std::vector<Rat> coeff;
};

TorusDivisor zero_divisor(const Fan& f);
TorusDivisor ray_divisor(const Fan& f, int ray);  // D_ray
TorusDivisor add(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor sub(const TorusDivisor& a, const TorusDivisor& b);
TorusDivisor scale(const Rat& k, const TorusDivisor& a);

// K = -sum D_r.
TorusDivisor canonical_divisor(const Fan& f);

// div(chi^m): coefficient <m, u_r> on each ray.
TorusDivisor principal_divisor(const Fan& f, const RationalVector& m);

// Witness m with a - b = div(chi^m); nullopt when none exists.
std::optional<RationalVector> linearly_equivalent(const Fan& f, const TorusDivisor& a,
                                                  const TorusDivisor& b);

// Rank of the divisor class group modulo torsion: #rays - rank of the ray
// matrix (#rays - 3 for complete fans).
int class_group_rank(const Fan& f);

// Per maximal cone the linear functional with <m_sigma, u_r> = -coeff[r] on
// the cone's rays; exists for every divisor since the fan is simplicial.
struct CartierData {
  std::vector<RationalVector> m;  // parallel to f.cones
};

CartierData q_cartier_data(const Fan& f, const TorusDivisor& d);

// Smallest k >= 1 with k*d Cartier: lcm of the Cartier-data denominators.
Int cartier_index(const Fan& f, const TorusDivisor& d);

}  // namespace torifan
