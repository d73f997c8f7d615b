#include "torifan/divisor.hpp"

namespace torifan {

TorusDivisor zero_divisor(const Fan& f) { return {std::vector<Rat>(f.rays.size(), Rat(0))}; }

TorusDivisor ray_divisor(const Fan& f, int ray) {
  if (ray < 0 || ray >= static_cast<int>(f.rays.size()))
    fail(Err::BadParameters, "ray index out of range");
  TorusDivisor d = zero_divisor(f);
  d.coeff[ray] = 1;
  return d;
}

static void check_size(const Fan& f, const TorusDivisor& d) {
  if (d.coeff.size() != f.rays.size())
    fail(Err::DimensionMismatch, "divisor does not match the fan's rays");
}

TorusDivisor add(const TorusDivisor& a, const TorusDivisor& b) {
  if (a.coeff.size() != b.coeff.size()) fail(Err::DimensionMismatch, "divisor size mismatch");
  TorusDivisor r = a;
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] += b.coeff[i];
  return r;
}

TorusDivisor sub(const TorusDivisor& a, const TorusDivisor& b) {
  if (a.coeff.size() != b.coeff.size()) fail(Err::DimensionMismatch, "divisor size mismatch");
  TorusDivisor r = a;
  for (size_t i = 0; i < r.coeff.size(); ++i) r.coeff[i] -= b.coeff[i];
  return r;
}

TorusDivisor scale(const Rat& k, const TorusDivisor& a) {
  TorusDivisor r = a;
  for (Rat& c : r.coeff) c *= k;
  return r;
}

TorusDivisor canonical_divisor(const Fan& f) {
  return {std::vector<Rat>(f.rays.size(), Rat(-1))};
}

TorusDivisor principal_divisor(const Fan& f, const RationalVector& m) {
  TorusDivisor d = zero_divisor(f);
  for (size_t r = 0; r < f.rays.size(); ++r) d.coeff[r] = dot(m, f.rays[r]);
  return d;
}

std::optional<RationalVector> linearly_equivalent(const Fan& f, const TorusDivisor& a,
                                                  const TorusDivisor& b) {
  check_size(f, a);
  check_size(f, b);
  QMat M(f.rays.size(), QVec(3));
  QVec rhs(f.rays.size());
  for (size_t r = 0; r < f.rays.size(); ++r) {
    for (int j = 0; j < 3; ++j) M[r][j] = Rat(f.rays[r][j]);
    rhs[r] = a.coeff[r] - b.coeff[r];
  }
  auto m = solve(M, rhs);
  if (!m) return std::nullopt;
  return RationalVector{(*m)[0], (*m)[1], (*m)[2]};
}

int class_group_rank(const Fan& f) {
  QMat M(f.rays.size(), QVec(3));
  for (size_t r = 0; r < f.rays.size(); ++r)
    for (int j = 0; j < 3; ++j) M[r][j] = Rat(f.rays[r][j]);
  return static_cast<int>(f.rays.size()) - rank(M);
}

CartierData q_cartier_data(const Fan& f, const TorusDivisor& d) {
  check_size(f, d);
  CartierData cd;
  for (const Cone& c : f.cones) {
    IntMatrix A(3, 3);
    RationalVector rhs;
    for (int row = 0; row < 3; ++row) {
      for (int col = 0; col < 3; ++col) A.at(row, col) = f.rays[c.rays[row]][col];
      rhs[row] = -d.coeff[c.rays[row]];
    }
    cd.m.push_back(solve_rational(A, rhs));
  }
  return cd;
}

Int cartier_index(const Fan& f, const TorusDivisor& d) {
  CartierData cd = q_cartier_data(f, d);
  Int k = 1;
  for (const RationalVector& m : cd.m)
    for (const Rat& e : m) k = lcm(k, e.get_den());
  return k;
}

}  // namespace torifan
