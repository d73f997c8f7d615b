#include "torifan/intersection.hpp"

#include <algorithm>
#include <functional>
#include <map>

namespace torifan {

std::vector<IVec> curve_space_basis(const Fan& f) {
  QMat U(3, QVec(f.rays.size()));
  for (size_t r = 0; r < f.rays.size(); ++r)
    for (int i = 0; i < 3; ++i) U[i][r] = Rat(f.rays[r][i]);
  return kernel_basis(U);
}

namespace {

QVec reduce_to_basis(const std::vector<IVec>& basis, const QVec& v) {
  const size_t n = v.size();
  QMat M(n, QVec(basis.size()));
  for (size_t r = 0; r < n; ++r)
    for (size_t b = 0; b < basis.size(); ++b) M[r][b] = Rat(basis[b][r]);
  auto x = solve(M, v);
  if (!x) fail(Err::DimensionMismatch, "vector outside the curve class space");
  return *x;
}

// Facet description of cone(gens) in Q^d, d <= 4: kernels of (d-1)-subsets,
// kept when one orientation is nonnegative on every generator. Every such
// vector is an extreme ray of the dual cone.
struct DualDescription {
  std::vector<IVec> normals;
  bool pointed = false;
};

int ivec_rank(const std::vector<IVec>& vs, int d) {
  if (vs.empty()) return 0;
  QMat M(vs.size(), QVec(d));
  for (size_t i = 0; i < vs.size(); ++i)
    for (int j = 0; j < d; ++j) M[i][j] = Rat(vs[i][j]);
  return rank(M);
}

DualDescription dual_description(const std::vector<IVec>& gens, int d) {
  if (d > 4) fail(Err::DimensionMismatch, "dual-cone search supports rank <= 4");
  DualDescription out;
  std::vector<IVec> candidates;
  if (d == 1) {
    candidates = {{Int(1)}, {Int(-1)}};
  } else {
    std::vector<std::vector<int>> subsets;
    std::vector<int> comb(d - 1);
    std::function<void(int, int)> rec = [&](int start, int k) {
      if (k == d - 1) {
        subsets.push_back(comb);
        return;
      }
      for (int i = start; i < static_cast<int>(gens.size()); ++i) {
        comb[k] = i;
        rec(i + 1, k + 1);
      }
    };
    rec(0, 0);
    for (const auto& sub : subsets) {
      QMat M(sub.size(), QVec(d));
      for (size_t i = 0; i < sub.size(); ++i)
        for (int j = 0; j < d; ++j) M[i][j] = Rat(gens[sub[i]][j]);
      auto ker = kernel_basis(M);
      if (ker.size() != 1) continue;  // subset not of rank d-1
      candidates.push_back(ker[0]);
      IVec negated = ker[0];
      for (Int& z : negated) z = -z;
      candidates.push_back(negated);
    }
  }
  for (const IVec& n : candidates) {
    bool ok = true;
    for (const IVec& g : gens) {
      Rat s = 0;
      for (int j = 0; j < d; ++j) s += Rat(n[j]) * Rat(g[j]);
      if (s < 0) {
        ok = false;
        break;
      }
    }
    if (ok && std::find(out.normals.begin(), out.normals.end(), n) == out.normals.end())
      out.normals.push_back(n);
  }
  std::sort(out.normals.begin(), out.normals.end());
  out.pointed = ivec_rank(out.normals, d) == d;
  return out;
}

}  // namespace

CurveClass curve_class(const Fan& f, const Wall& w) {
  CurveClass c;
  c.wall = w;
  const Int scale_a = w.relation[w.off_a] * f.cones[w.cone_a].mult;
  const Int scale_b = w.relation[w.off_b] * f.cones[w.cone_b].mult;
  if (scale_a != scale_b)
    fail(Err::DegenerateCone, "wall circuit scaling is inconsistent");
  Rat factor = make_rat(w.mult, scale_a);
  c.profile.resize(f.rays.size());
  for (size_t r = 0; r < f.rays.size(); ++r) c.profile[r] = Rat(w.relation[r]) * factor;
  c.reduced = reduce_to_basis(curve_space_basis(f), c.profile);
  return c;
}

Rat dot(const TorusDivisor& d, const CurveClass& c) {
  if (d.coeff.size() != c.profile.size()) fail(Err::DimensionMismatch, "divisor/curve size mismatch");
  Rat s = 0;
  for (size_t r = 0; r < d.coeff.size(); ++r) s += d.coeff[r] * c.profile[r];
  return s;
}

QVec divisor_class(const Fan& f, const TorusDivisor& d) {
  if (d.coeff.size() != f.rays.size()) fail(Err::DimensionMismatch, "divisor does not match the fan");
  auto basis = curve_space_basis(f);
  QVec y(basis.size());
  for (size_t b = 0; b < basis.size(); ++b) y[b] = dot(basis[b], d.coeff);
  return y;
}

TorusDivisor lift_class(const Fan& f, const QVec& pairing) {
  auto basis = curve_space_basis(f);
  if (pairing.size() != basis.size()) fail(Err::DimensionMismatch, "pairing vector has wrong rank");
  QMat M(basis.size(), QVec(f.rays.size()));
  for (size_t b = 0; b < basis.size(); ++b)
    for (size_t r = 0; r < f.rays.size(); ++r) M[b][r] = Rat(basis[b][r]);
  auto a = solve(M, pairing);
  if (!a) fail(Err::DimensionMismatch, "curve-space basis is degenerate");
  return {*a};
}

MoriCone mori_cone(const Fan& f) {
  MoriCone mc;
  mc.basis = curve_space_basis(f);
  const int rho = static_cast<int>(mc.basis.size());
  auto ws = walls(f);

  std::map<IVec, std::vector<int>> on_ray;
  std::map<IVec, CurveClass> rep;
  std::vector<IVec> dirs;
  for (size_t wi = 0; wi < ws.size(); ++wi) {
    CurveClass c = curve_class(f, ws[wi]);
    IVec dir = primitive_direction(c.reduced);
    if (!on_ray.count(dir)) {
      dirs.push_back(dir);
      rep.emplace(dir, c);
    }
    on_ray[dir].push_back(static_cast<int>(wi));
  }
  if (ivec_rank(dirs, rho) != rho)
    fail(Err::DimensionMismatch, "wall classes do not span the curve class space");

  DualDescription dd = dual_description(dirs, rho);
  mc.pointed = dd.pointed;
  if (!mc.pointed) return mc;

  std::sort(dirs.begin(), dirs.end());
  for (const IVec& dir : dirs) {
    std::vector<IVec> active;
    for (const IVec& n : dd.normals) {
      Rat s = 0;
      for (int j = 0; j < rho; ++j) s += Rat(n[j]) * Rat(dir[j]);
      if (s == 0) active.push_back(n);
    }
    if (ivec_rank(active, rho) == rho - 1)
      mc.rays.push_back(MoriRay{dir, on_ray[dir], rep.at(dir)});
  }
  return mc;
}

NefCone nef_cone(const Fan& f) {
  auto basis = curve_space_basis(f);
  const int rho = static_cast<int>(basis.size());
  auto ws = walls(f);
  std::vector<IVec> dirs;
  for (const Wall& w : ws) {
    IVec dir = primitive_direction(curve_class(f, w).reduced);
    if (std::find(dirs.begin(), dirs.end(), dir) == dirs.end()) dirs.push_back(dir);
  }
  DualDescription dd = dual_description(dirs, rho);
  NefCone nc;
  nc.full_dimensional = dd.pointed;
  nc.generators = dd.normals;
  for (const IVec& g : nc.generators) {
    QVec y(g.size());
    for (size_t i = 0; i < g.size(); ++i) y[i] = Rat(g[i]);
    nc.lifts.push_back(lift_class(f, y));
  }
  return nc;
}

bool is_nef(const Fan& f, const TorusDivisor& d) {
  for (const Wall& w : walls(f))
    if (dot(d, curve_class(f, w)) < 0) return false;
  return true;
}

}  // namespace torifan
