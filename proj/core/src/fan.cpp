#include "torifan/fan.hpp"

#include <algorithm>
#include <map>
#include <set>

namespace torifan {

int Fan::ray_index(const LatticePoint& v) const {
  for (size_t i = 0; i < rays.size(); ++i)
    if (rays[i] == v) return static_cast<int>(i);
  return -1;
}

int Fan::ray_index(const std::string& name) const {
  if (name.empty()) return -1;
  for (size_t i = 0; i < names.size(); ++i)
    if (names[i] == name) return static_cast<int>(i);
  return -1;
}

std::string Fan::ray_label(int i) const {
  if (!names[i].empty()) return names[i];
  return to_string(rays[i]);
}

namespace {

// Inward facet normals of a simplicial full-dimensional cone: normals[i] is
// orthogonal to the two generators other than i and positive on g[i].
std::array<LatticePoint, 3> facet_normals(const std::array<LatticePoint, 3>& g) {
  std::array<LatticePoint, 3> n;
  for (int i = 0; i < 3; ++i) {
    LatticePoint c = cross(g[(i + 1) % 3], g[(i + 2) % 3]);
    if (dot(c, g[i]) < 0) c = neg(c);
    n[i] = c;
  }
  return n;
}

// The two cones intersect in a common face iff every extreme ray of their
// intersection is a shared generator. Extreme rays of the intersection are
// found among pairwise intersections of the six facet hyperplanes.
bool common_face(const Fan& f, const Cone& a, const Cone& b) {
  std::set<int> shared;
  for (int ra : a.rays)
    for (int rb : b.rays)
      if (ra == rb) shared.insert(ra);

  std::array<LatticePoint, 3> ga{f.rays[a.rays[0]], f.rays[a.rays[1]], f.rays[a.rays[2]]};
  std::array<LatticePoint, 3> gb{f.rays[b.rays[0]], f.rays[b.rays[1]], f.rays[b.rays[2]]};
  auto na = facet_normals(ga);
  auto nb = facet_normals(gb);
  std::vector<LatticePoint> h(na.begin(), na.end());
  h.insert(h.end(), nb.begin(), nb.end());

  std::set<LatticePoint> shared_rays;
  for (int r : shared) shared_rays.insert(f.rays[r]);

  for (size_t i = 0; i < h.size(); ++i) {
    for (size_t j = i + 1; j < h.size(); ++j) {
      LatticePoint r = cross(h[i], h[j]);
      if (is_zero(r)) continue;
      for (LatticePoint s : {r, neg(r)}) {
        bool inside = true;
        for (const LatticePoint& n : h) {
          if (dot(n, s) < 0) {
            inside = false;
            break;
          }
        }
        if (inside && !shared_rays.count(primitive(s))) return false;
      }
    }
  }
  return true;
}

}  // namespace

Fan make_fan(std::vector<LatticePoint> rays, const std::vector<std::vector<int>>& cones,
             std::vector<std::string> names) {
  Fan f;
  if (rays.empty()) fail(Err::BadParameters, "fan needs at least one ray");
  if (names.empty()) names.assign(rays.size(), "");
  if (names.size() != rays.size()) fail(Err::BadParameters, "names do not match rays");

  for (size_t i = 0; i < rays.size(); ++i) {
    LatticePoint p = primitive(rays[i]);
    if (p != rays[i]) {
      f.warnings.push_back("ray " + std::to_string(i) + " " + to_string(rays[i]) +
                           " normalized to " + to_string(p));
      rays[i] = p;
    }
  }
  for (size_t i = 0; i < rays.size(); ++i)
    for (size_t j = i + 1; j < rays.size(); ++j)
      if (rays[i] == rays[j])
        fail(Err::DuplicateRay, "rays " + std::to_string(i) + " and " + std::to_string(j) +
                                    " coincide at " + to_string(rays[i]));
  f.rays = std::move(rays);
  f.names = std::move(names);

  const int nr = static_cast<int>(f.rays.size());
  std::vector<bool> used(nr, false);
  for (const auto& idx : cones) {
    if (idx.size() != 3)
      fail(Err::NotPure, "maximal cone with " + std::to_string(idx.size()) + " rays");
    std::array<int, 3> t{idx[0], idx[1], idx[2]};
    std::sort(t.begin(), t.end());
    for (int r : t)
      if (r < 0 || r >= nr) fail(Err::ParseError, "cone ray index " + std::to_string(r) + " out of range");
    if (t[0] == t[1] || t[1] == t[2]) fail(Err::NotPure, "maximal cone with repeated rays");
    Int d = det3(f.rays[t[0]], f.rays[t[1]], f.rays[t[2]]);
    if (d == 0)
      fail(Err::DegenerateCone, "cone {" + std::to_string(t[0]) + "," + std::to_string(t[1]) +
                                    "," + std::to_string(t[2]) + "} is not full-dimensional");
    for (int r : t) used[r] = true;
    f.cones.push_back(Cone{t, abs(d)});
  }
  if (f.cones.empty()) fail(Err::BadParameters, "fan needs at least one maximal cone");
  for (int r = 0; r < nr; ++r)
    if (!used[r]) fail(Err::BadParameters, "ray " + std::to_string(r) + " lies in no maximal cone");

  std::sort(f.cones.begin(), f.cones.end(),
            [](const Cone& a, const Cone& b) { return a.rays < b.rays; });
  for (size_t i = 0; i + 1 < f.cones.size(); ++i)
    if (f.cones[i].rays == f.cones[i + 1].rays)
      fail(Err::OverlappingCones, "maximal cone listed twice");

  for (size_t i = 0; i < f.cones.size(); ++i)
    for (size_t j = i + 1; j < f.cones.size(); ++j)
      if (!common_face(f, f.cones[i], f.cones[j]))
        fail(Err::OverlappingCones, "cones " + std::to_string(i) + " and " + std::to_string(j) +
                                        " do not meet in a common face");

  // In an overlap-free pure fan every facet lies in at most two maximal
  // cones; the support is all of N_R exactly when each lies in two.
  std::map<std::array<int, 2>, int> facet_count;
  for (const Cone& c : f.cones) {
    for (int k = 0; k < 3; ++k) {
      std::array<int, 2> pair{c.rays[k == 0 ? 1 : 0], c.rays[k == 2 ? 1 : 2]};
      ++facet_count[pair];
    }
  }
  f.complete = true;
  for (const auto& [pair, count] : facet_count) {
    if (count > 2)
      fail(Err::OverlappingCones, "facet shared by more than two maximal cones");
    if (count != 2) f.complete = false;
  }
  return f;
}

std::vector<Wall> walls(const Fan& f) {
  if (!f.complete) fail(Err::NotComplete, "walls are defined for complete fans");
  std::map<std::array<int, 2>, std::vector<int>> incident;
  for (size_t ci = 0; ci < f.cones.size(); ++ci) {
    const auto& t = f.cones[ci].rays;
    incident[{t[0], t[1]}].push_back(static_cast<int>(ci));
    incident[{t[0], t[2]}].push_back(static_cast<int>(ci));
    incident[{t[1], t[2]}].push_back(static_cast<int>(ci));
  }
  std::vector<Wall> out;
  for (const auto& [pair, cs] : incident) {
    Wall w;
    w.rays = pair;
    w.cone_a = cs[0];
    w.cone_b = cs[1];
    auto off_ray = [&](int ci) {
      for (int r : f.cones[ci].rays)
        if (r != pair[0] && r != pair[1]) return r;
      return -1;
    };
    w.off_a = off_ray(w.cone_a);
    w.off_b = off_ray(w.cone_b);
    w.mult = sublattice_index({f.rays[pair[0]], f.rays[pair[1]]});

    // Circuit of the four rays: coefficients are signed complementary minors.
    std::array<int, 4> idx{pair[0], pair[1], w.off_a, w.off_b};
    std::sort(idx.begin(), idx.end());
    std::array<Int, 4> b;
    for (int k = 0; k < 4; ++k) {
      std::array<LatticePoint, 3> rest;
      int p = 0;
      for (int l = 0; l < 4; ++l)
        if (l != k) rest[p++] = f.rays[idx[l]];
      b[k] = (k % 2 == 0 ? 1 : -1) * det3(rest[0], rest[1], rest[2]);
    }
    Int content = 0;
    for (const Int& z : b) content = gcd(content, abs(z));
    for (Int& z : b) z /= content;
    w.relation.assign(f.rays.size(), Int(0));
    for (int k = 0; k < 4; ++k) w.relation[idx[k]] = b[k];
    if (sgn(w.relation[w.off_a]) != sgn(w.relation[w.off_b]) || w.relation[w.off_a] == 0)
      fail(Err::DegenerateCone, "wall circuit with off-wall rays on one side");
    if (w.relation[w.off_a] < 0)
      for (Int& z : w.relation) z = -z;

    LatticePoint check{0, 0, 0};
    for (size_t r = 0; r < f.rays.size(); ++r) check = add(check, scale(w.relation[r], f.rays[r]));
    if (!is_zero(check)) fail(Err::DegenerateCone, "wall relation is not a circuit");
    out.push_back(std::move(w));
  }
  return out;
}

Fan flip(const Fan& f, const Wall& w) {
  if (!f.complete) fail(Err::NotComplete, "flip is defined for complete fans");
  auto in_cone = [&](int ci, int ray) {
    const auto& t = f.cones[ci].rays;
    return t[0] == ray || t[1] == ray || t[2] == ray;
  };
  if (w.cone_a < 0 || w.cone_b < 0 || w.cone_a >= static_cast<int>(f.cones.size()) ||
      w.cone_b >= static_cast<int>(f.cones.size()) || !in_cone(w.cone_a, w.rays[0]) ||
      !in_cone(w.cone_a, w.off_a) || !in_cone(w.cone_b, w.rays[1]) || !in_cone(w.cone_b, w.off_b))
    fail(Err::BadParameters, "wall does not belong to this fan");
  if (w.relation[w.rays[0]] >= 0 || w.relation[w.rays[1]] >= 0)
    fail(Err::FlipNotDefined,
         "circuit sign pattern is not (2,2) on wall {" + f.ray_label(w.rays[0]) + "," +
             f.ray_label(w.rays[1]) + "}");

  std::vector<std::vector<int>> cones;
  for (size_t ci = 0; ci < f.cones.size(); ++ci) {
    if (static_cast<int>(ci) == w.cone_a || static_cast<int>(ci) == w.cone_b) continue;
    const auto& t = f.cones[ci].rays;
    cones.push_back({t[0], t[1], t[2]});
  }
  cones.push_back({w.off_a, w.off_b, w.rays[0]});
  cones.push_back({w.off_a, w.off_b, w.rays[1]});
  return make_fan(f.rays, cones, f.names);
}

std::optional<RationalVector> cone_coordinates(const Fan& f, const Cone& c, const LatticePoint& x) {
  IntMatrix g(3, 3);
  for (int col = 0; col < 3; ++col) {
    const LatticePoint& u = f.rays[c.rays[col]];
    for (int row = 0; row < 3; ++row) g.at(row, col) = u[row];
  }
  RationalVector rhs{Rat(x[0]), Rat(x[1]), Rat(x[2])};
  RationalVector lam = solve_rational(g, rhs);
  for (const Rat& l : lam)
    if (l < 0) return std::nullopt;
  return lam;
}

Fan star_subdivision(const Fan& f, const LatticePoint& w) {
  if (!is_primitive(w)) fail(Err::NotPrimitive, "subdivision point " + to_string(w));
  if (f.ray_index(w) >= 0) return f;

  const int wi = static_cast<int>(f.rays.size());
  std::vector<std::vector<int>> cones;
  bool found = false;
  for (const Cone& c : f.cones) {
    auto lam = cone_coordinates(f, c, w);
    if (!lam) {
      cones.push_back({c.rays[0], c.rays[1], c.rays[2]});
      continue;
    }
    found = true;
    for (int k = 0; k < 3; ++k) {
      if ((*lam)[k] == 0) continue;  // w lies on the facet opposite to k
      cones.push_back({c.rays[(k + 1) % 3], c.rays[(k + 2) % 3], wi});
    }
  }
  if (!found) fail(Err::OutsideSupport, to_string(w) + " is outside the fan support");

  std::vector<LatticePoint> rays = f.rays;
  rays.push_back(w);
  std::vector<std::string> names = f.names;
  names.push_back("");
  return make_fan(std::move(rays), cones, std::move(names));
}

Fan bundle_over_p1(const Int& alpha, const Int& beta) {
  if (!(alpha >= beta && beta >= 0))
    fail(Err::BadParameters, "bundle_over_p1 needs alpha >= beta >= 0");
  std::vector<LatticePoint> rays{
      {1, 0, 0}, {0, 1, 0}, {0, 0, 1}, {0, -1, -1}, {-1, alpha, beta}};
  std::vector<std::vector<int>> cones{{0, 1, 2}, {0, 3, 2}, {0, 3, 1},
                                      {4, 1, 2}, {4, 3, 2}, {4, 3, 1}};
  return make_fan(std::move(rays), cones, {"E1", "D1", "D2", "D0", "E0"});
}

Fan bundle_over_p2(const Int& twist) {
  if (twist < 0) fail(Err::BadParameters, "bundle_over_p2 needs twist >= 0");
  std::vector<LatticePoint> rays{
      {1, 0, 0}, {0, 1, 0}, {-1, -1, twist}, {0, 0, 1}, {0, 0, -1}};
  std::vector<std::vector<int>> cones{{0, 1, 3}, {0, 1, 4}, {1, 2, 3},
                                      {1, 2, 4}, {2, 0, 3}, {2, 0, 4}};
  return make_fan(std::move(rays), cones, {"U1", "U2", "U0", "F+", "F-"});
}

Fan weighted_projective(const std::array<Int, 4>& w) {
  for (const Int& wi : w)
    if (wi < 1) fail(Err::BadWeights, "weights must be positive");
  for (int skip = 0; skip < 4; ++skip) {
    Int g = 0;
    for (int i = 0; i < 4; ++i)
      if (i != skip) g = gcd(g, w[i]);
    if (g != 1)
      fail(Err::BadWeights, "weight triple omitting w" + std::to_string(skip) +
                                " has gcd " + to_string(g) + "; rays cannot all be primitive");
  }

  // Unimodular U with U w = (1,0,0,0)^T; the last three rows present
  // Z^4/Zw = Z^3 and the columns become the rays.
  std::array<std::array<Int, 4>, 4> U;
  for (int i = 0; i < 4; ++i)
    for (int j = 0; j < 4; ++j) U[i][j] = (i == j) ? 1 : 0;
  Int g = w[0];
  for (int i = 1; i < 4; ++i) {
    Int d, s, t;
    mpz_gcdext(d.get_mpz_t(), s.get_mpz_t(), t.get_mpz_t(), g.get_mpz_t(), w[i].get_mpz_t());
    std::array<Int, 4> r0 = U[0], ri = U[i];
    for (int j = 0; j < 4; ++j) {
      U[0][j] = s * r0[j] + t * ri[j];
      U[i][j] = -(w[i] / d) * r0[j] + (g / d) * ri[j];
    }
    g = d;
  }

  std::vector<LatticePoint> rays(4);
  for (int i = 0; i < 4; ++i) rays[i] = {U[1][i], U[2][i], U[3][i]};
  LatticePoint s{0, 0, 0};
  for (int i = 0; i < 4; ++i) s = add(s, scale(w[i], rays[i]));
  if (!is_zero(s)) fail(Err::BadWeights, "weight relation failed");
  for (const LatticePoint& r : rays)
    if (!is_primitive(r)) fail(Err::BadWeights, "no primitive realization for these weights");

  std::vector<std::vector<int>> cones{{1, 2, 3}, {0, 2, 3}, {0, 1, 3}, {0, 1, 2}};
  return make_fan(std::move(rays), cones, {"V0", "V1", "V2", "V3"});
}

bool same_fan(const Fan& a, const Fan& b) {
  if (a.rays != b.rays) return false;
  if (a.cones.size() != b.cones.size()) return false;
  for (size_t i = 0; i < a.cones.size(); ++i)
    if (a.cones[i].rays != b.cones[i].rays) return false;
  return true;
}

bool is_smooth(const Fan& f) {
  for (const Cone& c : f.cones)
    if (c.mult != 1) return false;
  return true;
}

}  // namespace torifan
