#include "torifan/volume.hpp"

#include <algorithm>
#include <map>
#include <stdexcept>

#include "torifan/intersection.hpp"

namespace torifan {

namespace {

void check(bool ok, const char* what) {
  if (!ok) throw std::logic_error(what);
}

bool lex_less_q(const RationalVector& a, const RationalVector& b) {
  for (int i = 0; i < 3; ++i)
    if (a[i] != b[i]) return a[i] < b[i];
  return false;
}

RationalVector sub3(const RationalVector& a, const RationalVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Rat det3q(const RationalVector& a, const RationalVector& b, const RationalVector& c) {
  return a[0] * (b[1] * c[2] - b[2] * c[1]) - a[1] * (b[0] * c[2] - b[2] * c[0]) +
         a[2] * (b[0] * c[1] - b[1] * c[0]);
}

RationalVector cross3q(const RationalVector& a, const RationalVector& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

int affine_rank(const std::vector<RationalVector>& pts) {
  if (pts.empty()) return -1;
  QMat M;
  for (size_t i = 1; i < pts.size(); ++i) {
    RationalVector d = sub3(pts[i], pts[0]);
    M.push_back({d[0], d[1], d[2]});
  }
  if (M.empty()) return 0;
  return rank(M);
}

// Ordered vertex cycles per facet, oriented counterclockwise as seen from
// outside (outward normal = -u_r for the halfspace <u_r, m> >= c_r).
std::vector<std::vector<int>> facet_cycles(const Polytope3& p) {
  std::vector<std::vector<int>> cycles;
  for (const auto& [u, c] : p.halfspaces) {
    std::vector<int> tight;
    for (size_t v = 0; v < p.vertices.size(); ++v)
      if (dot(p.vertices[v], u) == c) tight.push_back(static_cast<int>(v));
    if (tight.size() < 3) continue;
    std::vector<RationalVector> pts;
    for (int v : tight) pts.push_back(p.vertices[v]);
    if (affine_rank(pts) < 2) continue;

    // Project out the axis where the facet normal is largest; the facet maps
    // bijectively onto that coordinate plane.
    int drop = 0;
    for (int i = 1; i < 3; ++i)
      if (abs(u[i]) > abs(u[drop])) drop = i;
    const int ax = (drop + 1) % 3, ay = (drop + 2) % 3;
    Rat cx = 0, cy = 0;
    for (const auto& q : pts) {
      cx += q[ax];
      cy += q[ay];
    }
    cx /= static_cast<int>(pts.size());
    cy /= static_cast<int>(pts.size());
    std::sort(tight.begin(), tight.end(), [&](int va, int vb) {
      Rat axd = p.vertices[va][ax] - cx, ayd = p.vertices[va][ay] - cy;
      Rat bxd = p.vertices[vb][ax] - cx, byd = p.vertices[vb][ay] - cy;
      int ha = (ayd > 0 || (ayd == 0 && axd > 0)) ? 0 : 1;
      int hb = (byd > 0 || (byd == 0 && bxd > 0)) ? 0 : 1;
      if (ha != hb) return ha < hb;
      return axd * byd - ayd * bxd > 0;
    });

    // Newell area vector decides whether the cycle runs counterclockwise
    // relative to the outward normal -u.
    RationalVector area{Rat(0), Rat(0), Rat(0)};
    RationalVector base = p.vertices[tight[0]];
    for (size_t i = 1; i + 1 < tight.size(); ++i) {
      RationalVector e1 = sub3(p.vertices[tight[i]], base);
      RationalVector e2 = sub3(p.vertices[tight[i + 1]], base);
      RationalVector cr = cross3q(e1, e2);
      for (int k = 0; k < 3; ++k) area[k] += cr[k];
    }
    Rat orient = -(area[0] * u[0] + area[1] * u[1] + area[2] * u[2]);
    check(orient != 0, "degenerate facet cycle");
    if (orient < 0) std::reverse(tight.begin(), tight.end());
    cycles.push_back(std::move(tight));
  }
  return cycles;
}

}  // namespace

Polytope3 divisor_polytope(const Fan& f, const TorusDivisor& d) {
  if (d.coeff.size() != f.rays.size()) fail(Err::DimensionMismatch, "divisor does not match the fan");
  if (!f.complete) fail(Err::Unbounded, "divisor polytopes need a complete fan");
  if (!is_nef(f, d)) fail(Err::NotNef, "divisor_polytope is defined for nef divisors");

  Polytope3 p;
  const int n = static_cast<int>(f.rays.size());
  for (int r = 0; r < n; ++r) p.halfspaces.push_back({f.rays[r], -d.coeff[r]});

  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      for (int k = j + 1; k < n; ++k) {
        if (det3(f.rays[i], f.rays[j], f.rays[k]) == 0) continue;
        IntMatrix A(3, 3);
        RationalVector rhs;
        int rows[3] = {i, j, k};
        for (int t = 0; t < 3; ++t) {
          for (int col = 0; col < 3; ++col) A.at(t, col) = f.rays[rows[t]][col];
          rhs[t] = p.halfspaces[rows[t]].second;
        }
        RationalVector m = solve_rational(A, rhs);
        bool feasible = true;
        for (const auto& [u, c] : p.halfspaces) {
          if (dot(m, u) < c) {
            feasible = false;
            break;
          }
        }
        if (feasible) p.vertices.push_back(m);
      }
  std::sort(p.vertices.begin(), p.vertices.end(), lex_less_q);
  p.vertices.erase(std::unique(p.vertices.begin(), p.vertices.end()), p.vertices.end());
  check(!p.vertices.empty(), "empty divisor polytope");

  // For nef divisors the vertices are exactly the Cartier data.
  CartierData cd = q_cartier_data(f, d);
  std::vector<RationalVector> ms = cd.m;
  std::sort(ms.begin(), ms.end(), lex_less_q);
  ms.erase(std::unique(ms.begin(), ms.end()), ms.end());
  check(ms == p.vertices, "divisor polytope vertices differ from the Cartier data");
  return p;
}

Rat volume_by_pyramids(const Polytope3& p) {
  if (affine_rank(p.vertices) < 3) return Rat(0);
  RationalVector c{Rat(0), Rat(0), Rat(0)};
  for (const auto& v : p.vertices)
    for (int i = 0; i < 3; ++i) c[i] += v[i];
  for (int i = 0; i < 3; ++i) c[i] /= static_cast<int>(p.vertices.size());

  Rat vol = 0;
  for (const auto& cyc : facet_cycles(p)) {
    Rat part = 0;
    const RationalVector& base = p.vertices[cyc[0]];
    for (size_t i = 1; i + 1 < cyc.size(); ++i)
      part += det3q(sub3(base, c), sub3(p.vertices[cyc[i]], c), sub3(p.vertices[cyc[i + 1]], c));
    vol += abs(part);
  }
  return vol / 6;
}

Rat volume_by_signed_tetrahedra(const Polytope3& p) {
  if (affine_rank(p.vertices) < 3) return Rat(0);
  const RationalVector& apex = p.vertices.front();
  Rat vol = 0;
  for (const auto& cyc : facet_cycles(p)) {
    const RationalVector& base = p.vertices[cyc[0]];
    for (size_t i = 1; i + 1 < cyc.size(); ++i)
      vol += det3q(sub3(base, apex), sub3(p.vertices[cyc[i]], apex),
                   sub3(p.vertices[cyc[i + 1]], apex));
  }
  check(vol >= 0, "outward orientation produced a negative volume");
  return vol / 6;
}

Rat polytope_volume(const Polytope3& p) {
  Rat a = volume_by_pyramids(p);
  Rat b = volume_by_signed_tetrahedra(p);
  check(a == b, "pyramid and signed-tetrahedron volumes disagree");
  return a;
}

namespace {

// Self-intersection form f(N) = N^3 = 6 vol(P_N) for nef classes, cached by
// pairing vector.
struct CubicForm {
  const Fan& fan;
  std::map<QVec, Rat> cache;

  Rat operator()(const QVec& y) {
    bool zero = true;
    for (const Rat& q : y) zero &= q == 0;
    if (zero) return Rat(0);
    auto it = cache.find(y);
    if (it != cache.end()) return it->second;
    Rat val = 6 * polytope_volume(divisor_polytope(fan, lift_class(fan, y)));
    cache.emplace(y, val);
    return val;
  }
};

QVec add_q(const QVec& a, const QVec& b) {
  QVec r = a;
  for (size_t i = 0; i < r.size(); ++i) r[i] += b[i];
  return r;
}

// Polarization of the cubic form: T(a,b,c) with a,b,c nef.
Rat polarize(CubicForm& f, const QVec& a, const QVec& b, const QVec& c) {
  Rat s = f(add_q(add_q(a, b), c));
  s -= f(add_q(a, b)) + f(add_q(a, c)) + f(add_q(b, c));
  s += f(a) + f(b) + f(c);
  return s / 6;
}

}  // namespace

Rat triple(const Fan& f, const TorusDivisor& d1, const TorusDivisor& d2, const TorusDivisor& d3) {
  NefCone nc = nef_cone(f);
  if (!nc.full_dimensional) fail(Err::NotProjective, "nef cone is not full-dimensional");
  const int rho = static_cast<int>(curve_space_basis(f).size());

  // First rho independent nef generators (lexicographic order) form the
  // working basis; coordinates split into nef positive and negative parts.
  std::vector<IVec> gbasis;
  for (const IVec& g : nc.generators) {
    auto trial = gbasis;
    trial.push_back(g);
    QMat M(trial.size(), QVec(rho));
    for (size_t i = 0; i < trial.size(); ++i)
      for (int j = 0; j < rho; ++j) M[i][j] = Rat(trial[i][j]);
    if (rank(M) == static_cast<int>(trial.size())) gbasis = trial;
    if (static_cast<int>(gbasis.size()) == rho) break;
  }
  check(static_cast<int>(gbasis.size()) == rho, "nef generators do not span");

  QMat G(rho, QVec(rho));
  for (int r = 0; r < rho; ++r)
    for (int col = 0; col < rho; ++col) G[r][col] = Rat(gbasis[col][r]);

  std::array<QVec, 3> pos, neg;
  const TorusDivisor* ds[3] = {&d1, &d2, &d3};
  for (int i = 0; i < 3; ++i) {
    QVec y = divisor_class(f, *ds[i]);
    auto coords = solve(G, y);
    check(coords.has_value(), "class outside the nef span");
    QVec ppair(rho, Rat(0)), npair(rho, Rat(0));
    for (int k = 0; k < rho; ++k) {
      Rat ck = (*coords)[k];
      if (ck == 0) continue;
      for (int j = 0; j < rho; ++j) {
        Rat contrib = ck * Rat(gbasis[k][j]);
        if (ck > 0)
          ppair[j] += contrib;
        else
          npair[j] -= contrib;
      }
    }
    pos[i] = ppair;
    neg[i] = npair;
  }

  CubicForm form{f, {}};
  Rat total = 0;
  for (int s1 = 0; s1 < 2; ++s1)
    for (int s2 = 0; s2 < 2; ++s2)
      for (int s3 = 0; s3 < 2; ++s3) {
        const QVec& a = s1 ? neg[0] : pos[0];
        const QVec& b = s2 ? neg[1] : pos[1];
        const QVec& c = s3 ? neg[2] : pos[2];
        Rat term = polarize(form, a, b, c);
        total += ((s1 + s2 + s3) % 2 == 0) ? term : -term;
      }
  return total;
}

Rat anticanonical_volume(const Fan& f) {
  TorusDivisor mk = scale(Rat(-1), canonical_divisor(f));
  Rat t = triple(f, mk, mk, mk);
  if (is_nef(f, mk)) {
    Rat direct = 6 * polytope_volume(divisor_polytope(f, mk));
    check(direct == t, "nef anticanonical volume routes disagree");
  }
  return t;
}

Rat wps_hypersurface_volume(const Int& degree, const std::array<Int, 5>& weights) {
  if (degree < 1) fail(Err::BadParameters, "degree must be positive");
  Int total = 0, prod = 1;
  for (const Int& w : weights) {
    if (w < 1) fail(Err::BadParameters, "weights must be positive");
    total += w;
    prod *= w;
  }
  if (total <= degree) fail(Err::BadParameters, "degree must be smaller than sum of weights");
  Int adj = total - degree;
  return make_rat(degree * adj * adj * adj, prod);
}

}  // namespace torifan
