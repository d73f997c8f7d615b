#include "torifan/lattice.hpp"

#include <algorithm>
#include <sstream>

namespace torifan {

LatticePoint add(const LatticePoint& a, const LatticePoint& b) {
  return {a[0] + b[0], a[1] + b[1], a[2] + b[2]};
}

LatticePoint sub(const LatticePoint& a, const LatticePoint& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

LatticePoint neg(const LatticePoint& a) { return {-a[0], -a[1], -a[2]}; }

LatticePoint scale(const Int& k, const LatticePoint& a) { return {k * a[0], k * a[1], k * a[2]}; }

RationalVector sub(const RationalVector& a, const RationalVector& b) {
  return {a[0] - b[0], a[1] - b[1], a[2] - b[2]};
}

Int dot(const LatticePoint& a, const LatticePoint& b) {
  return a[0] * b[0] + a[1] * b[1] + a[2] * b[2];
}

Rat dot(const RationalVector& m, const LatticePoint& u) {
  return m[0] * u[0] + m[1] * u[1] + m[2] * u[2];
}

LatticePoint cross(const LatticePoint& a, const LatticePoint& b) {
  return {a[1] * b[2] - a[2] * b[1], a[2] * b[0] - a[0] * b[2], a[0] * b[1] - a[1] * b[0]};
}

Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c) {
  return dot(a, cross(b, c));
}

bool lex_less(const LatticePoint& a, const LatticePoint& b) {
  for (int i = 0; i < 3; ++i) {
    if (a[i] != b[i]) return a[i] < b[i];
  }
  return false;
}

std::string to_string(const LatticePoint& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

std::string to_string(const RationalVector& v) {
  return "(" + to_string(v[0]) + "," + to_string(v[1]) + "," + to_string(v[2]) + ")";
}

LatticePoint primitive(const LatticePoint& v) {
  if (is_zero(v)) fail(Err::ZeroVector, "primitive() of the zero vector");
  Int g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  return {v[0] / g, v[1] / g, v[2] / g};
}

bool is_primitive(const LatticePoint& v) { return !is_zero(v) && primitive(v) == v; }

Int sublattice_index(const std::vector<LatticePoint>& generators) {
  const int d = static_cast<int>(generators.size());
  if (d < 1 || d > 3) fail(Err::DimensionMismatch, "need 1..3 generators");
  Int g = 0;
  if (d == 1) {
    const auto& v = generators[0];
    g = gcd(gcd(abs(v[0]), abs(v[1])), abs(v[2]));
  } else if (d == 2) {
    LatticePoint c = cross(generators[0], generators[1]);
    g = gcd(gcd(abs(c[0]), abs(c[1])), abs(c[2]));
  } else {
    g = abs(det3(generators[0], generators[1], generators[2]));
  }
  if (g == 0) fail(Err::DependentGenerators, "generators are linearly dependent");
  return g;
}

IntMatrix::IntMatrix(int r, int c) : rows(r), cols(c) {
  if (r < 1 || r > 4 || c < 1 || c > 4) fail(Err::DimensionMismatch, "IntMatrix must be 1..4 x 1..4");
  a.assign(static_cast<size_t>(r) * c, Int(0));
}

RationalVector solve_rational(const IntMatrix& A, const RationalVector& b) {
  if (A.rows != 3 || A.cols != 3) fail(Err::DimensionMismatch, "solve_rational expects a 3 x 3 matrix");
  QMat M(3, QVec(3));
  for (int i = 0; i < 3; ++i)
    for (int j = 0; j < 3; ++j) M[i][j] = Rat(A.at(i, j));
  QVec rhs(b.begin(), b.end());
  if (rank(M) != 3) fail(Err::SingularMatrix, "matrix is singular");
  auto x = solve(M, rhs);
  return {(*x)[0], (*x)[1], (*x)[2]};
}

std::vector<int> rref(QMat& M) {
  std::vector<int> pivots;
  if (M.empty()) return pivots;
  const int nr = static_cast<int>(M.size());
  const int nc = static_cast<int>(M[0].size());
  int row = 0;
  for (int col = 0; col < nc && row < nr; ++col) {
    int p = -1;
    for (int r = row; r < nr; ++r) {
      if (M[r][col] != 0) {
        p = r;
        break;
      }
    }
    if (p < 0) continue;
    std::swap(M[p], M[row]);
    Rat inv = 1 / M[row][col];
    for (int c = col; c < nc; ++c) M[row][c] *= inv;
    for (int r = 0; r < nr; ++r) {
      if (r == row || M[r][col] == 0) continue;
      Rat f = M[r][col];
      for (int c = col; c < nc; ++c) M[r][c] -= f * M[row][c];
    }
    pivots.push_back(col);
    ++row;
  }
  return pivots;
}

int rank(QMat M) { return static_cast<int>(rref(M).size()); }

std::vector<IVec> kernel_basis(const QMat& M) {
  QMat R = M;
  std::vector<int> pivots = rref(R);
  const int nc = M.empty() ? 0 : static_cast<int>(M[0].size());
  std::vector<bool> is_pivot(nc, false);
  for (int c : pivots) is_pivot[c] = true;
  std::vector<IVec> basis;
  for (int free = 0; free < nc; ++free) {
    if (is_pivot[free]) continue;
    QVec v(nc, Rat(0));
    v[free] = 1;
    for (size_t i = 0; i < pivots.size(); ++i) v[pivots[i]] = -R[i][free];
    basis.push_back(primitive_direction(v));
  }
  return basis;
}

std::optional<QVec> solve(const QMat& M, const QVec& b) {
  const int nr = static_cast<int>(M.size());
  const int nc = M.empty() ? 0 : static_cast<int>(M[0].size());
  QMat aug(nr, QVec(nc + 1));
  for (int i = 0; i < nr; ++i) {
    for (int j = 0; j < nc; ++j) aug[i][j] = M[i][j];
    aug[i][nc] = b[i];
  }
  std::vector<int> pivots = rref(aug);
  if (!pivots.empty() && pivots.back() == nc) return std::nullopt;
  QVec x(nc, Rat(0));
  for (size_t i = 0; i < pivots.size(); ++i) x[pivots[i]] = aug[i][nc];
  return x;
}

IVec primitive_direction(const QVec& v) {
  Int den_lcm = 1;
  for (const Rat& q : v) den_lcm = lcm(den_lcm, q.get_den());
  IVec w(v.size());
  Int content = 0;
  for (size_t i = 0; i < v.size(); ++i) {
    Rat s = v[i] * den_lcm;
    w[i] = s.get_num();
    content = gcd(content, abs(w[i]));
  }
  if (content == 0) return w;
  for (Int& z : w) z /= content;
  return w;
}

Rat dot(const QVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

Rat dot(const IVec& a, const QVec& b) {
  Rat s = 0;
  for (size_t i = 0; i < a.size(); ++i) s += a[i] * b[i];
  return s;
}

}  // namespace torifan
