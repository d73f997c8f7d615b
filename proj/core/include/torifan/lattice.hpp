#pragma once

#include <array>
#include <optional>
#include <vector>

#include "torifan/rational.hpp"

namespace torifan {

// The ambient lattice N has rank 3 throughout.
using LatticePoint = std::array<Int, 3>;
using RationalVector = std::array<Rat, 3>;

using QVec = std::vector<Rat>;
using QMat = std::vector<QVec>;
using IVec = std::vector<Int>;

inline bool is_zero(const LatticePoint& v) { return v[0] == 0 && v[1] == 0 && v[2] == 0; }

LatticePoint add(const LatticePoint& a, const LatticePoint& b);
LatticePoint sub(const LatticePoint& a, const LatticePoint& b);
LatticePoint neg(const LatticePoint& a);
LatticePoint scale(const Int& k, const LatticePoint& a);
RationalVector sub(const RationalVector& a, const RationalVector& b);

Int dot(const LatticePoint& a, const LatticePoint& b);
Rat dot(const RationalVector& m, const LatticePoint& u);
LatticePoint cross(const LatticePoint& a, const LatticePoint& b);
Int det3(const LatticePoint& a, const LatticePoint& b, const LatticePoint& c);

bool lex_less(const LatticePoint& a, const LatticePoint& b);

std::string to_string(const LatticePoint& v);
std::string to_string(const RationalVector& v);

// Divides out the gcd of the coordinates; the zero vector has no primitive multiple.
LatticePoint primitive(const LatticePoint& v);
bool is_primitive(const LatticePoint& v);

// Index of Z<generators> inside its rational span intersected with Z^3,
// i.e. the gcd of all d x d minors (|det| when d = 3).
// The generators must be linearly independent.
Int sublattice_index(const std::vector<LatticePoint>& generators);

// Dense arbitrary-precision integer matrix, 1..4 rows and columns.
struct IntMatrix {
  int rows = 0, cols = 0;
  std::vector<Int> a;  // row-major

  IntMatrix(int r, int c);
  Int& at(int r, int c) { return a[static_cast<size_t>(r) * cols + c]; }
  const Int& at(int r, int c) const { return a[static_cast<size_t>(r) * cols + c]; }
};

// Solves A x = b for square invertible A (3 x 3 to match the rank of N).
RationalVector solve_rational(const IntMatrix& A, const RationalVector& b);

// --- small dense exact kit -------------------------------------------------
// Row reduction uses the first nonzero entry in each column, columns left to
// right, so every derived object (kernel basis, particular solutions) is
// deterministic.

// Reduces M in place to reduced row echelon form; returns the pivot columns.
std::vector<int> rref(QMat& M);

int rank(QMat M);

// Canonical kernel basis of M (as a map Q^cols -> Q^rows): one vector per free
// column, scaled to integer entries with content 1; the free coordinate stays
// positive.
std::vector<IVec> kernel_basis(const QMat& M);

// Particular solution of M x = b with all free variables set to zero;
// nullopt when inconsistent.
std::optional<QVec> solve(const QMat& M, const QVec& b);

// Scales a rational vector to integer entries with content 1, preserving
// direction. Zero stays zero.
IVec primitive_direction(const QVec& v);

Rat dot(const QVec& a, const QVec& b);
Rat dot(const IVec& a, const QVec& b);

}  // namespace torifan
