#pragma once

#include <optional>

#include "rootlat/matrix.hpp"

namespace rootlat {

// Row Hermite form: U unimodular with U*M = H, pivots positive, entries
// above each pivot reduced into [0, pivot).
struct HnfDecomposition {
  IntMatrix h;
  IntMatrix u;
};

struct SnfDecomposition {
  IntMatrix s;  // diagonal, d1 | d2 | ... , nonzero entries first, all >= 0
  IntMatrix u;  // unimodular, u * m * v = s
  IntMatrix v;  // unimodular
  int rank = 0;
};

HnfDecomposition hnf(const IntMatrix& m);
SnfDecomposition snf(const IntMatrix& m);

// Exact determinant (fraction-free Bareiss elimination).
Int det(const IntMatrix& m);

// Integer rows y with y*M = 0; the rows form a basis of the left kernel
// lattice (saturated, since they are rows of a unimodular transform).
IntMatrix left_kernel(const IntMatrix& m);

// Columns of m generate a lattice in ambient coordinates; returns integer x
// with m*x = b when b lies in that lattice, nullopt otherwise. Never
// approximates: b is exact rational input.
std::optional<IntVector> solve_in_lattice(const IntMatrix& m, const RatVector& b);

// Exact inverse of a nonsingular integer matrix.
RatMatrix invert_rational(const IntMatrix& m);

// Exact inverse over the rationals (Gauss-Jordan).
RatMatrix invert_rational(const RatMatrix& m);

}  // namespace rootlat
