#pragma once

#include "rkt/core/matrix.hpp"

namespace rkt {

// Column-style Hermite form: H = A * W with W unimodular. Nonzero columns of
// H come first, each with a positive pivot strictly below the previous
// column's pivot, zeros above its pivot, and entries to the left of a pivot
// reduced into [0, pivot).
struct ColumnEchelon {
  IntMatrix H;
  IntMatrix W;
  std::size_t rank = 0;
  std::vector<std::size_t> pivot_rows;
};

ColumnEchelon column_echelon(const IntMatrix& A);

// Z-basis of {x in Z^cols : A x = 0}, as columns in Hermite form.
IntMatrix integer_kernel(const IntMatrix& A);

// Basis (columns) of the lattice generated by the columns of B, in Hermite form.
IntMatrix lattice_basis(const IntMatrix& B);

// Basis of (Q-span of columns of B) ∩ Z^rows.
IntMatrix saturate(const IntMatrix& B);

// Basis b_1..b_r of the lattice spanned by the columns of B such that b_t has
// its last nonzero coordinate at pivots[t], pivots strictly increasing. Then
// span(b_1..b_t) is the lattice cut out by the first pivots[t]+1 coordinates.
struct FlagBasis {
  IntMatrix basis;
  std::vector<std::size_t> pivots;
};
FlagBasis flag_basis(const IntMatrix& B);

// Solve B X = Y over Q for full-column-rank B; throws Internal if no solution.
RatMatrix solve_left(const IntMatrix& B, const RatMatrix& Y);

}  // namespace rkt
