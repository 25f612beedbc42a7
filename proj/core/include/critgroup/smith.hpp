#pragma once

#include <vector>

#include "critgroup/abelian_group.hpp"
#include "critgroup/int_matrix.hpp"

namespace critgroup {

/// U * A * V == D with U, V unimodular and D diagonal, d_1 | d_2 | ... >= 0.
struct SmithForm {
  IntMatrix d;
  IntMatrix u;
  IntMatrix v;

  /// The min(rows, cols) diagonal entries of d.
  std::vector<BigInt> diagonal() const;
};

/// Smith normal form by minimal-absolute-value pivoting (ties broken by row,
/// then column index). Deterministic for a fixed input. Entries are worked
/// in checked 64-bit arithmetic first and redone with GMP on overflow.
SmithForm smith_normal_form(const IntMatrix& a);

/// Diagonal of the Smith form without the transforms; the fast path used by
/// every group computation.
std::vector<BigInt> smith_diagonal(const IntMatrix& a);

std::size_t rank(const IntMatrix& a);

/// Exact determinant by fraction-free (Bareiss) elimination.
/// Throws Error(NotSquare).
BigInt determinant(const IntMatrix& a);

/// Z^rows / (column span of a). Throws Error(InfiniteCokernel) when the
/// columns do not span a full-rank sublattice.
FiniteAbelianGroup cokernel_structure(const IntMatrix& a);

/// Explicit coordinates on a finite cokernel Z^m / L (L = column span of a).
///
/// x in Z^m maps to (to_coords * x) reduced mod moduli, an isomorphism onto
/// the sum of Z_{moduli[i]}; column i of from_coords is a representative of
/// the i-th cyclic generator. Only nontrivial moduli are kept.
struct CokernelCoordinates {
  std::vector<BigInt> moduli;
  IntMatrix to_coords;
  IntMatrix from_coords;

  FiniteAbelianGroup group() const;
  /// True iff x lies in L.
  bool is_relation(std::span<const BigInt> x) const;
};

CokernelCoordinates cokernel_coordinates(const IntMatrix& a);

}  // namespace critgroup
