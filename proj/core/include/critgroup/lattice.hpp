#pragma once

#include <optional>

#include "critgroup/abelian_group.hpp"
#include "critgroup/int_matrix.hpp"
#include "critgroup/smith.hpp"

namespace critgroup {

/// Column Hermite normal form H = M * W, W unimodular.
///
/// H is in lower column-echelon form: the first `rank` columns have strictly
/// increasing pivot rows, each pivot positive, and entries left of a pivot
/// (in the pivot row) reduced into [0, pivot). The remaining columns are zero.
struct HermiteForm {
  IntMatrix h;
  IntMatrix w;
  std::size_t rank = 0;
};

HermiteForm column_hermite_form(const IntMatrix& m);

/// A basis (in column HNF) of the lattice generated by the columns of m.
IntMatrix lattice_basis(const IntMatrix& generators);

/// Basis of {y in Z^cols : a * y == 0}, saturated, in column HNF.
IntMatrix kernel_lattice(const IntMatrix& a);

/// y with basis * y == x over the integers, if any.
/// Throws Error(DimensionMismatch) if x has the wrong length.
std::optional<IntVector> lattice_member_solve(const IntMatrix& basis,
                                              std::span<const BigInt> x);

/// Solves many right-hand sides against one lattice with a single Smith
/// decomposition.
class LatticeSolver {
 public:
  explicit LatticeSolver(const IntMatrix& basis);

  std::optional<IntVector> solve(std::span<const BigInt> x) const;
  bool contains(std::span<const BigInt> x) const { return solve(x).has_value(); }
  /// Every column of m lies in the lattice.
  bool contains_columns(const IntMatrix& m) const;

  std::size_t ambient_dimension() const noexcept { return rows_; }

 private:
  std::size_t rows_ = 0;
  std::size_t cols_ = 0;
  std::size_t rank_ = 0;
  SmithForm smith_;
};

/// The finite group P / L for lattices L <= P of equal rank, given by
/// generating columns in the same ambient space. P's generators are first
/// reduced to a basis; L's generators are rewritten in P-coordinates and the
/// cokernel of that coefficient matrix is returned.
/// Throws Error(NotSublattice) or Error(RankMismatch).
FiniteAbelianGroup lattice_quotient(const IntMatrix& p_generators,
                                    const IntMatrix& l_generators);

}  // namespace critgroup
