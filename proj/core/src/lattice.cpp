#include "critgroup/lattice.hpp"

#include <utility>

#include "critgroup/error.hpp"

namespace critgroup {
namespace {

// Column operations applied to both H and W.
struct ColumnOps {
  IntMatrix& h;
  IntMatrix& w;

  // col_j -= q * col_k
  void submul(std::size_t j, std::size_t k, const BigInt& q) {
    if (q == 0) return;
    for (std::size_t r = 0; r < h.rows(); ++r) {
      if (h(r, k) != 0) mpz_submul(h(r, j).get_mpz_t(), q.get_mpz_t(), h(r, k).get_mpz_t());
    }
    for (std::size_t r = 0; r < w.rows(); ++r) {
      if (w(r, k) != 0) mpz_submul(w(r, j).get_mpz_t(), q.get_mpz_t(), w(r, k).get_mpz_t());
    }
  }

  void swap(std::size_t j, std::size_t k) {
    if (j == k) return;
    for (std::size_t r = 0; r < h.rows(); ++r) std::swap(h(r, j), h(r, k));
    for (std::size_t r = 0; r < w.rows(); ++r) std::swap(w(r, j), w(r, k));
  }

  void negate(std::size_t j) {
    for (std::size_t r = 0; r < h.rows(); ++r) h(r, j) = -h(r, j);
    for (std::size_t r = 0; r < w.rows(); ++r) w(r, j) = -w(r, j);
  }
};

}  // namespace

HermiteForm column_hermite_form(const IntMatrix& m) {
  HermiteForm out{m, IntMatrix::identity(m.cols()), 0};
  ColumnOps ops{out.h, out.w};
  const std::size_t n = m.cols();
  std::size_t piv = 0;
  for (std::size_t i = 0; i < m.rows() && piv < n; ++i) {
    // Euclid across the row: keep the smallest entry in column piv and
    // reduce the others against it until they vanish.
    for (;;) {
      std::size_t best = n;
      for (std::size_t j = piv; j < n; ++j) {
        if (out.h(i, j) == 0) continue;
        if (best == n || mpz_cmpabs(out.h(i, j).get_mpz_t(), out.h(i, best).get_mpz_t()) < 0) {
          best = j;
        }
      }
      if (best == n) break;
      ops.swap(piv, best);
      bool done = true;
      for (std::size_t j = piv + 1; j < n; ++j) {
        if (out.h(i, j) == 0) continue;
        BigInt q;
        mpz_fdiv_q(q.get_mpz_t(), out.h(i, j).get_mpz_t(), out.h(i, piv).get_mpz_t());
        ops.submul(j, piv, q);
        if (out.h(i, j) != 0) done = false;
      }
      if (done) break;
    }
    if (out.h(i, piv) == 0) continue;
    if (out.h(i, piv) < 0) ops.negate(piv);
    const BigInt p = out.h(i, piv);
    for (std::size_t k = 0; k < piv; ++k) {
      BigInt q;
      mpz_fdiv_q(q.get_mpz_t(), out.h(i, k).get_mpz_t(), p.get_mpz_t());
      ops.submul(k, piv, q);
    }
    ++piv;
  }
  out.rank = piv;
  return out;
}

IntMatrix lattice_basis(const IntMatrix& generators) {
  HermiteForm hf = column_hermite_form(generators);
  return hf.h.column_range(0, hf.rank);
}

IntMatrix kernel_lattice(const IntMatrix& a) {
  HermiteForm hf = column_hermite_form(a);
  IntMatrix k = hf.w.column_range(hf.rank, a.cols() - hf.rank);
  return lattice_basis(k);
}

LatticeSolver::LatticeSolver(const IntMatrix& basis)
    : rows_(basis.rows()), cols_(basis.cols()), smith_(smith_normal_form(basis)) {
  for (const auto& x : smith_.diagonal()) {
    if (x != 0) ++rank_;
  }
}

std::optional<IntVector> LatticeSolver::solve(std::span<const BigInt> x) const {
  if (x.size() != rows_) {
    throw Error(ErrorKind::DimensionMismatch, "vector length " + std::to_string(x.size()) +
                                                  " against ambient dimension " +
                                                  std::to_string(rows_));
  }
  IntVector w = smith_.u * x;
  IntVector z(cols_);
  for (std::size_t i = 0; i < rows_; ++i) {
    if (i < rank_) {
      const BigInt& d = smith_.d(i, i);
      if (!mpz_divisible_p(w[i].get_mpz_t(), d.get_mpz_t())) return std::nullopt;
      mpz_divexact(z[i].get_mpz_t(), w[i].get_mpz_t(), d.get_mpz_t());
    } else if (w[i] != 0) {
      return std::nullopt;
    }
  }
  return smith_.v * std::span<const BigInt>(z);
}

bool LatticeSolver::contains_columns(const IntMatrix& m) const {
  for (std::size_t c = 0; c < m.cols(); ++c) {
    if (!contains(m.column(c))) return false;
  }
  return true;
}

std::optional<IntVector> lattice_member_solve(const IntMatrix& basis,
                                              std::span<const BigInt> x) {
  return LatticeSolver(basis).solve(x);
}

FiniteAbelianGroup lattice_quotient(const IntMatrix& p_generators,
                                    const IntMatrix& l_generators) {
  if (p_generators.rows() != l_generators.rows()) {
    throw Error(ErrorKind::DimensionMismatch, "lattices live in different ambient spaces");
  }
  const IntMatrix p = lattice_basis(p_generators);
  const LatticeSolver solver(p);
  IntMatrix coeff(p.cols(), l_generators.cols());
  for (std::size_t c = 0; c < l_generators.cols(); ++c) {
    auto y = solver.solve(l_generators.column(c));
    if (!y) {
      throw Error(ErrorKind::NotSublattice,
                  "generator " + std::to_string(c) + " is not in the larger lattice");
    }
    coeff.set_column(c, *y);
  }
  if (rank(l_generators) != p.cols()) {
    throw Error(ErrorKind::RankMismatch, "lattices have different ranks");
  }
  return cokernel_structure(coeff);
}

}  // namespace critgroup
