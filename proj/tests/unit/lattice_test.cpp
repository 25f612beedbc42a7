#include <gtest/gtest.h>

#include <random>

#include "critgroup/error.hpp"
#include "critgroup/lattice.hpp"

using namespace critgroup;

namespace {

IntMatrix random_matrix(std::mt19937_64& rng, std::size_t r, std::size_t c, long bound) {
  std::uniform_int_distribution<long> dist(-bound, bound);
  IntMatrix m(r, c);
  for (std::size_t i = 0; i < r; ++i) {
    for (std::size_t j = 0; j < c; ++j) m(i, j) = dist(rng);
  }
  return m;
}

}  // namespace

TEST(Lattice, HermiteFormShape) {
  std::mt19937_64 rng(5);
  for (int t = 0; t < 150; ++t) {
    const IntMatrix m = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 6, 6);
    const HermiteForm h = column_hermite_form(m);
    EXPECT_EQ(m * h.w, h.h);
    EXPECT_EQ(abs(determinant(h.w)), 1);
    EXPECT_EQ(h.rank, rank(m));
    std::size_t last_pivot = 0;
    for (std::size_t c = 0; c < h.h.cols(); ++c) {
      std::size_t r = 0;
      while (r < h.h.rows() && h.h(r, c) == 0) ++r;
      if (c >= h.rank) {
        EXPECT_EQ(r, h.h.rows()) << "column past the rank is nonzero";
        continue;
      }
      ASSERT_LT(r, h.h.rows());
      if (c > 0) EXPECT_GT(r, last_pivot);
      last_pivot = r;
      EXPECT_GT(h.h(r, c), 0);
      for (std::size_t left = 0; left < c; ++left) {
        EXPECT_GE(h.h(r, left), 0);
        EXPECT_LT(h.h(r, left), h.h(r, c));
      }
    }
  }
}

TEST(Lattice, KernelIsSaturatedAndComplete) {
  std::mt19937_64 rng(9);
  for (int t = 0; t < 100; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 3, 2 + rng() % 4, 5);
    const IntMatrix k = kernel_lattice(a);
    EXPECT_EQ(k.cols(), a.cols() - rank(a));
    if (k.cols() == 0) continue;
    EXPECT_TRUE((a * k).is_zero());
    // Saturated: Z^n / K is torsion-free, so every Smith entry of K is 1.
    for (const auto& d : smith_diagonal(k)) EXPECT_EQ(d, 1);
  }
}

TEST(Lattice, SolverMembership) {
  const IntMatrix basis{{2, 0}, {0, 3}, {0, 0}};
  const LatticeSolver s(basis);
  EXPECT_TRUE(s.contains(to_int_vector({4, -3, 0})));
  EXPECT_FALSE(s.contains(to_int_vector({1, 0, 0})));
  EXPECT_FALSE(s.contains(to_int_vector({0, 0, 1})));
  const auto y = s.solve(to_int_vector({4, -3, 0}));
  ASSERT_TRUE(y);
  EXPECT_EQ(basis * *y, to_int_vector({4, -3, 0}));
  EXPECT_THROW(s.solve(to_int_vector({1})), Error);
  EXPECT_EQ(lattice_member_solve(basis, to_int_vector({2, 3, 0})), to_int_vector({1, 1}));
}

TEST(Lattice, Quotients) {
  const IntMatrix p = IntMatrix::identity(2);
  EXPECT_EQ(lattice_quotient(p, IntMatrix{{2, 0}, {0, 4}}).invariant_factors(),
            (std::vector<BigInt>{2, 4}));
  // P itself given by redundant generators.
  const IntMatrix p2{{2, 0, 2}, {0, 2, 2}};
  EXPECT_EQ(lattice_quotient(p2, IntMatrix{{4, 0}, {0, 4}}).order(), 4);
  EXPECT_THROW(lattice_quotient(IntMatrix{{2}, {0}}, IntMatrix{{1}, {0}}), Error);
  EXPECT_THROW(lattice_quotient(p, IntMatrix{{2}, {0}}), Error);
}
