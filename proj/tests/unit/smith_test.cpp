#include <gtest/gtest.h>

#include <random>

#include "critgroup/error.hpp"
#include "critgroup/smith.hpp"

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

// Cofactor expansion; independent of the Bareiss path.
BigInt cofactor_det(const IntMatrix& a) {
  const std::size_t n = a.rows();
  if (n == 0) return 1;
  if (n == 1) return a(0, 0);
  BigInt det = 0;
  for (std::size_t j = 0; j < n; ++j) {
    IntMatrix minor(n - 1, n - 1);
    for (std::size_t r = 1; r < n; ++r) {
      for (std::size_t c = 0, cc = 0; c < n; ++c) {
        if (c != j) minor(r - 1, cc++) = a(r, c);
      }
    }
    det += (j % 2 ? -1 : 1) * a(0, j) * cofactor_det(minor);
  }
  return det;
}

// d_1 ... d_k = gcd of all k x k minors.
std::vector<BigInt> determinantal_divisors(const IntMatrix& a) {
  const std::size_t r = a.rows();
  const std::size_t c = a.cols();
  std::vector<BigInt> out;
  BigInt prev = 1;
  for (std::size_t k = 1; k <= std::min(r, c); ++k) {
    BigInt g = 0;
    std::vector<bool> rs(r, false), cs(c, false);
    std::fill(rs.begin(), rs.begin() + static_cast<long>(k), true);
    do {
      std::fill(cs.begin(), cs.end(), false);
      std::fill(cs.begin(), cs.begin() + static_cast<long>(k), true);
      do {
        IntMatrix m(k, k);
        for (std::size_t i = 0, mi = 0; i < r; ++i) {
          if (!rs[i]) continue;
          for (std::size_t j = 0, mj = 0; j < c; ++j) {
            if (cs[j]) m(mi, mj++) = a(i, j);
          }
          ++mi;
        }
        g = gcd(g, cofactor_det(m));
      } while (std::prev_permutation(cs.begin(), cs.end()));
    } while (std::prev_permutation(rs.begin(), rs.end()));
    out.push_back(prev == 0 ? BigInt(0) : BigInt(g / prev));
    prev = g;
  }
  return out;
}

}  // namespace

TEST(Smith, TransformsAreUnimodularAndDiagonalize) {
  std::mt19937_64 rng(7);
  for (int t = 0; t < 200; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 5, 1 + rng() % 5, 9);
    const SmithForm s = smith_normal_form(a);
    EXPECT_EQ(s.u * a * s.v, s.d);
    EXPECT_EQ(abs(determinant(s.u)), 1);
    EXPECT_EQ(abs(determinant(s.v)), 1);
    const auto diag = s.diagonal();
    for (std::size_t i = 0; i < s.d.rows(); ++i) {
      for (std::size_t j = 0; j < s.d.cols(); ++j) {
        if (i != j) EXPECT_EQ(s.d(i, j), 0);
      }
    }
    for (std::size_t i = 0; i + 1 < diag.size(); ++i) {
      EXPECT_GE(diag[i], 0);
      if (diag[i] != 0) {
        EXPECT_EQ(diag[i + 1] % diag[i], 0);
      } else {
        EXPECT_EQ(diag[i + 1], 0);
      }
    }
    EXPECT_EQ(smith_diagonal(a), diag);
  }
}

TEST(Smith, MatchesDeterminantalDivisors) {
  std::mt19937_64 rng(11);
  for (int t = 0; t < 150; ++t) {
    const IntMatrix a = random_matrix(rng, 1 + rng() % 4, 1 + rng() % 4, 12);
    EXPECT_EQ(smith_diagonal(a), determinantal_divisors(a)) << a;
  }
}

TEST(Smith, OverflowFallsBackToBigIntegers) {
  // Entries near 2^62 overflow the 64-bit path on the first elimination.
  const BigInt big = BigInt(1) << 62;
  IntMatrix a(3, 3);
  long seed[3][3] = {{3, 5, 7}, {11, 13, 17}, {19, 23, 29}};
  for (int i = 0; i < 3; ++i) {
    for (int j = 0; j < 3; ++j) a(i, j) = big * seed[i][j] + i + 2 * j;
  }
  EXPECT_EQ(smith_diagonal(a), determinantal_divisors(a));
  const SmithForm s = smith_normal_form(a);
  EXPECT_EQ(s.u * a * s.v, s.d);
}

TEST(Smith, DeterminantMatchesCofactors) {
  std::mt19937_64 rng(3);
  for (int t = 0; t < 100; ++t) {
    const std::size_t n = 1 + rng() % 6;
    const IntMatrix a = random_matrix(rng, n, n, 20);
    EXPECT_EQ(determinant(a), cofactor_det(a));
  }
  EXPECT_EQ(determinant(IntMatrix(0, 0)), 1);
  EXPECT_THROW(determinant(IntMatrix(2, 3)), Error);
}

TEST(Smith, CokernelStructure) {
  EXPECT_EQ(cokernel_structure(IntMatrix{{2, 0}, {0, 3}}).invariant_factors(),
            std::vector<BigInt>{6});
  EXPECT_EQ(rank(IntMatrix{{1, 2}, {2, 4}}), 1u);
  EXPECT_THROW(cokernel_structure(IntMatrix{{1, 2}, {2, 4}}), Error);
  EXPECT_TRUE(cokernel_structure(IntMatrix::identity(3)).is_trivial());
}

TEST(Smith, CokernelCoordinatesAreAnIsomorphism) {
  const IntMatrix a{{2, 4, 4}, {-6, 6, 12}, {10, -4, -16}};
  const CokernelCoordinates c = cokernel_coordinates(a);
  EXPECT_EQ(c.group(), cokernel_structure(a));
  // Relations map to zero; generator representatives map to unit coordinates.
  for (std::size_t k = 0; k < a.cols(); ++k) EXPECT_TRUE(c.is_relation(a.column(k)));
  for (std::size_t i = 0; i < c.moduli.size(); ++i) {
    const IntVector img = c.to_coords * c.from_coords.column(i);
    for (std::size_t j = 0; j < img.size(); ++j) {
      BigInt r;
      mpz_fdiv_r(r.get_mpz_t(), img[j].get_mpz_t(), c.moduli[j].get_mpz_t());
      EXPECT_EQ(r, i == j ? 1 : 0);
    }
  }
  EXPECT_FALSE(c.is_relation(to_int_vector({1, 0, 0})));
}
