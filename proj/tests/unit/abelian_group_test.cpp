#include <gtest/gtest.h>

#include "critgroup/abelian_group.hpp"
#include "critgroup/error.hpp"

using namespace critgroup;

namespace {

FiniteAbelianGroup Z(std::vector<long> orders) {
  std::vector<BigInt> v(orders.begin(), orders.end());
  return FiniteAbelianGroup::from_cyclic_orders(std::move(v));
}

std::vector<long> factors(const FiniteAbelianGroup& g) {
  std::vector<long> out;
  for (const auto& d : g.invariant_factors()) out.push_back(d.get_si());
  return out;
}

}  // namespace

TEST(AbelianGroup, NormalizesToInvariantFactors) {
  EXPECT_EQ(factors(Z({2, 3})), std::vector<long>{6});
  EXPECT_EQ(factors(Z({4, 6})), (std::vector<long>{2, 12}));
  EXPECT_EQ(factors(Z({24, 8, 2})), (std::vector<long>{2, 8, 24}));
  EXPECT_EQ(factors(Z({1, 1, 5})), std::vector<long>{5});
  EXPECT_TRUE(Z({1, 1}).is_trivial());
  EXPECT_EQ(Z({12, 18, 30}), Z({6, 6, 180}));
  EXPECT_THROW(Z({0}), Error);
}

TEST(AbelianGroup, OrderExponentTorsion) {
  const auto g = Z({2, 8, 24});
  EXPECT_EQ(g.order(), 384);
  EXPECT_EQ(g.exponent(), 24);
  EXPECT_EQ(g.min_generators(), 3u);
  EXPECT_TRUE(g.is_torsion_of(BigInt(48)));
  EXPECT_FALSE(g.is_torsion_of(BigInt(12)));
  EXPECT_EQ(FiniteAbelianGroup().order(), 1);
  EXPECT_EQ(FiniteAbelianGroup().to_string(), "0");
  EXPECT_EQ(g.to_string(), "Z_2 + Z_8 + Z_24");
  EXPECT_EQ(FiniteAbelianGroup::cyclic_power(BigInt(3), 4), Z({3, 3, 3, 3}));
  EXPECT_EQ(Z({2}).direct_sum(Z({3})), Z({6}));
}

TEST(AbelianGroup, QuotientsAndSylow) {
  const auto g = Z({40, 40, 40, 8, 4});
  EXPECT_EQ(mod_q_quotient(g, BigInt(8)), Z({8, 8, 8, 8, 4}));
  EXPECT_EQ(mod_q_quotient(g, BigInt(3)), FiniteAbelianGroup());
  EXPECT_EQ(p_primary_type(g, BigInt(2)), (PartitionType{3, 3, 3, 3, 2}));
  EXPECT_EQ(p_primary_type(g, BigInt(5)), (PartitionType{1, 1, 1}));
  EXPECT_EQ(sylow_subgroup(g, BigInt(5)), Z({5, 5, 5}));
  EXPECT_THROW(p_primary_type(g, BigInt(6)), Error);
  EXPECT_THROW(mod_q_quotient(g, BigInt(0)), Error);
}

TEST(AbelianGroup, SylowDecompositionRecoversGroup) {
  const auto g = Z({2, 6, 12, 48, 48});
  FiniteAbelianGroup rebuilt;
  for (long p : {2, 3}) rebuilt = rebuilt.direct_sum(sylow_subgroup(g, BigInt(p)));
  EXPECT_EQ(rebuilt, g);
}
