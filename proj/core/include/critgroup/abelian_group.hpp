#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "critgroup/integer.hpp"

namespace critgroup {

/// Exponent multiset of a finite abelian p-group, weakly decreasing with no
/// zero parts: Z_{p^3} + Z_{p^3} + Z_p has type (3, 3, 1).
using PartitionType = std::vector<unsigned long>;

/// Finite abelian group in invariant-factor form d_1 | d_2 | ... with every
/// d_i >= 2. The trivial group has no factors and order 1.
class FiniteAbelianGroup {
 public:
  FiniteAbelianGroup() = default;

  /// Direct sum of cyclic groups Z_{c} for arbitrary positive orders c
  /// (1s allowed, any order); normalized to invariant factors.
  static FiniteAbelianGroup from_cyclic_orders(std::vector<BigInt> orders);

  /// Z_c^count.
  static FiniteAbelianGroup cyclic_power(const BigInt& c, std::size_t count);

  const std::vector<BigInt>& invariant_factors() const noexcept {
    return factors_;
  }
  BigInt order() const;
  bool is_trivial() const noexcept { return factors_.empty(); }

  /// Smallest number of generators (the number of invariant factors).
  std::size_t min_generators() const noexcept { return factors_.size(); }

  /// Largest invariant factor, i.e. the exponent of the group (1 if trivial).
  BigInt exponent() const;

  /// True iff every element x satisfies n * x == 0.
  bool is_torsion_of(const BigInt& n) const;

  FiniteAbelianGroup direct_sum(const FiniteAbelianGroup& other) const;

  /// "Z_2 + Z_8 + Z_24", or "0" for the trivial group.
  std::string to_string() const;

  friend bool operator==(const FiniteAbelianGroup&,
                         const FiniteAbelianGroup&) = default;

 private:
  explicit FiniteAbelianGroup(std::vector<BigInt> factors)
      : factors_(std::move(factors)) {}

  std::vector<BigInt> factors_;
};

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g);

/// K / qK, computed factor-wise as the sum of Z_{gcd(d_i, q)}.
FiniteAbelianGroup mod_q_quotient(const FiniteAbelianGroup& k, const BigInt& q);

/// Exponents of p in each invariant factor, decreasing, zeros trimmed.
/// Throws Error(NotPrime) unless p is prime.
PartitionType p_primary_type(const FiniteAbelianGroup& k, const BigInt& p);

/// The p-Sylow subgroup, as a group in its own right.
FiniteAbelianGroup sylow_subgroup(const FiniteAbelianGroup& k, const BigInt& p);

std::size_t min_generators(const FiniteAbelianGroup& k);

}  // namespace critgroup
