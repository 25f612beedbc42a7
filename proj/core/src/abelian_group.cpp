#include "critgroup/abelian_group.hpp"

#include <algorithm>
#include <ostream>

#include "critgroup/error.hpp"

namespace critgroup {

FiniteAbelianGroup FiniteAbelianGroup::from_cyclic_orders(std::vector<BigInt> orders) {
  for (auto& c : orders) {
    if (c == 0) throw Error(ErrorKind::BadParams, "cyclic order 0 is not finite");
    c = abs(c);
  }
  // Z_a + Z_b == Z_gcd + Z_lcm; sweeping every pair leaves a divisibility chain.
  for (std::size_t i = 0; i < orders.size(); ++i) {
    for (std::size_t j = i + 1; j < orders.size(); ++j) {
      if (orders[j] % orders[i] == 0) continue;
      BigInt g = gcd(orders[i], orders[j]);
      BigInt l = orders[i] / g * orders[j];
      orders[i] = std::move(g);
      orders[j] = std::move(l);
    }
  }
  std::erase_if(orders, [](const BigInt& c) { return c == 1; });
  return FiniteAbelianGroup(std::move(orders));
}

FiniteAbelianGroup FiniteAbelianGroup::cyclic_power(const BigInt& c, std::size_t count) {
  return from_cyclic_orders(std::vector<BigInt>(count, c));
}

BigInt FiniteAbelianGroup::order() const {
  BigInt n = 1;
  for (const auto& d : factors_) n *= d;
  return n;
}

BigInt FiniteAbelianGroup::exponent() const {
  return factors_.empty() ? BigInt(1) : factors_.back();
}

bool FiniteAbelianGroup::is_torsion_of(const BigInt& n) const {
  return std::all_of(factors_.begin(), factors_.end(),
                     [&](const BigInt& d) { return n % d == 0; });
}

FiniteAbelianGroup FiniteAbelianGroup::direct_sum(const FiniteAbelianGroup& other) const {
  std::vector<BigInt> all = factors_;
  all.insert(all.end(), other.factors_.begin(), other.factors_.end());
  return from_cyclic_orders(std::move(all));
}

std::string FiniteAbelianGroup::to_string() const {
  if (factors_.empty()) return "0";
  std::string out;
  for (std::size_t i = 0; i < factors_.size(); ++i) {
    if (i) out += " + ";
    out += "Z_" + factors_[i].get_str();
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const FiniteAbelianGroup& g) {
  return os << g.to_string();
}

FiniteAbelianGroup mod_q_quotient(const FiniteAbelianGroup& k, const BigInt& q) {
  if (q < 1) throw Error(ErrorKind::BadParams, "q must be positive");
  std::vector<BigInt> orders;
  orders.reserve(k.invariant_factors().size());
  for (const auto& d : k.invariant_factors()) orders.push_back(gcd(d, q));
  return FiniteAbelianGroup::from_cyclic_orders(std::move(orders));
}

PartitionType p_primary_type(const FiniteAbelianGroup& k, const BigInt& p) {
  if (!is_prime(p)) throw Error(ErrorKind::NotPrime, p.get_str() + " is not prime");
  PartitionType type;
  for (const auto& d : k.invariant_factors()) {
    if (unsigned long e = valuation(d, p)) type.push_back(e);
  }
  std::sort(type.begin(), type.end(), std::greater<>());
  return type;
}

FiniteAbelianGroup sylow_subgroup(const FiniteAbelianGroup& k, const BigInt& p) {
  std::vector<BigInt> orders;
  for (unsigned long e : p_primary_type(k, p)) orders.push_back(pow(p, e));
  return FiniteAbelianGroup::from_cyclic_orders(std::move(orders));
}

std::size_t min_generators(const FiniteAbelianGroup& k) { return k.min_generators(); }

}  // namespace critgroup
