#pragma once

#include <gmpxx.h>

#include <cstdint>
#include <string>
#include <string_view>

namespace critgroup {

/// Arbitrary-precision integer used for every matrix entry and group order.
using BigInt = mpz_class;

inline std::string to_string(const BigInt& x) { return x.get_str(10); }

/// Parses a decimal integer; throws Error(ParseError) on malformed text.
BigInt parse_bigint(std::string_view text);

/// Non-negative gcd; gcd(0, 0) == 0.
BigInt gcd(const BigInt& a, const BigInt& b);
BigInt lcm(const BigInt& a, const BigInt& b);
BigInt pow(const BigInt& base, unsigned long exponent);

/// Largest k with p^k | x, for x != 0 and p >= 2.
unsigned long valuation(const BigInt& x, const BigInt& p);

/// Primality via GMP (trial division plus 40 Miller-Rabin rounds; exact for
/// every value this library feeds it).
bool is_prime(const BigInt& p);

inline bool fits_int64(const BigInt& x) { return x.fits_slong_p() != 0; }

BigInt binomial(unsigned long n, unsigned long k);

}  // namespace critgroup
