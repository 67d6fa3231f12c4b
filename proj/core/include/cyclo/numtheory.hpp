#pragma once

#include <cstdint>
#include <optional>
#include <utility>
#include <vector>

namespace cyclo {

/// (prime, exponent) pairs in ascending prime order.
using Factorization = std::vector<std::pair<std::uint64_t, unsigned>>;

bool is_prime(std::uint64_t n);

/// Full factorization of a 64-bit integer (trial division for small
/// cofactors, Pollard-Brent with a deterministic Miller-Rabin otherwise).
Factorization factorize(std::uint64_t n);

std::vector<std::uint64_t> divisors(std::uint64_t n);

std::uint64_t euler_phi(std::uint64_t n);

/// Least e >= 1 with base^e == 1 (mod n). Requires gcd(base, n) == 1.
std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t n);

/// base^exp, or nullopt when the result exceeds `limit`.
std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit = UINT64_MAX);

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m);
std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m);

/// Number-theoretic summary of a length n: phi, omega, lpf, divisors.
struct ArithmeticProfile {
  std::uint64_t n = 1;
  std::uint64_t phi = 1;
  unsigned omega = 0;
  std::vector<std::uint64_t> divisors;
  Factorization factorization;

  /// Least prime factor; throws InvalidArgument for n == 1.
  std::uint64_t lpf() const;
  bool is_prime() const { return factorization.size() == 1 && factorization[0].second == 1; }
  bool is_composite() const { return n > 1 && !is_prime(); }
  bool is_prime_power() const { return factorization.size() == 1; }
};

ArithmeticProfile profile(std::uint64_t n);

}  // namespace cyclo
