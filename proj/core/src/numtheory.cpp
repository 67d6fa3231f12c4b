#include "cyclo/numtheory.hpp"

#include <algorithm>
#include <map>
#include <numeric>

#include "cyclo/error.hpp"

namespace cyclo {

std::uint64_t mulmod(std::uint64_t a, std::uint64_t b, std::uint64_t m) {
  return static_cast<std::uint64_t>(static_cast<unsigned __int128>(a) * b % m);
}

std::uint64_t powmod(std::uint64_t base, std::uint64_t exp, std::uint64_t m) {
  std::uint64_t result = 1 % m;
  base %= m;
  while (exp > 0) {
    if (exp & 1) result = mulmod(result, base, m);
    base = mulmod(base, base, m);
    exp >>= 1;
  }
  return result;
}

namespace {

bool miller_rabin_witness(std::uint64_t n, std::uint64_t a, std::uint64_t d, unsigned s) {
  std::uint64_t x = powmod(a, d, n);
  if (x == 1 || x == n - 1) return false;
  for (unsigned r = 1; r < s; ++r) {
    x = mulmod(x, x, n);
    if (x == n - 1) return false;
  }
  return true;
}

std::uint64_t pollard_brent(std::uint64_t n) {
  if (n % 2 == 0) return 2;
  for (std::uint64_t c = 1;; ++c) {
    std::uint64_t y = 2, x = 2, g = 1, q = 1, ys = 2;
    const std::uint64_t m = 128;
    std::uint64_t r = 1;
    auto f = [&](std::uint64_t v) { return (mulmod(v, v, n) + c) % n; };
    do {
      x = y;
      for (std::uint64_t i = 0; i < r; ++i) y = f(y);
      std::uint64_t k = 0;
      do {
        ys = y;
        for (std::uint64_t i = 0; i < std::min(m, r - k); ++i) {
          y = f(y);
          q = mulmod(q, x > y ? x - y : y - x, n);
        }
        g = std::gcd(q, n);
        k += m;
      } while (k < r && g == 1);
      r *= 2;
    } while (g == 1);
    if (g == n) {
      do {
        ys = f(ys);
        g = std::gcd(x > ys ? x - ys : ys - x, n);
      } while (g == 1);
    }
    if (g != n) return g;
  }
}

void factor_into(std::uint64_t n, std::map<std::uint64_t, unsigned>& out) {
  if (n == 1) return;
  if (is_prime(n)) {
    ++out[n];
    return;
  }
  std::uint64_t d = pollard_brent(n);
  factor_into(d, out);
  factor_into(n / d, out);
}

}  // namespace

bool is_prime(std::uint64_t n) {
  if (n < 2) return false;
  for (std::uint64_t p : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (n % p == 0) return n == p;
  }
  std::uint64_t d = n - 1;
  unsigned s = 0;
  while ((d & 1) == 0) {
    d >>= 1;
    ++s;
  }
  // This base set is deterministic for all 64-bit n.
  for (std::uint64_t a : {2, 3, 5, 7, 11, 13, 17, 19, 23, 29, 31, 37}) {
    if (miller_rabin_witness(n, a, d, s)) return false;
  }
  return true;
}

Factorization factorize(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "cannot factor 0");
  std::map<std::uint64_t, unsigned> primes;
  for (std::uint64_t p = 2; p < 1000 && p * p <= n; ++p) {
    while (n % p == 0) {
      ++primes[p];
      n /= p;
    }
  }
  factor_into(n, primes);
  return {primes.begin(), primes.end()};
}

std::vector<std::uint64_t> divisors(std::uint64_t n) {
  std::vector<std::uint64_t> out{1};
  for (auto [p, e] : factorize(n)) {
    const std::size_t base = out.size();
    std::uint64_t pk = 1;
    for (unsigned i = 0; i < e; ++i) {
      pk *= p;
      for (std::size_t j = 0; j < base; ++j) out.push_back(out[j] * pk);
    }
  }
  std::sort(out.begin(), out.end());
  return out;
}

std::uint64_t euler_phi(std::uint64_t n) {
  std::uint64_t phi = n;
  for (auto [p, e] : factorize(n)) phi = phi / p * (p - 1);
  return phi;
}

std::uint64_t multiplicative_order(std::uint64_t base, std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "modulus must be positive");
  if (n == 1) return 1;
  if (std::gcd(base % n, n) != 1) {
    fail(ErrorKind::NotCoprime,
         "gcd(" + std::to_string(base) + ", " + std::to_string(n) + ") != 1");
  }
  std::uint64_t order = euler_phi(n);
  for (auto [p, e] : factorize(order)) {
    for (unsigned i = 0; i < e && powmod(base, order / p, n) == 1; ++i) order /= p;
  }
  return order;
}

std::optional<std::uint64_t> checked_pow(std::uint64_t base, std::uint64_t exp,
                                         std::uint64_t limit) {
  std::uint64_t result = 1;
  for (std::uint64_t i = 0; i < exp; ++i) {
    if (base != 0 && result > limit / base) return std::nullopt;
    result *= base;
    if (base <= 1) break;
  }
  if (result > limit) return std::nullopt;
  return result;
}

std::uint64_t ArithmeticProfile::lpf() const {
  if (factorization.empty()) fail(ErrorKind::InvalidArgument, "lpf(1) is undefined");
  return factorization.front().first;
}

ArithmeticProfile profile(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "profile requires n >= 1");
  ArithmeticProfile out;
  out.n = n;
  out.factorization = factorize(n);
  out.omega = static_cast<unsigned>(out.factorization.size());
  out.phi = euler_phi(n);
  out.divisors = divisors(n);
  return out;
}

}  // namespace cyclo
