#pragma once

// Brute-force reference implementations used to derive expected values.
// They deliberately avoid the library's algorithms: plain integer
// polynomial arithmetic, complex roots of unity, exhaustive scans.

#include <cstdint>
#include <numeric>
#include <optional>
#include <random>
#include <vector>

#include <cyclo/field.hpp>
#include <cyclo/matrix.hpp>

namespace oracle {

using IPoly = std::vector<std::int64_t>;  // ascending coefficients

inline std::int64_t mod(std::int64_t a, std::int64_t p) { return ((a % p) + p) % p; }

inline IPoly trim(IPoly a) {
  while (!a.empty() && a.back() == 0) a.pop_back();
  return a;
}

inline IPoly reduce(IPoly a, std::int64_t p) {
  for (auto& c : a) c = mod(c, p);
  return trim(std::move(a));
}

inline IPoly mul(const IPoly& a, const IPoly& b, std::int64_t p) {
  if (a.empty() || b.empty()) return {};
  IPoly out(a.size() + b.size() - 1, 0);
  for (std::size_t i = 0; i < a.size(); ++i)
    for (std::size_t j = 0; j < b.size(); ++j) out[i + j] = mod(out[i + j] + a[i] * b[j], p);
  return trim(out);
}

inline std::int64_t inv_mod(std::int64_t a, std::int64_t p) {
  for (std::int64_t x = 1; x < p; ++x)
    if (mod(a * x, p) == 1) return x;
  return 0;
}

/// Remainder of a modulo m over F_p (m nonzero).
inline IPoly rem(IPoly a, const IPoly& m, std::int64_t p) {
  a = reduce(std::move(a), p);
  const std::int64_t lead_inv = inv_mod(m.back(), p);
  while (a.size() >= m.size()) {
    const std::int64_t factor = mod(a.back() * lead_inv, p);
    const std::size_t shift = a.size() - m.size();
    for (std::size_t i = 0; i < m.size(); ++i) a[shift + i] = mod(a[shift + i] - factor * m[i], p);
    a = trim(std::move(a));
  }
  return a;
}

/// Element value v = sum c_i p^i to coordinate polynomial.
inline IPoly decode(std::uint32_t v, std::int64_t p) {
  IPoly out;
  while (v) {
    out.push_back(v % p);
    v /= static_cast<std::uint32_t>(p);
  }
  return out;
}

inline std::uint32_t encode(const IPoly& a, std::int64_t p) {
  std::uint64_t v = 0;
  for (std::size_t i = a.size(); i-- > 0;) v = v * p + a[i];
  return static_cast<std::uint32_t>(v);
}

/// Multiplication in F_p[u]/(modulus) on encoded values.
struct SlowField {
  std::int64_t p;
  IPoly modulus;

  std::uint32_t add(std::uint32_t a, std::uint32_t b) const {
    IPoly x = decode(a, p), y = decode(b, p);
    x.resize(std::max(x.size(), y.size()), 0);
    for (std::size_t i = 0; i < y.size(); ++i) x[i] += y[i];
    return encode(reduce(x, p), p);
  }
  std::uint32_t mul(std::uint32_t a, std::uint32_t b) const {
    return encode(rem(oracle::mul(decode(a, p), decode(b, p), p), modulus, p), p);
  }
  std::uint32_t pow(std::uint32_t a, std::uint64_t e) const {
    std::uint32_t r = 1;
    for (std::uint64_t i = 0; i < e; ++i) r = mul(r, a);
    return r;
  }
};

inline SlowField slow_field(const cyclo::FieldCtx& f) {
  IPoly m(f.modulus().begin(), f.modulus().end());
  if (m.empty()) m = {0, 1};  // prime field: reduce modulo u
  return SlowField{static_cast<std::int64_t>(f.characteristic()), m};
}

/// Irreducibility by trial division with every monic polynomial of degree 1..deg/2.
inline bool irreducible(const IPoly& f, std::int64_t p) {
  const std::size_t deg = f.size() - 1;
  for (std::size_t d = 1; 2 * d <= deg; ++d) {
    std::uint64_t count = 1;
    for (std::size_t i = 0; i < d; ++i) count *= p;
    for (std::uint64_t low = 0; low < count; ++low) {
      IPoly g = decode(static_cast<std::uint32_t>(low), p);
      g.resize(d, 0);
      g.push_back(1);
      if (rem(f, g, p).empty()) return false;
    }
  }
  return true;
}

/// Least e >= 1 with f | x^e - 1 over F_p, by stepping x^e mod f.
inline std::uint64_t poly_order(const IPoly& f, std::int64_t p, std::uint64_t limit = 1u << 20) {
  IPoly power{1};
  for (std::uint64_t e = 1; e <= limit; ++e) {
    power.insert(power.begin(), 0);
    power = rem(power, f, p);
    if (power == IPoly{1}) return e;
  }
  return 0;
}

inline int mobius(std::uint64_t n) {
  int sign = 1;
  for (std::uint64_t d = 2; d <= n; ++d) {
    if (n % d) continue;
    n /= d;
    if (n % d == 0) return 0;
    sign = -sign;
  }
  return sign;
}

/// Integer coefficients of Q_n from prod_{d | n} (1 - x^d)^{mu(n/d)} as a
/// power series truncated at degree phi(n) (n > 1).
inline std::vector<std::int64_t> cyclotomic_via_mobius(std::uint64_t n) {
  std::uint64_t deg = 0;
  for (std::uint64_t i = 1; i <= n; ++i) deg += std::gcd(i, n) == 1;
  std::vector<std::int64_t> series(deg + 1, 0);
  series[0] = 1;
  for (std::uint64_t d = 1; d <= n; ++d) {
    if (n % d) continue;
    const int mu = mobius(n / d);
    if (mu == 1) {
      for (std::uint64_t i = deg; i >= d; --i) series[i] -= series[i - d];
    } else if (mu == -1) {
      for (std::uint64_t i = d; i <= deg; ++i) series[i] += series[i - d];
    }
  }
  return series;
}

inline std::uint64_t phi(std::uint64_t n) {
  std::uint64_t c = 0;
  for (std::uint64_t i = 1; i <= n; ++i) c += std::gcd(i, n) == 1;
  return c;
}

inline unsigned omega(std::uint64_t n) {
  unsigned c = 0;
  for (std::uint64_t d = 2; d <= n; ++d) {
    bool prime = true;
    for (std::uint64_t e = 2; e * e <= d; ++e) prime = prime && d % e != 0;
    if (prime && n % d == 0) ++c;
  }
  return c;
}

inline std::uint64_t lpf(std::uint64_t n) {
  for (std::uint64_t d = 2; d <= n; ++d)
    if (n % d == 0) return d;
  return 0;
}

inline std::uint64_t mult_order(std::uint64_t q, std::uint64_t n) {
  std::uint64_t x = q % n;
  for (std::uint64_t e = 1; e <= n; ++e) {
    if (x == 1 % n) return e;
    x = x * q % n;
  }
  return 0;
}

inline std::size_t crt(std::size_t i, std::size_t j, std::size_t n1, std::size_t n2) {
  for (std::size_t z = 0; z < n1 * n2; ++z)
    if (z % n1 == i && z % n2 == j) return z;
  return n1 * n2;
}

/// Weight distribution of the row space of m by counting through all q^k messages.
inline std::vector<std::uint64_t> weights(const cyclo::GenMatrix& m) {
  const cyclo::FieldCtx& f = m.field();
  const std::size_t k = m.rows(), n = m.length();
  std::vector<std::uint64_t> dist(n + 1, 0);
  std::vector<std::uint32_t> msg(k, 0);
  while (true) {
    std::size_t w = 0;
    for (std::size_t j = 0; j < n; ++j) {
      cyclo::Fe s = f.zero();
      for (std::size_t i = 0; i < k; ++i) s = f.add(s, f.mul(cyclo::Fe{msg[i]}, m.at(i, j)));
      w += !s.is_zero();
    }
    ++dist[w];
    std::size_t i = 0;
    while (i < k && ++msg[i] == f.size()) msg[i++] = 0;
    if (i == k) break;
  }
  return dist;
}

inline std::uint64_t min_distance(const cyclo::GenMatrix& m) {
  const auto w = weights(m);
  for (std::size_t i = 1; i < w.size(); ++i)
    if (w[i]) return i;
  return 0;
}

}  // namespace oracle
