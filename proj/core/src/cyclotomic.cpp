#include "cyclo/cyclotomic.hpp"

#include <algorithm>
#include <map>
#include <mutex>
#include <numeric>

#include "cyclo/error.hpp"

namespace cyclo {

namespace {

std::int64_t checked_mul(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_mul_overflow(a, b, &r)) fail(ErrorKind::Overflow, "cyclotomic coefficient overflow");
  return r;
}

std::int64_t checked_sub(std::int64_t a, std::int64_t b) {
  std::int64_t r;
  if (__builtin_sub_overflow(a, b, &r)) fail(ErrorKind::Overflow, "cyclotomic coefficient overflow");
  return r;
}

/// Exact division by a monic integer polynomial.
std::vector<std::int64_t> divide_monic(std::vector<std::int64_t> a, const std::vector<std::int64_t>& b) {
  const std::size_t db = b.size() - 1;
  std::vector<std::int64_t> quo(a.size() - db);
  for (std::size_t i = a.size(); i-- > db;) {
    const std::int64_t c = a[i];
    quo[i - db] = c;
    if (c == 0) continue;
    for (std::size_t j = 0; j <= db; ++j) a[i - db + j] = checked_sub(a[i - db + j], checked_mul(c, b[j]));
  }
  for (std::size_t i = 0; i < db; ++i) {
    if (a[i] != 0) fail(ErrorKind::InvalidArgument, "inexact cyclotomic division");
  }
  return quo;
}

std::mutex& memo_mutex() {
  static std::mutex m;
  return m;
}

std::map<std::uint64_t, std::vector<std::int64_t>>& memo() {
  static std::map<std::uint64_t, std::vector<std::int64_t>> table;
  return table;
}

const std::vector<std::int64_t>& integer_cyclotomic_locked(std::uint64_t n) {
  auto& table = memo();
  if (auto it = table.find(n); it != table.end()) return it->second;
  std::vector<std::int64_t> poly(n + 1, 0);
  poly[0] = -1;
  poly[n] = 1;
  for (std::uint64_t d : divisors(n)) {
    if (d == n) break;
    poly = divide_monic(std::move(poly), integer_cyclotomic_locked(d));
  }
  return table.emplace(n, std::move(poly)).first->second;
}

void require_coprime_to_characteristic(std::uint64_t n, const FieldCtx& field) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (n % field.characteristic() == 0) {
    fail(ErrorKind::CharacteristicDividesN, "char " + std::to_string(field.characteristic()) +
                                                " divides n = " + std::to_string(n));
  }
}

}  // namespace

bool CyclotomicCoset::contains(std::uint64_t i) const {
  return std::binary_search(members.begin(), members.end(), i);
}

const std::vector<std::int64_t>& integer_cyclotomic(std::uint64_t n) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  std::lock_guard lock(memo_mutex());
  return integer_cyclotomic_locked(n);
}

Poly cyclotomic_poly(std::uint64_t n, const FieldCtx& field) {
  require_coprime_to_characteristic(n, field);
  return Poly::from_ints(field, integer_cyclotomic(n));
}

std::vector<CyclotomicCoset> cosets(std::uint64_t n, std::uint64_t q) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "n must be positive");
  if (std::gcd(n, q) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(" + std::to_string(n) + ", " + std::to_string(q) + ") != 1");
  }
  std::vector<CyclotomicCoset> out;
  std::vector<bool> seen(n, false);
  const std::uint64_t step = q % n;
  for (std::uint64_t i = 0; i < n; ++i) {
    if (seen[i]) continue;
    CyclotomicCoset coset{n, q, i, {}};
    std::uint64_t j = i;
    do {
      seen[j] = true;
      coset.members.push_back(j);
      j = mulmod(j, step, n);
    } while (j != i);
    std::sort(coset.members.begin(), coset.members.end());
    out.push_back(std::move(coset));
  }
  return out;
}

RootOfUnity root_of_unity(std::uint64_t n, const FieldCtx& field, std::uint64_t cap) {
  require_coprime_to_characteristic(n, field);
  const auto t = static_cast<unsigned>(multiplicative_order(field.size(), n));
  FieldExtension ext = make_extension(field, t, cap);
  const Fe zeta = nth_root_of_unity(ext.field, n);
  return RootOfUnity{std::move(ext), zeta, n, t};
}

Poly minimal_poly(std::uint64_t s, const RootOfUnity& root) {
  const FieldCtx& big = root.extension.field;
  const std::uint64_t q = root.extension.embedding.base().size();
  Poly product = Poly::constant(big, big.one());
  std::uint64_t j = s % root.n;
  do {
    const Fe r = big.pow(root.zeta, j);
    product *= Poly(big, {big.neg(r), big.one()});
    j = mulmod(j, q % root.n, root.n);
  } while (j != s % root.n);
  return restrict_to_base(product, root.extension.embedding);
}

Poly minimal_poly(std::uint64_t s, std::uint64_t n, const FieldCtx& field) {
  if (std::gcd(n, std::uint64_t{field.size()}) != 1) {
    fail(ErrorKind::NotCoprime, "gcd(n, q) != 1");
  }
  return minimal_poly(s, root_of_unity(n, field));
}

bool verify_factorization(std::uint64_t n, const FieldCtx& field) {
  require_coprime_to_characteristic(n, field);
  Poly product = Poly::constant(field, field.one());
  for (std::uint64_t d : divisors(n)) product *= cyclotomic_poly(d, field);
  return product == Poly::x_pow_minus_one(field, n);
}

}  // namespace cyclo
