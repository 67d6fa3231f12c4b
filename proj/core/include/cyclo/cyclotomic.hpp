#pragma once

#include <cstdint>
#include <vector>

#include "cyclo/field.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

/// Orbit of a residue under multiplication by q modulo n.
struct CyclotomicCoset {
  std::uint64_t n = 1;
  std::uint64_t q = 2;
  std::uint64_t representative = 0;
  std::vector<std::uint64_t> members;  // sorted ascending

  std::size_t size() const { return members.size(); }
  bool contains(std::uint64_t i) const;
};

/// Integer coefficients of the n-th cyclotomic polynomial, ascending.
/// Computed by exact division of x^n - 1 by Q_d for every proper divisor d;
/// memoized process-wide behind a mutex. Throws Overflow if a coefficient
/// leaves the 64-bit range.
const std::vector<std::int64_t>& integer_cyclotomic(std::uint64_t n);

/// Q_n reduced into `field`. Throws CharacteristicDividesN if p | n.
Poly cyclotomic_poly(std::uint64_t n, const FieldCtx& field);

/// All cosets of q in Z_n, sorted by representative. Throws NotCoprime.
std::vector<CyclotomicCoset> cosets(std::uint64_t n, std::uint64_t q);

/// Splitting data for x^n - 1 over `field`: the smallest extension holding
/// the n-th roots of unity and the canonical primitive n-th root zeta.
struct RootOfUnity {
  FieldExtension extension;
  Fe zeta;
  std::uint64_t n = 1;
  unsigned t = 1;  // multiplicative order of q mod n
};

/// Throws NotCoprime, DegreeTooLarge (when q^t exceeds `cap`).
RootOfUnity root_of_unity(std::uint64_t n, const FieldCtx& field, std::uint64_t cap = kRootSearchCap);

/// prod_{j in C_s} (x - zeta^j) pulled back to `field`.
Poly minimal_poly(std::uint64_t s, std::uint64_t n, const FieldCtx& field);
Poly minimal_poly(std::uint64_t s, const RootOfUnity& root);

/// prod_{d | n} Q_d == x^n - 1 over `field`.
bool verify_factorization(std::uint64_t n, const FieldCtx& field);

}  // namespace cyclo
