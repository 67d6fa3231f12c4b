#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "cyclo/field.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

/// A cyclic code <g(x)> of length n: g monic and dividing x^n - 1,
/// check polynomial h = (x^n - 1)/g, dimension n - deg g.
class CyclicCode {
 public:
  std::size_t length() const { return n_; }
  std::size_t dimension() const { return k_; }
  const FieldCtx& field() const { return generator_.field(); }
  const Poly& generator() const { return generator_; }
  const Poly& check() const { return check_; }
  const std::string& label() const { return label_; }

  CyclicCode relabeled(std::string label) const;

 private:
  CyclicCode(std::size_t n, Poly generator, Poly check, std::string label);

  std::size_t n_;
  std::size_t k_;
  Poly generator_;
  Poly check_;
  std::string label_;

  friend CyclicCode from_generator(const Poly& g, std::size_t n, std::string label);
};

/// Throws NotMonic, NotADivisor.
CyclicCode from_generator(const Poly& g, std::size_t n, std::string label = "");

/// C_n = <Q_n>, an [n, n - phi(n)] code. Requires n > 1 and p not dividing n.
CyclicCode build_cn(std::size_t n, const FieldCtx& field);
/// C_{n,1} = <Q_n Q_1>, an [n, n - phi(n) - 1] code. Throws PrimeLength for prime n.
CyclicCode build_cn1(std::size_t n, const FieldCtx& field);
/// R_n = <1 + x + ... + x^{n-1}>.
CyclicCode build_repetition(std::size_t n, const FieldCtx& field);

/// Euclidean dual, generated by the monic multiple of h^*(x).
CyclicCode dual(const CyclicCode& c);

/// Rows x^i g(x) for 0 <= i < k.
GenMatrix generator_matrix(const CyclicCode& c);
/// Generator matrix of the dual code.
GenMatrix parity_check_matrix(const CyclicCode& c);

/// Row spaces compared through their reduced row-echelon forms.
/// Throws LengthMismatch, FieldMismatch.
bool same_code(const GenMatrix& a, const GenMatrix& b);
bool same_code(const CyclicCode& a, const CyclicCode& b);
bool same_code(const CyclicCode& a, const GenMatrix& b);
bool same_code(const GenMatrix& a, const CyclicCode& b);

/// RREF basis of a + b.
GenMatrix sum_codes(const GenMatrix& a, const GenMatrix& b);
GenMatrix sum_codes(const CyclicCode& a, const CyclicCode& b);

/// Subcode of codewords whose coordinates sum to zero.
GenMatrix zero_sum_subcode(const GenMatrix& c);
GenMatrix zero_sum_subcode(const CyclicCode& c);

/// Block-diagonal generator of a (+) b.
GenMatrix direct_sum(const GenMatrix& a, const GenMatrix& b);
GenMatrix direct_sum(const CyclicCode& a, const CyclicCode& b);

/// Exponents i in Z_n with g(zeta^i) = 0 (defining set) and the complement.
struct ZeroSet {
  std::vector<std::uint64_t> defining_set;
  std::vector<std::uint64_t> nonzeros;
};

/// Zeros relative to the canonical primitive n-th root of unity.
/// Throws DegreeTooLarge when the splitting field exceeds the root-search cap.
ZeroSet zeros_and_nonzeros(const CyclicCode& c);
/// Zeros relative to a caller-supplied n-th root of unity in `ext`.
ZeroSet zeros_relative_to(const CyclicCode& c, const FieldExtension& ext, Fe root);

/// The cyclic code with the same row space, if the row space is cyclic.
/// Its generator is gcd(x^n - 1, rows).
std::optional<CyclicCode> as_cyclic(const GenMatrix& m, std::string label = "");

}  // namespace cyclo
