#pragma once

#include <cstdint>
#include <initializer_list>
#include <span>
#include <utility>
#include <vector>

#include "cyclo/field.hpp"

namespace cyclo {

/// Dense univariate polynomial over a FieldCtx. Coefficients are ascending
/// with no trailing zeros; the zero polynomial has no coefficients.
class Poly {
 public:
  explicit Poly(FieldCtx field);
  Poly(FieldCtx field, std::vector<Fe> coeffs);

  /// Integer coefficients reduced into the prime subfield.
  static Poly from_ints(FieldCtx field, std::span<const std::int64_t> coeffs);
  static Poly from_ints(FieldCtx field, std::initializer_list<std::int64_t> coeffs);
  static Poly constant(FieldCtx field, Fe c);
  static Poly monomial(FieldCtx field, std::size_t degree, Fe coeff);
  /// x^n - 1.
  static Poly x_pow_minus_one(FieldCtx field, std::size_t n);

  const FieldCtx& field() const { return field_; }
  std::span<const Fe> coeffs() const { return coeffs_; }
  bool is_zero() const { return coeffs_.empty(); }
  /// Throws ZeroPolynomial for the zero polynomial.
  std::size_t degree() const;
  /// Coefficient of x^i (zero past the degree).
  Fe coeff(std::size_t i) const { return i < coeffs_.size() ? coeffs_[i] : Fe{}; }
  Fe leading() const;
  bool is_monic() const { return !is_zero() && coeffs_.back() == field_.one(); }
  bool is_one() const { return coeffs_.size() == 1 && coeffs_[0] == field_.one(); }

  Poly monic() const;
  Poly scaled(Fe c) const;
  /// f(x^k).
  Poly substitute_power(std::size_t k) const;

  Poly& operator+=(const Poly& rhs);
  Poly& operator-=(const Poly& rhs);
  Poly& operator*=(const Poly& rhs);
  friend Poly operator+(Poly a, const Poly& b) { return a += b; }
  friend Poly operator-(Poly a, const Poly& b) { return a -= b; }
  friend Poly operator*(Poly a, const Poly& b) { return a *= b; }
  friend bool operator==(const Poly& a, const Poly& b);

 private:
  void normalize();
  void require_same_field(const Poly& other) const;

  FieldCtx field_;
  std::vector<Fe> coeffs_;
};

/// a = q*b + r with deg r < deg b. Throws DivisionByZero for b == 0.
std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b);
Poly operator%(const Poly& a, const Poly& b);
/// Quotient of an exact division; throws NotADivisor when b does not divide a.
Poly exact_quotient(const Poly& a, const Poly& b);
bool divides(const Poly& d, const Poly& a);

/// Monic gcd; gcd(0, 0) = 0.
Poly gcd(Poly a, Poly b);
Poly derivative(const Poly& f);

/// x^deg(f) * f(1/x): reversed coefficients with trailing zeros stripped.
Poly reciprocal(const Poly& f);

Poly mulmod(const Poly& a, const Poly& b, const Poly& m);
Poly powmod(Poly base, std::uint64_t e, const Poly& m);

/// Squarefree decomposition f = lc * prod(a_i^i) as (a_i, i) pairs with
/// a_i monic, squarefree and nonconstant, ordered by multiplicity.
std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f);

/// Degrees of the irreducible factors of a squarefree polynomial (sorted,
/// without repetition).
std::vector<unsigned> distinct_factor_degrees(const Poly& squarefree);

/// Least e >= 1 with f | x^e - 1 (after stripping any x^r factor).
/// Throws ZeroPolynomial, UnitPolynomial, OrderSearchTooLarge.
std::uint64_t poly_order(const Poly& f);

/// f | x^c - 1. Requires f(0) != 0.
bool order_divides(const Poly& f, std::uint64_t c);

/// Rabin irreducibility test over f's own field.
bool is_irreducible(const Poly& f);

/// Horner evaluation at a point of f's own field.
Fe eval(const Poly& f, Fe a);
/// Evaluation at a point of an extension; coefficients are embedded first.
/// Throws ContextMismatch if f is not over the embedding's base field.
Fe eval(const Poly& f, const FieldEmbedding& embedding, Fe a);

/// Image of f under a coefficient embedding.
Poly embed(const Poly& f, const FieldEmbedding& embedding);
/// Pulls a polynomial with all coefficients in the embedded base field back
/// to the base field. Throws NotCompatible otherwise.
Poly restrict_to_base(const Poly& f, const FieldEmbedding& embedding);

}  // namespace cyclo
