#pragma once

#include <compare>
#include <cstdint>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <unordered_map>
#include <vector>

namespace cyclo {

/// Largest field a context built from a literal may have.
inline constexpr std::uint64_t kMaxFieldSize = std::uint64_t{1} << 16;
/// Largest extension field built for root-of-unity searches.
inline constexpr std::uint64_t kRootSearchCap = std::uint64_t{1} << 24;

namespace detail {
struct FieldImpl;
}

/// An element of a finite field, encoded as the integer sum(c_i * p^i) of its
/// polynomial-basis coordinates (c_0 is the constant term). The encoding order
/// is the canonical element order used for every "smallest element" choice.
struct Fe {
  std::uint32_t v = 0;

  friend constexpr auto operator<=>(Fe, Fe) = default;
  constexpr bool is_zero() const { return v == 0; }
};

/// F_{p^l} represented as F_p[u]/(m(u)) with m the canonically least monic
/// irreducible of degree l. Immutable and cheap to copy (shared state).
class FieldCtx {
 public:
  std::uint32_t characteristic() const;
  unsigned degree() const;
  std::uint32_t size() const;
  /// Ascending coefficients of the modulus, length degree()+1; empty for F_p.
  std::span<const std::uint32_t> modulus() const;
  /// "p" or "p^l".
  std::string literal() const;

  Fe zero() const { return Fe{0}; }
  Fe one() const { return Fe{1}; }
  /// Image of an integer in the prime subfield.
  Fe from_int(std::int64_t value) const;
  Fe from_coords(std::span<const std::uint32_t> coords) const;
  std::vector<std::uint32_t> coords(Fe a) const;
  bool contains(Fe a) const { return a.v < size(); }
  /// True when `a` lies in the prime subfield F_p.
  bool is_prime_subfield(Fe a) const { return a.v < characteristic(); }

  Fe add(Fe a, Fe b) const;
  Fe sub(Fe a, Fe b) const;
  Fe neg(Fe a) const;
  Fe mul(Fe a, Fe b) const;
  /// Throws DivisionByZero for a == 0.
  Fe inv(Fe a) const;
  Fe div(Fe a, Fe b) const;
  Fe pow(Fe a, std::uint64_t e) const;

  /// Canonical (least-encoded) primitive element.
  Fe primitive_element() const;

  friend bool operator==(const FieldCtx& a, const FieldCtx& b);

 private:
  explicit FieldCtx(std::shared_ptr<const detail::FieldImpl> impl) : impl_(std::move(impl)) {}
  std::shared_ptr<const detail::FieldImpl> impl_;

  friend FieldCtx make_prime_field(std::uint32_t p);
  friend FieldCtx make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                          std::uint64_t cap);
};

/// Throws NotPrime for composite p or p < 2.
FieldCtx make_prime_field(std::uint32_t p);

/// F_p[u]/(modulus). The modulus must be monic and irreducible over F_p.
FieldCtx make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                 std::uint64_t cap = kRootSearchCap);

/// F_{p^l} with the canonical modulus.
FieldCtx make_field(std::uint32_t p, unsigned l, std::uint64_t cap = kMaxFieldSize);

/// Canonically least monic irreducible polynomial of degree l over F_p,
/// as ascending coefficients (length l+1).
std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned l);

/// Parses "p", "p^l" or a bare prime power such as "9".
FieldCtx parse_field(std::string_view literal);

/// Injective ring homomorphism base -> target that fixes F_p.
class FieldEmbedding {
 public:
  FieldEmbedding(FieldCtx base, FieldCtx target, std::vector<Fe> image);

  const FieldCtx& base() const { return base_; }
  const FieldCtx& target() const { return target_; }
  Fe operator()(Fe a) const { return image_[a.v]; }
  std::optional<Fe> preimage(Fe b) const;
  bool is_identity() const { return base_ == target_; }

 private:
  FieldCtx base_;
  FieldCtx target_;
  std::vector<Fe> image_;
  std::unordered_map<std::uint32_t, std::uint32_t> inverse_;
};

struct FieldExtension {
  FieldCtx field;
  FieldEmbedding embedding;
  unsigned degree = 1;
};

/// F_{q^m} built as a single F_p-extension of degree l*m, with F_q embedded
/// through the canonically least root of F_q's modulus. Throws
/// DegreeTooLarge when q^m exceeds `cap`.
FieldExtension make_extension(const FieldCtx& base, unsigned m, std::uint64_t cap = kRootSearchCap);

Fe find_primitive_element(const FieldCtx& ctx);

/// Least e >= 1 with a^e == 1. Throws DivisionByZero for a == 0.
std::uint64_t element_order(const FieldCtx& ctx, Fe a);

/// gamma^((q-1)/n) for the canonical primitive gamma. Throws NotCompatible
/// unless n divides q-1.
Fe nth_root_of_unity(const FieldCtx& ctx, std::uint64_t n);

}  // namespace cyclo
