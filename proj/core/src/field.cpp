#include "cyclo/field.hpp"

#include <algorithm>
#include <charconv>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/poly.hpp"

namespace cyclo {

namespace detail {

struct FieldImpl {
  std::uint32_t p = 2;
  unsigned l = 1;
  std::uint32_t q = 2;
  std::vector<std::uint32_t> modulus;  // ascending, empty for prime fields
  std::uint64_t modulus_mask = 0;      // p == 2 only: bit i = coefficient of u^i
  Fe primitive{};
  // exp/log tables for q <= kMaxFieldSize; exp has 2(q-1) entries.
  std::vector<std::uint32_t> exp;
  std::vector<std::uint32_t> log;

  bool has_tables() const { return !exp.empty(); }

  Fe add(Fe a, Fe b) const {
    if (p == 2) return Fe{a.v ^ b.v};
    if (l == 1) return Fe{(a.v + b.v) % p};
    std::uint32_t r = 0, m = 1, x = a.v, y = b.v;
    for (unsigned i = 0; i < l; ++i) {
      r += ((x % p + y % p) % p) * m;
      x /= p;
      y /= p;
      m *= p;
    }
    return Fe{r};
  }

  Fe neg(Fe a) const {
    if (p == 2) return a;
    if (l == 1) return Fe{(p - a.v) % p};
    std::uint32_t r = 0, m = 1, x = a.v;
    for (unsigned i = 0; i < l; ++i) {
      r += ((p - x % p) % p) * m;
      x /= p;
      m *= p;
    }
    return Fe{r};
  }

  Fe mul_generic(Fe a, Fe b) const {
    if (l == 1) return Fe{static_cast<std::uint32_t>(std::uint64_t{a.v} * b.v % p)};
    if (p == 2) {
      std::uint64_t prod = 0;
      for (unsigned i = 0; i < l; ++i) {
        if ((b.v >> i) & 1) prod ^= std::uint64_t{a.v} << i;
      }
      for (int i = 2 * static_cast<int>(l) - 2; i >= static_cast<int>(l); --i) {
        if ((prod >> i) & 1) prod ^= modulus_mask << (i - l);
      }
      return Fe{static_cast<std::uint32_t>(prod)};
    }
    std::uint64_t da[32] = {}, db[32] = {}, prod[64] = {};
    std::uint32_t x = a.v, y = b.v;
    for (unsigned i = 0; i < l; ++i) {
      da[i] = x % p;
      db[i] = y % p;
      x /= p;
      y /= p;
    }
    for (unsigned i = 0; i < l; ++i) {
      if (da[i] == 0) continue;
      for (unsigned j = 0; j < l; ++j) prod[i + j] = (prod[i + j] + da[i] * db[j]) % p;
    }
    for (int i = 2 * static_cast<int>(l) - 2; i >= static_cast<int>(l); --i) {
      const std::uint64_t c = prod[i];
      if (c == 0) continue;
      // u^l = -(m_0 + ... + m_{l-1} u^{l-1})
      for (unsigned j = 0; j < l; ++j) {
        prod[i - l + j] = (prod[i - l + j] + (p - c) * modulus[j]) % p;
      }
      prod[i] = 0;
    }
    std::uint32_t r = 0, m = 1;
    for (unsigned i = 0; i < l; ++i) {
      r += static_cast<std::uint32_t>(prod[i]) * m;
      m *= p;
    }
    return Fe{r};
  }

  Fe mul(Fe a, Fe b) const {
    if (a.v == 0 || b.v == 0) return Fe{0};
    if (has_tables()) return Fe{exp[log[a.v] + log[b.v]]};
    return mul_generic(a, b);
  }

  Fe pow(Fe a, std::uint64_t e) const {
    Fe result{1};
    while (e > 0) {
      if (e & 1) result = mul(result, a);
      a = mul(a, a);
      e >>= 1;
    }
    return result;
  }
};

}  // namespace detail

namespace {

bool trial_division_prime(std::uint32_t p) {
  if (p < 2) return false;
  for (std::uint32_t d = 2; d * d <= p; ++d) {
    if (p % d == 0) return false;
  }
  return true;
}

Fe search_primitive(const detail::FieldImpl& f) {
  const std::uint32_t order = f.q - 1;
  if (order == 1) return Fe{1};
  const auto fac = factorize(order);
  for (std::uint32_t a = 2; a < f.q; ++a) {
    bool ok = true;
    for (auto [r, e] : fac) {
      if (f.pow(Fe{a}, order / r) == Fe{1}) {
        ok = false;
        break;
      }
    }
    if (ok) return Fe{a};
  }
  fail(ErrorKind::InvalidArgument, "field has no primitive element (modulus not irreducible?)");
}

void build_tables(detail::FieldImpl& f) {
  if (f.q > kMaxFieldSize || f.q < 3) return;
  const std::uint32_t order = f.q - 1;
  std::vector<std::uint32_t> exp(2 * order), log(f.q, 0);
  Fe x{1};
  for (std::uint32_t i = 0; i < order; ++i) {
    exp[i] = x.v;
    log[x.v] = i;
    x = f.mul_generic(x, f.primitive);
  }
  for (std::uint32_t i = order; i < 2 * order; ++i) exp[i] = exp[i - order];
  f.exp = std::move(exp);
  f.log = std::move(log);
}

}  // namespace

std::uint32_t FieldCtx::characteristic() const { return impl_->p; }
unsigned FieldCtx::degree() const { return impl_->l; }
std::uint32_t FieldCtx::size() const { return impl_->q; }
std::span<const std::uint32_t> FieldCtx::modulus() const { return impl_->modulus; }

std::string FieldCtx::literal() const {
  if (impl_->l == 1) return std::to_string(impl_->p);
  return std::to_string(impl_->p) + "^" + std::to_string(impl_->l);
}

Fe FieldCtx::from_int(std::int64_t value) const {
  const std::int64_t p = impl_->p;
  return Fe{static_cast<std::uint32_t>(((value % p) + p) % p)};
}

Fe FieldCtx::from_coords(std::span<const std::uint32_t> coords) const {
  if (coords.size() > impl_->l) {
    fail(ErrorKind::ParseError, "element has more coordinates than the field degree");
  }
  std::uint32_t r = 0, m = 1;
  for (std::uint32_t c : coords) {
    if (c >= impl_->p) fail(ErrorKind::ParseError, "coordinate out of range [0, p)");
    r += c * m;
    m *= impl_->p;
  }
  return Fe{r};
}

std::vector<std::uint32_t> FieldCtx::coords(Fe a) const {
  std::vector<std::uint32_t> out(impl_->l);
  for (unsigned i = 0; i < impl_->l; ++i) {
    out[i] = a.v % impl_->p;
    a.v /= impl_->p;
  }
  return out;
}

Fe FieldCtx::add(Fe a, Fe b) const { return impl_->add(a, b); }
Fe FieldCtx::sub(Fe a, Fe b) const { return impl_->add(a, impl_->neg(b)); }
Fe FieldCtx::neg(Fe a) const { return impl_->neg(a); }
Fe FieldCtx::mul(Fe a, Fe b) const { return impl_->mul(a, b); }

Fe FieldCtx::inv(Fe a) const {
  if (a.v == 0) fail(ErrorKind::DivisionByZero, "inverse of zero");
  if (impl_->has_tables()) {
    const std::uint32_t order = impl_->q - 1;
    return Fe{impl_->exp[(order - impl_->log[a.v]) % order]};
  }
  return impl_->pow(a, impl_->q - 2);
}

Fe FieldCtx::div(Fe a, Fe b) const { return mul(a, inv(b)); }
Fe FieldCtx::pow(Fe a, std::uint64_t e) const { return impl_->pow(a, e); }
Fe FieldCtx::primitive_element() const { return impl_->primitive; }

bool operator==(const FieldCtx& a, const FieldCtx& b) {
  return a.impl_ == b.impl_ || (a.impl_->p == b.impl_->p && a.impl_->modulus == b.impl_->modulus);
}

FieldCtx make_prime_field(std::uint32_t p) {
  if (!trial_division_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (p > kMaxFieldSize) {
    fail(ErrorKind::DegreeTooLarge, "prime " + std::to_string(p) + " exceeds the supported size");
  }
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->l = 1;
  impl->q = p;
  impl->primitive = search_primitive(*impl);
  build_tables(*impl);
  return FieldCtx(std::move(impl));
}

FieldCtx make_field_with_modulus(std::uint32_t p, std::vector<std::uint32_t> modulus,
                                 std::uint64_t cap) {
  if (modulus.size() < 2) return make_prime_field(p);
  const unsigned l = static_cast<unsigned>(modulus.size() - 1);
  auto q = checked_pow(p, l, cap);
  if (!q) {
    fail(ErrorKind::DegreeTooLarge,
         std::to_string(p) + "^" + std::to_string(l) + " exceeds cap " + std::to_string(cap));
  }
  if (modulus.back() != 1) fail(ErrorKind::NotMonic, "field modulus must be monic");
  auto impl = std::make_shared<detail::FieldImpl>();
  impl->p = p;
  impl->l = l;
  impl->q = static_cast<std::uint32_t>(*q);
  impl->modulus = std::move(modulus);
  if (p == 2) {
    for (unsigned i = 0; i <= l; ++i) impl->modulus_mask |= std::uint64_t{impl->modulus[i] & 1} << i;
  }
  impl->primitive = search_primitive(*impl);
  build_tables(*impl);
  return FieldCtx(std::move(impl));
}

std::vector<std::uint32_t> canonical_modulus(std::uint32_t p, unsigned l) {
  const FieldCtx base = make_prime_field(p);
  if (l <= 1) return {};
  const auto count = checked_pow(p, l, kRootSearchCap);
  if (!count) fail(ErrorKind::DegreeTooLarge, "modulus search space too large");
  std::vector<Fe> coeffs(l + 1);
  coeffs[l] = base.one();
  for (std::uint64_t code = 0; code < *count; ++code) {
    std::uint64_t c = code;
    for (unsigned i = 0; i < l; ++i) {
      coeffs[i] = Fe{static_cast<std::uint32_t>(c % p)};
      c /= p;
    }
    if (coeffs[0].is_zero()) continue;
    if (is_irreducible(Poly(base, coeffs))) {
      std::vector<std::uint32_t> out(l + 1);
      for (unsigned i = 0; i <= l; ++i) out[i] = coeffs[i].v;
      return out;
    }
  }
  fail(ErrorKind::InvalidArgument, "no irreducible polynomial found");
}

FieldCtx make_field(std::uint32_t p, unsigned l, std::uint64_t cap) {
  if (l == 0) fail(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  if (l == 1) return make_prime_field(p);
  if (!trial_division_prime(p)) fail(ErrorKind::NotPrime, std::to_string(p) + " is not prime");
  if (!checked_pow(p, l, cap)) {
    fail(ErrorKind::DegreeTooLarge,
         std::to_string(p) + "^" + std::to_string(l) + " exceeds cap " + std::to_string(cap));
  }
  return make_field_with_modulus(p, canonical_modulus(p, l), cap);
}

namespace {

std::uint64_t parse_uint(std::string_view s, std::string_view whole) {
  std::uint64_t v = 0;
  auto [ptr, ec] = std::from_chars(s.data(), s.data() + s.size(), v);
  if (ec != std::errc{} || ptr != s.data() + s.size() || s.empty()) {
    fail(ErrorKind::ParseError, "bad field literal '" + std::string(whole) + "'");
  }
  return v;
}

}  // namespace

FieldCtx parse_field(std::string_view literal) {
  auto trim = [](std::string_view s) {
    while (!s.empty() && s.front() == ' ') s.remove_prefix(1);
    while (!s.empty() && s.back() == ' ') s.remove_suffix(1);
    return s;
  };
  const std::string_view text = trim(literal);
  if (const auto caret = text.find('^'); caret != std::string_view::npos) {
    const auto p = parse_uint(trim(text.substr(0, caret)), literal);
    const auto l = parse_uint(trim(text.substr(caret + 1)), literal);
    if (p > UINT32_MAX || l == 0 || l > 64) {
      fail(ErrorKind::ParseError, "bad field literal '" + std::string(literal) + "'");
    }
    return make_field(static_cast<std::uint32_t>(p), static_cast<unsigned>(l));
  }
  const auto q = parse_uint(text, literal);
  if (q < 2) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  const auto fac = factorize(q);
  if (fac.size() != 1) fail(ErrorKind::NotPrime, std::to_string(q) + " is not a prime power");
  if (fac[0].first > UINT32_MAX) fail(ErrorKind::DegreeTooLarge, "field too large");
  return make_field(static_cast<std::uint32_t>(fac[0].first), fac[0].second);
}

FieldEmbedding::FieldEmbedding(FieldCtx base, FieldCtx target, std::vector<Fe> image)
    : base_(std::move(base)), target_(std::move(target)), image_(std::move(image)) {
  if (image_.size() != base_.size()) {
    fail(ErrorKind::DimensionMismatch, "embedding table must cover every base element");
  }
  inverse_.reserve(image_.size());
  for (std::uint32_t a = 0; a < image_.size(); ++a) inverse_.emplace(image_[a].v, a);
}

std::optional<Fe> FieldEmbedding::preimage(Fe b) const {
  if (auto it = inverse_.find(b.v); it != inverse_.end()) return Fe{it->second};
  return std::nullopt;
}

FieldExtension make_extension(const FieldCtx& base, unsigned m, std::uint64_t cap) {
  if (m == 0) fail(ErrorKind::InvalidArgument, "extension degree must be >= 1");
  const std::uint32_t q = base.size();
  std::vector<Fe> identity(q);
  for (std::uint32_t a = 0; a < q; ++a) identity[a] = Fe{a};
  if (m == 1) return FieldExtension{base, FieldEmbedding(base, base, std::move(identity)), 1};

  const auto big = checked_pow(q, m, cap);
  if (!big) {
    fail(ErrorKind::DegreeTooLarge, "F_" + std::to_string(q) + "^" + std::to_string(m) +
                                        " exceeds the root-search cap " + std::to_string(cap));
  }
  const std::uint32_t p = base.characteristic();
  const unsigned l = base.degree();
  FieldCtx target = make_field_with_modulus(p, canonical_modulus(p, l * m), cap);

  if (l == 1) {
    // Prime-subfield elements share their encoding.
    return FieldExtension{target, FieldEmbedding(base, target, std::move(identity)), m};
  }

  // Every root of the base modulus lies in the unique subfield of size q,
  // which is {0} together with the powers of gamma^((Q-1)/(q-1)).
  const std::uint64_t order = *big - 1;
  const Fe gamma = target.primitive_element();
  const Fe step = target.pow(gamma, order / (q - 1));
  const auto modulus = base.modulus();
  std::optional<Fe> root;
  Fe candidate = target.one();
  for (std::uint32_t j = 0; j + 1 < q; ++j) {
    Fe acc = target.zero();
    for (std::size_t i = modulus.size(); i-- > 0;) {
      acc = target.add(target.mul(acc, candidate), Fe{modulus[i]});
    }
    if (acc.is_zero() && (!root || candidate < *root)) root = candidate;
    candidate = target.mul(candidate, step);
  }
  if (!root) fail(ErrorKind::InvalidArgument, "base modulus has no root in the extension");

  std::vector<Fe> powers(l);
  powers[0] = target.one();
  for (unsigned i = 1; i < l; ++i) powers[i] = target.mul(powers[i - 1], *root);
  std::vector<Fe> image(q);
  for (std::uint32_t a = 0; a < q; ++a) {
    const auto c = base.coords(Fe{a});
    Fe acc = target.zero();
    for (unsigned i = 0; i < l; ++i) acc = target.add(acc, target.mul(Fe{c[i]}, powers[i]));
    image[a] = acc;
  }
  return FieldExtension{target, FieldEmbedding(base, target, std::move(image)), m};
}

Fe find_primitive_element(const FieldCtx& ctx) { return ctx.primitive_element(); }

std::uint64_t element_order(const FieldCtx& ctx, Fe a) {
  if (a.is_zero()) fail(ErrorKind::DivisionByZero, "zero has no multiplicative order");
  std::uint64_t order = ctx.size() - 1;
  if (order == 1) return 1;
  for (auto [r, e] : factorize(order)) {
    for (unsigned i = 0; i < e && ctx.pow(a, order / r) == ctx.one(); ++i) order /= r;
  }
  return order;
}

Fe nth_root_of_unity(const FieldCtx& ctx, std::uint64_t n) {
  const std::uint64_t order = ctx.size() - 1;
  if (n == 0 || order % n != 0) {
    fail(ErrorKind::NotCompatible,
         std::to_string(n) + " does not divide " + std::to_string(order));
  }
  return ctx.pow(ctx.primitive_element(), order / n);
}

}  // namespace cyclo
