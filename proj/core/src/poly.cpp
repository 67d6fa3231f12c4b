#include "cyclo/poly.hpp"

#include <algorithm>
#include <map>

#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

constexpr std::uint64_t kOrderScanCap = std::uint64_t{1} << 24;

Poly x_poly(const FieldCtx& field) { return Poly::monomial(field, 1, field.one()); }

/// x^e mod m, where e is given as a product of prime powers.
Poly x_power_factored(const Poly& m, const std::map<std::uint64_t, unsigned>& e) {
  Poly h = x_poly(m.field()) % m;
  for (auto [r, k] : e) {
    for (unsigned i = 0; i < k; ++i) h = powmod(h, r, m);
  }
  return h;
}

/// p-th root of a polynomial whose derivative vanishes.
Poly pth_root(const Poly& f) {
  const FieldCtx& field = f.field();
  const std::uint32_t p = field.characteristic();
  const std::uint64_t root_exp = field.size() / p;  // a^(q/p) is the inverse Frobenius
  std::vector<Fe> out;
  for (std::size_t i = 0; i < f.coeffs().size(); i += p) out.push_back(field.pow(f.coeffs()[i], root_exp));
  return Poly(field, std::move(out));
}

/// Multiple of ord(f) as a factored integer, or nullopt when some q^d - 1
/// does not fit in 64 bits. Requires f(0) != 0.
std::optional<std::map<std::uint64_t, unsigned>> order_multiple(const Poly& f) {
  const FieldCtx& field = f.field();
  std::map<std::uint64_t, unsigned> multiple;
  unsigned max_multiplicity = 1;
  std::vector<unsigned> degrees;
  for (const auto& [factor, mult] : squarefree_decomposition(f)) {
    max_multiplicity = std::max(max_multiplicity, mult);
    for (unsigned d : distinct_factor_degrees(factor)) degrees.push_back(d);
  }
  std::sort(degrees.begin(), degrees.end());
  degrees.erase(std::unique(degrees.begin(), degrees.end()), degrees.end());
  for (unsigned d : degrees) {
    const auto qd = checked_pow(field.size(), d);
    if (!qd) return std::nullopt;
    if (*qd - 1 <= 1) continue;
    for (auto [r, k] : factorize(*qd - 1)) multiple[r] = std::max(multiple[r], k);
  }
  unsigned s = 0;
  for (std::uint64_t pk = 1; pk < max_multiplicity; pk *= field.characteristic()) ++s;
  if (s > 0) multiple[field.characteristic()] += s;
  return multiple;
}

}  // namespace

Poly::Poly(FieldCtx field) : field_(std::move(field)) {}

Poly::Poly(FieldCtx field, std::vector<Fe> coeffs) : field_(std::move(field)), coeffs_(std::move(coeffs)) {
  for (Fe c : coeffs_) {
    if (!field_.contains(c)) fail(ErrorKind::ContextMismatch, "coefficient outside the field");
  }
  normalize();
}

Poly Poly::from_ints(FieldCtx field, std::span<const std::int64_t> coeffs) {
  std::vector<Fe> out;
  out.reserve(coeffs.size());
  for (std::int64_t c : coeffs) out.push_back(field.from_int(c));
  return Poly(std::move(field), std::move(out));
}

Poly Poly::from_ints(FieldCtx field, std::initializer_list<std::int64_t> coeffs) {
  return from_ints(std::move(field), std::span<const std::int64_t>(coeffs.begin(), coeffs.size()));
}

Poly Poly::constant(FieldCtx field, Fe c) { return Poly(std::move(field), {c}); }

Poly Poly::monomial(FieldCtx field, std::size_t degree, Fe coeff) {
  std::vector<Fe> out(degree + 1);
  out[degree] = coeff;
  return Poly(std::move(field), std::move(out));
}

Poly Poly::x_pow_minus_one(FieldCtx field, std::size_t n) {
  std::vector<Fe> out(n + 1);
  out[n] = field.one();
  out[0] = field.add(out[0], field.neg(field.one()));
  return Poly(std::move(field), std::move(out));
}

std::size_t Poly::degree() const {
  if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "degree of the zero polynomial");
  return coeffs_.size() - 1;
}

Fe Poly::leading() const {
  if (coeffs_.empty()) fail(ErrorKind::ZeroPolynomial, "leading coefficient of zero");
  return coeffs_.back();
}

Poly Poly::monic() const {
  if (is_zero()) fail(ErrorKind::ZeroPolynomial, "cannot normalize the zero polynomial");
  return scaled(field_.inv(leading()));
}

Poly Poly::scaled(Fe c) const {
  std::vector<Fe> out(coeffs_.size());
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i] = field_.mul(coeffs_[i], c);
  return Poly(field_, std::move(out));
}

Poly Poly::substitute_power(std::size_t k) const {
  if (is_zero() || k == 1) return *this;
  if (k == 0) {
    Fe sum = field_.zero();
    for (Fe c : coeffs_) sum = field_.add(sum, c);
    return constant(field_, sum);
  }
  std::vector<Fe> out((coeffs_.size() - 1) * k + 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) out[i * k] = coeffs_[i];
  return Poly(field_, std::move(out));
}

void Poly::normalize() {
  while (!coeffs_.empty() && coeffs_.back().is_zero()) coeffs_.pop_back();
}

void Poly::require_same_field(const Poly& other) const {
  if (!(field_ == other.field_)) {
    fail(ErrorKind::ContextMismatch,
         "polynomials over F_" + field_.literal() + " and F_" + other.field_.literal());
  }
}

Poly& Poly::operator+=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.add(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator-=(const Poly& rhs) {
  require_same_field(rhs);
  if (coeffs_.size() < rhs.coeffs_.size()) coeffs_.resize(rhs.coeffs_.size());
  for (std::size_t i = 0; i < rhs.coeffs_.size(); ++i) coeffs_[i] = field_.sub(coeffs_[i], rhs.coeffs_[i]);
  normalize();
  return *this;
}

Poly& Poly::operator*=(const Poly& rhs) {
  require_same_field(rhs);
  if (is_zero() || rhs.is_zero()) {
    coeffs_.clear();
    return *this;
  }
  std::vector<Fe> out(coeffs_.size() + rhs.coeffs_.size() - 1);
  for (std::size_t i = 0; i < coeffs_.size(); ++i) {
    if (coeffs_[i].is_zero()) continue;
    for (std::size_t j = 0; j < rhs.coeffs_.size(); ++j) {
      out[i + j] = field_.add(out[i + j], field_.mul(coeffs_[i], rhs.coeffs_[j]));
    }
  }
  coeffs_ = std::move(out);
  normalize();
  return *this;
}

bool operator==(const Poly& a, const Poly& b) { return a.field_ == b.field_ && a.coeffs_ == b.coeffs_; }

std::pair<Poly, Poly> divmod(const Poly& a, const Poly& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::ContextMismatch, "divmod across fields");
  if (b.is_zero()) fail(ErrorKind::DivisionByZero, "polynomial division by zero");
  const FieldCtx& field = a.field();
  if (a.is_zero() || a.degree() < b.degree()) return {Poly(field), a};
  std::vector<Fe> rem(a.coeffs().begin(), a.coeffs().end());
  const auto bc = b.coeffs();
  const std::size_t db = bc.size() - 1;
  const Fe lead_inv = field.inv(bc.back());
  std::vector<Fe> quo(rem.size() - db);
  for (std::size_t i = rem.size(); i-- > db;) {
    const Fe c = field.mul(rem[i], lead_inv);
    quo[i - db] = c;
    if (c.is_zero()) continue;
    for (std::size_t j = 0; j <= db; ++j) rem[i - db + j] = field.sub(rem[i - db + j], field.mul(c, bc[j]));
  }
  rem.resize(db);
  return {Poly(field, std::move(quo)), Poly(field, std::move(rem))};
}

Poly operator%(const Poly& a, const Poly& b) { return divmod(a, b).second; }

Poly exact_quotient(const Poly& a, const Poly& b) {
  auto [q, r] = divmod(a, b);
  if (!r.is_zero()) fail(ErrorKind::NotADivisor, "division leaves a nonzero remainder");
  return q;
}

bool divides(const Poly& d, const Poly& a) { return (a % d).is_zero(); }

Poly gcd(Poly a, Poly b) {
  while (!b.is_zero()) {
    Poly r = a % b;
    a = std::move(b);
    b = std::move(r);
  }
  return a.is_zero() ? a : a.monic();
}

Poly derivative(const Poly& f) {
  const FieldCtx& field = f.field();
  if (f.coeffs().size() <= 1) return Poly(field);
  std::vector<Fe> out(f.coeffs().size() - 1);
  for (std::size_t i = 1; i < f.coeffs().size(); ++i) {
    out[i - 1] = field.mul(field.from_int(static_cast<std::int64_t>(i % field.characteristic())), f.coeffs()[i]);
  }
  return Poly(field, std::move(out));
}

Poly reciprocal(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "reciprocal of the zero polynomial");
  std::vector<Fe> out(f.coeffs().rbegin(), f.coeffs().rend());
  return Poly(f.field(), std::move(out));
}

Poly mulmod(const Poly& a, const Poly& b, const Poly& m) { return (a * b) % m; }

Poly powmod(Poly base, std::uint64_t e, const Poly& m) {
  Poly result = Poly::constant(m.field(), m.field().one()) % m;
  base = base % m;
  while (e > 0) {
    if (e & 1) result = mulmod(result, base, m);
    e >>= 1;
    if (e > 0) base = mulmod(base, base, m);
  }
  return result;
}

std::vector<std::pair<Poly, unsigned>> squarefree_decomposition(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "squarefree decomposition of zero");
  std::vector<std::pair<Poly, unsigned>> out;
  if (f.degree() == 0) return out;
  const Poly monic = f.monic();
  Poly c = gcd(monic, derivative(monic));
  Poly w = exact_quotient(monic, c);
  unsigned i = 1;
  while (!w.is_one()) {
    Poly y = gcd(w, c);
    Poly factor = exact_quotient(w, y);
    if (!factor.is_one()) out.emplace_back(std::move(factor), i);
    w = std::move(y);
    c = exact_quotient(c, w);
    ++i;
  }
  if (!c.is_one()) {
    const unsigned p = f.field().characteristic();
    for (auto& [factor, mult] : squarefree_decomposition(pth_root(c))) out.emplace_back(std::move(factor), mult * p);
  }
  std::sort(out.begin(), out.end(), [](const auto& a, const auto& b) { return a.second < b.second; });
  return out;
}

std::vector<unsigned> distinct_factor_degrees(const Poly& squarefree) {
  std::vector<unsigned> out;
  Poly f = squarefree.monic();
  const Poly x = x_poly(f.field());
  Poly h = x % f;
  for (unsigned i = 1; !f.is_one() && 2 * i <= f.degree(); ++i) {
    h = powmod(h, f.field().size(), f);
    Poly g = gcd(h - x, f);
    if (!g.is_one()) {
      out.push_back(i);
      f = exact_quotient(f, g);
      h = h % f;
    }
  }
  if (!f.is_one()) out.push_back(static_cast<unsigned>(f.degree()));
  return out;
}

std::uint64_t poly_order(const Poly& f) {
  if (f.is_zero()) fail(ErrorKind::ZeroPolynomial, "order of the zero polynomial");
  std::size_t r = 0;
  while (f.coeffs()[r].is_zero()) ++r;
  Poly g(f.field(), std::vector<Fe>(f.coeffs().begin() + static_cast<std::ptrdiff_t>(r), f.coeffs().end()));
  if (g.degree() == 0) {
    if (r == 0) fail(ErrorKind::UnitPolynomial, "order of a nonzero constant");
    return 1;
  }
  g = g.monic();

  if (auto multiple = order_multiple(g)) {
    if (!x_power_factored(g, *multiple).is_one()) {
      fail(ErrorKind::InvalidArgument, "order bound failed; field arithmetic inconsistent");
    }
    for (auto& [prime, exp] : *multiple) {
      while (exp > 0) {
        --exp;
        if (!x_power_factored(g, *multiple).is_one()) {
          ++exp;
          break;
        }
      }
    }
    std::uint64_t e = 1;
    for (auto [prime, exp] : *multiple) {
      const auto pk = checked_pow(prime, exp);
      if (!pk || e > UINT64_MAX / *pk) fail(ErrorKind::OrderSearchTooLarge, "order exceeds 64 bits");
      e *= *pk;
    }
    return e;
  }

  // The multiple is out of 64-bit range; fall back to stepping x^e.
  const Poly x = x_poly(g.field());
  Poly h = x % g;
  for (std::uint64_t e = 1; e <= kOrderScanCap; ++e) {
    if (h.is_one()) return e;
    h = mulmod(h, x, g);
  }
  fail(ErrorKind::OrderSearchTooLarge,
       "order of a degree-" + std::to_string(g.degree()) + " polynomial exceeds the scan cap");
}

bool order_divides(const Poly& f, std::uint64_t c) {
  const Poly x = x_poly(f.field());
  const Poly one = Poly::constant(f.field(), f.field().one());
  return powmod(x, c, f) == one % f;
}

bool is_irreducible(const Poly& f) {
  if (f.is_zero() || f.degree() == 0) return false;
  const std::size_t m = f.degree();
  if (m == 1) return true;
  const Poly g = f.monic();
  const Poly x = x_poly(g.field());
  std::vector<Poly> frob{x % g};
  for (std::size_t i = 1; i <= m; ++i) frob.push_back(powmod(frob.back(), g.field().size(), g));
  if (!(frob[m] == x % g)) return false;
  for (auto [r, e] : factorize(m)) {
    if (!gcd(frob[m / r] - x, g).is_one()) return false;
  }
  return true;
}

Fe eval(const Poly& f, Fe a) {
  const FieldCtx& field = f.field();
  Fe acc = field.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) acc = field.add(field.mul(acc, a), f.coeffs()[i]);
  return acc;
}

Fe eval(const Poly& f, const FieldEmbedding& embedding, Fe a) {
  if (!(f.field() == embedding.base())) {
    fail(ErrorKind::ContextMismatch, "polynomial is not over the embedding's base field");
  }
  const FieldCtx& target = embedding.target();
  Fe acc = target.zero();
  for (std::size_t i = f.coeffs().size(); i-- > 0;) {
    acc = target.add(target.mul(acc, a), embedding(f.coeffs()[i]));
  }
  return acc;
}

Poly embed(const Poly& f, const FieldEmbedding& embedding) {
  if (!(f.field() == embedding.base())) {
    fail(ErrorKind::ContextMismatch, "polynomial is not over the embedding's base field");
  }
  std::vector<Fe> out;
  out.reserve(f.coeffs().size());
  for (Fe c : f.coeffs()) out.push_back(embedding(c));
  return Poly(embedding.target(), std::move(out));
}

Poly restrict_to_base(const Poly& f, const FieldEmbedding& embedding) {
  if (!(f.field() == embedding.target())) {
    fail(ErrorKind::ContextMismatch, "polynomial is not over the embedding's target field");
  }
  std::vector<Fe> out;
  out.reserve(f.coeffs().size());
  for (Fe c : f.coeffs()) {
    auto pre = embedding.preimage(c);
    if (!pre) fail(ErrorKind::NotCompatible, "coefficient is not in the embedded base field");
    out.push_back(*pre);
  }
  return Poly(embedding.base(), std::move(out));
}

}  // namespace cyclo
