#include "cyclo/code.hpp"

#include <numeric>

#include "cyclo/cyclotomic.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"

namespace cyclo {

namespace {

const std::string kPerp = "⊥";

void require_compatible(const GenMatrix& a, const GenMatrix& b) {
  if (!(a.field() == b.field())) {
    fail(ErrorKind::FieldMismatch, "codes over F_" + a.field().literal() + " and F_" + b.field().literal());
  }
  if (a.length() != b.length()) {
    fail(ErrorKind::LengthMismatch,
         "codes of length " + std::to_string(a.length()) + " and " + std::to_string(b.length()));
  }
}

void require_coprime_length(std::size_t n, const FieldCtx& field) {
  if (n < 2) fail(ErrorKind::InvalidArgument, "length must be > 1");
  if (n % field.characteristic() == 0) {
    fail(ErrorKind::CharacteristicDividesN,
         "char " + std::to_string(field.characteristic()) + " divides n = " + std::to_string(n));
  }
}

Poly row_poly(const FieldCtx& field, std::span<const Fe> row) {
  return Poly(field, std::vector<Fe>(row.begin(), row.end()));
}

}  // namespace

CyclicCode::CyclicCode(std::size_t n, Poly generator, Poly check, std::string label)
    : n_(n),
      k_(n - generator.degree()),
      generator_(std::move(generator)),
      check_(std::move(check)),
      label_(std::move(label)) {}

CyclicCode CyclicCode::relabeled(std::string label) const {
  CyclicCode out = *this;
  out.label_ = std::move(label);
  return out;
}

CyclicCode from_generator(const Poly& g, std::size_t n, std::string label) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "code length must be positive");
  if (!g.is_monic()) fail(ErrorKind::NotMonic, "generator polynomial must be monic");
  auto [h, r] = divmod(Poly::x_pow_minus_one(g.field(), n), g);
  if (!r.is_zero()) fail(ErrorKind::NotADivisor, "generator does not divide x^" + std::to_string(n) + " - 1");
  return CyclicCode(n, g, std::move(h), std::move(label));
}

CyclicCode build_cn(std::size_t n, const FieldCtx& field) {
  require_coprime_length(n, field);
  return from_generator(cyclotomic_poly(n, field), n, "C_" + std::to_string(n));
}

CyclicCode build_cn1(std::size_t n, const FieldCtx& field) {
  require_coprime_length(n, field);
  if (is_prime(n)) {
    fail(ErrorKind::PrimeLength, "C_{n,1} is the zero code for prime n = " + std::to_string(n));
  }
  const Poly g = cyclotomic_poly(n, field) * cyclotomic_poly(1, field);
  return from_generator(g, n, "C_{" + std::to_string(n) + ",1}");
}

CyclicCode build_repetition(std::size_t n, const FieldCtx& field) {
  if (n == 0) fail(ErrorKind::InvalidArgument, "code length must be positive");
  std::vector<Fe> ones(n, field.one());
  return from_generator(Poly(field, std::move(ones)), n, "R_" + std::to_string(n));
}

CyclicCode dual(const CyclicCode& c) {
  // h(0) != 0 because h divides x^n - 1, so the reciprocal keeps its degree.
  const Poly g_perp = reciprocal(c.check()).monic();
  std::string label = c.label();
  if (label.size() >= kPerp.size() && label.compare(label.size() - kPerp.size(), kPerp.size(), kPerp) == 0) {
    label.resize(label.size() - kPerp.size());
  } else {
    label += kPerp;
  }
  return from_generator(g_perp, c.length(), std::move(label));
}

GenMatrix generator_matrix(const CyclicCode& c) {
  const std::size_t n = c.length();
  GenMatrix out(c.field(), n);
  std::vector<Fe> row(n);
  const auto g = c.generator().coeffs();
  for (std::size_t i = 0; i < c.dimension(); ++i) {
    std::fill(row.begin(), row.end(), c.field().zero());
    for (std::size_t j = 0; j < g.size(); ++j) row[i + j] = g[j];
    out.append_row(row);
  }
  return out;
}

GenMatrix parity_check_matrix(const CyclicCode& c) { return generator_matrix(dual(c)); }

bool same_code(const GenMatrix& a, const GenMatrix& b) {
  require_compatible(a, b);
  return rref(a) == rref(b);
}
bool same_code(const CyclicCode& a, const CyclicCode& b) { return same_code(generator_matrix(a), generator_matrix(b)); }
bool same_code(const CyclicCode& a, const GenMatrix& b) { return same_code(generator_matrix(a), b); }
bool same_code(const GenMatrix& a, const CyclicCode& b) { return same_code(a, generator_matrix(b)); }

GenMatrix sum_codes(const GenMatrix& a, const GenMatrix& b) {
  require_compatible(a, b);
  return rref(stack(a, b));
}
GenMatrix sum_codes(const CyclicCode& a, const CyclicCode& b) {
  return sum_codes(generator_matrix(a), generator_matrix(b));
}

GenMatrix zero_sum_subcode(const GenMatrix& c) {
  const GenMatrix basis = rref(c);
  const FieldCtx& f = basis.field();
  std::vector<Fe> sums(basis.rows(), f.zero());
  std::optional<std::size_t> pivot;
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    for (Fe x : basis.row(i)) sums[i] = f.add(sums[i], x);
    if (!pivot && !sums[i].is_zero()) pivot = i;
  }
  if (!pivot) return basis;
  // Kernel of the single constraint sum_i m_i s_i = 0 on the message space.
  GenMatrix out(f, basis.length());
  std::vector<Fe> row(basis.length());
  const Fe pivot_inv = f.inv(sums[*pivot]);
  const auto prow = basis.row(*pivot);
  for (std::size_t i = 0; i < basis.rows(); ++i) {
    if (i == *pivot) continue;
    const Fe c = f.mul(sums[i], pivot_inv);
    const auto r = basis.row(i);
    for (std::size_t j = 0; j < row.size(); ++j) row[j] = f.sub(r[j], f.mul(c, prow[j]));
    out.append_row(row);
  }
  return rref(out);
}
GenMatrix zero_sum_subcode(const CyclicCode& c) { return zero_sum_subcode(generator_matrix(c)); }

GenMatrix direct_sum(const GenMatrix& a, const GenMatrix& b) {
  if (!(a.field() == b.field())) fail(ErrorKind::FieldMismatch, "direct sum across fields");
  const FieldCtx& f = a.field();
  const std::size_t n = a.length() + b.length();
  GenMatrix out(f, n);
  std::vector<Fe> row(n);
  for (std::size_t i = 0; i < a.rows(); ++i) {
    std::fill(row.begin(), row.end(), f.zero());
    std::copy(a.row(i).begin(), a.row(i).end(), row.begin());
    out.append_row(row);
  }
  for (std::size_t i = 0; i < b.rows(); ++i) {
    std::fill(row.begin(), row.end(), f.zero());
    std::copy(b.row(i).begin(), b.row(i).end(), row.begin() + static_cast<std::ptrdiff_t>(a.length()));
    out.append_row(row);
  }
  return out;
}
GenMatrix direct_sum(const CyclicCode& a, const CyclicCode& b) {
  return direct_sum(generator_matrix(a), generator_matrix(b));
}

ZeroSet zeros_relative_to(const CyclicCode& c, const FieldExtension& ext, Fe root) {
  const FieldCtx& big = ext.field;
  const std::size_t n = c.length();
  if (element_order(big, root) != n) {
    fail(ErrorKind::NotCompatible, "root is not a primitive " + std::to_string(n) + "-th root of unity");
  }
  ZeroSet out;
  Fe power = big.one();
  for (std::size_t i = 0; i < n; ++i) {
    if (eval(c.generator(), ext.embedding, power).is_zero()) {
      out.defining_set.push_back(i);
    } else {
      out.nonzeros.push_back(i);
    }
    power = big.mul(power, root);
  }
  return out;
}

ZeroSet zeros_and_nonzeros(const CyclicCode& c) {
  const RootOfUnity root = root_of_unity(c.length(), c.field());
  return zeros_relative_to(c, root.extension, root.zeta);
}

std::optional<CyclicCode> as_cyclic(const GenMatrix& m, std::string label) {
  const FieldCtx& f = m.field();
  const std::size_t n = m.length();
  if (n == 0) fail(ErrorKind::InvalidArgument, "code length must be positive");
  Poly g = Poly::x_pow_minus_one(f, n);
  for (std::size_t i = 0; i < m.rows(); ++i) g = gcd(g, row_poly(f, m.row(i)));
  CyclicCode candidate = from_generator(g, n, std::move(label));
  if (!same_code(candidate, m)) return std::nullopt;
  return candidate;
}

}  // namespace cyclo
