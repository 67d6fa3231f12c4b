#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

namespace cyclo {

enum class TheoremId {
  CnDist,             // d(C_n) = lpf(n)
  Cn1Dist,            // d(C_{n,1}) = 2 lpf(n)
  CnDualDist,         // d(C_n^perp) = 2^omega(n)
  TensorEquiv,        // C_{n1 n2}^perp = Psi(C_{n1}^perp (x) C_{n2}^perp)
  Cn1DualSum,         // C_{n,1}^perp = C_n^perp + R_n
  Factorization,      // x^n - 1 = prod_{d | n} Q_d
  ConjectureCn1Dual,  // d(C_{n,1}^perp) = 2^omega(n), open in general
};

inline constexpr TheoremId kAllTheorems[] = {
    TheoremId::CnDist,      TheoremId::Cn1Dist,       TheoremId::CnDualDist,       TheoremId::TensorEquiv,
    TheoremId::Cn1DualSum, TheoremId::Factorization, TheoremId::ConjectureCn1Dual,
};

std::string_view to_string(TheoremId id);
/// Accepts the report spelling, e.g. "CN-DUAL-DIST". Throws ParseError.
TheoremId parse_theorem(std::string_view text);

enum class Status { Pass, Fail, Skipped, NotApplicable, Observed };

std::string_view to_string(Status s);
Status parse_status(std::string_view text);

/// [n, k, d]; absent components were not claimed or not measured.
struct CodeParams {
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> k;
  std::optional<std::uint64_t> d;

  friend bool operator==(const CodeParams&, const CodeParams&) = default;
};

struct VerificationRecord {
  TheoremId theorem = TheoremId::CnDist;
  std::uint64_t q = 0;
  std::optional<std::uint64_t> n;
  std::optional<std::uint64_t> n1;
  std::optional<std::uint64_t> n2;
  CodeParams claimed;
  CodeParams measured;
  Status status = Status::NotApplicable;
  double elapsed_s = 0.0;
  std::string note;

  friend bool operator==(const VerificationRecord&, const VerificationRecord&) = default;
};

bool has_failures(std::span<const VerificationRecord> records);

}  // namespace cyclo
