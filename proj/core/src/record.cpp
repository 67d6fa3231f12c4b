#include "cyclo/record.hpp"

#include <algorithm>

#include "cyclo/error.hpp"

namespace cyclo {

std::string_view to_string(TheoremId id) {
  switch (id) {
    case TheoremId::CnDist: return "CN-DIST";
    case TheoremId::Cn1Dist: return "CN1-DIST";
    case TheoremId::CnDualDist: return "CN-DUAL-DIST";
    case TheoremId::TensorEquiv: return "TENSOR-EQUIV";
    case TheoremId::Cn1DualSum: return "CN1-DUAL-SUM";
    case TheoremId::Factorization: return "FACTORIZATION";
    case TheoremId::ConjectureCn1Dual: return "CONJECTURE-CN1-DUAL";
  }
  return "?";
}

TheoremId parse_theorem(std::string_view text) {
  for (TheoremId id : kAllTheorems) {
    if (to_string(id) == text) return id;
  }
  fail(ErrorKind::ParseError, "unknown theorem id '" + std::string(text) + "'");
}

std::string_view to_string(Status s) {
  switch (s) {
    case Status::Pass: return "pass";
    case Status::Fail: return "fail";
    case Status::Skipped: return "skipped";
    case Status::NotApplicable: return "n/a";
    case Status::Observed: return "observed";
  }
  return "?";
}

Status parse_status(std::string_view text) {
  for (Status s : {Status::Pass, Status::Fail, Status::Skipped, Status::NotApplicable, Status::Observed}) {
    if (to_string(s) == text) return s;
  }
  fail(ErrorKind::ParseError, "unknown status '" + std::string(text) + "'");
}

bool has_failures(std::span<const VerificationRecord> records) {
  return std::any_of(records.begin(), records.end(),
                     [](const VerificationRecord& r) { return r.status == Status::Fail; });
}

}  // namespace cyclo
