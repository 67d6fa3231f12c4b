#include "cyclo/verify.hpp"

#include <algorithm>
#include <chrono>
#include <fstream>
#include <json.hpp>
#include <sstream>

#include "cyclo/code.hpp"
#include "cyclo/cyclotomic.hpp"
#include "cyclo/error.hpp"
#include "cyclo/numtheory.hpp"
#include "cyclo/tensor.hpp"

namespace cyclo {

namespace {

using Json = nlohmann::json;

[[noreturn]] void config_error(const std::string& what) { fail(ErrorKind::ConfigInvalid, what); }

std::uint64_t config_uint(const Json& j, const char* key) {
  if (!j.is_number_unsigned()) config_error(std::string("'") + key + "' must be a non-negative integer");
  return j.get<std::uint64_t>();
}

VerificationRecord base_record(TheoremId theorem, const FieldCtx& field, std::uint64_t n) {
  VerificationRecord r;
  r.theorem = theorem;
  r.q = field.size();
  r.n = n;
  return r;
}

void settle(VerificationRecord& r) { r.status = r.claimed == r.measured ? Status::Pass : Status::Fail; }

std::uint64_t pow2(unsigned e) { return std::uint64_t{1} << e; }

/// Fills measured.d, or marks the row skipped when the enumeration is over budget.
bool measure_distance(VerificationRecord& r, const GenMatrix& g, const EnumerationOptions& opts) {
  try {
    r.measured.d = min_distance(g, opts).d;
    return true;
  } catch (const BudgetExceeded& e) {
    r.status = Status::Skipped;
    r.note = e.what();
    return false;
  }
}

void run_distance_row(VerificationRecord& r, const CyclicCode& c, const EnumerationOptions& opts) {
  r.measured.n = c.length();
  r.measured.k = c.dimension();
  if (measure_distance(r, generator_matrix(c), opts)) settle(r);
}

void cn_dist(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr,
             const EnumerationOptions& opts) {
  r.claimed = {pr.n, pr.n - pr.phi, pr.lpf()};
  run_distance_row(r, build_cn(pr.n, field), opts);
}

void cn1_dist(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr,
              const EnumerationOptions& opts) {
  r.claimed = {pr.n, pr.n - pr.phi - 1, 2 * pr.lpf()};
  run_distance_row(r, build_cn1(pr.n, field), opts);
}

void cn_dual_dist(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr,
                  const EnumerationOptions& opts) {
  r.claimed = {pr.n, pr.phi, pow2(pr.omega)};
  run_distance_row(r, dual(build_cn(pr.n, field)), opts);
}

void tensor_equiv(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr,
                  const EnumerationOptions& opts) {
  const auto [n1, n2] = tensor_split(pr.n);
  r = verify_tensor_dual(n1, n2, field, opts);
}

void cn1_dual_sum(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr) {
  r.claimed = {pr.n, pr.phi + 1, std::nullopt};
  const CyclicCode lhs = dual(build_cn1(pr.n, field));
  const GenMatrix rhs = sum_codes(dual(build_cn(pr.n, field)), build_repetition(pr.n, field));
  r.measured = {rhs.length(), rank(rhs), std::nullopt};
  settle(r);
  if (!same_code(lhs, rhs)) {
    r.status = Status::Fail;
    r.note = "dual of C_{n,1} differs from C_n dual + R_n";
  }
}

void factorization(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr) {
  r.claimed = {pr.n, std::nullopt, std::nullopt};
  Poly product = Poly::constant(field, field.one());
  for (std::uint64_t d : pr.divisors) product *= cyclotomic_poly(d, field);
  r.measured.n = product.degree();
  settle(r);
  if (!(product == Poly::x_pow_minus_one(field, pr.n))) {
    r.status = Status::Fail;
    r.note = "product of Q_d over d | n differs from x^n - 1";
  }
}

void conjecture(VerificationRecord& r, const FieldCtx& field, const ArithmeticProfile& pr,
                const EnumerationOptions& opts) {
  r.claimed = {pr.n, pr.phi + 1, pow2(pr.omega)};
  const CyclicCode lhs = dual(build_cn1(pr.n, field));
  const bool lemma = same_code(lhs, sum_codes(dual(build_cn(pr.n, field)), build_repetition(pr.n, field)));
  r.measured.n = lhs.length();
  r.measured.k = lhs.dimension();
  if (!lemma) {
    r.status = Status::Fail;
    r.note = "dual of C_{n,1} differs from C_n dual + R_n";
    return;
  }
  if (!measure_distance(r, generator_matrix(lhs), opts)) return;
  if (pr.omega == 2) {
    settle(r);
  } else {
    r.status = Status::Observed;
    r.note = *r.measured.d == *r.claimed.d ? "matches 2^omega(n)" : "differs from 2^omega(n)";
  }
}

std::string not_applicable_reason(TheoremId theorem, const FieldCtx& field, const ArithmeticProfile& pr) {
  if (pr.n % field.characteristic() == 0) return "characteristic divides n";
  switch (theorem) {
    case TheoremId::Cn1Dist:
    case TheoremId::Cn1DualSum:
    case TheoremId::ConjectureCn1Dual:
      if (pr.is_prime()) return "prime length: C_{n,1} is the zero code";
      break;
    case TheoremId::TensorEquiv:
      if (pr.omega < 2) return "n is a prime power";
      break;
    default:
      break;
  }
  return {};
}

}  // namespace

std::pair<std::uint64_t, std::uint64_t> tensor_split(std::uint64_t n) {
  const ArithmeticProfile pr = profile(n);
  if (pr.omega < 2) fail(ErrorKind::InvalidArgument, std::to_string(n) + " is not divisible by two distinct primes");
  std::uint64_t n1 = 1;
  for (unsigned i = 0; i < pr.factorization[0].second; ++i) n1 *= pr.factorization[0].first;
  return {n1, n / n1};
}

VerificationRecord check_row(TheoremId theorem, const FieldCtx& field, std::uint64_t n,
                             const EnumerationOptions& opts) {
  const auto start = std::chrono::steady_clock::now();
  VerificationRecord r = base_record(theorem, field, n);
  if (n < 2) {
    r.note = "length must exceed 1";
    return r;
  }
  const ArithmeticProfile pr = profile(n);
  if (std::string reason = not_applicable_reason(theorem, field, pr); !reason.empty()) {
    r.note = std::move(reason);
    return r;
  }
  try {
    switch (theorem) {
      case TheoremId::CnDist: cn_dist(r, field, pr, opts); break;
      case TheoremId::Cn1Dist: cn1_dist(r, field, pr, opts); break;
      case TheoremId::CnDualDist: cn_dual_dist(r, field, pr, opts); break;
      case TheoremId::TensorEquiv: tensor_equiv(r, field, pr, opts); break;
      case TheoremId::Cn1DualSum: cn1_dual_sum(r, field, pr); break;
      case TheoremId::Factorization: factorization(r, field, pr); break;
      case TheoremId::ConjectureCn1Dual: conjecture(r, field, pr, opts); break;
    }
  } catch (const Error& e) {
    r.status = e.kind() == ErrorKind::DegreeTooLarge ? Status::Skipped : Status::Fail;
    r.note = std::string(to_string(e.kind())) + ": " + e.what();
  } catch (const std::exception& e) {
    r.status = Status::Fail;
    r.note = e.what();
  }
  r.elapsed_s = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

void validate(const SweepConfig& cfg) {
  if (cfg.fields.empty()) config_error("'fields' must list at least one field");
  for (const std::string& f : cfg.fields) {
    try {
      (void)parse_field(f);
    } catch (const Error& e) {
      config_error("field '" + f + "': " + e.what());
    }
  }
  if (cfg.n_min < 2) config_error("n_min must be at least 2");
  if (cfg.n_max < cfg.n_min) config_error("n_max must be at least n_min");
  if (cfg.budget < 1) config_error("budget must be at least 1");
}

SweepConfig parse_sweep_config(std::string_view text) {
  Json j;
  try {
    j = Json::parse(text.begin(), text.end());
  } catch (const Json::parse_error& e) {
    config_error(std::string("malformed config: ") + e.what());
  }
  if (!j.is_object()) config_error("config must be a JSON object");
  SweepConfig cfg;
  for (const auto& [key, value] : j.items()) {
    if (key == "fields") {
      if (!value.is_array()) config_error("'fields' must be a list of field literals");
      cfg.fields.clear();
      for (const Json& f : value) {
        if (f.is_string()) {
          cfg.fields.push_back(f.get<std::string>());
        } else if (f.is_number_unsigned()) {
          cfg.fields.push_back(std::to_string(f.get<std::uint64_t>()));
        } else {
          config_error("field literals must be strings such as \"5\" or \"2^3\"");
        }
      }
    } else if (key == "n_min") {
      cfg.n_min = config_uint(value, "n_min");
    } else if (key == "n_max") {
      cfg.n_max = config_uint(value, "n_max");
    } else if (key == "budget") {
      cfg.budget = config_uint(value, "budget");
    } else if (key == "threads") {
      cfg.threads = static_cast<unsigned>(config_uint(value, "threads"));
    } else if (key == "timing") {
      if (!value.is_boolean()) config_error("'timing' must be true or false");
      cfg.timing = value.get<bool>();
    } else if (key == "theorems") {
      if (!value.is_array()) config_error("'theorems' must be a list of theorem ids");
      cfg.theorems.clear();
      for (const Json& t : value) {
        if (!t.is_string()) config_error("theorem ids must be strings");
        try {
          cfg.theorems.push_back(parse_theorem(t.get<std::string>()));
        } catch (const Error& e) {
          config_error(e.what());
        }
      }
    } else if (key == "output") {
      if (!value.is_object()) config_error("'output' must be an object with 'path' and 'format'");
      for (const auto& [okey, ovalue] : value.items()) {
        if (!ovalue.is_string()) config_error("'output." + okey + "' must be a string");
        if (okey == "path") {
          cfg.output = ovalue.get<std::string>();
        } else if (okey == "format") {
          try {
            cfg.format = parse_report_format(ovalue.get<std::string>());
          } catch (const Error& e) {
            config_error(e.what());
          }
        } else {
          config_error("unknown key 'output." + okey + "'");
        }
      }
    } else {
      config_error("unknown config key '" + key + "'");
    }
  }
  validate(cfg);
  return cfg;
}

SweepConfig load_sweep_config(const std::string& path) {
  std::ifstream in(path, std::ios::binary);
  if (!in) config_error("cannot read config '" + path + "'");
  std::ostringstream buf;
  buf << in.rdbuf();
  return parse_sweep_config(buf.str());
}

std::vector<VerificationRecord> sweep(const SweepConfig& cfg) {
  validate(cfg);
  std::vector<TheoremId> theorems = cfg.theorems;
  if (theorems.empty()) theorems.assign(std::begin(kAllTheorems), std::end(kAllTheorems));
  const EnumerationOptions opts{cfg.budget, cfg.threads};
  std::vector<VerificationRecord> out;
  for (const std::string& literal : cfg.fields) {
    const FieldCtx field = parse_field(literal);
    for (std::uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      for (TheoremId t : kAllTheorems) {
        if (std::find(theorems.begin(), theorems.end(), t) == theorems.end()) continue;
        out.push_back(check_row(t, field, n, opts));
        if (!cfg.timing) out.back().elapsed_s = 0.0;
      }
    }
  }
  return out;
}

std::vector<VerificationRecord> conjecture_check(const SweepConfig& cfg) {
  validate(cfg);
  const EnumerationOptions opts{cfg.budget, cfg.threads};
  std::vector<VerificationRecord> out;
  for (const std::string& literal : cfg.fields) {
    const FieldCtx field = parse_field(literal);
    for (std::uint64_t n = cfg.n_min; n <= cfg.n_max; ++n) {
      if (!profile(n).is_composite()) continue;
      out.push_back(check_row(TheoremId::ConjectureCn1Dual, field, n, opts));
      if (!cfg.timing) out.back().elapsed_s = 0.0;
    }
  }
  return out;
}

}  // namespace cyclo
