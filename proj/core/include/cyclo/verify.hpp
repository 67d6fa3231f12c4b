#pragma once

#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "cyclo/distance.hpp"
#include "cyclo/field.hpp"
#include "cyclo/record.hpp"
#include "cyclo/serialize.hpp"

namespace cyclo {

struct SweepConfig {
  std::vector<std::string> fields{"2", "3", "4", "5", "7", "8", "9"};
  std::uint64_t n_min = 2;
  std::uint64_t n_max = 30;
  std::uint64_t budget = kDefaultBudget;
  std::string output;  // empty: caller decides (the CLI prints to stdout)
  ReportFormat format = ReportFormat::Csv;
  std::vector<TheoremId> theorems;  // empty: every theorem
  /// When false every elapsed_s is written as 0 so reports are reproducible byte for byte.
  bool timing = false;
  unsigned threads = 0;
};

/// JSON keys: fields, n_min, n_max, budget, output {path, format},
/// theorems, timing, threads. Missing keys keep their defaults; unknown
/// keys and invalid values throw ConfigInvalid.
SweepConfig parse_sweep_config(std::string_view json);
SweepConfig load_sweep_config(const std::string& path);
void validate(const SweepConfig& cfg);

/// A single (theorem, q, n) row. Errors are folded into the row status.
VerificationRecord check_row(TheoremId theorem, const FieldCtx& field, std::uint64_t n,
                             const EnumerationOptions& opts = {});

/// Rows for every field, n in [n_min, n_max] and selected theorem, ordered
/// field-major, then n, then theorem.
std::vector<VerificationRecord> sweep(const SweepConfig& cfg);

/// CONJECTURE-CN1-DUAL rows for composite n in range.
std::vector<VerificationRecord> conjecture_check(const SweepConfig& cfg);

/// Splits a length with at least two distinct primes into the prime power
/// of its least prime and the cofactor.
std::pair<std::uint64_t, std::uint64_t> tensor_split(std::uint64_t n);

}  // namespace cyclo
