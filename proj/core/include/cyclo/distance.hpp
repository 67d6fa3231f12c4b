#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "cyclo/code.hpp"
#include "cyclo/matrix.hpp"

namespace cyclo {

inline constexpr std::uint64_t kDefaultBudget = std::uint64_t{1} << 24;

struct DistanceReport {
  std::uint64_t d = 0;
  std::uint64_t codewords_enumerated = 0;
  std::string method = "exhaustive-messages";
  double elapsed_s = 0.0;
};

struct EnumerationOptions {
  std::uint64_t budget = kDefaultBudget;
  /// 0 selects std::thread::hardware_concurrency().
  unsigned threads = 0;
};

/// Exact minimum distance by visiting every nonzero message against the
/// RREF generator in Gray order (one scaled-row update per codeword).
/// Throws BudgetExceeded when q^k - 1 > budget and ZeroCode for k == 0.
DistanceReport min_distance(const GenMatrix& g, EnumerationOptions opts = {});
DistanceReport min_distance(const CyclicCode& c, EnumerationOptions opts = {});

/// A_0..A_n. Throws BudgetExceeded when q^k > budget.
std::vector<std::uint64_t> weight_distribution(const GenMatrix& g, EnumerationOptions opts = {});
std::vector<std::uint64_t> weight_distribution(const CyclicCode& c, EnumerationOptions opts = {});

/// q^k for the row space of g, saturated at UINT64_MAX.
std::uint64_t codeword_count(const FieldCtx& field, std::size_t k);

}  // namespace cyclo
