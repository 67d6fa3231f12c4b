#pragma once

#include <cstdint>
#include <span>
#include <vector>

#include "cyclo/code.hpp"
#include "cyclo/distance.hpp"
#include "cyclo/field.hpp"
#include "cyclo/matrix.hpp"
#include "cyclo/record.hpp"

namespace cyclo {

/// CRT bijection psi: Z_{n1} x Z_{n2} -> Z_{n1 n2} with psi(i, j) = i mod n1
/// and = j mod n2. Pairs are flattened row-major: (i, j) -> i * n2 + j.
struct CrtMap {
  std::size_t n1 = 1;
  std::size_t n2 = 1;
  std::vector<std::size_t> table;    // flattened (i, j) -> psi(i, j)
  std::vector<std::size_t> inverse;  // psi(i, j) -> flattened (i, j)

  std::size_t operator()(std::size_t i, std::size_t j) const { return table[i * n2 + j]; }
};

/// Throws NotCoprime.
CrtMap crt_map(std::size_t n1, std::size_t n2);

/// Standard Kronecker product; throws FieldMismatch.
GenMatrix kronecker(const GenMatrix& a, const GenMatrix& b);

/// Direct product of two codes: n1 x n2 arrays (row-major) whose columns
/// lie in `first` and whose rows lie in `second`.
struct ProductCode {
  GenMatrix first;
  GenMatrix second;
  GenMatrix generator;  // first (x) second
};

ProductCode direct_product(const GenMatrix& first, const GenMatrix& second);
ProductCode direct_product(const CyclicCode& first, const CyclicCode& second);

/// Sends array position (i, j) to coordinate psi(i, j). Throws DimensionMismatch.
GenMatrix apply_psi(const ProductCode& pc, const CrtMap& map);

/// Checks C_{n1 n2}^perp = Psi(C_{n1}^perp (x) C_{n2}^perp) by RREF identity,
/// plus dimensions and (within budget) distances.
VerificationRecord verify_tensor_dual(std::size_t n1, std::size_t n2, const FieldCtx& field,
                                      EnumerationOptions opts = {});

/// Both sides of Psi(f)(alpha beta) = f(alpha, beta) for one array f.
struct PsiEvaluation {
  Fe bivariate;
  Fe univariate;
};

PsiEvaluation evaluate_psi_identity(std::span<const Fe> array, const CrtMap& map, const FieldExtension& ext,
                                    Fe alpha, Fe beta);

struct NonzerosReport {
  std::vector<std::uint64_t> expected;  // {psi(a, b)} over nonzero exponent pairs
  std::vector<std::uint64_t> measured;  // nonzeros of the Psi-image, relative to alpha*beta
  std::size_t evaluations_checked = 0;
  bool evaluations_match = false;
  bool passed = false;
};

/// Nonzeros of Psi(c1 (x) c2) are the products of nonzeros of c1 and c2,
/// checked on exponent sets and on `samples` random codewords.
NonzerosReport check_nonzeros_product(const CyclicCode& c1, const CyclicCode& c2, std::uint64_t seed = 1,
                                      std::size_t samples = 50);

/// check_nonzeros_product applied to C_{n1}^perp and C_{n2}^perp.
NonzerosReport verify_nonzeros_product(std::size_t n1, std::size_t n2, const FieldCtx& field,
                                       std::uint64_t seed = 1, std::size_t samples = 50);

}  // namespace cyclo
