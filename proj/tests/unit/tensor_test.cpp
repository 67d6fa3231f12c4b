#include <gtest/gtest.h>

#include <algorithm>
#include <numeric>
#include <set>

#include <cyclo/code.hpp>
#include <cyclo/cyclotomic.hpp>
#include <cyclo/distance.hpp>
#include <cyclo/error.hpp>
#include <cyclo/tensor.hpp>

#include "oracle.hpp"

using namespace cyclo;

namespace {

std::vector<std::uint64_t> units(std::uint64_t n) {
  std::vector<std::uint64_t> out;
  for (std::uint64_t i = 1; i < n; ++i)
    if (std::gcd(i, n) == 1) out.push_back(i);
  return out;
}

}  // namespace

TEST(CrtMap, Examples) {
  const CrtMap m = crt_map(3, 5);
  EXPECT_EQ(m(1, 1), 1u);
  EXPECT_EQ(m(2, 3), 8u);
  EXPECT_EQ(m(0, 0), 0u);
  EXPECT_THROW(crt_map(4, 6), Error);
  const CrtMap trivial = crt_map(1, 7);
  for (std::size_t j = 0; j < 7; ++j) EXPECT_EQ(trivial(0, j), j);
}

TEST(CrtMap, BijectiveAndMatchesScan) {
  for (std::size_t n1 = 1; n1 <= 12; ++n1) {
    for (std::size_t n2 = 1; n2 <= 12; ++n2) {
      if (std::gcd(n1, n2) != 1) continue;
      const CrtMap m = crt_map(n1, n2);
      std::set<std::size_t> image(m.table.begin(), m.table.end());
      ASSERT_EQ(image.size(), n1 * n2);
      for (std::size_t i = 0; i < n1; ++i) {
        for (std::size_t j = 0; j < n2; ++j) {
          ASSERT_EQ(m(i, j), oracle::crt(i, j, n1, n2));
          ASSERT_EQ(m.inverse[m(i, j)], i * n2 + j);
        }
      }
    }
  }
}

TEST(Kronecker, Examples) {
  const FieldCtx f2 = make_prime_field(2);
  const GenMatrix ones = GenMatrix::from_ints(f2, {{1, 1}});
  EXPECT_EQ(kronecker(ones, GenMatrix::identity(f2, 2)), GenMatrix::from_ints(f2, {{1, 0, 1, 0}, {0, 1, 0, 1}}));
  const GenMatrix g = generator_matrix(build_cn(15, f2));
  EXPECT_EQ(kronecker(GenMatrix::identity(f2, 1), g), g);
  const GenMatrix dd = kronecker(generator_matrix(dual(build_repetition(3, f2))),
                                 generator_matrix(dual(build_repetition(5, f2))));
  EXPECT_EQ(rank(dd), 8u);
  EXPECT_THROW(kronecker(g, GenMatrix::identity(parse_field("4"), 1)), Error);
}

TEST(DirectProduct, DistanceIsProductOfDistances) {
  for (const char* lit : {"2", "3", "4"}) {
    const FieldCtx f = parse_field(lit);
    for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{2, 5}, {3, 4}, {4, 5}, {5, 7}}) {
      if (n1 % f.characteristic() == 0 || n2 % f.characteristic() == 0) continue;
      const CyclicCode a = build_repetition(n1, f);
      const CyclicCode b = dual(build_cn(n2, f));
      const ProductCode pc = direct_product(a, b);
      ASSERT_EQ(rank(pc.generator), a.dimension() * b.dimension());
      if (codeword_count(f, rank(pc.generator)) > (1u << 18)) continue;
      ASSERT_EQ(min_distance(pc.generator).d, min_distance(a).d * min_distance(b).d) << lit;
    }
  }
}

TEST(ApplyPsi, KeepsWeightDistribution) {
  const FieldCtx f3 = make_prime_field(3);
  const ProductCode pc = direct_product(dual(build_cn(4, f3)), dual(build_cn(5, f3)));
  const GenMatrix image = apply_psi(pc, crt_map(4, 5));
  EXPECT_EQ(weight_distribution(image), weight_distribution(pc.generator));
  EXPECT_THROW(apply_psi(pc, crt_map(5, 4)), Error);
}

TEST(ApplyPsi, ImageIsCyclic) {
  for (const char* lit : {"2", "3", "4", "5"}) {
    const FieldCtx f = parse_field(lit);
    for (auto [n1, n2] : {std::pair<std::size_t, std::size_t>{3, 5}, {4, 7}, {5, 6}, {3, 8}}) {
      if (n1 % f.characteristic() == 0 || n2 % f.characteristic() == 0) continue;
      const GenMatrix image =
          apply_psi(direct_product(dual(build_cn(n1, f)), build_repetition(n2, f)), crt_map(n1, n2));
      ASSERT_TRUE(same_code(image, cyclic_shift(image, 1))) << lit << " " << n1 << "x" << n2;
      ASSERT_TRUE(as_cyclic(image).has_value());
    }
  }
}

TEST(ApplyPsi, CommutesWithSimultaneousShift) {
  const FieldCtx f2 = make_prime_field(2);
  const std::size_t n1 = 3, n2 = 5;
  const CrtMap map = crt_map(n1, n2);
  const ProductCode pc = direct_product(dual(build_cn(n1, f2)), dual(build_cn(n2, f2)));
  // Shifting rows by one and columns by one moves (i, j) to (i+1, j+1).
  std::vector<std::size_t> diag(n1 * n2);
  for (std::size_t i = 0; i < n1; ++i)
    for (std::size_t j = 0; j < n2; ++j) diag[i * n2 + j] = ((i + 1) % n1) * n2 + (j + 1) % n2;
  const ProductCode shifted{pc.first, pc.second, permute_columns(pc.generator, diag)};
  EXPECT_EQ(apply_psi(shifted, map), cyclic_shift(apply_psi(pc, map), 1));
}

TEST(VerifyTensorDual, Examples) {
  const VerificationRecord r = verify_tensor_dual(3, 5, make_prime_field(2));
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_EQ(r.theorem, TheoremId::TensorEquiv);
  EXPECT_EQ(r.claimed, (CodeParams{15, 8, 4}));
  EXPECT_EQ(r.measured, (CodeParams{15, 8, 4}));
  EXPECT_EQ(verify_tensor_dual(4, 9, make_prime_field(5)).status, Status::Pass);
  EXPECT_THROW(verify_tensor_dual(4, 6, make_prime_field(5)), Error);
}

TEST(VerifyTensorDual, DistanceOmittedWhenOverBudget) {
  const VerificationRecord r = verify_tensor_dual(4, 9, make_prime_field(5), {1000, 1});
  EXPECT_EQ(r.status, Status::Pass);
  EXPECT_FALSE(r.claimed.d.has_value());
  EXPECT_FALSE(r.measured.d.has_value());
  EXPECT_FALSE(r.note.empty());
}

TEST(NonzerosProduct, Examples) {
  const NonzerosReport r15 = verify_nonzeros_product(3, 5, make_prime_field(2));
  EXPECT_TRUE(r15.passed);
  EXPECT_EQ(r15.measured, units(15));
  EXPECT_EQ(r15.evaluations_checked, 50u);
  const NonzerosReport r6 = verify_nonzeros_product(2, 3, make_prime_field(5));
  EXPECT_TRUE(r6.passed);
  EXPECT_EQ(r6.measured, (std::vector<std::uint64_t>{1, 5}));
}

TEST(NonzerosProduct, HoldsForOtherCyclicFactors) {
  const FieldCtx f2 = make_prime_field(2);
  EXPECT_TRUE(check_nonzeros_product(build_repetition(3, f2), build_cn(7, f2), 3).passed);
  EXPECT_TRUE(check_nonzeros_product(dual(build_cn(5, f2)), build_repetition(9, f2), 4).passed);
}

TEST(PsiEvaluation, ConstantOneEvaluatesToOne) {
  const FieldCtx f2 = make_prime_field(2);
  const CrtMap map = crt_map(3, 5);
  const RootOfUnity root = root_of_unity(15, f2);
  const FieldCtx& big = root.extension.field;
  std::vector<Fe> array(15, f2.zero());
  array[0] = f2.one();
  const PsiEvaluation ev =
      evaluate_psi_identity(array, map, root.extension, big.pow(root.zeta, map(1, 0)), big.pow(root.zeta, map(0, 1)));
  EXPECT_EQ(ev.bivariate, big.one());
  EXPECT_EQ(ev.univariate, big.one());
}
