#include "flagcoh/schubert.hpp"

#include <gtest/gtest.h>

#include "test_support.hpp"

namespace flagcoh {
namespace {

using testing::random_homogeneous;

// Order of s_i s_j from the Cartan entries.
int braid_order(const RootSystem& rs, int i, int j) {
  switch (rs.cartan().at(i - 1, j - 1) * rs.cartan().at(j - 1, i - 1)) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    default:
      return 6;
  }
}

Polynomial apply_alternating(const DividedDifference& ops, int i, int j, int count, const Polynomial& f) {
  WeylWord w;
  for (int k = 0; k < count; ++k) w.push_back(k % 2 == 0 ? i : j);
  return ops.apply_word(w, f);
}

class DividedDifferenceProperties : public ::testing::TestWithParam<const char*> {};

TEST_P(DividedDifferenceProperties, SquareIsZero) {
  const auto ops = divided_differences(RootSystem::build(GetParam()));
  Rng rng(1);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_homogeneous(ops.ring(), 1 + static_cast<std::uint32_t>(rng.below(5)), rng);
    for (int i = 1; i <= ops.rank(); ++i) EXPECT_TRUE(ops.apply(i, ops.apply(i, f)).is_zero());
  }
}

TEST_P(DividedDifferenceProperties, BraidRelations) {
  const auto rs = RootSystem::build(GetParam());
  const auto ops = divided_differences(rs);
  Rng rng(2);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_homogeneous(ops.ring(), 2 + static_cast<std::uint32_t>(rng.below(6)), rng);
    for (int i = 1; i <= ops.rank(); ++i) {
      for (int j = i + 1; j <= ops.rank(); ++j) {
        const int m = braid_order(rs, i, j);
        EXPECT_EQ(apply_alternating(ops, i, j, m, f), apply_alternating(ops, j, i, m, f)) << i << "," << j;
      }
    }
  }
}

TEST_P(DividedDifferenceProperties, TwistedLeibniz) {
  const auto ops = divided_differences(RootSystem::build(GetParam()));
  Rng rng(3);
  for (int trial = 0; trial < 100; ++trial) {
    const Polynomial f = random_homogeneous(ops.ring(), 1 + static_cast<std::uint32_t>(rng.below(3)), rng);
    const Polynomial g = random_homogeneous(ops.ring(), 1 + static_cast<std::uint32_t>(rng.below(3)), rng);
    for (int i = 1; i <= ops.rank(); ++i) {
      EXPECT_EQ(ops.apply(i, f * g), ops.apply(i, f) * g + ops.frame().reflect(i, f) * ops.apply(i, g));
    }
  }
}

TEST_P(DividedDifferenceProperties, ActsOnFundamentalWeightsByKronecker) {
  const auto rs = RootSystem::build(GetParam());
  const auto ops = divided_differences(rs);
  for (int i = 1; i <= ops.rank(); ++i) {
    EXPECT_EQ(ops.apply(i, ops.alpha(i)), Polynomial::constant(ops.ring(), 2));
    for (int j = 1; j <= ops.rank(); ++j) {
      const Polynomial w = ops.frame().linear_form(rs.fundamental_weight(j));
      EXPECT_EQ(ops.apply(i, w), Polynomial::constant(ops.ring(), i == j ? 1 : 0)) << i << "," << j;
    }
  }
}

INSTANTIATE_TEST_SUITE_P(Types, DividedDifferenceProperties, ::testing::Values("A2", "B2", "G2", "A3"));

TEST(DividedDifference, E8TFrameProperties) {
  const auto rs = RootSystem::build("E8");
  const auto ops = divided_differences(rs);
  Rng rng(4);
  for (int trial = 0; trial < 20; ++trial) {
    const Polynomial f = random_homogeneous(ops.ring(), 3, rng);
    const Polynomial g = random_homogeneous(ops.ring(), 2, rng);
    for (int i = 1; i <= 8; ++i) {
      EXPECT_TRUE(ops.apply(i, ops.apply(i, f)).is_zero());
      EXPECT_EQ(ops.apply(i, f * g), ops.apply(i, f) * g + ops.frame().reflect(i, f) * ops.apply(i, g));
      for (int j = i + 1; j <= 8; ++j) {
        const int m = braid_order(rs, i, j);
        EXPECT_EQ(apply_alternating(ops, i, j, m, f), apply_alternating(ops, j, i, m, f));
      }
    }
  }
}

TEST(DividedDifference, RejectsBadIndex) {
  const auto ops = divided_differences(RootSystem::build("A2"));
  EXPECT_THROW(ops.apply(3, Polynomial::constant(ops.ring(), 1)), Error);
  EXPECT_THROW(ops.apply(0, Polynomial::constant(ops.ring(), 1)), Error);
}

class SchubertBasisSmall : public ::testing::TestWithParam<const char*> {};

TEST_P(SchubertBasisSmall, ProfileMatchesLengthGeneratingFunction) {
  const auto rs = RootSystem::build(GetParam());
  const auto b = schubert_basis(rs, 100);
  const auto lg = length_generating_function(rs.chevalley_degrees());
  const auto profile = b.degree_profile();
  ASSERT_EQ(profile.size(), lg.size());
  for (std::size_t d = 0; d < lg.size(); ++d) EXPECT_EQ(Integer(std::to_string(profile[d])), lg[d]) << d;
  EXPECT_EQ(b.path_mismatches, 0u);
}

TEST_P(SchubertBasisSmall, CoordinatesOfClassesAreUnitVectors) {
  const auto b = schubert_basis(RootSystem::build(GetParam()), 100);
  for (const auto& c : b.classes) {
    if (c.length == 0) {
      EXPECT_EQ(c.poly, Polynomial::constant(b.ops.ring(), 1));
      continue;
    }
    const auto coords = express_in_schubert(c.poly, b);
    EXPECT_EQ(coords.degree, c.length);
    EXPECT_TRUE(coords.integral);
    for (const auto& [word, a] : coords.coefficients) EXPECT_EQ(a, word == c.word ? 1 : 0);
  }
}

TEST_P(SchubertBasisSmall, SimpleReflectionClassesAreFundamentalWeights) {
  const auto rs = RootSystem::build(GetParam());
  const auto b = schubert_basis(rs, 1);
  for (const auto& c : b.classes) {
    if (c.length != 1) continue;
    EXPECT_EQ(c.poly, b.ops.frame().linear_form(rs.fundamental_weight(c.word[0])));
  }
}

TEST_P(SchubertBasisSmall, DescentAndDualBasisSeedsAgree) {
  const auto rs = RootSystem::build(GetParam());
  const auto top = schubert_basis(rs, 100);
  const auto dual = schubert_basis(rs, static_cast<std::uint32_t>(top.top_length), SchubertSeed::kDualBasis);
  EXPECT_TRUE(compare_modulo_ideal(top, dual).passed);
  EXPECT_TRUE(reduced_word_independence(top).passed);
}

INSTANTIATE_TEST_SUITE_P(Types, SchubertBasisSmall, ::testing::Values("A2", "B2", "G2", "A3"));

TEST(SchubertBasis, RankTwoTablesAreUnimodular) {
  for (const char* type : {"A2", "B2"}) {
    const auto b = schubert_basis(RootSystem::build(type), 100);
    for (const auto& t : b.tables) EXPECT_TRUE(t.unimodular()) << type << " degree " << t.degree;
  }
}

TEST(SchubertBasis, StaircaseAgreesWithTopClass) {
  for (const char* type : {"A2", "A3"}) {
    const auto rs = RootSystem::build(type);
    const auto top = schubert_basis(rs, 100, SchubertSeed::kTopClass);
    const auto stair = schubert_basis(rs, 100, SchubertSeed::kStaircase);
    EXPECT_EQ(stair.path_mismatches, 0u);
    EXPECT_TRUE(compare_modulo_ideal(top, stair).passed) << type;
  }
  EXPECT_THROW(schubert_basis(RootSystem::build("B2"), 4, SchubertSeed::kStaircase), Error);
}

TEST(SchubertBasis, ExpressRejectsDegreeAboveCap) {
  const auto b = schubert_basis(RootSystem::build("A2"), 1);
  const Polynomial f = pow(b.ops.alpha(1), 2);
  EXPECT_THROW(express_in_schubert(f, b), Error);
  EXPECT_TRUE(express_in_schubert(Polynomial(b.ops.ring()), b).coefficients.empty());
}

TEST(SchubertBasis, ExpansionOfRootProductIsIntegral) {
  // alpha_1 * omega_2 in A2: coordinates must be integers.
  const auto rs = RootSystem::build("A2");
  const auto b = schubert_basis(rs, 100);
  const Polynomial f = b.ops.alpha(1) * b.ops.frame().linear_form(rs.fundamental_weight(2));
  const auto coords = express_in_schubert(f, b);
  EXPECT_TRUE(coords.integral);
  // The reconstruction sum a_w P_w agrees with f modulo the ideal.
  Polynomial sum(b.ops.ring());
  for (const auto& [word, a] : coords.coefficients) {
    for (const auto& c : b.classes) {
      if (c.word == word) sum += c.poly.scaled(a);
    }
  }
  EXPECT_TRUE(b.ideal.normal_form(sum - f).is_zero());
}

TEST(SchubertBasis, E8LowLengths) {
  const auto rs = RootSystem::build("E8");
  const auto b = schubert_basis(rs, 4);
  EXPECT_EQ(b.seed, SchubertSeed::kDualBasis);
  EXPECT_EQ(b.degree_profile(), (std::vector<std::uint64_t>{1, 8, 35, 112, 294}));
  for (const auto& c : b.classes) {
    if (c.length == 0 || c.length > 3) continue;
    const auto coords = express_in_schubert(c.poly, b);
    for (const auto& [word, a] : coords.coefficients) EXPECT_EQ(a, word == c.word ? 1 : 0);
  }
  EXPECT_THROW(schubert_basis(rs, 5), Error);
  EXPECT_THROW(schubert_basis(rs, 2, SchubertSeed::kTopClass), Error);
}

TEST(SchubertBasis, JsonListsClassesAndTables) {
  const auto b = schubert_basis(RootSystem::build("B2"), 100);
  const Json j = b.to_json();
  EXPECT_EQ(j["type"], "B2");
  EXPECT_EQ(j["classes"].size(), 8u);
  EXPECT_EQ(j["tables"].size(), 4u);
  EXPECT_EQ(j["path_mismatches"], 0);
}

}  // namespace
}  // namespace flagcoh
