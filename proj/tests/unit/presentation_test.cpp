#include "flagcoh/presentation.hpp"

#include <gtest/gtest.h>

#include "flagcoh/invariants.hpp"

namespace flagcoh {
namespace {

const GradedPresentation& e8t() {
  static const GradedPresentation p = e8t_presentation();
  return p;
}

const TCoordinateFrame& e8_frame() {
  static const TCoordinateFrame f = TCoordinateFrame::e8(RootSystem::build("E8"));
  return f;
}

// Oracle: e_k(t1..t8) by summing products over k-subsets.
Polynomial elementary_by_subsets(const Ring& ring, int k) {
  Polynomial out(ring);
  for (unsigned mask = 0; mask < 256; ++mask) {
    if (__builtin_popcount(mask) != k) continue;
    Polynomial prod = Polynomial::constant(ring, 1);
    for (int i = 0; i < 8; ++i) {
      if (mask & (1U << i)) prod *= Polynomial::variable(ring, "t" + std::to_string(i + 1));
    }
    out += prod;
  }
  return out;
}

// Polynomial of the E8/T generator ring that uses only t1..t8, t, in the
// frame's full ring.
Polynomial to_full_ring(const Polynomial& p) {
  SubstitutionMap m(p.ring(), e8_frame().full_ring());
  for (const auto& v : e8_frame().full_ring()->variables()) m.set_identity(v.name);
  return m.apply(p);
}

Polynomial var(const Ring& ring, const char* name) { return Polynomial::variable(ring, name); }

// Oracle: series coefficients by multiplying truncated geometric sums
// (1 - q^r) / (1 - q^g) = 1 + q^g + q^{2g} + ... minus the same shifted by r.
std::vector<Integer> series_by_products(const std::vector<std::uint32_t>& gens, const std::vector<std::uint32_t>& rels,
                                        std::uint32_t cutoff) {
  std::vector<Integer> s(cutoff + 1, 0);
  s[0] = 1;
  for (auto g : gens) {
    for (std::uint32_t d = g; d <= cutoff; ++d) s[d] += s[d - g];
  }
  for (auto r : rels) {
    for (std::uint32_t d = cutoff + 1; d-- > r;) s[d] -= s[d - r];
  }
  return s;
}

std::vector<std::uint32_t> generator_degrees(const GradedPresentation& p) {
  std::vector<std::uint32_t> out;
  for (const auto& v : p.ring()->variables()) out.push_back(v.q_degree);
  return out;
}

std::vector<std::uint32_t> relation_degrees(const GradedPresentation& p) {
  std::vector<std::uint32_t> out;
  for (const auto& r : p.relations()) out.push_back(r.q_degree);
  return out;
}

TEST(Presentation, E8TShape) {
  const auto& p = e8t();
  EXPECT_EQ(p.ring()->variables().size(), 16u);
  EXPECT_EQ(relation_degrees(p), (std::vector<std::uint32_t>{1, 2, 3, 4, 5, 6, 8, 9, 10, 12, 14, 15, 18, 20, 24, 30}));
  EXPECT_EQ(generator_degrees(p), (std::vector<std::uint32_t>{1, 1, 1, 1, 1, 1, 1, 1, 1, 3, 4, 5, 6, 9, 10, 15}));
  EXPECT_TRUE(transcription_audit(p).passed);
}

TEST(Presentation, E8CShape) {
  const auto p = e8c_presentation();
  EXPECT_EQ(generator_degrees(p), (std::vector<std::uint32_t>{1, 6, 10, 15}));
  EXPECT_EQ(relation_degrees(p), (std::vector<std::uint32_t>{15, 20, 24, 30}));
  EXPECT_TRUE(transcription_audit(p).passed);
  const Ring& r = p.ring();
  EXPECT_EQ(p.relation("r15").poly, pow(var(r, "u"), 15) - var(r, "x").scaled(2));
  // w^2 enters r20 with coefficient 3.
  EXPECT_EQ(p.relation("r20").poly.coefficient(r->monomial(std::vector<std::uint32_t>{0, 0, 2, 0})), 3);
}

TEST(Presentation, E8CAgreesWithE8T) { EXPECT_TRUE(e8c_consistency(e8t(), e8c_presentation()).passed); }

TEST(Presentation, LowRelationsMatchIndependentExpansion) {
  const auto& p = e8t();
  const Ring& r = p.ring();
  EXPECT_EQ(p.expanded_relation("rho1"), elementary_by_subsets(r, 1) - var(r, "t").scaled(3));
  EXPECT_EQ(p.expanded_relation("rho2"), elementary_by_subsets(r, 2) - pow(var(r, "t"), 2).scaled(4));
  EXPECT_EQ(p.expanded_relation("rho3"), elementary_by_subsets(r, 3) - var(r, "g3").scaled(2));
  EXPECT_EQ(p.expanded_relation("rho4"),
            elementary_by_subsets(r, 4) + pow(var(r, "t"), 4).scaled(2) - var(r, "g4").scaled(3));
}

TEST(Presentation, AbbreviationImages) {
  const auto& p = e8t();
  EXPECT_EQ(p.abbreviation_image("u"), var(p.ring(), "t8"));
  EXPECT_EQ(p.abbreviation_image("c5"), elementary_by_subsets(p.ring(), 5));
  const auto m = uvwx_substitution(e8t());
  EXPECT_EQ(*m.image("v").degree(), 6u);
  EXPECT_EQ(*m.image("w").degree(), 10u);
  EXPECT_EQ(*m.image("x").degree(), 15u);
  EXPECT_EQ(m.image("v").coefficient_of_variable("g6"), 2);
  EXPECT_EQ(m.image("w").coefficient_of_variable("g10"), 1);
  EXPECT_EQ(m.image("x").coefficient_of_variable("g15"), 1);
}

TEST(Presentation, Rho2IsWeylInvariantAfterEliminatingT1) {
  const auto& f = e8_frame();
  const Polynomial rho2 = f.normalize(to_full_ring(e8t().expanded_relation("rho2")));
  for (int i = 1; i <= 8; ++i) EXPECT_EQ(f.reflect_polynomial(i, rho2), rho2) << "s" << i;
}

TEST(Presentation, JsonRoundTrip) {
  for (const char* space : {"E8T", "E8C", "A2", "B2", "G2"}) {
    const auto p = builtin_presentation(space);
    const auto j = p.to_json();
    EXPECT_EQ(j["format"], kPresentationFormat);
    const auto back = GradedPresentation::from_json(Json::parse(j.dump()));
    EXPECT_TRUE(back == p) << space;
    EXPECT_EQ(back.to_json(), j) << space;
  }
}

TEST(Presentation, JsonRejectsMalformedInput) {
  auto j = builtin_presentation("A2").to_json();
  j["format"] = "something-else";
  EXPECT_THROW(GradedPresentation::from_json(j), Error);
}

TEST(Presentation, BorelDegreesAreChevalleyDegrees) {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    const auto rs = RootSystem::build(type);
    const auto p = borel_presentation(rs);
    std::vector<std::uint32_t> expected(rs.chevalley_degrees().begin(), rs.chevalley_degrees().end());
    EXPECT_EQ(relation_degrees(p), expected) << type;
    EXPECT_TRUE(transcription_audit(p).passed) << type;
  }
  EXPECT_THROW(borel_presentation(RootSystem::build("E7")), Error);
}

TEST(PoincareSeries, MatchesProductOracle) {
  const auto& p = e8t();
  const auto gens = generator_degrees(p), rels = relation_degrees(p);
  EXPECT_EQ(ci_poincare_series(gens, rels, 130), series_by_products(gens, rels, 130));
  const auto s = ci_poincare_series(gens, rels, 130);
  Integer total = 0;
  for (const auto& c : s) total += c;
  EXPECT_EQ(total, Integer("696729600"));
  EXPECT_EQ(s[120], 1);
  for (std::uint32_t d = 121; d <= 130; ++d) EXPECT_EQ(s[d], 0);

  const auto c = e8c_presentation();
  const auto cs = ci_poincare_series(generator_degrees(c), relation_degrees(c), 70);
  EXPECT_EQ(cs, series_by_products(generator_degrees(c), relation_degrees(c), 70));
  total = 0;
  std::size_t top = 0;
  for (std::size_t d = 0; d < cs.size(); ++d) {
    total += cs[d];
    if (cs[d] != 0) top = d;
  }
  EXPECT_EQ(total, 240);
  EXPECT_EQ(top, 57u);
}

TEST(GradedDimensions, MatchGroebnerOracleOnSmallPresentations) {
  for (const char* type : {"A2", "B2", "G2", "A3"}) {
    const auto p = borel_presentation(RootSystem::build(type));
    const Ring q = p.ring()->with_coefficients(CoefficientRing::rationals());
    std::vector<Polynomial> rels;
    for (const auto& r : p.relations()) rels.push_back(p.expand(r.poly).with_ring(q));
    const auto oracle = quotient_dimension(buchberger(rels));
    ASSERT_TRUE(oracle.is_finite);
    const std::uint32_t cutoff = static_cast<std::uint32_t>(oracle.graded_dimensions.size() + 1);
    for (std::uint64_t seed : {0ULL, 9ULL}) {
      LinearAlgebraOptions opts;
      opts.seed = seed;
      opts.jobs = 2;
      const auto h = graded_dimensions_linear_algebra(p, cutoff, opts);
      ASSERT_EQ(h.graded_dimensions.size(), cutoff + 1u);
      for (std::uint32_t d = 0; d <= cutoff; ++d) {
        const std::uint64_t expect = d < oracle.graded_dimensions.size() ? oracle.graded_dimensions[d] : 0;
        EXPECT_EQ(h.graded_dimensions[d], expect) << type << " degree " << d;
      }
    }
  }
}

TEST(GradedDimensions, E8TLowDegreesMatchSeries) {
  const auto h = graded_dimensions_linear_algebra(e8t(), 4, LinearAlgebraOptions{});
  const auto s = ci_poincare_series(generator_degrees(e8t()), relation_degrees(e8t()), 4);
  ASSERT_EQ(h.graded_dimensions.size(), 5u);
  EXPECT_EQ(h.graded_dimensions[0], 1u);
  EXPECT_EQ(h.graded_dimensions[1], 8u);
  for (std::size_t d = 0; d < 5; ++d) EXPECT_EQ(Integer(std::to_string(h.graded_dimensions[d])), s[d]);
}

TEST(Palindrome, DetectsAsymmetry) {
  HilbertData good{{1, 2, 1}, true, 4};
  HilbertData bad{{1, 2, 2}, true, 5};
  EXPECT_TRUE(palindrome_check(good).passed);
  EXPECT_FALSE(palindrome_check(bad).passed);
}

TEST(GammaElimination, LowImages) {
  const auto g = gamma_elimination_map(e8t(), 4);
  const auto& f = e8_frame();
  const Ring target = g.target();
  auto canonical = [&](const Polynomial& p) { return f.normalize(to_full_ring(p)).with_ring(target); };
  const Polynomial e3 = canonical(elementary_by_subsets(e8t().ring(), 3));
  const Polynomial e4 = canonical(elementary_by_subsets(e8t().ring(), 4));
  const Polynomial t4 = pow(Polynomial::variable(target, "t"), 4);
  EXPECT_EQ(g.image("g3"), e3.scaled(Rational(1, 2)));
  EXPECT_EQ(g.image("g4"), (e4 + t4.scaled(2)).scaled(Rational(1, 3)));
  EXPECT_EQ(g.image("t1"), f.t1_image().with_ring(target));
}

TEST(GammaElimination, EliminatedRelationsVanish) {
  const auto g = gamma_elimination_map(e8t());
  for (const char* name : {"rho1", "rho3", "rho4", "rho5", "rho6", "rho9", "rho10", "rho15"}) {
    const Polynomial rel = e8t().expanded_relation(name).with_ring(g.source());
    EXPECT_TRUE(g.apply(rel).is_zero()) << name;
  }
  EXPECT_FALSE(g.apply(e8t().expanded_relation("rho2").with_ring(g.source())).is_zero());
}

Polynomial power_sum(unsigned j) {
  return expand_power_sum(power_sum_oracle(e8_frame().canonical(), j), 10000000);
}

// Recomputes the certificate identity: the invariant minus n rho_j' and the
// cofactor terms must be a multiple of rho_2'.
void expect_certificate_identity(const CongruenceCertificate& c, const Polynomial& invariant) {
  const auto g = gamma_elimination_map(e8t());
  auto reduced = [&](const std::string& name) {
    return g.apply(e8t().expanded_relation(name).with_ring(g.source()));
  };
  const Polynomial inv = invariant.with_ring(g.target());
  Polynomial d = inv - reduced("rho" + std::to_string(c.j)).scaled(c.n);
  for (const auto& [name, h] : c.cofactors) d -= h.with_ring(g.target()) * reduced(name);
  if (c.j == 2) {
    EXPECT_TRUE(d.is_zero());
    return;
  }
  const Polynomial rho2 = reduced("rho2");
  const Polynomial q = exact_divide(d, rho2);
  EXPECT_EQ(q * rho2, d);
}

TEST(TodaCongruence, Degree2) {
  const Polynomial p2 = power_sum(2);
  const auto c = verify_toda_congruence(2, p2, e8t());
  ASSERT_TRUE(c.solved) << c.diagnostic;
  EXPECT_TRUE(c.residual_zero);
  EXPECT_EQ(c.n, -120);
  expect_certificate_identity(c, p2);
}

TEST(TodaCongruence, Degree8) {
  const Polynomial p8 = power_sum(8);
  const auto c = verify_toda_congruence(8, p8, e8t());
  ASSERT_TRUE(c.solved) << c.diagnostic;
  EXPECT_TRUE(c.residual_zero);
  EXPECT_NE(c.n, 0);
  EXPECT_TRUE(c.report().passed);
  expect_certificate_identity(c, p8);
}

TEST(TodaCongruence, PerturbedRelationIsInfeasible) {
  const auto& p = e8t();
  const Polynomial t2 = Polynomial::variable(p.authoring_ring(), "t2");
  const auto bad = p.with_relation("rho8", p.relation("rho8").poly + pow(t2, 8));
  const auto c = verify_toda_congruence(8, power_sum(8), bad);
  EXPECT_FALSE(c.solved);
  EXPECT_TRUE(c.infeasible);
  EXPECT_FALSE(c.report().passed);
}

TEST(TodaCongruence, RejectsUnsupportedDegree) {
  EXPECT_THROW(verify_toda_congruence(14, Polynomial(e8_frame().ring()), e8t()), Error);
}

}  // namespace
}  // namespace flagcoh
