#include "flagcoh/groebner.hpp"

#include <gtest/gtest.h>

#include <set>

#include "test_support.hpp"

namespace flagcoh {
namespace {

using testing::make_ring;
using testing::random_homogeneous;

std::set<std::string> rendered(const GroebnerBasis& gb) {
  std::set<std::string> out;
  for (const auto& g : gb.generators()) out.insert(render(g));
  return out;
}

// Oracle: dim_d of the quotient as #monomials - rank of all multiples of the
// generators landing in degree d, by dense exact elimination.
std::size_t quotient_dim_by_elimination(const std::vector<Polynomial>& gens, std::uint32_t d) {
  const Ring& ring = gens.front().ring();
  auto monomials = ring->monomials_of_degree(d);
  std::vector<std::vector<Rational>> rows;
  for (const auto& g : gens) {
    const std::uint32_t gd = *g.degree();
    if (gd > d) continue;
    for (const auto& m : ring->monomials_of_degree(d - gd)) {
      Polynomial prod = g.times_term(m, 1);
      std::vector<Rational> row;
      for (const auto& mon : monomials) row.push_back(prod.coefficient(mon));
      rows.push_back(std::move(row));
    }
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < monomials.size() && rank < rows.size(); ++c) {
    std::size_t piv = rank;
    while (piv < rows.size() && rows[piv][c] == 0) ++piv;
    if (piv == rows.size()) continue;
    std::swap(rows[piv], rows[rank]);
    for (std::size_t r = rank + 1; r < rows.size(); ++r) {
      if (rows[r][c] == 0) continue;
      Rational f = rows[r][c] / rows[rank][c];
      for (std::size_t k = c; k < monomials.size(); ++k) rows[r][k] -= f * rows[rank][k];
    }
    ++rank;
  }
  return monomials.size() - rank;
}

TEST(Buchberger, AlreadyGroebner) {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger({parse("x^2", r), parse("y^2", r)});
  EXPECT_EQ(rendered(gb), (std::set<std::string>{"x^2", "y^2"}));
  auto h = quotient_dimension(gb);
  EXPECT_EQ(h.graded_dimensions, (std::vector<std::uint64_t>{1, 2, 1}));
  EXPECT_EQ(h.total_dimension, 4U);
  EXPECT_TRUE(h.is_finite);
}

TEST(Buchberger, HandExample) {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger({parse("x^2 - y^2", r), parse("x*y", r)});
  EXPECT_TRUE(rendered(gb).count("y^3"));
  EXPECT_TRUE(gb.contains(parse("y^3", r)));
  EXPECT_EQ(quotient_dimension(gb).total_dimension, 4U);
}

TEST(Buchberger, Errors) {
  auto r = make_ring({"x", "y"});
  EXPECT_THROW(buchberger({parse("x^2 + y", r)}), Error);
  auto z = make_ring({"x", "y"}, CoefficientRing::integers());
  EXPECT_THROW(buchberger({parse("x^2", z)}), Error);
  EXPECT_THROW(buchberger({}), Error);
}

TEST(NormalForm, Basics) {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger({parse("x^2", r)});
  EXPECT_EQ(gb.normal_form(parse("x^2 + x", r)), parse("x", r));
  EXPECT_TRUE(gb.normal_form(parse("x^3*y", r)).is_zero());
  EXPECT_THROW(gb.normal_form(parse("x", make_ring({"x"}))), Error);
}

class SmallIdeals : public ::testing::Test {
 protected:
  // Weighted ring with a complete-intersection-like ideal.
  Ring r = make_ring({"a", "b", "c"}, CoefficientRing::rationals(), {1, 1, 2});
  std::vector<Polynomial> gens{parse("a^2 + b^2 - c", r), parse("a^3 - 2*a*c + b^3", r),
                               parse("c^2 - a*b^3 + 3*a^2*c", r)};
};

TEST_F(SmallIdeals, HilbertMatchesElimination) {
  auto gb = buchberger(gens);
  auto h = quotient_dimension(gb);
  ASSERT_TRUE(h.is_finite);
  for (std::uint32_t d = 0; d < h.graded_dimensions.size() + 2; ++d) {
    std::uint64_t expect = quotient_dim_by_elimination(gens, d);
    std::uint64_t got = d < h.graded_dimensions.size() ? h.graded_dimensions[d] : 0;
    EXPECT_EQ(got, expect) << "degree " << d;
  }
}

TEST_F(SmallIdeals, SPolynomialsReduceToZero) {
  auto gb = buchberger(gens);
  const auto& g = gb.generators();
  for (std::size_t i = 0; i < g.size(); ++i) {
    for (std::size_t j = i + 1; j < g.size(); ++j) {
      EXPECT_TRUE(gb.normal_form(s_polynomial(g[i], g[j])).is_zero());
    }
    EXPECT_EQ(g[i].leading_term().coeff, 1);
    // Auto-reduced: no other leading monomial divides any term.
    for (std::size_t j = 0; j < g.size(); ++j) {
      if (i == j) continue;
      for (const auto& t : g[i].terms()) EXPECT_FALSE(g[j].leading_term().monomial.divides(t.monomial));
    }
  }
}

TEST_F(SmallIdeals, NormalFormProperties) {
  auto gb = buchberger(gens);
  Rng rng(21);
  for (int trial = 0; trial < 50; ++trial) {
    Polynomial f = testing::random_polynomial(r, 6, rng);
    Polynomial nf = gb.normal_form(f);
    EXPECT_EQ(gb.normal_form(nf), nf);
    for (const auto& t : nf.terms()) EXPECT_TRUE(gb.is_standard(t.monomial));
    Polynomial member(r);
    for (const auto& g : gens) member += random_homogeneous(r, 1 + rng.below(3), rng) * g;
    EXPECT_TRUE(gb.normal_form(member).is_zero());
    Polynomial h = testing::random_polynomial(r, 4, rng);
    EXPECT_EQ(gb.normal_form(f + h), gb.normal_form(f) + gb.normal_form(h));
  }
}

TEST_F(SmallIdeals, IndependentOfInputOrder) {
  auto gb1 = buchberger(gens);
  auto gb2 = buchberger({gens[2], gens[0], gens[1], gens[0] * parse("a", r)});
  EXPECT_EQ(rendered(gb1), rendered(gb2));
}

TEST_F(SmallIdeals, ModularRunAgreesOnLeadingMonomials) {
  auto gbq = buchberger(gens);
  auto fp = r->with_coefficients(CoefficientRing::prime_field(kDefaultPrime));
  std::vector<Polynomial> gens_p;
  for (const auto& g : gens) gens_p.push_back(g.with_ring(fp));
  auto gbp = buchberger(gens_p);
  ASSERT_EQ(gbq.generators().size(), gbp.generators().size());
  for (std::size_t k = 0; k < gbq.generators().size(); ++k) {
    EXPECT_EQ(gbq.generators()[k].leading_term().monomial, gbp.generators()[k].leading_term().monomial);
    EXPECT_EQ(gbq.generators()[k].with_ring(fp), gbp.generators()[k]);
  }
}

TEST_F(SmallIdeals, DegreeCapTruncates) {
  auto gb = buchberger(gens, 3);
  EXPECT_TRUE(gb.truncated());
  EXPECT_THROW(quotient_dimension(gb), Error);
  EXPECT_FALSE(buchberger(gens, 100).truncated());
}

TEST(Quotient, InfiniteNeedsCutoff) {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger({parse("x^2", r)});
  EXPECT_THROW(quotient_dimension(gb), Error);
  auto h = quotient_dimension(gb, 4);
  EXPECT_FALSE(h.is_finite);
  EXPECT_EQ(h.graded_dimensions, (std::vector<std::uint64_t>{1, 2, 2, 2, 2}));
}

TEST(Quotient, StandardMonomials) {
  auto r = make_ring({"x", "y"});
  auto gb = buchberger({parse("x^2", r), parse("y^2", r)});
  auto std1 = standard_monomials(gb, 1);
  EXPECT_EQ(std1.size(), 2U);
  EXPECT_EQ(standard_monomials(gb, 2).size(), 1U);
}

}  // namespace
}  // namespace flagcoh
