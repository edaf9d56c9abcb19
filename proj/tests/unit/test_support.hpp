#pragma once

#include <string>
#include <vector>

#include "flagcoh/polyring.hpp"

namespace flagcoh::testing {

inline Ring make_ring(const std::vector<std::string>& names, CoefficientRing coeffs = CoefficientRing::rationals(),
                      std::vector<std::uint32_t> degrees = {}) {
  std::vector<Variable> vars;
  for (std::size_t i = 0; i < names.size(); ++i) {
    vars.push_back(Variable{names[i], degrees.empty() ? 1U : degrees[i]});
  }
  return RingDescriptor::make(std::move(vars), coeffs);
}

/// Random homogeneous polynomial with small integer coefficients.
inline Polynomial random_homogeneous(const Ring& ring, std::uint32_t degree, Rng& rng, std::size_t max_terms = 6) {
  auto monomials = ring->monomials_of_degree(degree);
  std::vector<Term> terms;
  std::size_t count = 1 + rng.below(max_terms);
  for (std::size_t k = 0; k < count && !monomials.empty(); ++k) {
    const Monomial& m = monomials[rng.below(monomials.size())];
    terms.push_back(Term{m, Rational(rng.between(-5, 5))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

/// Random polynomial mixing several degrees.
inline Polynomial random_polynomial(const Ring& ring, std::uint32_t max_degree, Rng& rng) {
  Polynomial p(ring);
  for (std::uint32_t d = 0; d <= max_degree; ++d) {
    if (rng.below(2) == 0) p += random_homogeneous(ring, d, rng, 3);
  }
  return p;
}

}  // namespace flagcoh::testing
