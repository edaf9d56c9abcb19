#pragma once

// Power sums of weight multisets as Weyl-invariant polynomials, evaluated
// modularly or expanded exactly at low degree.

#include <cstdint>
#include <span>
#include <string>
#include <vector>

#include "flagcoh/polyring.hpp"
#include "flagcoh/report.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

inline constexpr const char* kInvariantRepresentative = "basic invariant representative: root power sum";

/// Sum over a weight multiset of (weight)^degree, with the weights read as
/// linear forms in a frame.
class PowerSumOracle {
 public:
  PowerSumOracle(WeightFrame frame, std::vector<Weight> weights, unsigned degree);

  const WeightFrame& frame() const { return frame_; }
  unsigned degree() const { return degree_; }
  std::size_t weight_count() const { return forms_.size(); }
  /// Linear forms as integer coordinate vectors in the frame.
  const std::vector<std::vector<std::int64_t>>& forms() const { return forms_; }

  std::uint64_t evaluate(std::span<const std::uint64_t> point, std::uint64_t prime) const;
  Rational evaluate(std::span<const Rational> point) const;

 private:
  WeightFrame frame_;
  std::vector<std::vector<std::int64_t>> forms_;
  unsigned degree_;
};

/// Oracle for p_j over the root system's invariant weight multiset (the roots
/// for every type except where the data file selects a W-orbit).
PowerSumOracle power_sum_oracle(const WeightFrame& frame, unsigned degree);

class CapExceeded : public Error {
 public:
  using Error::Error;
};

/// Number of monomials of the oracle's degree in the frame variables; an
/// upper bound on the term count of the expansion.
Integer estimated_terms(const PowerSumOracle& oracle);

/// Exact expansion; throws CapExceeded when estimated_terms > term_cap.
Polynomial expand_power_sum(const PowerSumOracle& oracle, std::uint64_t term_cap);

struct InvarianceOptions {
  std::size_t trials = 20;
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
};

/// Compares f(s_i x) with f(x) at random points of (Z/p)^n for every simple
/// reflection. The report is independent of jobs.
VerificationReport invariance_check(const PowerSumOracle& oracle, const InvarianceOptions& options);
VerificationReport invariance_check(const Polynomial& f, const WeightFrame& frame, const InvarianceOptions& options);

std::vector<int> chevalley_degrees(const RootSystem& rs);

/// Rank of the Jacobian of the polynomials at a random rational point,
/// computed exactly.
std::size_t jacobian_rank(const std::vector<Polynomial>& polys, Rng& rng);

}  // namespace flagcoh
