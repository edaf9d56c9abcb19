#include "flagcoh/invariants.hpp"

#include <chrono>
#include <functional>
#include <thread>
#include <unordered_map>

namespace flagcoh {

PowerSumOracle::PowerSumOracle(WeightFrame frame, std::vector<Weight> weights, unsigned degree)
    : frame_(std::move(frame)), degree_(degree) {
  if (degree == 0) throw Error("power sum degree must be positive");
  for (const auto& w : weights) {
    std::vector<std::int64_t> form;
    for (const auto& c : frame_.coordinates(w)) {
      if (!c.fits_slong_p()) throw Error("weight coordinate too large");
      form.push_back(c.get_si());
    }
    forms_.push_back(std::move(form));
  }
}

std::uint64_t PowerSumOracle::evaluate(std::span<const std::uint64_t> point, std::uint64_t prime) const {
  std::uint64_t sum = 0;
  for (const auto& form : forms_) {
    std::uint64_t v = 0;
    for (std::size_t k = 0; k < form.size(); ++k) {
      if (form[k] == 0) continue;
      const std::uint64_t c = form[k] > 0 ? static_cast<std::uint64_t>(form[k]) % prime
                                          : modp::neg(static_cast<std::uint64_t>(-form[k]) % prime, prime);
      v = modp::add(v, modp::mul(c, point[k], prime), prime);
    }
    sum = modp::add(sum, modp::pow(v, degree_, prime), prime);
  }
  return sum;
}

Rational PowerSumOracle::evaluate(std::span<const Rational> point) const {
  Rational sum = 0;
  for (const auto& form : forms_) {
    Rational v = 0;
    for (std::size_t k = 0; k < form.size(); ++k) v += Rational(static_cast<long>(form[k])) * point[k];
    Rational p = 1;
    for (unsigned e = 0; e < degree_; ++e) p *= v;
    sum += p;
  }
  return sum;
}

PowerSumOracle power_sum_oracle(const WeightFrame& frame, unsigned degree) {
  return PowerSumOracle(frame, frame.root_system().invariant_weights(), degree);
}

Integer estimated_terms(const PowerSumOracle& oracle) {
  Integer count;
  const unsigned long n = oracle.frame().ring()->size();
  mpz_bin_uiui(count.get_mpz_t(), n + oracle.degree() - 1, oracle.degree());
  return count;
}

Polynomial expand_power_sum(const PowerSumOracle& oracle, std::uint64_t term_cap) {
  const Integer estimate = estimated_terms(oracle);
  if (estimate > Integer(std::to_string(term_cap))) {
    throw CapExceeded("expansion of degree " + std::to_string(oracle.degree()) + " needs up to " +
                      estimate.get_str() + " terms, cap is " + std::to_string(term_cap));
  }
  const Ring& ring = oracle.frame().ring();
  const unsigned j = oracle.degree();
  std::unordered_map<Monomial, Integer, MonomialHash> acc;
  acc.reserve(static_cast<std::size_t>(estimate.get_ui()));

  std::vector<std::vector<Integer>> binom(j + 1);
  for (unsigned r = 0; r <= j; ++r) {
    binom[r].resize(r + 1);
    for (unsigned e = 0; e <= r; ++e) mpz_bin_uiui(binom[r][e].get_mpz_t(), r, e);
  }

  std::vector<std::uint32_t> exps(ring->size(), 0);
  for (const auto& form : oracle.forms()) {
    std::vector<std::size_t> support;
    for (std::size_t k = 0; k < form.size(); ++k) {
      if (form[k] != 0) support.push_back(k);
    }
    if (support.empty()) continue;
    std::vector<std::vector<Integer>> powers(support.size());
    for (std::size_t s = 0; s < support.size(); ++s) {
      powers[s].resize(j + 1);
      powers[s][0] = 1;
      for (unsigned e = 1; e <= j; ++e) powers[s][e] = powers[s][e - 1] * static_cast<long>(form[support[s]]);
    }
    // Distribute the exponent over the support; the coefficient is the
    // product of binomials times the powers of the form's coefficients.
    std::function<void(std::size_t, unsigned, const Integer&)> rec = [&](std::size_t s, unsigned rem,
                                                                          const Integer& coeff) {
      if (s + 1 == support.size()) {
        exps[support[s]] = rem;
        Integer c = coeff * powers[s][rem];
        acc[ring->monomial(exps)] += c;
        exps[support[s]] = 0;
        return;
      }
      for (unsigned e = 0; e <= rem; ++e) {
        exps[support[s]] = e;
        rec(s + 1, rem - e, coeff * binom[rem][e] * powers[s][e]);
      }
      exps[support[s]] = 0;
    };
    rec(0, j, Integer(1));
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [m, c] : acc) {
    if (c != 0) terms.push_back(Term{m, Rational(c)});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

namespace {

using Evaluator = std::function<std::uint64_t(std::span<const std::uint64_t>)>;

VerificationReport run_invariance(const std::string& label, const Evaluator& eval, std::uint64_t degree,
                                  const WeightFrame& frame, const InvarianceOptions& options) {
  if (options.trials == 0) throw Error("invariance_check needs at least one trial");
  const auto start = std::chrono::steady_clock::now();
  const std::uint64_t p = options.prime;
  const std::size_t n = frame.ring()->size();
  const int rank = static_cast<int>(frame.root_system().rank());

  // Points are drawn up front so the outcome does not depend on scheduling.
  Rng rng(options.seed);
  const std::size_t total = static_cast<std::size_t>(rank) * options.trials;
  std::vector<std::vector<std::uint64_t>> points(total, std::vector<std::uint64_t>(n));
  for (auto& pt : points) {
    for (auto& v : pt) v = rng.below(p);
  }
  std::vector<char> equal(total, 0);
  auto work = [&](std::size_t begin, std::size_t end) {
    for (std::size_t idx = begin; idx < end; ++idx) {
      const int i = static_cast<int>(idx / options.trials) + 1;
      auto y = frame.reflect_point(i, points[idx], p);
      equal[idx] = eval(points[idx]) == eval(y);
    }
  };
  const unsigned jobs = std::max(1U, std::min<unsigned>(options.jobs, static_cast<unsigned>(total)));
  if (jobs == 1) {
    work(0, total);
  } else {
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) threads.emplace_back(work, total * t / jobs, total * (t + 1) / jobs);
    for (auto& th : threads) th.join();
  }

  VerificationReport report;
  report.check = "invariance";
  report.parameters["target"] = label;
  report.parameters["type"] = frame.root_system().name();
  report.parameters["degree"] = degree;
  report.parameters["prime"] = p;
  report.parameters["trials"] = options.trials;
  report.parameters["seed"] = options.seed;
  report.bound = FailureBound{degree, p, options.trials};
  for (int i = 1; i <= rank; ++i) {
    std::size_t mismatches = 0;
    for (std::size_t k = 0; k < options.trials; ++k) {
      mismatches += !equal[static_cast<std::size_t>(i - 1) * options.trials + k];
    }
    report.require(mismatches == 0);
    report.results.push_back(Json{{"reflection", i}, {"mismatches", mismatches}, {"passed", mismatches == 0}});
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

}  // namespace

VerificationReport invariance_check(const PowerSumOracle& oracle, const InvarianceOptions& options) {
  auto eval = [&](std::span<const std::uint64_t> x) { return oracle.evaluate(x, options.prime); };
  const std::string label = "p_" + std::to_string(oracle.degree()) + " over " +
                            oracle.frame().root_system().invariant_weight_spec();
  auto report = run_invariance(label, eval, oracle.degree(), oracle.frame(), options);
  report.parameters["representative"] = kInvariantRepresentative;
  return report;
}

VerificationReport invariance_check(const Polynomial& f, const WeightFrame& frame, const InvarianceOptions& options) {
  if (!same_ring(f.ring(), frame.ring())) throw Error("polynomial is not in the frame ring");
  auto eval = [&](std::span<const std::uint64_t> x) { return evaluate_mod_p(f, x, options.prime); };
  return run_invariance(render(f), eval, f.degree().value_or(0), frame, options);
}

std::vector<int> chevalley_degrees(const RootSystem& rs) { return rs.chevalley_degrees(); }

std::size_t jacobian_rank(const std::vector<Polynomial>& polys, Rng& rng) {
  if (polys.empty()) return 0;
  const Ring& ring = polys.front().ring();
  const std::size_t n = ring->size();
  std::vector<Rational> point(n);
  for (auto& x : point) {
    x = Rational(static_cast<long>(rng.between(-1000, 1000)), static_cast<unsigned long>(1 + rng.below(50)));
    x.canonicalize();
  }
  std::vector<std::vector<Rational>> m;
  for (const auto& f : polys) {
    std::vector<Rational> row;
    for (std::size_t k = 0; k < n; ++k) row.push_back(evaluate(partial_derivative(f, k), point));
    m.push_back(std::move(row));
  }
  std::size_t rank = 0;
  for (std::size_t c = 0; c < n && rank < m.size(); ++c) {
    std::size_t pivot = rank;
    while (pivot < m.size() && m[pivot][c] == 0) ++pivot;
    if (pivot == m.size()) continue;
    std::swap(m[pivot], m[rank]);
    for (std::size_t r = rank + 1; r < m.size(); ++r) {
      if (m[r][c] == 0) continue;
      Rational f = m[r][c] / m[rank][c];
      for (std::size_t k = c; k < n; ++k) m[r][k] -= f * m[rank][k];
    }
    ++rank;
  }
  return rank;
}

}  // namespace flagcoh
