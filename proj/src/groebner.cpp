#include "flagcoh/groebner.hpp"

#include <algorithm>
#include <functional>
#include <limits>

namespace flagcoh {

namespace {

bool is_field(const Ring& ring) { return ring->coefficients().is_field(); }

// Index of a polynomial whose leading monomial divides m, or -1.
long find_divisor(const std::vector<const Polynomial*>& divisors, const Monomial& m) {
  for (std::size_t k = 0; k < divisors.size(); ++k) {
    const Monomial& lm = divisors[k]->leading_term().monomial;
    if (lm.degree() <= m.degree() && lm.divides(m)) return static_cast<long>(k);
  }
  return -1;
}

// Full reduction. With fraction_free set the divisors have integer
// coefficients and the result is only determined up to a nonzero scalar.
Polynomial reduce_by(Polynomial f, const std::vector<const Polynomial*>& divisors, bool fraction_free) {
  std::size_t pos = 0;
  std::size_t steps = 0;
  while (pos < f.size()) {
    const Term& t = f.terms()[pos];
    long k = find_divisor(divisors, t.monomial);
    if (k < 0) {
      ++pos;
      continue;
    }
    const Polynomial& g = *divisors[static_cast<std::size_t>(k)];
    const Term& lt = g.leading_term();
    const Monomial q = t.monomial.quotient(lt.monomial);
    if (fraction_free) {
      const Integer a = t.coeff.get_num();
      const Integer d = lt.coeff.get_num();
      Integer gcd;
      mpz_gcd(gcd.get_mpz_t(), a.get_mpz_t(), d.get_mpz_t());
      const Integer scale = d / gcd;
      if (scale != 1) f = f.scaled(Rational(scale));
      f = f.add_multiple(Rational(-a / gcd), q, g);
      if (++steps % 16 == 0) f = f.primitive();
    } else {
      f = f.add_multiple(-t.coeff / lt.coeff, q, g);
    }
  }
  return f;
}

Polynomial normalize_element(const Polynomial& f, bool fraction_free) {
  return fraction_free ? f.primitive() : f.monic();
}

struct Pair {
  std::size_t i;
  std::size_t j;
  Monomial lcm;
};

bool pair_before(const Pair& a, const Pair& b) {
  if (a.lcm.degree() != b.lcm.degree()) return a.lcm.degree() < b.lcm.degree();
  int c = compare(a.lcm, b.lcm);
  if (c != 0) return c < 0;
  if (a.j != b.j) return a.j < b.j;
  return a.i < b.i;
}

class Engine {
 public:
  Engine(Ring ring, std::optional<std::uint32_t> cap)
      : ring_(std::move(ring)), cap_(cap), fraction_free_(ring_->coefficients().is_exact()) {}

  void run(const std::vector<Polynomial>& inputs) {
    std::vector<const Polynomial*> pending;
    for (const auto& p : inputs) {
      if (!p.is_zero()) pending.push_back(&p);
    }
    std::stable_sort(pending.begin(), pending.end(),
                     [](const Polynomial* a, const Polynomial* b) { return *a->degree() < *b->degree(); });
    std::size_t next_input = 0;
    while (next_input < pending.size() || !pairs_.empty()) {
      std::uint32_t d = std::numeric_limits<std::uint32_t>::max();
      if (next_input < pending.size()) d = *pending[next_input]->degree();
      for (const auto& p : pairs_) d = std::min(d, p.lcm.degree());
      if (cap_ && d > *cap_) {
        truncated_ = true;
        break;
      }
      std::vector<Pair> batch;
      std::vector<Pair> rest;
      for (auto& p : pairs_) (p.lcm.degree() == d ? batch : rest).push_back(p);
      pairs_ = std::move(rest);
      std::sort(batch.begin(), batch.end(), pair_before);
      for (const auto& p : batch) {
        ++stats_.pairs_reduced;
        add(s_polynomial_internal(p));
      }
      while (next_input < pending.size() && *pending[next_input]->degree() == d) {
        add(normalize_element(*pending[next_input], fraction_free_));
        ++next_input;
      }
    }
  }

  std::vector<Polynomial> reduced_basis() const {
    std::vector<Polynomial> minimal;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) minimal.push_back(polys_[k]);
    }
    std::vector<Polynomial> out;
    for (std::size_t k = 0; k < minimal.size(); ++k) {
      std::vector<const Polynomial*> others;
      for (std::size_t l = 0; l < minimal.size(); ++l) {
        if (l != k) others.push_back(&minimal[l]);
      }
      // Reduce the tail only; the leading term is not divisible by the others.
      Polynomial g = minimal[k];
      const Term lead = g.leading_term();
      Polynomial tail = g - Polynomial::monomial(ring_, lead.monomial, lead.coeff);
      Polynomial monic_lead = Polynomial::monomial(ring_, lead.monomial, 1);
      std::vector<Polynomial> monic_others;
      for (const auto* o : others) monic_others.push_back(o->monic());
      std::vector<const Polynomial*> ptrs;
      for (const auto& o : monic_others) ptrs.push_back(&o);
      Polynomial reduced_tail = reduce_by(tail.scaled(1 / lead.coeff), ptrs, false);
      out.push_back(monic_lead + reduced_tail);
    }
    std::sort(out.begin(), out.end(), [](const Polynomial& a, const Polynomial& b) {
      return compare(a.leading_term().monomial, b.leading_term().monomial) < 0;
    });
    return out;
  }

  bool truncated() const { return truncated_; }
  const GroebnerStats& stats() const { return stats_; }

 private:
  Polynomial s_polynomial_internal(const Pair& p) const {
    const Polynomial& f = polys_[p.i];
    const Polynomial& g = polys_[p.j];
    const Term& a = f.leading_term();
    const Term& b = g.leading_term();
    const Monomial mf = p.lcm.quotient(a.monomial);
    const Monomial mg = p.lcm.quotient(b.monomial);
    return f.times_term(mf, b.coeff).add_multiple(-a.coeff, mg, g);
  }

  void add(const Polynomial& candidate) {
    std::vector<const Polynomial*> divisors;
    for (std::size_t k = 0; k < polys_.size(); ++k) {
      if (active_[k]) divisors.push_back(&polys_[k]);
    }
    Polynomial h = reduce_by(candidate, divisors, fraction_free_);
    if (h.is_zero()) {
      ++stats_.zero_reductions;
      return;
    }
    update(normalize_element(h, fraction_free_));
  }

  // Gebauer-Moeller installation of a new basis element.
  void update(Polynomial h) {
    const std::size_t hi = polys_.size();
    const Monomial lh = h.leading_term().monomial;
    polys_.push_back(std::move(h));
    active_.push_back(true);

    std::vector<Pair> c;
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g]) c.push_back(Pair{g, hi, ring_->lcm(lh, polys_[g].leading_term().monomial)});
    }
    stats_.pairs_considered += c.size();
    std::vector<Pair> d;
    for (std::size_t k = 0; k < c.size(); ++k) {
      const Monomial lg = polys_[c[k].i].leading_term().monomial;
      bool keep = lh.coprime(lg);
      if (!keep) {
        keep = true;
        for (std::size_t l = k + 1; l < c.size() && keep; ++l) {
          if (c[l].lcm.divides(c[k].lcm)) keep = false;
        }
        for (std::size_t l = 0; l < d.size() && keep; ++l) {
          if (d[l].lcm.divides(c[k].lcm)) keep = false;
        }
      }
      if (keep) d.push_back(c[k]);
    }
    std::vector<Pair> e;
    for (const auto& p : d) {
      if (!lh.coprime(polys_[p.i].leading_term().monomial)) e.push_back(p);
    }
    std::vector<Pair> kept;
    for (const auto& p : pairs_) {
      const Monomial lcm_ih = ring_->lcm(polys_[p.i].leading_term().monomial, lh);
      const Monomial lcm_jh = ring_->lcm(polys_[p.j].leading_term().monomial, lh);
      const bool chain = lh.divides(p.lcm) && !(lcm_ih == p.lcm) && !(lcm_jh == p.lcm);
      if (!chain) kept.push_back(p);
    }
    kept.insert(kept.end(), e.begin(), e.end());
    pairs_ = std::move(kept);
    for (std::size_t g = 0; g < hi; ++g) {
      if (active_[g] && lh.divides(polys_[g].leading_term().monomial)) active_[g] = false;
    }
  }

  Ring ring_;
  std::optional<std::uint32_t> cap_;
  bool fraction_free_;
  std::vector<Polynomial> polys_;
  std::vector<bool> active_;
  std::vector<Pair> pairs_;
  bool truncated_ = false;
  GroebnerStats stats_;
};

}  // namespace

GroebnerBasis::GroebnerBasis(Ring ring, std::vector<Polynomial> generators, bool truncated,
                             std::optional<std::uint32_t> degree_cap, GroebnerStats stats)
    : ring_(std::move(ring)),
      generators_(std::move(generators)),
      truncated_(truncated),
      degree_cap_(degree_cap),
      stats_(stats) {}

std::vector<Monomial> GroebnerBasis::leading_monomials() const {
  std::vector<Monomial> out;
  for (const auto& g : generators_) out.push_back(g.leading_term().monomial);
  return out;
}

Polynomial GroebnerBasis::normal_form(const Polynomial& p) const {
  if (!same_ring(p.ring(), ring_)) throw Error("normal_form: ring mismatch");
  std::vector<const Polynomial*> divisors;
  for (const auto& g : generators_) divisors.push_back(&g);
  return reduce_by(p, divisors, false);
}

bool GroebnerBasis::is_standard(const Monomial& m) const {
  for (const auto& g : generators_) {
    if (g.leading_term().monomial.divides(m)) return false;
  }
  return true;
}

GroebnerBasis buchberger(const std::vector<Polynomial>& relations, std::optional<std::uint32_t> degree_cap) {
  if (relations.empty()) throw Error("buchberger: no relations");
  const Ring& ring = relations.front().ring();
  if (!is_field(ring)) throw Error("buchberger: coefficients must form a field, got " + ring->coefficients().name());
  for (const auto& r : relations) {
    if (!same_ring(r.ring(), ring)) throw Error("buchberger: relations live in different rings");
    if (!r.is_homogeneous()) throw Error("buchberger: relation is not homogeneous: " + render(r));
  }
  Engine engine(ring, degree_cap);
  engine.run(relations);
  return GroebnerBasis(ring, engine.reduced_basis(), engine.truncated(), degree_cap, engine.stats());
}

Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors) {
  if (!is_field(p.ring())) throw Error("reduce: coefficients must form a field");
  std::vector<const Polynomial*> ptrs;
  for (const auto& d : divisors) {
    if (!same_ring(d.ring(), p.ring())) throw Error("reduce: ring mismatch");
    if (!d.is_zero()) ptrs.push_back(&d);
  }
  return reduce_by(p, ptrs, false);
}

Polynomial s_polynomial(const Polynomial& f, const Polynomial& g) {
  if (!same_ring(f.ring(), g.ring())) throw Error("s_polynomial: ring mismatch");
  const Term& a = f.leading_term();
  const Term& b = g.leading_term();
  const Monomial l = f.ring()->lcm(a.monomial, b.monomial);
  return f.times_term(l.quotient(a.monomial), 1 / a.coeff) - g.times_term(l.quotient(b.monomial), 1 / b.coeff);
}

std::optional<std::size_t> HilbertData::top_degree() const {
  for (std::size_t d = graded_dimensions.size(); d-- > 0;) {
    if (graded_dimensions[d] != 0) return d;
  }
  return std::nullopt;
}

std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint32_t degree) {
  std::vector<Monomial> out;
  for (const auto& m : gb.ring()->monomials_of_degree(degree)) {
    if (gb.is_standard(m)) out.push_back(m);
  }
  return out;
}

HilbertData quotient_dimension(const GroebnerBasis& gb, std::optional<std::uint32_t> cutoff) {
  if (gb.truncated()) throw Error("quotient_dimension: Groebner basis is truncated");
  const Ring& ring = gb.ring();
  const std::size_t n = ring->size();
  // Pure powers bound the exponents of standard monomials.
  std::vector<std::uint32_t> bound(n, 0);
  for (const auto& m : gb.leading_monomials()) {
    std::size_t support = 0;
    std::size_t var = 0;
    for (std::size_t k = 0; k < n; ++k) {
      if (m.exponent(k) != 0) {
        ++support;
        var = k;
      }
    }
    if (support == 1 && (bound[var] == 0 || m.exponent(var) < bound[var])) bound[var] = m.exponent(var);
  }
  HilbertData h;
  h.is_finite = std::all_of(bound.begin(), bound.end(), [](std::uint32_t b) { return b > 0; });
  if (!h.is_finite && !cutoff) throw Error("quotient_dimension: quotient is infinite; a cutoff is required");

  std::uint32_t limit = std::numeric_limits<std::uint32_t>::max();
  if (h.is_finite) {
    limit = 0;
    for (std::size_t k = 0; k < n; ++k) limit += (bound[k] - 1) * ring->weight(k);
  }
  if (cutoff) limit = std::min(limit, *cutoff);
  h.graded_dimensions.assign(limit + 1, 0);

  std::vector<std::uint32_t> exps(n, 0);
  std::function<void(std::size_t, std::uint32_t)> rec = [&](std::size_t k, std::uint32_t deg) {
    if (k == n) {
      if (gb.is_standard(ring->monomial(exps))) ++h.graded_dimensions[deg];
      return;
    }
    for (std::uint32_t e = 0;; ++e) {
      if (bound[k] != 0 && e >= bound[k]) break;
      const std::uint32_t d = deg + e * ring->weight(k);
      if (d > limit || e > kMaxExponent) break;
      exps[k] = e;
      rec(k + 1, d);
    }
    exps[k] = 0;
  };
  rec(0, 0);
  if (h.is_finite) {
    while (!h.graded_dimensions.empty() && h.graded_dimensions.back() == 0) h.graded_dimensions.pop_back();
  }
  for (auto v : h.graded_dimensions) h.total_dimension += v;
  return h;
}

}  // namespace flagcoh
