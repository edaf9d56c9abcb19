#include "flagcoh/polyring.hpp"

#include <algorithm>
#include <cctype>
#include <unordered_map>

namespace flagcoh {

namespace {

constexpr std::uint64_t kHighBits = 0x8080808080808080ULL;

std::uint64_t mix(std::uint64_t x) {
  x += 0x9e3779b97f4a7c15ULL;
  x = (x ^ (x >> 30U)) * 0xbf58476d1ce4e5b9ULL;
  x = (x ^ (x >> 27U)) * 0x94d049bb133111ebULL;
  return x ^ (x >> 31U);
}

bool is_ident_start(char c) { return std::isalpha(static_cast<unsigned char>(c)) != 0 || c == '_'; }
bool is_ident_char(char c) { return std::isalnum(static_cast<unsigned char>(c)) != 0 || c == '_'; }

}  // namespace

// ---------------------------------------------------------------- Monomial

std::uint32_t Monomial::total_degree() const {
  std::uint32_t sum = 0;
  for (std::size_t i = 0; i < kMaxVariables; ++i) sum += exponent(i);
  return sum;
}

bool Monomial::divides(const Monomial& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t a = words_[w];
    std::uint64_t b = other.words_[w];
    if (a == 0) continue;
    for (unsigned shift = 0; shift < 64; shift += 8) {
      if (((a >> shift) & 0xFFU) > ((b >> shift) & 0xFFU)) return false;
    }
  }
  return true;
}

bool Monomial::coprime(const Monomial& other) const {
  for (std::size_t w = 0; w < words_.size(); ++w) {
    std::uint64_t a = words_[w];
    std::uint64_t b = other.words_[w];
    if (a == 0 || b == 0) continue;
    for (unsigned shift = 0; shift < 64; shift += 8) {
      if (((a >> shift) & 0xFFU) != 0 && ((b >> shift) & 0xFFU) != 0) return false;
    }
  }
  return true;
}

Monomial Monomial::quotient(const Monomial& divisor) const {
  Monomial out;
  for (std::size_t w = 0; w < words_.size(); ++w) out.words_[w] = words_[w] - divisor.words_[w];
  out.degree_ = degree_ - divisor.degree_;
  return out;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial out;
  for (std::size_t w = 0; w < a.words_.size(); ++w) {
    std::uint64_t x = a.words_[w];
    std::uint64_t y = b.words_[w];
    std::uint64_t s = ((x & ~kHighBits) + (y & ~kHighBits)) ^ ((x ^ y) & kHighBits);
    std::uint64_t carry = (x & y) | ((x | y) & ~s);
    if ((carry & kHighBits) != 0) throw Error("monomial exponent overflow (max 255)");
    out.words_[w] = s;
  }
  out.degree_ = a.degree_ + b.degree_;
  return out;
}

std::size_t Monomial::hash() const {
  std::uint64_t h = mix(words_[0]);
  h = mix(h ^ words_[1]);
  h = mix(h ^ words_[2]);
  h = mix(h ^ words_[3]);
  return static_cast<std::size_t>(h);
}

int compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = kMaxVariables; i-- > 0;) {
    std::uint32_t ea = a.exponent(i);
    std::uint32_t eb = b.exponent(i);
    if (ea != eb) return ea < eb ? 1 : -1;
  }
  return 0;
}

// ---------------------------------------------------------- RingDescriptor

Ring RingDescriptor::make(std::vector<Variable> variables, CoefficientRing coefficients) {
  if (variables.size() > kMaxVariables) {
    throw Error("too many variables: " + std::to_string(variables.size()));
  }
  auto ring = std::shared_ptr<RingDescriptor>(new RingDescriptor(std::move(variables), coefficients));
  for (std::size_t i = 0; i < ring->variables_.size(); ++i) {
    const auto& v = ring->variables_[i];
    if (v.name.empty() || !is_ident_start(v.name[0]) ||
        !std::all_of(v.name.begin(), v.name.end(), is_ident_char)) {
      throw Error("invalid variable name '" + v.name + "'");
    }
    if (v.q_degree == 0) throw Error("variable '" + v.name + "' must have positive q-degree");
    if (!ring->index_.emplace(v.name, i).second) {
      throw Error("duplicate variable name '" + v.name + "'");
    }
  }
  return ring;
}

std::optional<std::size_t> RingDescriptor::index_of(std::string_view name) const {
  auto it = index_.find(name);
  if (it == index_.end()) return std::nullopt;
  return it->second;
}

std::size_t RingDescriptor::require_index(std::string_view name) const {
  auto idx = index_of(name);
  if (!idx) throw Error("unknown variable '" + std::string(name) + "'");
  return *idx;
}

Monomial RingDescriptor::monomial(std::span<const std::uint32_t> exponents) const {
  if (exponents.size() > size()) throw Error("exponent vector longer than variable count");
  Monomial m;
  for (std::size_t i = 0; i < exponents.size(); ++i) {
    if (exponents[i] > kMaxExponent) throw Error("monomial exponent overflow (max 255)");
    m.words_[i / 8] |= static_cast<std::uint64_t>(exponents[i]) << (8 * (i % 8));
    m.degree_ += exponents[i] * weight(i);
  }
  return m;
}

Monomial RingDescriptor::variable_power(std::size_t i, std::uint32_t exponent) const {
  if (i >= size()) throw Error("variable index out of range");
  if (exponent > kMaxExponent) throw Error("monomial exponent overflow (max 255)");
  Monomial m;
  m.words_[i / 8] = static_cast<std::uint64_t>(exponent) << (8 * (i % 8));
  m.degree_ = exponent * weight(i);
  return m;
}

Monomial RingDescriptor::lcm(const Monomial& a, const Monomial& b) const {
  std::vector<std::uint32_t> e(size());
  for (std::size_t i = 0; i < size(); ++i) e[i] = std::max(a.exponent(i), b.exponent(i));
  return monomial(e);
}

std::vector<std::uint32_t> RingDescriptor::exponents(const Monomial& m) const {
  std::vector<std::uint32_t> e(size());
  for (std::size_t i = 0; i < size(); ++i) e[i] = m.exponent(i);
  return e;
}

std::vector<Monomial> RingDescriptor::monomials_of_degree(std::uint32_t degree) const {
  std::vector<Monomial> out;
  std::vector<std::uint32_t> e(size(), 0);
  // Depth-first over variables, filling the remaining degree.
  auto recurse = [&](auto&& self, std::size_t var, std::uint32_t remaining) -> void {
    if (var == size()) {
      if (remaining == 0) out.push_back(monomial(e));
      return;
    }
    std::uint32_t w = weight(var);
    for (std::uint32_t k = 0; k * w <= remaining; ++k) {
      e[var] = k;
      self(self, var + 1, remaining - k * w);
    }
    e[var] = 0;
  };
  recurse(recurse, 0, degree);
  std::sort(out.begin(), out.end(), MonomialDescending{});
  return out;
}

bool RingDescriptor::same_variables(const RingDescriptor& other) const {
  if (size() != other.size()) return false;
  for (std::size_t i = 0; i < size(); ++i) {
    if (variables_[i].name != other.variables_[i].name ||
        variables_[i].q_degree != other.variables_[i].q_degree) {
      return false;
    }
  }
  return true;
}

Ring RingDescriptor::with_coefficients(CoefficientRing coefficients) const {
  return make(variables_, coefficients);
}

bool operator==(const RingDescriptor& a, const RingDescriptor& b) {
  return a.coefficients_ == b.coefficients_ && a.same_variables(b);
}

bool same_ring(const Ring& a, const Ring& b) {
  if (a == b) return true;
  if (!a || !b) return false;
  return *a == *b;
}

namespace {

void require_same_ring(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring(), b.ring())) throw Error("ring mismatch");
}

}  // namespace

// ---------------------------------------------------------- TermAccumulator

struct TermAccumulator::Impl {
  std::unordered_map<Monomial, Rational, MonomialHash> terms;
  Rational scratch;
};

TermAccumulator::TermAccumulator(Ring ring) : ring_(std::move(ring)), impl_(std::make_unique<Impl>()) {}
TermAccumulator::~TermAccumulator() = default;

void TermAccumulator::reserve(std::size_t n) { impl_->terms.reserve(n); }

void TermAccumulator::add(const Monomial& m, const Rational& coeff) {
  auto [it, inserted] = impl_->terms.try_emplace(m, coeff);
  if (!inserted) it->second += coeff;
}

void TermAccumulator::add_product(const Monomial& m, const Rational& coeff, const Polynomial& p) {
  for (const auto& t : p.terms()) {
    mpq_mul(impl_->scratch.get_mpq_t(), coeff.get_mpq_t(), t.coeff.get_mpq_t());
    auto [it, inserted] = impl_->terms.try_emplace(m * t.monomial);
    if (inserted) {
      it->second = impl_->scratch;
    } else {
      mpq_add(it->second.get_mpq_t(), it->second.get_mpq_t(), impl_->scratch.get_mpq_t());
    }
  }
}

Polynomial TermAccumulator::finish() {
  std::vector<Term> terms;
  terms.reserve(impl_->terms.size());
  const auto& coeffs = ring_->coefficients();
  for (auto& [m, c] : impl_->terms) {
    coeffs.normalize(c);
    if (c != 0) terms.push_back(Term{m, std::move(c)});
  }
  impl_->terms.clear();
  std::sort(terms.begin(), terms.end(),
            [](const Term& a, const Term& b) { return compare(a.monomial, b.monomial) > 0; });
  return Polynomial(ring_, std::move(terms));
}

// --------------------------------------------------------------- Polynomial

Polynomial Polynomial::constant(Ring ring, Rational value) {
  ring->coefficients().normalize(value);
  if (value == 0) return Polynomial(std::move(ring));
  std::vector<Term> terms{Term{Monomial{}, std::move(value)}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::variable(Ring ring, std::string_view name) {
  std::size_t idx = ring->require_index(name);
  return variable(std::move(ring), idx);
}

Polynomial Polynomial::variable(Ring ring, std::size_t index) {
  Monomial m = ring->variable_power(index, 1);
  return monomial(std::move(ring), m, 1);
}

Polynomial Polynomial::monomial(Ring ring, const Monomial& m, Rational coeff) {
  ring->coefficients().normalize(coeff);
  if (coeff == 0) return Polynomial(std::move(ring));
  std::vector<Term> terms{Term{m, std::move(coeff)}};
  return Polynomial(std::move(ring), std::move(terms));
}

Polynomial Polynomial::from_terms(Ring ring, std::vector<Term> terms) {
  TermAccumulator acc(ring);
  acc.reserve(terms.size());
  for (auto& t : terms) acc.add(t.monomial, t.coeff);
  return acc.finish();
}

std::optional<std::uint32_t> Polynomial::degree() const {
  if (terms_.empty()) return std::nullopt;
  return terms_.front().monomial.degree();
}

bool Polynomial::is_homogeneous() const {
  if (terms_.empty()) return true;
  return terms_.front().monomial.degree() == terms_.back().monomial.degree();
}

bool Polynomial::is_constant() const {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

const Term& Polynomial::leading_term() const {
  if (terms_.empty()) throw Error("leading term of the zero polynomial");
  return terms_.front();
}

Rational Polynomial::coefficient(const Monomial& m) const {
  auto it = std::lower_bound(terms_.begin(), terms_.end(), m,
                             [](const Term& t, const Monomial& key) { return compare(t.monomial, key) > 0; });
  if (it != terms_.end() && it->monomial == m) return it->coeff;
  return 0;
}

Rational Polynomial::coefficient_of_variable(std::string_view name) const {
  return coefficient(ring_->variable_power(ring_->require_index(name), 1));
}

Polynomial Polynomial::operator-() const {
  std::vector<Term> terms = terms_;
  const auto& coeffs = ring_->coefficients();
  for (auto& t : terms) {
    t.coeff = -t.coeff;
    coeffs.normalize(t.coeff);
  }
  return Polynomial(ring_, std::move(terms));
}

Polynomial Polynomial::add_multiple(const Rational& factor, const Monomial& m, const Polynomial& other) const {
  require_same_ring(*this, other);
  if (factor == 0 || other.is_zero()) return *this;
  const auto& coeffs = ring_->coefficients();
  std::vector<Term> out;
  out.reserve(terms_.size() + other.terms_.size());
  auto a = terms_.begin();
  auto b = other.terms_.begin();
  Rational c;
  while (a != terms_.end() || b != other.terms_.end()) {
    if (b == other.terms_.end()) {
      out.push_back(*a++);
      continue;
    }
    Monomial mb = m * b->monomial;
    int cmp = a == terms_.end() ? -1 : compare(a->monomial, mb);
    if (cmp > 0) {
      out.push_back(*a++);
    } else if (cmp < 0) {
      c = factor * b->coeff;
      coeffs.normalize(c);
      if (c != 0) out.push_back(Term{mb, c});
      ++b;
    } else {
      c = a->coeff + factor * b->coeff;
      coeffs.normalize(c);
      if (c != 0) out.push_back(Term{mb, c});
      ++a;
      ++b;
    }
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial& Polynomial::operator+=(const Polynomial& other) {
  if (!ring_) {
    *this = other;
    return *this;
  }
  *this = add_multiple(1, Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator-=(const Polynomial& other) {
  if (!ring_) {
    *this = -other;
    return *this;
  }
  *this = add_multiple(-1, Monomial{}, other);
  return *this;
}

Polynomial& Polynomial::operator*=(const Polynomial& other) {
  *this = *this * other;
  return *this;
}

Polynomial Polynomial::scaled(const Rational& factor) const {
  return times_term(Monomial{}, factor);
}

Polynomial Polynomial::times_term(const Monomial& m, const Rational& coeff) const {
  const auto& coeffs = ring_->coefficients();
  Rational c = coeff;
  coeffs.normalize(c);
  if (c == 0) return Polynomial(ring_);
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational v = t.coeff * c;
    coeffs.normalize(v);
    if (v != 0) out.push_back(Term{m * t.monomial, std::move(v)});
  }
  return Polynomial(ring_, std::move(out));
}

Polynomial Polynomial::with_ring(Ring ring) const {
  if (!ring_->same_variables(*ring)) throw Error("with_ring: variable lists differ");
  const auto& coeffs = ring->coefficients();
  std::vector<Term> out;
  out.reserve(terms_.size());
  for (const auto& t : terms_) {
    Rational c = t.coeff;
    coeffs.normalize(c);
    if (c != 0) out.push_back(Term{t.monomial, std::move(c)});
  }
  return Polynomial(std::move(ring), std::move(out));
}

Rational Polynomial::content() const {
  if (!ring_ || !ring_->coefficients().is_exact()) throw Error("content requires exact coefficients");
  Integer num_gcd = 0;
  Integer den_lcm = 1;
  for (const auto& t : terms_) {
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coeff.get_num_mpz_t());
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coeff.get_den_mpz_t());
  }
  if (num_gcd == 0) return 0;
  Rational c(num_gcd, den_lcm);
  c.canonicalize();
  return c;
}

Polynomial Polynomial::primitive() const {
  if (is_zero()) return *this;
  Rational c = content();
  if (leading_term().coeff < 0) c = -c;
  Polynomial q = with_ring(ring_->with_coefficients(CoefficientRing::rationals())).scaled(1 / c);
  return q.with_ring(ring_);
}

Polynomial Polynomial::monic() const {
  if (is_zero()) return *this;
  if (!ring_->coefficients().is_field()) throw Error("monic requires field coefficients");
  return scaled(ring_->coefficients().inverse(leading_term().coeff));
}

Polynomial Polynomial::component(std::uint32_t degree) const {
  std::vector<Term> out;
  for (const auto& t : terms_) {
    if (t.monomial.degree() == degree) out.push_back(t);
  }
  return Polynomial(ring_, std::move(out));
}

std::string Polynomial::to_string() const { return render(*this); }

bool operator==(const Polynomial& a, const Polynomial& b) {
  if (!same_ring(a.ring_, b.ring_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial) || a.terms_[i].coeff != b.terms_[i].coeff) {
      return false;
    }
  }
  return true;
}

Polynomial operator+(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out += b;
  return out;
}

Polynomial operator-(const Polynomial& a, const Polynomial& b) {
  Polynomial out = a;
  out -= b;
  return out;
}

Polynomial operator*(const Polynomial& a, const Polynomial& b) {
  require_same_ring(a, b);
  if (a.is_zero() || b.is_zero()) return Polynomial(a.ring());
  if (a.size() == 1) return b.times_term(a.terms()[0].monomial, a.terms()[0].coeff);
  if (b.size() == 1) return a.times_term(b.terms()[0].monomial, b.terms()[0].coeff);
  const Polynomial& outer = a.size() <= b.size() ? a : b;
  const Polynomial& inner = a.size() <= b.size() ? b : a;
  TermAccumulator acc(a.ring());
  acc.reserve(std::min<std::size_t>(outer.size() * inner.size(), 1U << 22U));
  for (const auto& t : outer.terms()) acc.add_product(t.monomial, t.coeff, inner);
  return acc.finish();
}

Polynomial pow(const Polynomial& base, std::uint32_t exponent) {
  Polynomial result = Polynomial::constant(base.ring(), 1);
  Polynomial b = base;
  while (exponent > 0) {
    if (exponent & 1U) result = result * b;
    exponent >>= 1U;
    if (exponent > 0) b = b * b;
  }
  return result;
}

// ---------------------------------------------------------- SubstitutionMap

SubstitutionMap::SubstitutionMap(Ring source, Ring target)
    : source_(std::move(source)), target_(std::move(target)), images_(source_->size()) {}

void SubstitutionMap::set(std::string_view variable, Polynomial image) {
  std::size_t idx = source_->require_index(variable);
  if (!same_ring(image.ring(), target_)) {
    throw Error("image of '" + std::string(variable) + "' does not live in the target ring");
  }
  if (!image.is_zero() && (!image.is_homogeneous() || *image.degree() != source_->weight(idx))) {
    throw Error("image of '" + std::string(variable) + "' is not homogeneous of q-degree " +
                std::to_string(source_->weight(idx)));
  }
  images_[idx] = std::move(image);
}

void SubstitutionMap::set_identity(std::string_view variable) {
  set(variable, Polynomial::variable(target_, variable));
}

bool SubstitutionMap::has(std::string_view variable) const {
  auto idx = source_->index_of(variable);
  return idx && images_[*idx].has_value();
}

const Polynomial& SubstitutionMap::image(std::string_view variable) const {
  std::size_t idx = source_->require_index(variable);
  if (!images_[idx]) throw Error("variable '" + std::string(variable) + "' is unmapped");
  return *images_[idx];
}

Polynomial SubstitutionMap::apply(const Polynomial& p) const {
  if (!same_ring(p.ring(), source_)) throw Error("substitute: polynomial is not in the source ring");
  const std::size_t n = source_->size();
  // Variables mapped to a bare target variable are renamed; the others are
  // expanded through cached powers.
  std::vector<std::optional<std::size_t>> rename(n);
  for (std::size_t i = 0; i < n; ++i) {
    if (!images_[i] || images_[i]->size() != 1) continue;
    const Term& t = images_[i]->terms()[0];
    if (t.coeff != 1 || t.monomial.total_degree() != 1) continue;
    for (std::size_t j = 0; j < target_->size(); ++j) {
      if (t.monomial.exponent(j) == 1) rename[i] = j;
    }
  }
  std::vector<std::vector<Polynomial>> powers(n);
  auto power_of = [&](std::size_t var, std::uint32_t e) -> const Polynomial& {
    auto& cache = powers[var];
    if (cache.empty()) {
      cache.push_back(Polynomial::constant(target_, 1));
      cache.push_back(*images_[var]);
    }
    while (cache.size() <= e) cache.push_back(cache.back() * *images_[var]);
    return cache[e];
  };
  std::unordered_map<Monomial, Polynomial, MonomialHash> expanded;
  TermAccumulator acc(target_);
  std::vector<std::uint32_t> renamed(target_->size());
  std::vector<std::uint32_t> rest(n);
  for (const auto& term : p.terms()) {
    std::fill(renamed.begin(), renamed.end(), 0U);
    std::fill(rest.begin(), rest.end(), 0U);
    bool has_rest = false;
    for (std::size_t i = 0; i < n; ++i) {
      std::uint32_t e = term.monomial.exponent(i);
      if (e == 0) continue;
      if (!images_[i]) throw Error("substitute: variable '" + source_->name(i) + "' is unmapped");
      if (rename[i]) {
        renamed[*rename[i]] += e;
      } else {
        rest[i] = e;
        has_rest = true;
      }
    }
    Monomial shift = target_->monomial(renamed);
    if (!has_rest) {
      acc.add(shift, term.coeff);
      continue;
    }
    Monomial key = source_->monomial(rest);
    auto it = expanded.find(key);
    if (it == expanded.end()) {
      Polynomial img = Polynomial::constant(target_, 1);
      for (std::size_t i = 0; i < n; ++i) {
        if (rest[i] > 0) img = img * power_of(i, rest[i]);
      }
      it = expanded.emplace(key, std::move(img)).first;
    }
    acc.add_product(shift, term.coeff, it->second);
  }
  return acc.finish();
}

Polynomial substitute(const Polynomial& p, const SubstitutionMap& map) { return map.apply(p); }

// ---------------------------------------------------------------- Evaluation

std::uint64_t evaluate_mod_p(const Polynomial& p, std::span<const std::uint64_t> point, std::uint64_t prime) {
  const auto& ring = *p.ring();
  if (!ring.coefficients().is_exact() && ring.coefficients().modulus() != prime) {
    throw Error("evaluate_mod_p: coefficient field does not match the evaluation prime");
  }
  if (point.size() != ring.size()) throw Error("evaluate_mod_p: point has wrong dimension");
  std::vector<std::vector<std::uint64_t>> powers(ring.size());
  std::uint64_t sum = 0;
  for (const auto& t : p.terms()) {
    std::uint64_t v = modp::reduce(t.coeff, prime);
    for (std::size_t i = 0; i < ring.size(); ++i) {
      std::uint32_t e = t.monomial.exponent(i);
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.push_back(1);
      while (pw.size() <= e) pw.push_back(modp::mul(pw.back(), point[i] % prime, prime));
      v = modp::mul(v, pw[e], prime);
    }
    sum = modp::add(sum, v, prime);
  }
  return sum;
}

std::uint64_t evaluate_mod_p(const Polynomial& p, const std::map<std::string, std::uint64_t>& point,
                             std::uint64_t prime) {
  const auto& ring = *p.ring();
  std::vector<bool> used(ring.size(), false);
  for (const auto& t : p.terms()) {
    for (std::size_t i = 0; i < ring.size(); ++i) {
      if (t.monomial.exponent(i) > 0) used[i] = true;
    }
  }
  std::vector<std::uint64_t> coords(ring.size(), 0);
  for (std::size_t i = 0; i < ring.size(); ++i) {
    auto it = point.find(ring.name(i));
    if (it != point.end()) {
      coords[i] = it->second % prime;
    } else if (used[i]) {
      throw Error("evaluate_mod_p: missing coordinate for '" + ring.name(i) + "'");
    }
  }
  return evaluate_mod_p(p, coords, prime);
}

Rational evaluate(const Polynomial& p, std::span<const Rational> point) {
  const auto& ring = *p.ring();
  if (point.size() != ring.size()) throw Error("evaluate: point has wrong dimension");
  std::vector<std::vector<Rational>> powers(ring.size());
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational v = t.coeff;
    for (std::size_t i = 0; i < ring.size(); ++i) {
      std::uint32_t e = t.monomial.exponent(i);
      if (e == 0) continue;
      auto& pw = powers[i];
      if (pw.empty()) pw.emplace_back(1);
      while (pw.size() <= e) pw.push_back(pw.back() * point[i]);
      v *= pw[e];
    }
    sum += v;
  }
  ring.coefficients().normalize(sum);
  return sum;
}

// ------------------------------------------------------------------ Division

Polynomial exact_divide(const Polynomial& num, const Polynomial& den) {
  require_same_ring(num, den);
  if (den.is_zero()) throw DivisionError("division by the zero polynomial");
  if (num.is_zero()) return Polynomial(num.ring());
  const Ring& ring = num.ring();
  const auto& coeffs = ring->coefficients();
  const Term& lead = den.leading_term();
  std::map<Monomial, Rational, MonomialDescending> rem;
  for (const auto& t : num.terms()) rem.emplace(t.monomial, t.coeff);
  std::vector<Term> quotient;
  Rational c;
  while (!rem.empty()) {
    auto top = rem.begin();
    if (!lead.monomial.divides(top->first)) {
      throw DivisionError("polynomial is not divisible: leftover term at q-degree " +
                          std::to_string(top->first.degree()));
    }
    Monomial m = top->first.quotient(lead.monomial);
    switch (coeffs.kind()) {
      case CoeffKind::kIntegers:
        if (!mpz_divisible_p(top->second.get_num_mpz_t(), lead.coeff.get_num_mpz_t())) {
          throw DivisionError("polynomial is not divisible over Z");
        }
        c = top->second / lead.coeff;
        break;
      case CoeffKind::kRationals:
        c = top->second / lead.coeff;
        break;
      case CoeffKind::kPrimeField:
        c = top->second * coeffs.inverse(lead.coeff);
        coeffs.normalize(c);
        break;
    }
    rem.erase(top);
    for (std::size_t k = 1; k < den.size(); ++k) {
      const Term& t = den.terms()[k];
      Monomial mt = m * t.monomial;
      Rational delta = c * t.coeff;
      auto [it, inserted] = rem.try_emplace(mt);
      it->second -= delta;
      coeffs.normalize(it->second);
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{m, c});
  }
  // Quotient terms were produced in descending order.
  return Polynomial::from_terms(ring, std::move(quotient));
}

Polynomial partial_derivative(const Polynomial& p, std::size_t variable) {
  const Ring& ring = p.ring();
  if (variable >= ring->size()) throw Error("partial_derivative: variable out of range");
  Monomial v = ring->variable_power(variable, 1);
  TermAccumulator acc(ring);
  for (const auto& t : p.terms()) {
    std::uint32_t e = t.monomial.exponent(variable);
    if (e == 0) continue;
    acc.add(t.monomial.quotient(v), t.coeff * e);
  }
  return acc.finish();
}

// ---------------------------------------------------------------- Parsing

ParseError::ParseError(const std::string& message, std::size_t offset)
    : Error(message + " at offset " + std::to_string(offset)), offset_(offset) {}

namespace {

class Lexer {
 public:
  explicit Lexer(std::string_view text) : text_(text) {}

  void skip_ws() {
    while (pos_ < text_.size() && std::isspace(static_cast<unsigned char>(text_[pos_])) != 0) ++pos_;
  }
  bool at_end() {
    skip_ws();
    return pos_ >= text_.size();
  }
  char peek() {
    skip_ws();
    return pos_ < text_.size() ? text_[pos_] : '\0';
  }
  bool accept(char c) {
    if (peek() == c) {
      ++pos_;
      return true;
    }
    return false;
  }
  std::size_t pos() {
    skip_ws();
    return pos_;
  }
  bool peek_digit() { return std::isdigit(static_cast<unsigned char>(peek())) != 0; }
  bool peek_ident() { return is_ident_start(peek()); }

  Integer nat() {
    std::size_t start = pos();
    std::size_t end = start;
    while (end < text_.size() && std::isdigit(static_cast<unsigned char>(text_[end])) != 0) ++end;
    if (end == start) throw ParseError("expected a natural number", start);
    pos_ = end;
    return Integer(std::string(text_.substr(start, end - start)));
  }

  std::uint32_t exponent() {
    std::size_t start = pos();
    Integer e = nat();
    if (e > kMaxExponent) throw ParseError("exponent too large", start);
    return static_cast<std::uint32_t>(e.get_ui());
  }

  std::string_view ident() {
    std::size_t start = pos();
    if (!peek_ident()) throw ParseError("expected a variable name", start);
    std::size_t end = start;
    while (end < text_.size() && is_ident_char(text_[end])) ++end;
    pos_ = end;
    return text_.substr(start, end - start);
  }

 private:
  std::string_view text_;
  std::size_t pos_ = 0;
};

class StrictParser {
 public:
  StrictParser(std::string_view text, const Ring& ring) : lex_(text), ring_(ring), exps_(ring->size(), 0) {}

  Polynomial run() {
    TermAccumulator acc(ring_);
    bool negate = false;
    if (lex_.peek() == '-') {
      std::size_t save = lex_.pos();
      lex_.accept('-');
      if (lex_.peek_digit()) {
        // Leading '-' belongs to the rational of the first term.
        negate = true;
      } else if (lex_.peek_ident()) {
        negate = true;
      } else {
        throw ParseError("expected a term", save + 1);
      }
    }
    term(acc, negate);
    while (!lex_.at_end()) {
      std::size_t here = lex_.pos();
      bool minus;
      if (lex_.accept('+')) {
        minus = false;
      } else if (lex_.accept('-')) {
        minus = true;
      } else {
        throw ParseError("expected '+' or '-'", here);
      }
      term(acc, minus);
    }
    return acc.finish();
  }

 private:
  void term(TermAccumulator& acc, bool negate) {
    std::size_t start = lex_.pos();
    Rational coeff = 1;
    std::fill(exps_.begin(), exps_.end(), 0U);
    bool need_factor = true;
    if (lex_.peek() == '-' || lex_.peek_digit()) {
      bool minus = lex_.accept('-');
      if (!lex_.peek_digit()) throw ParseError("expected a natural number", lex_.pos());
      Integer num = lex_.nat();
      Integer den = 1;
      if (lex_.accept('/')) {
        std::size_t at = lex_.pos();
        den = lex_.nat();
        if (den == 0) throw ParseError("zero denominator", at);
      }
      coeff = Rational(num, den);
      coeff.canonicalize();
      if (minus) coeff = -coeff;
      need_factor = false;
    } else if (!lex_.peek_ident()) {
      throw ParseError("expected a term", start);
    }
    if (need_factor) factor();
    while (lex_.accept('*')) factor();
    if (negate) coeff = -coeff;
    acc.add(ring_->monomial(exps_), coeff);
  }

  void factor() {
    std::size_t at = lex_.pos();
    std::string_view name = lex_.ident();
    auto idx = ring_->index_of(name);
    if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", at);
    std::uint32_t e = 1;
    if (lex_.accept('^')) e = lex_.exponent();
    exps_[*idx] += e;
    if (exps_[*idx] > kMaxExponent) throw ParseError("exponent too large", at);
  }

  Lexer lex_;
  const Ring& ring_;
  std::vector<std::uint32_t> exps_;
};

class ExpressionParser {
 public:
  ExpressionParser(std::string_view text, const Ring& ring) : lex_(text), ring_(ring) {}

  Polynomial run() {
    Polynomial p = expr();
    if (!lex_.at_end()) throw ParseError("unexpected input", lex_.pos());
    return p;
  }

 private:
  Polynomial expr() {
    Polynomial acc(ring_);
    bool minus = false;
    if (lex_.accept('-')) {
      minus = true;
    } else {
      lex_.accept('+');
    }
    Polynomial t = term();
    acc = minus ? -t : t;
    while (true) {
      if (lex_.accept('+')) {
        acc += term();
      } else if (lex_.accept('-')) {
        acc -= term();
      } else {
        break;
      }
    }
    return acc;
  }

  Polynomial term() {
    Polynomial p = unary();
    while (lex_.accept('*')) p = p * unary();
    return p;
  }

  Polynomial unary() {
    if (lex_.accept('-')) return -unary();
    Polynomial base = atom();
    if (lex_.accept('^')) base = pow(base, lex_.exponent());
    return base;
  }

  Polynomial atom() {
    std::size_t at = lex_.pos();
    if (lex_.accept('(')) {
      Polynomial inner = expr();
      if (!lex_.accept(')')) throw ParseError("expected ')'", lex_.pos());
      return inner;
    }
    if (lex_.peek_digit()) {
      Integer num = lex_.nat();
      Integer den = 1;
      if (lex_.accept('/')) den = lex_.nat();
      if (den == 0) throw ParseError("zero denominator", at);
      Rational c(num, den);
      c.canonicalize();
      return Polynomial::constant(ring_, c);
    }
    if (lex_.peek_ident()) {
      std::string_view name = lex_.ident();
      auto idx = ring_->index_of(name);
      if (!idx) throw ParseError("unknown variable '" + std::string(name) + "'", at);
      return Polynomial::variable(ring_, *idx);
    }
    throw ParseError("expected a term", at);
  }

  Lexer lex_;
  const Ring& ring_;
};

void append_coefficient(std::string& out, const Rational& magnitude) { out += magnitude.get_str(); }

}  // namespace

Polynomial parse(std::string_view text, const Ring& ring) { return StrictParser(text, ring).run(); }

Polynomial parse_expression(std::string_view text, const Ring& ring) {
  return ExpressionParser(text, ring).run();
}

std::string render(const Polynomial& p) {
  if (p.is_zero()) return "0";
  const auto& ring = *p.ring();
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    Rational magnitude = abs(t.coeff);
    bool negative = t.coeff < 0;
    if (first) {
      if (negative) out += '-';
    } else {
      out += negative ? " - " : " + ";
    }
    first = false;
    bool wrote = false;
    if (t.monomial.is_one() || magnitude != 1) {
      append_coefficient(out, magnitude);
      wrote = true;
    }
    for (std::size_t i = 0; i < ring.size(); ++i) {
      std::uint32_t e = t.monomial.exponent(i);
      if (e == 0) continue;
      if (wrote) out += '*';
      out += ring.name(i);
      if (e > 1) {
        out += '^';
        out += std::to_string(e);
      }
      wrote = true;
    }
  }
  return out;
}

}  // namespace flagcoh
