#include "flagcoh/scalar.hpp"

#include <limits>

namespace flagcoh {

namespace modp {

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p) {
  std::uint64_t result = 1 % p;
  base %= p;
  while (exp > 0) {
    if (exp & 1U) result = mul(result, base, p);
    base = mul(base, base, p);
    exp >>= 1U;
  }
  return result;
}

std::uint64_t inv(std::uint64_t a, std::uint64_t p) {
  if (a % p == 0) throw Error("modular inverse of zero");
  // Extended Euclid on signed 128-bit values.
  __int128 t = 0, new_t = 1;
  __int128 r = p, new_r = a % p;
  while (new_r != 0) {
    __int128 q = r / new_r;
    __int128 tmp = t - q * new_t;
    t = new_t;
    new_t = tmp;
    tmp = r - q * new_r;
    r = new_r;
    new_r = tmp;
  }
  if (r != 1) throw Error("modulus is not prime");
  if (t < 0) t += p;
  return static_cast<std::uint64_t>(t);
}

std::uint64_t reduce(const Integer& value, std::uint64_t p) {
  mpz_class m;
  mpz_class modulus;
  mpz_import(modulus.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  mpz_fdiv_r(m.get_mpz_t(), value.get_mpz_t(), modulus.get_mpz_t());
  std::uint64_t out = 0;
  mpz_export(&out, nullptr, 1, sizeof(out), 0, 0, m.get_mpz_t());
  return out;
}

std::uint64_t reduce(const Rational& value, std::uint64_t p) {
  std::uint64_t num = reduce(value.get_num(), p);
  if (value.get_den() == 1) return num;
  std::uint64_t den = reduce(value.get_den(), p);
  if (den == 0) throw Error("denominator vanishes modulo the prime");
  return mul(num, inv(den, p), p);
}

Integer lift_symmetric(std::uint64_t a, std::uint64_t p) {
  mpz_class out;
  std::uint64_t v = a;
  bool negative = a > p / 2;
  if (negative) v = p - a;
  mpz_import(out.get_mpz_t(), 1, 1, sizeof(v), 0, 0, &v);
  return negative ? mpz_class(-out) : out;
}

}  // namespace modp

CoefficientRing CoefficientRing::prime_field(std::uint64_t p) {
  constexpr std::uint64_t kLow = 1ULL << 31U;
  constexpr std::uint64_t kHigh = 1ULL << 63U;
  if (p <= kLow || p >= kHigh) {
    throw Error("prime field modulus must satisfy 2^31 < p < 2^63");
  }
  mpz_class z;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  if (mpz_probab_prime_p(z.get_mpz_t(), 40) == 0) {
    throw Error("prime field modulus " + z.get_str() + " is not prime");
  }
  return CoefficientRing(CoeffKind::kPrimeField, p);
}

void CoefficientRing::normalize(Rational& value) const {
  value.canonicalize();
  switch (kind_) {
    case CoeffKind::kIntegers:
      if (value.get_den() != 1) {
        throw Error("non-integral coefficient " + value.get_str() + " in Z");
      }
      return;
    case CoeffKind::kRationals:
      return;
    case CoeffKind::kPrimeField: {
      if (value.get_den() == 1 && value.get_num() >= 0 && value.get_num() < modulus_as_integer()) return;
      std::uint64_t r = modp::reduce(value, modulus_);
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
      value = Rational(z);
      return;
    }
  }
}

Integer CoefficientRing::modulus_as_integer() const {
  mpz_class z;
  std::uint64_t p = modulus_;
  mpz_import(z.get_mpz_t(), 1, 1, sizeof(p), 0, 0, &p);
  return z;
}

Rational CoefficientRing::inverse(const Rational& value) const {
  if (value == 0) throw Error("inverse of zero coefficient");
  switch (kind_) {
    case CoeffKind::kIntegers:
      throw Error("inverse requested in Z");
    case CoeffKind::kRationals:
      return Rational(1) / value;
    case CoeffKind::kPrimeField: {
      std::uint64_t r = modp::inv(modp::reduce(value, modulus_), modulus_);
      mpz_class z;
      mpz_import(z.get_mpz_t(), 1, 1, sizeof(r), 0, 0, &r);
      return Rational(z);
    }
  }
  return {};
}

std::string CoefficientRing::name() const {
  switch (kind_) {
    case CoeffKind::kIntegers:
      return "Z";
    case CoeffKind::kRationals:
      return "Q";
    case CoeffKind::kPrimeField:
      return "GF(" + std::to_string(modulus_) + ")";
  }
  return "?";
}

CoefficientRing parse_coefficient_ring(const std::string& text) {
  if (text == "Z") return CoefficientRing::integers();
  if (text == "Q") return CoefficientRing::rationals();
  if (text == "p") return CoefficientRing::prime_field(kDefaultPrime);
  std::string digits = text;
  if (digits.rfind("GF(", 0) == 0 && digits.back() == ')') digits = digits.substr(3, digits.size() - 4);
  if (digits.empty() || digits.find_first_not_of("0123456789") != std::string::npos) {
    throw Error("unknown coefficient ring '" + text + "'");
  }
  std::uint64_t p = 0;
  try {
    p = std::stoull(digits);
  } catch (const std::exception&) {
    throw Error("modulus out of range: " + text);
  }
  return CoefficientRing::prime_field(p);
}

std::uint64_t Rng::below(std::uint64_t bound) {
  if (bound == 0) throw Error("Rng::below with empty range");
  const std::uint64_t limit = std::numeric_limits<std::uint64_t>::max() -
                              std::numeric_limits<std::uint64_t>::max() % bound;
  std::uint64_t x = 0;
  do {
    x = engine_();
  } while (x >= limit);
  return x % bound;
}

std::int64_t Rng::between(std::int64_t lo, std::int64_t hi) {
  auto span = static_cast<std::uint64_t>(hi - lo) + 1;
  return lo + static_cast<std::int64_t>(below(span));
}

std::string to_string(const Rational& value) { return value.get_str(); }

}  // namespace flagcoh
