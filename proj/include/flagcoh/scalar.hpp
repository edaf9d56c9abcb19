#pragma once

#include <cstdint>
#include <random>
#include <stdexcept>
#include <string>

#include <gmpxx.h>

namespace flagcoh {

using Integer = mpz_class;
using Rational = mpq_class;

/// Base class for every error raised by the library.
class Error : public std::runtime_error {
 public:
  using std::runtime_error::runtime_error;
};

/// Default prime for identity testing: 2^62 - 57.
inline constexpr std::uint64_t kDefaultPrime = 4611686018427387847ULL;

// Arithmetic in Z/p for p < 2^63.
namespace modp {

inline std::uint64_t add(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  std::uint64_t s = a + b;
  return s >= p ? s - p : s;
}

inline std::uint64_t sub(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return a >= b ? a - b : a + (p - b);
}

inline std::uint64_t mul(std::uint64_t a, std::uint64_t b, std::uint64_t p) {
  return static_cast<std::uint64_t>(
      (static_cast<unsigned __int128>(a) * b) % p);
}

inline std::uint64_t neg(std::uint64_t a, std::uint64_t p) {
  return a == 0 ? 0 : p - a;
}

std::uint64_t pow(std::uint64_t base, std::uint64_t exp, std::uint64_t p);

/// Inverse of a nonzero residue; throws on zero.
std::uint64_t inv(std::uint64_t a, std::uint64_t p);

/// Image of an integer in Z/p.
std::uint64_t reduce(const Integer& value, std::uint64_t p);

/// Image of a rational in Z/p; throws when the denominator vanishes mod p.
std::uint64_t reduce(const Rational& value, std::uint64_t p);

/// Signed representative in (-p/2, p/2].
Integer lift_symmetric(std::uint64_t a, std::uint64_t p);

}  // namespace modp

enum class CoeffKind { kIntegers, kRationals, kPrimeField };

/// Coefficient domain of a polynomial ring: Z, Q or Z/p with p > 2^31.
///
/// Coefficients are always carried as `Rational`. For Z they must be
/// integral, for Z/p they are kept as canonical residues in [0, p).
class CoefficientRing {
 public:
  static CoefficientRing integers() { return CoefficientRing(CoeffKind::kIntegers, 0); }
  static CoefficientRing rationals() { return CoefficientRing(CoeffKind::kRationals, 0); }
  /// Throws if p <= 2^31, p >= 2^63 or p fails a probabilistic primality test.
  static CoefficientRing prime_field(std::uint64_t p);

  CoeffKind kind() const { return kind_; }
  std::uint64_t modulus() const { return modulus_; }
  Integer modulus_as_integer() const;
  bool is_field() const { return kind_ != CoeffKind::kIntegers; }
  bool is_exact() const { return kind_ != CoeffKind::kPrimeField; }

  /// Brings a value into canonical form for this ring. Throws for a
  /// non-integral value in Z or a denominator divisible by p.
  void normalize(Rational& value) const;

  /// Field inverse of a nonzero element (Q or Z/p only).
  Rational inverse(const Rational& value) const;

  /// "Z", "Q" or "GF(p)".
  std::string name() const;

  friend bool operator==(const CoefficientRing& a, const CoefficientRing& b) {
    return a.kind_ == b.kind_ && a.modulus_ == b.modulus_;
  }

 private:
  CoefficientRing(CoeffKind kind, std::uint64_t modulus) : kind_(kind), modulus_(modulus) {}

  CoeffKind kind_;
  std::uint64_t modulus_;
};

/// Parses "Z", "Q", "p" (default prime) or a decimal modulus.
CoefficientRing parse_coefficient_ring(const std::string& text);

/// Deterministic 64-bit generator for all randomized checks.
///
/// Wraps std::mt19937_64, whose output sequence is fixed by the standard, and
/// maps to ranges by rejection so that draws are reproducible everywhere.
class Rng {
 public:
  explicit Rng(std::uint64_t seed) : engine_(seed) {}

  std::uint64_t next() { return engine_(); }
  /// Uniform in [0, bound).
  std::uint64_t below(std::uint64_t bound);
  /// Uniform in [lo, hi].
  std::int64_t between(std::int64_t lo, std::int64_t hi);

 private:
  std::mt19937_64 engine_;
};

std::string to_string(const Rational& value);

}  // namespace flagcoh
