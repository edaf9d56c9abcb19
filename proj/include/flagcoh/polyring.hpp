#pragma once

// Sparse exact multivariate polynomials over Z, Q and Z/p, graded by q-degree.

#include <array>
#include <cstdint>
#include <map>
#include <memory>
#include <optional>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "flagcoh/scalar.hpp"

namespace flagcoh {

inline constexpr std::size_t kMaxVariables = 32;
inline constexpr std::uint32_t kMaxExponent = 255;

struct Variable {
  std::string name;
  std::uint32_t q_degree = 1;
};

class RingDescriptor;
using Ring = std::shared_ptr<const RingDescriptor>;

/// Exponent vector packed eight bits per variable, with its weighted degree
/// cached. Only the ring that created a monomial knows the weights, so
/// monomials are built through RingDescriptor.
class Monomial {
 public:
  Monomial() = default;

  std::uint32_t exponent(std::size_t i) const {
    return static_cast<std::uint32_t>((words_[i / 8] >> (8 * (i % 8))) & 0xFFU);
  }
  /// Weighted (q-)degree.
  std::uint32_t degree() const { return degree_; }
  std::uint32_t total_degree() const;
  bool is_one() const { return words_ == std::array<std::uint64_t, 4>{}; }

  bool divides(const Monomial& other) const;
  bool coprime(const Monomial& other) const;
  /// this / divisor; the divisor must divide this.
  Monomial quotient(const Monomial& divisor) const;

  friend Monomial operator*(const Monomial& a, const Monomial& b);
  friend bool operator==(const Monomial& a, const Monomial& b) { return a.words_ == b.words_; }

  std::size_t hash() const;

 private:
  friend class RingDescriptor;
  std::array<std::uint64_t, 4> words_{};
  std::uint32_t degree_ = 0;
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const { return m.hash(); }
};

/// Weighted graded reverse-lexicographic comparison: higher q-degree first,
/// ties broken by the rightmost differing variable (smaller exponent wins).
/// Returns <0, 0, >0 like strcmp.
int compare(const Monomial& a, const Monomial& b);

/// Strict "a comes before b" in the canonical (descending) term order.
struct MonomialDescending {
  bool operator()(const Monomial& a, const Monomial& b) const { return compare(a, b) > 0; }
};

class RingDescriptor {
 public:
  /// Throws on duplicate or malformed names, zero degrees or too many variables.
  static Ring make(std::vector<Variable> variables, CoefficientRing coefficients);

  const std::vector<Variable>& variables() const { return variables_; }
  std::size_t size() const { return variables_.size(); }
  const CoefficientRing& coefficients() const { return coefficients_; }
  std::uint32_t weight(std::size_t i) const { return variables_[i].q_degree; }
  const std::string& name(std::size_t i) const { return variables_[i].name; }

  std::optional<std::size_t> index_of(std::string_view name) const;
  /// Like index_of but throws for an unknown name.
  std::size_t require_index(std::string_view name) const;

  Monomial monomial(std::span<const std::uint32_t> exponents) const;
  Monomial variable_power(std::size_t i, std::uint32_t exponent = 1) const;
  Monomial lcm(const Monomial& a, const Monomial& b) const;
  std::vector<std::uint32_t> exponents(const Monomial& m) const;

  /// All monomials of the given q-degree, in descending term order.
  std::vector<Monomial> monomials_of_degree(std::uint32_t degree) const;

  bool same_variables(const RingDescriptor& other) const;
  Ring with_coefficients(CoefficientRing coefficients) const;

  friend bool operator==(const RingDescriptor& a, const RingDescriptor& b);

 private:
  RingDescriptor(std::vector<Variable> variables, CoefficientRing coefficients)
      : variables_(std::move(variables)), coefficients_(coefficients) {}

  std::vector<Variable> variables_;
  CoefficientRing coefficients_;
  std::map<std::string, std::size_t, std::less<>> index_;
};

bool same_ring(const Ring& a, const Ring& b);

struct Term {
  Monomial monomial;
  Rational coeff;
};

/// Immutable-by-convention polynomial value. Terms are kept sorted in
/// descending monomial order with no zero coefficients, so equality is
/// term-wise equality.
class Polynomial {
 public:
  Polynomial() = default;
  explicit Polynomial(Ring ring) : ring_(std::move(ring)) {}

  static Polynomial constant(Ring ring, Rational value);
  static Polynomial variable(Ring ring, std::string_view name);
  static Polynomial variable(Ring ring, std::size_t index);
  static Polynomial monomial(Ring ring, const Monomial& m, Rational coeff = 1);
  /// Combines like terms, normalizes coefficients and sorts.
  static Polynomial from_terms(Ring ring, std::vector<Term> terms);

  const Ring& ring() const { return ring_; }
  const std::vector<Term>& terms() const { return terms_; }
  bool is_zero() const { return terms_.empty(); }
  std::size_t size() const { return terms_.size(); }

  /// Maximal q-degree; std::nullopt stands for the degree -infinity of zero.
  std::optional<std::uint32_t> degree() const;
  bool is_homogeneous() const;
  bool is_constant() const;
  const Term& leading_term() const;
  Rational coefficient(const Monomial& m) const;
  /// Coefficient of a single variable to the first power.
  Rational coefficient_of_variable(std::string_view name) const;

  Polynomial operator-() const;
  Polynomial& operator+=(const Polynomial& other);
  Polynomial& operator-=(const Polynomial& other);
  Polynomial& operator*=(const Polynomial& other);
  Polynomial scaled(const Rational& factor) const;
  Polynomial times_term(const Monomial& m, const Rational& coeff) const;
  /// this + factor * m * other in one merge pass.
  Polynomial add_multiple(const Rational& factor, const Monomial& m, const Polynomial& other) const;

  /// Same variables, coefficients mapped into another coefficient ring.
  Polynomial with_ring(Ring ring) const;

  /// Positive gcd of numerators over lcm of denominators (exact rings).
  Rational content() const;
  /// Divided by content, leading coefficient positive (exact rings).
  Polynomial primitive() const;
  /// Divided by leading coefficient (fields only).
  Polynomial monic() const;

  /// Homogeneous component of the given q-degree.
  Polynomial component(std::uint32_t degree) const;

  /// Canonical text form (see parse for the grammar).
  std::string to_string() const;

  friend bool operator==(const Polynomial& a, const Polynomial& b);

 private:
  friend class TermAccumulator;
  Polynomial(Ring ring, std::vector<Term> sorted_terms)
      : ring_(std::move(ring)), terms_(std::move(sorted_terms)) {}

  Ring ring_;
  std::vector<Term> terms_;
};

Polynomial operator+(const Polynomial& a, const Polynomial& b);
Polynomial operator-(const Polynomial& a, const Polynomial& b);
Polynomial operator*(const Polynomial& a, const Polynomial& b);
Polynomial pow(const Polynomial& base, std::uint32_t exponent);

/// Collects terms by hashing and produces a canonical polynomial.
class TermAccumulator {
 public:
  explicit TermAccumulator(Ring ring);
  ~TermAccumulator();
  TermAccumulator(const TermAccumulator&) = delete;
  TermAccumulator& operator=(const TermAccumulator&) = delete;

  void add(const Monomial& m, const Rational& coeff);
  void add_product(const Monomial& m, const Rational& coeff, const Polynomial& p);
  void reserve(std::size_t n);
  Polynomial finish();

 private:
  struct Impl;
  Ring ring_;
  std::unique_ptr<Impl> impl_;
};

/// Ring homomorphism given by images of variables. Every image must be
/// homogeneous of its source variable's q-degree and live in the target ring.
class SubstitutionMap {
 public:
  SubstitutionMap(Ring source, Ring target);

  const Ring& source() const { return source_; }
  const Ring& target() const { return target_; }

  void set(std::string_view variable, Polynomial image);
  /// Maps a variable to the same-named variable of the target ring.
  void set_identity(std::string_view variable);
  bool has(std::string_view variable) const;
  const Polynomial& image(std::string_view variable) const;

  /// Throws if p uses a variable that has no image.
  Polynomial apply(const Polynomial& p) const;

 private:
  Ring source_;
  Ring target_;
  std::vector<std::optional<Polynomial>> images_;
};

Polynomial substitute(const Polynomial& p, const SubstitutionMap& map);

/// Value at a point of Z/p (point indexed like the ring's variables).
/// Coefficients must be exact; denominators must be invertible mod p.
std::uint64_t evaluate_mod_p(const Polynomial& p, std::span<const std::uint64_t> point,
                             std::uint64_t prime);
/// Same with the point given by variable names; throws on a missing coordinate
/// for a variable that occurs in p.
std::uint64_t evaluate_mod_p(const Polynomial& p,
                             const std::map<std::string, std::uint64_t>& point,
                             std::uint64_t prime);

/// Exact value at a rational point.
Rational evaluate(const Polynomial& p, std::span<const Rational> point);

class DivisionError : public Error {
 public:
  using Error::Error;
};

/// q with q * den == num; throws DivisionError when den does not divide num.
Polynomial exact_divide(const Polynomial& num, const Polynomial& den);

Polynomial partial_derivative(const Polynomial& p, std::size_t variable);

class ParseError : public Error {
 public:
  ParseError(const std::string& message, std::size_t offset);
  std::size_t offset() const { return offset_; }

 private:
  std::size_t offset_;
};

/// Parses the polynomial grammar
///
///   poly     := term (('+'|'-') term)*
///   term     := [rational] ('*' factor)* | factor ('*' factor)*
///   factor   := ident ('^' nat)?
///   rational := ['-'] nat ('/' nat)?
///
/// with insignificant whitespace. A single leading '-' before a factor is
/// also accepted so that rendered polynomials with a negative leading term
/// parse back.
Polynomial parse(std::string_view text, const Ring& ring);

/// Extended grammar used for transcribed formulas: parentheses, powers of
/// parenthesized groups and unary minus are allowed; '*' stays explicit.
Polynomial parse_expression(std::string_view text, const Ring& ring);

std::string render(const Polynomial& p);

}  // namespace flagcoh
