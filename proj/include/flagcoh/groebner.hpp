#pragma once

// Buchberger's algorithm for homogeneous ideals over Q and Z/p in the
// weighted grevlex order of the ring.

#include <cstdint>
#include <optional>
#include <vector>

#include "flagcoh/polyring.hpp"

namespace flagcoh {

struct GroebnerStats {
  std::size_t pairs_considered = 0;
  std::size_t pairs_reduced = 0;
  std::size_t zero_reductions = 0;
};

class GroebnerBasis {
 public:
  GroebnerBasis(Ring ring, std::vector<Polynomial> generators, bool truncated, std::optional<std::uint32_t> degree_cap,
                GroebnerStats stats);

  const Ring& ring() const { return ring_; }
  /// Monic, inter-reduced, sorted by increasing leading monomial.
  const std::vector<Polynomial>& generators() const { return generators_; }
  std::vector<Monomial> leading_monomials() const;
  /// True when pairs above degree_cap were left unprocessed.
  bool truncated() const { return truncated_; }
  std::optional<std::uint32_t> degree_cap() const { return degree_cap_; }
  const GroebnerStats& stats() const { return stats_; }

  Polynomial normal_form(const Polynomial& p) const;
  bool contains(const Polynomial& p) const { return normal_form(p).is_zero(); }
  /// Whether no leading monomial divides m.
  bool is_standard(const Monomial& m) const;

 private:
  Ring ring_;
  std::vector<Polynomial> generators_;
  bool truncated_;
  std::optional<std::uint32_t> degree_cap_;
  GroebnerStats stats_;
};

/// Inputs must be homogeneous and share a ring whose coefficients form a
/// field. With a cap, only S-pairs of degree <= cap are processed and the
/// result is flagged truncated if any remain.
GroebnerBasis buchberger(const std::vector<Polynomial>& relations,
                         std::optional<std::uint32_t> degree_cap = std::nullopt);

/// Remainder of p modulo the polynomials (full reduction). The divisors need
/// not form a Groebner basis; coefficients must be a field.
Polynomial reduce(const Polynomial& p, const std::vector<Polynomial>& divisors);

/// S-polynomial of two polynomials over a field.
Polynomial s_polynomial(const Polynomial& f, const Polynomial& g);

struct HilbertData {
  std::vector<std::uint64_t> graded_dimensions;
  bool is_finite = false;
  std::uint64_t total_dimension = 0;

  /// Highest degree with a nonzero dimension.
  std::optional<std::size_t> top_degree() const;
};

/// Counts standard monomials per degree. Throws for a truncated basis.
/// When the quotient is infinite, dimensions are counted up to cutoff
/// (required in that case) and is_finite is false.
HilbertData quotient_dimension(const GroebnerBasis& gb, std::optional<std::uint32_t> cutoff = std::nullopt);

/// Standard monomials of one degree in descending order.
std::vector<Monomial> standard_monomials(const GroebnerBasis& gb, std::uint32_t degree);

}  // namespace flagcoh
