#pragma once

// Graded presentations as data (E8/T, E8/C, Borel presentations of small
// groups) and the checks run against them: degree audit, Poincare series,
// graded dimensions by linear algebra, gamma elimination and the Toda
// congruence.

#include <cstdint>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "flagcoh/groebner.hpp"
#include "flagcoh/polyring.hpp"
#include "flagcoh/report.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

inline constexpr const char* kPresentationFormat = "flagcoh-presentation/1";

/// A named homogeneous polynomial.
struct NamedPolynomial {
  std::string name;
  std::uint32_t q_degree = 0;
  Polynomial poly;
};

/// Source text of a named polynomial.
struct FormulaText {
  std::string name;
  std::uint32_t q_degree = 0;
  std::string text;
};

/// Generators with q-degrees and relation polynomials. Relations may be
/// written with abbreviations (named polynomials in the generators and the
/// abbreviations before them); expand() replaces them.
class GradedPresentation {
 public:
  /// Parses the formulas with the strict grammar, or with the extended one
  /// (parentheses) when extended_grammar is set.
  GradedPresentation(std::string name, std::vector<Variable> generators, CoefficientRing coefficients,
                     const std::vector<FormulaText>& abbreviations, const std::vector<FormulaText>& relations,
                     std::string provenance, bool extended_grammar = false);
  /// Relations given as polynomials in the generator ring.
  static GradedPresentation from_polynomials(std::string name, Ring ring, std::vector<NamedPolynomial> relations,
                                             std::string provenance);

  const std::string& name() const { return name_; }
  const std::string& provenance() const { return provenance_; }
  /// Generators only.
  const Ring& ring() const { return ring_; }
  /// Generators followed by the abbreviation symbols.
  const Ring& authoring_ring() const { return authoring_; }
  const std::vector<NamedPolynomial>& abbreviations() const { return abbreviations_; }
  const std::vector<NamedPolynomial>& relations() const { return relations_; }

  const NamedPolynomial& relation(std::string_view name) const;
  /// Polynomial of the authoring ring rewritten in the generators.
  Polynomial expand(const Polynomial& p) const;
  Polynomial expanded_relation(std::string_view name) const { return expand(relation(name).poly); }
  /// Image of an abbreviation in the generators.
  const Polynomial& abbreviation_image(std::string_view name) const;

  /// Copy with one relation replaced (same name and degree required).
  GradedPresentation with_relation(std::string_view name, const Polynomial& poly) const;

  Json to_json() const;
  static GradedPresentation from_json(const Json& j);

  friend bool operator==(const GradedPresentation& a, const GradedPresentation& b);

 private:
  GradedPresentation() = default;
  void build_expansion();

  std::string name_;
  std::string provenance_;
  Ring ring_;
  Ring authoring_;
  std::vector<NamedPolynomial> abbreviations_;
  std::vector<NamedPolynomial> relations_;
  std::vector<Polynomial> images_;
  std::optional<SubstitutionMap> expansion_;
};

/// Index in a relation name such as rho12 or r15; throws when absent.
std::uint32_t indexed_degree(std::string_view name);

/// Every relation and abbreviation homogeneous of its q-degree, and each
/// relation's q-degree equal to its indexed degree.
VerificationReport transcription_audit(const GradedPresentation& p);

/// Z[t1..t8, t, g3, g4, g5, g6, g9, g10, g15] with 16 relations rho_j; the
/// abbreviations are c_k = e_k(t1..t8), u, v, w and x. Throws if the audit
/// fails.
GradedPresentation e8t_presentation();
/// Z[u, v, w, x] with relations r15, r20, r24, r30.
GradedPresentation e8c_presentation();
/// Z[w1..wr] modulo the invariant power sums at the Chevalley degrees;
/// rank at most 3.
GradedPresentation borel_presentation(const RootSystem& rs);
/// Built-in presentation by name: E8T, E8C or a small type name.
GradedPresentation builtin_presentation(std::string_view space);

/// The relations of e8t_presentation() that are stated in u, v, w, x
/// (rho20, rho24, rho30) agree with the E8/C relations term by term.
VerificationReport e8c_consistency(const GradedPresentation& e8t, const GradedPresentation& e8c);

/// Coefficients of prod(1 - q^r) / prod(1 - q^g) up to cutoff.
std::vector<Integer> ci_poincare_series(const std::vector<std::uint32_t>& gen_degrees,
                                        const std::vector<std::uint32_t>& rel_degrees, std::uint32_t cutoff);

struct LinearAlgebraOptions {
  std::uint64_t prime = kDefaultPrime;
  std::uint64_t seed = 0;
  unsigned jobs = 1;
  /// Refuse degrees with more monomials than this.
  std::size_t column_limit = 200000;
};

/// dim_d = #monomials of degree d - rank mod p of {m * rho}, for d <= cutoff.
/// The seed only shuffles rows; the result does not depend on it.
HilbertData graded_dimensions_linear_algebra(const GradedPresentation& p, std::uint32_t cutoff,
                                             const LinearAlgebraOptions& options);

/// dim_d == dim_{top - d} for all d.
VerificationReport palindrome_check(const HilbertData& h);

/// Substitution from Q[t1..t8, t, g*] to the canonical Q[t2..t8, t] that
/// eliminates t1 and solves rho_i = 0 for gamma_i (i = 3, 4, 5, 6, 9, 10, 15,
/// in that order, stopping after max_index).
SubstitutionMap gamma_elimination_map(const GradedPresentation& e8t, std::uint32_t max_index = 15);

/// u, v, w, x to their images in the E8/T generators.
SubstitutionMap uvwx_substitution(const GradedPresentation& e8t);

struct CongruenceCertificate {
  std::uint32_t j = 0;
  bool solved = false;
  /// Set when the system has full column rank mod p and no solution mod p,
  /// which rules out a rational solution.
  bool infeasible = false;
  Rational n;
  /// Cofactors h_i of the lower relations, in the canonical ring.
  std::vector<std::pair<std::string, Polynomial>> cofactors;
  bool residual_zero = false;
  std::size_t unknowns = 0;
  std::size_t equations = 0;
  std::size_t primes_used = 0;
  std::string diagnostic;

  VerificationReport report() const;
};

struct CongruenceOptions {
  std::uint64_t seed = 0;
  unsigned max_primes = 40;
};

/// Finds n != 0 and cofactors with invariant = n * rho_j' + sum h_i * rho_i'
/// over Q, where ' is gamma elimination and i < j. The invariant lives in
/// the canonical ring of the E8 t-frame. j must be 2, 8 or 12.
CongruenceCertificate verify_toda_congruence(std::uint32_t j, const Polynomial& invariant,
                                             const GradedPresentation& e8t, const CongruenceOptions& options = {});

}  // namespace flagcoh
