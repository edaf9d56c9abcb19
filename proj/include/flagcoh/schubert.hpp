#pragma once

// BGG/Demazure divided differences and Schubert classes in the coinvariant
// algebra of a root system.

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "flagcoh/groebner.hpp"
#include "flagcoh/polyring.hpp"
#include "flagcoh/report.hpp"
#include "flagcoh/rootsys.hpp"

namespace flagcoh {

/// The operators d_i f = (f - s_i f) / alpha_i on the ring of a weight frame.
class DividedDifference {
 public:
  explicit DividedDifference(WeightFrame frame);

  const WeightFrame& frame() const { return frame_; }
  const Ring& ring() const { return frame_.ring(); }
  int rank() const { return static_cast<int>(alphas_.size()); }
  /// alpha_i as a linear polynomial.
  const Polynomial& alpha(int i) const;

  /// Throws DivisionError if alpha_i does not divide f - s_i f.
  Polynomial apply(int i, const Polynomial& f) const;
  /// d_{word[0]} o ... o d_{word[k-1]}: the last letter acts first, so the
  /// result is d_w for w = s_{word[0]} ... s_{word[k-1]}.
  Polynomial apply_word(const WeylWord& word, const Polynomial& f) const;

 private:
  WeightFrame frame_;
  std::vector<Polynomial> alphas_;
};

enum class SchubertSeed {
  /// prod of positive roots / |W|, then descent.
  kTopClass,
  /// x1^n x2^(n-1) ... xn with x_i the weights of the standard
  /// representation (type A only), then descent.
  kStaircase,
  /// Dual basis of the monomial basis in each degree (any rank, short
  /// lengths).
  kDualBasis,
};

std::string to_string(SchubertSeed seed);

struct SchubertClass {
  /// Lexicographically smallest reduced word.
  WeylWord word;
  /// w^{-1}(rho).
  Weight key;
  std::uint32_t length = 0;
  Polynomial poly;
};

/// Matrix of d_w(m) for the standard monomials m and the elements w of one
/// length. Rows follow monomials, columns follow classes.
struct DegreeTable {
  std::uint32_t degree = 0;
  std::vector<Monomial> monomials;
  std::vector<std::size_t> classes;
  std::vector<std::vector<Rational>> matrix;
  bool integral = false;
  Rational determinant;
  bool unimodular() const { return integral && (determinant == 1 || determinant == -1); }
};

struct SchubertExpansion {
  DividedDifference ops;
  std::uint32_t length_cap = 0;
  SchubertSeed seed = SchubertSeed::kTopClass;
  /// Groebner basis of the invariant ideal, complete up to the cap.
  GroebnerBasis ideal;
  /// Length of the longest element.
  std::size_t top_length = 0;
  /// Elements of length <= cap, ordered by length, then word.
  std::vector<SchubertClass> classes;
  /// One table per length 1..cap.
  std::vector<DegreeTable> tables;
  /// Descent seeds: number of (class, parent) pairs compared and how many
  /// gave a different polynomial.
  std::size_t path_checks = 0;
  std::size_t path_mismatches = 0;

  const RootSystem& root_system() const { return ops.frame().root_system(); }
  /// Number of classes of each length up to the cap.
  std::vector<std::uint64_t> degree_profile() const;
  const SchubertClass* find(const Weight& key) const;
  Json to_json() const;
};

/// Operators in the frame used for the type: the t-frame for E8, the
/// fundamental-weight frame otherwise (over Q).
DividedDifference divided_differences(const RootSystem& rs);

/// d_i^2 = 0, the braid relations and the twisted Leibniz rule
/// d_i(fg) = d_i(f) g + s_i(f) d_i(g), each on `trials` random homogeneous
/// polynomials drawn from the seed.
VerificationReport divided_difference_properties(const RootSystem& rs, std::size_t trials, std::uint64_t seed);

/// Schubert representatives for all elements of length <= cap. Top-class
/// and staircase seeds need rank <= 3; the dual basis needs cap <= 4 when
/// the rank exceeds 3. Throws Error otherwise.
SchubertExpansion schubert_basis(const RootSystem& rs, std::uint32_t length_cap,
                                 std::optional<SchubertSeed> seed = std::nullopt);

struct SchubertCoordinates {
  std::uint32_t degree = 0;
  std::vector<std::pair<WeylWord, Rational>> coefficients;
  bool integral = true;
};

/// Coefficients a_w = d_w(f) over the classes of f's degree.
SchubertCoordinates express_in_schubert(const Polynomial& f, const SchubertExpansion& basis);

/// Whether two expansions give the same classes modulo the invariant ideal.
VerificationReport compare_modulo_ideal(const SchubertExpansion& a, const SchubertExpansion& b);

/// Every reduced word of every element of length <= cap gives the same
/// d_w on the degree's standard monomials.
VerificationReport reduced_word_independence(const SchubertExpansion& basis);

}  // namespace flagcoh
