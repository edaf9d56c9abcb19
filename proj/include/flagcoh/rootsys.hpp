#pragma once

// Cartan data, roots, Weyl group actions and linear coordinate frames.
//
// Weights are integer vectors in the fundamental-weight basis. The Cartan
// convention is cartan[j][i] = <alpha_i, alpha_j^vee>, so column i of the
// matrix is alpha_i and s_i(w) = w - w[i] * alpha_i. Reflection indices and
// word letters are 1-based, matching the node numbering of the tables.

#include <cstdint>
#include <memory>
#include <string>
#include <string_view>
#include <vector>

#include "flagcoh/polyring.hpp"
#include "flagcoh/scalar.hpp"

namespace flagcoh {

using Weight = std::vector<std::int64_t>;
using WeylWord = std::vector<int>;

struct WeightHash {
  std::size_t operator()(const Weight& w) const;
};

class CartanMatrix {
 public:
  CartanMatrix() = default;
  /// Validates the diagonal, the off-diagonal range and the zero pattern.
  explicit CartanMatrix(std::vector<std::vector<int>> entries);

  std::size_t rank() const { return entries_.size(); }
  int at(std::size_t row, std::size_t col) const { return entries_[row][col]; }
  const std::vector<std::vector<int>>& entries() const { return entries_; }

 private:
  std::vector<std::vector<int>> entries_;
};

/// One row of the root system data file.
struct RootSystemEntry {
  std::string name;
  CartanMatrix cartan;
  std::vector<int> degrees;
  std::string invariant_weights;
};

/// Parsed root system data file; see data/root_systems.json.
class RootSystemTable {
 public:
  static RootSystemTable parse(std::string_view json_text);
  static RootSystemTable load(const std::string& path);
  static const RootSystemTable& builtin();

  const RootSystemEntry& find(std::string_view name) const;
  std::vector<std::string> names() const;

 private:
  std::vector<RootSystemEntry> entries_;
};

class RootSystem {
 public:
  /// Throws for a type missing from the table or a rank mismatch.
  static RootSystem build(std::string_view type_name, std::size_t rank,
                          const RootSystemTable& table = RootSystemTable::builtin());
  static RootSystem build(std::string_view type_name);

  const std::string& name() const;
  std::size_t rank() const;
  const CartanMatrix& cartan() const;
  const std::vector<int>& chevalley_degrees() const;
  /// 1-based.
  const Weight& simple_root(int i) const;
  Weight fundamental_weight(int i) const;
  /// Sum of the fundamental weights.
  Weight rho() const;

  const std::vector<Weight>& roots() const;
  const std::vector<Weight>& positive_roots() const;
  bool is_root(const Weight& w) const;

  /// Weight multiset whose power sums are used as basic invariants.
  const std::string& invariant_weight_spec() const;
  std::vector<Weight> invariant_weights() const;

  Weight simple_reflection(int i, const Weight& w) const;
  /// s_{w[0]} s_{w[1]} ... applied to the weight (rightmost letter first).
  Weight apply_word(const WeylWord& word, const Weight& w) const;

  /// <w, alpha_i^vee> for the 1-based index i.
  std::int64_t pairing(const Weight& w, int i) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// Breadth-first closure of the simple roots; throws past 10 * dim G elements.
std::vector<Weight> generate_roots(const CartanMatrix& cartan, std::size_t cap);

/// W-orbit of a weight.
std::vector<Weight> weyl_orbit(const RootSystem& rs, const Weight& w);

/// Product of the Chevalley degrees. For rank <= 3 also enumerates W and
/// throws on disagreement.
Integer weyl_order(const RootSystem& rs);

struct WeylElement {
  /// w^{-1}(rho); determines w.
  Weight key;
  /// A reduced word with w = s_{word[0]} ... s_{word[k-1]}.
  WeylWord word;
  std::size_t length() const { return word.size(); }
};

/// Elements of length <= max_length, ordered by length and then by discovery.
std::vector<WeylElement> enumerate_weyl(const RootSystem& rs, std::size_t max_length);

/// All reduced words of the element with the given key.
std::vector<WeylWord> reduced_words(const RootSystem& rs, const WeylElement& element);

/// Number of elements of each length; throws if W is too large to list.
std::vector<std::uint64_t> length_profile(const RootSystem& rs);

/// Coefficients of prod_i (1 + q + ... + q^{d_i - 1}).
std::vector<Integer> length_generating_function(const std::vector<int>& degrees);

void check_word(const RootSystem& rs, const WeylWord& word);

/// Identifies a lattice of weights with linear polynomials: variable k is
/// the basis weight basis[k]. Linear forms must be integral in the basis.
class WeightFrame {
 public:
  WeightFrame(RootSystem rs, std::vector<std::string> names, std::vector<Weight> basis,
              CoefficientRing coefficients = CoefficientRing::integers());
  /// Variables w1..wr for the fundamental weights.
  static WeightFrame fundamental(RootSystem rs, CoefficientRing coefficients = CoefficientRing::integers());

  const RootSystem& root_system() const;
  const Ring& ring() const;
  const std::vector<Weight>& basis() const;

  /// Coordinates of w in the basis; throws Error when not integral.
  std::vector<Integer> coordinates(const Weight& w) const;
  Polynomial linear_form(const Weight& w) const;
  /// Inverse of linear_form on linear polynomials.
  Weight weight_of(const Polynomial& linear) const;

  /// Image of p under s_i acting variable-wise.
  Polynomial reflect(int i, const Polynomial& p) const;
  const SubstitutionMap& reflection_map(int i) const;

  /// Point s_i^{-1}(x) in variable coordinates, so that
  /// f(reflect_point(i, x)) = (s_i f)(x). s_i is an involution.
  std::vector<std::uint64_t> reflect_point(int i, std::span<const std::uint64_t> point,
                                           std::uint64_t prime) const;
  /// Value of a weight at a point given in variable coordinates.
  std::uint64_t evaluate_weight(const Weight& w, std::span<const std::uint64_t> point,
                                std::uint64_t prime) const;

  WeightFrame with_coefficients(CoefficientRing coefficients) const;

 private:
  struct Data;
  std::shared_ptr<const Data> data_;
};

/// The E8 frame t_8 = omega_8, t_i = s_{i+1}(t_{i+1}), t_1 = s_1(t_2),
/// t = omega_2, with relation c_1 = 3t. The canonical ring has variables
/// t2..t8, t; t1 is eliminated through t1 = 3t - (t2 + ... + t8).
class TCoordinateFrame {
 public:
  static TCoordinateFrame e8(const RootSystem& rs);

  /// t_1..t_8 followed by t.
  const std::vector<Weight>& t_vectors() const { return t_vectors_; }
  const WeightFrame& canonical() const { return canonical_; }
  const Ring& ring() const { return canonical_.ring(); }
  /// Z[t1..t8, t] before elimination.
  const Ring& full_ring() const { return full_ring_; }

  Polynomial weight_to_t_poly(const Weight& w) const { return canonical_.linear_form(w); }
  Polynomial reflect_polynomial(int i, const Polynomial& p) const { return canonical_.reflect(i, p); }

  /// Image of t1 in the canonical ring.
  Polynomial t1_image() const;
  /// Elementary symmetric polynomial e_k(t1..t8) in the canonical ring.
  Polynomial elementary(int k) const;

  /// Eliminates t1 from a polynomial whose ring contains t1..t8 and t; the
  /// other variables pass through. The result lives in the same ring minus t1
  /// (with the same coefficients).
  Polynomial normalize(const Polynomial& p) const;
  static Ring without_t1(const Ring& ring);

 private:
  TCoordinateFrame(std::vector<Weight> t_vectors, WeightFrame canonical, Ring full_ring)
      : t_vectors_(std::move(t_vectors)), canonical_(std::move(canonical)), full_ring_(std::move(full_ring)) {}

  std::vector<Weight> t_vectors_;
  WeightFrame canonical_;
  Ring full_ring_;
};

std::string to_string(const Weight& w);

}  // namespace flagcoh
