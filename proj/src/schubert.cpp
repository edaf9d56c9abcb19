#include "flagcoh/schubert.hpp"

#include <algorithm>
#include <map>

#include "flagcoh/invariants.hpp"

namespace flagcoh {

DividedDifference::DividedDifference(WeightFrame frame) : frame_(std::move(frame)) {
  const RootSystem& rs = frame_.root_system();
  for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) alphas_.push_back(frame_.linear_form(rs.simple_root(i)));
}

const Polynomial& DividedDifference::alpha(int i) const {
  if (i < 1 || i > rank()) throw Error("reflection index " + std::to_string(i) + " out of range");
  return alphas_[static_cast<std::size_t>(i - 1)];
}

Polynomial DividedDifference::apply(int i, const Polynomial& f) const {
  const Polynomial& a = alpha(i);
  const Polynomial diff = f - frame_.reflect(i, f);
  if (diff.is_zero()) return Polynomial(f.ring());
  Polynomial q = exact_divide(diff, a);
  if (!(q * a == diff)) throw DivisionError("divided difference failed the multiplication check");
  return q;
}

Polynomial DividedDifference::apply_word(const WeylWord& word, const Polynomial& f) const {
  Polynomial out = f;
  for (auto it = word.rbegin(); it != word.rend(); ++it) {
    out = apply(*it, out);
    if (out.is_zero()) break;
  }
  return out;
}

std::string to_string(SchubertSeed seed) {
  switch (seed) {
    case SchubertSeed::kTopClass:
      return "top-class";
    case SchubertSeed::kStaircase:
      return "staircase";
    case SchubertSeed::kDualBasis:
      return "dual-basis";
  }
  return "?";
}

std::vector<std::uint64_t> SchubertExpansion::degree_profile() const {
  std::vector<std::uint64_t> out(length_cap + 1, 0);
  for (const auto& c : classes) ++out[c.length];
  return out;
}

const SchubertClass* SchubertExpansion::find(const Weight& key) const {
  for (const auto& c : classes) {
    if (c.key == key) return &c;
  }
  return nullptr;
}

namespace {

Json word_json(const WeylWord& w) { return Json(w); }

}  // namespace

Json SchubertExpansion::to_json() const {
  Json j;
  j["type"] = root_system().name();
  j["seed"] = to_string(seed);
  j["length_cap"] = length_cap;
  j["variables"] = Json::array();
  for (const auto& v : ops.ring()->variables()) j["variables"].push_back(v.name);
  j["degree_profile"] = degree_profile();
  Json cls = Json::array();
  for (const auto& c : classes) {
    cls.push_back(Json{{"word", word_json(c.word)}, {"length", c.length}, {"poly", render(c.poly)}});
  }
  j["classes"] = cls;
  Json tabs = Json::array();
  for (const auto& t : tables) {
    Json tj;
    tj["degree"] = t.degree;
    tj["monomials"] = Json::array();
    for (const auto& m : t.monomials) tj["monomials"].push_back(render(Polynomial::monomial(ops.ring(), m)));
    tj["classes"] = Json::array();
    for (auto k : t.classes) tj["classes"].push_back(word_json(classes[k].word));
    tj["matrix"] = Json::array();
    for (const auto& row : t.matrix) {
      Json r = Json::array();
      for (const auto& v : row) r.push_back(to_string(v));
      tj["matrix"].push_back(r);
    }
    tj["integral"] = t.integral;
    tj["determinant"] = to_string(t.determinant);
    tj["unimodular"] = t.unimodular();
    tabs.push_back(tj);
  }
  j["tables"] = tabs;
  j["path_checks"] = path_checks;
  j["path_mismatches"] = path_mismatches;
  return j;
}

DividedDifference divided_differences(const RootSystem& rs) {
  if (rs.name() == "E8") {
    return DividedDifference(TCoordinateFrame::e8(rs).canonical().with_coefficients(CoefficientRing::rationals()));
  }
  return DividedDifference(WeightFrame::fundamental(rs, CoefficientRing::rationals()));
}

namespace {

// d_w(m) for many words and monomials; results along common suffixes are
// shared.
class WordEvaluator {
 public:
  WordEvaluator(const DividedDifference& ops, std::vector<Polynomial> inputs) : ops_(ops) {
    memo_.emplace(WeylWord{}, std::move(inputs));
  }

  const std::vector<Polynomial>& values(const WeylWord& word) {
    auto it = memo_.find(word);
    if (it != memo_.end()) return it->second;
    const WeylWord rest(word.begin() + 1, word.end());
    std::vector<Polynomial> out;
    for (const auto& p : values(rest)) out.push_back(p.is_zero() ? p : ops_.apply(word.front(), p));
    return memo_.emplace(word, std::move(out)).first->second;
  }

 private:
  const DividedDifference& ops_;
  std::map<WeylWord, std::vector<Polynomial>> memo_;
};

Rational constant_of(const Polynomial& p) {
  if (p.is_zero()) return 0;
  if (!p.is_constant()) throw Error("d_w(f) is not a constant; degrees do not match");
  return p.terms()[0].coeff;
}

bool is_integer(const Rational& r) { return r.get_den() == 1; }

// Determinant and, on request, the inverse of a square rational matrix by
// Gauss-Jordan elimination.
Rational determinant(std::vector<std::vector<Rational>> m, std::vector<std::vector<Rational>>* inverse) {
  const std::size_t n = m.size();
  std::vector<std::vector<Rational>> inv;
  if (inverse) {
    inv.assign(n, std::vector<Rational>(n, 0));
    for (std::size_t k = 0; k < n; ++k) inv[k][k] = 1;
  }
  Rational det = 1;
  for (std::size_t c = 0; c < n; ++c) {
    std::size_t piv = c;
    while (piv < n && m[piv][c] == 0) ++piv;
    if (piv == n) return 0;
    if (piv != c) {
      std::swap(m[piv], m[c]);
      if (inverse) std::swap(inv[piv], inv[c]);
      det = -det;
    }
    const Rational p = m[c][c];
    det *= p;
    for (std::size_t k = 0; k < n; ++k) {
      m[c][k] /= p;
      if (inverse) inv[c][k] /= p;
    }
    for (std::size_t r = 0; r < n; ++r) {
      if (r == c || m[r][c] == 0) continue;
      const Rational f = m[r][c];
      for (std::size_t k = c; k < n; ++k) {
        if (m[c][k] != 0) m[r][k] -= f * m[c][k];
      }
      if (inverse) {
        for (std::size_t k = 0; k < n; ++k) {
          if (inv[c][k] != 0) inv[r][k] -= f * inv[c][k];
        }
      }
    }
  }
  if (inverse) *inverse = std::move(inv);
  return det;
}

Polynomial top_seed(const RootSystem& rs, const DividedDifference& ops) {
  Polynomial prod = Polynomial::constant(ops.ring(), 1);
  for (const auto& a : rs.positive_roots()) prod *= ops.frame().linear_form(a);
  Integer order = 1;
  for (int d : rs.chevalley_degrees()) order *= d;
  return prod.scaled(Rational(1) / Rational(order));
}

Polynomial staircase_seed(const RootSystem& rs, const DividedDifference& ops) {
  if (rs.name()[0] != 'A') throw Error("staircase seed is defined for type A only, got " + rs.name());
  const std::size_t n = rs.rank();
  // x_1 = w_1, x_i = w_i - w_{i-1}: the weights of the standard representation.
  Polynomial seed = Polynomial::constant(ops.ring(), 1);
  for (std::size_t i = 1; i <= n; ++i) {
    Weight x(n, 0);
    x[i - 1] = 1;
    if (i > 1) x[i - 2] = -1;
    seed *= pow(ops.frame().linear_form(x), static_cast<std::uint32_t>(n + 1 - i));
  }
  return seed;
}

std::vector<Polynomial> borel_relations(const RootSystem& rs, const DividedDifference& ops, std::uint32_t max_degree) {
  std::vector<Polynomial> out;
  const WeightFrame integral = ops.frame().with_coefficients(CoefficientRing::integers());
  for (int d : rs.chevalley_degrees()) {
    if (static_cast<std::uint32_t>(d) > max_degree) continue;
    out.push_back(expand_power_sum(power_sum_oracle(integral, static_cast<unsigned>(d)), 10000000)
                      .with_ring(ops.ring()));
  }
  return out;
}

}  // namespace

namespace {

Polynomial random_form(const Ring& ring, std::uint32_t degree, Rng& rng) {
  const auto monomials = ring->monomials_of_degree(degree);
  std::vector<Term> terms;
  const std::size_t count = 1 + rng.below(6);
  for (std::size_t k = 0; k < count; ++k) {
    terms.push_back(Term{monomials[rng.below(monomials.size())], Rational(rng.between(-9, 9))});
  }
  return Polynomial::from_terms(ring, std::move(terms));
}

int braid_order(const RootSystem& rs, int i, int j) {
  switch (rs.cartan().at(static_cast<std::size_t>(i - 1), static_cast<std::size_t>(j - 1)) *
          rs.cartan().at(static_cast<std::size_t>(j - 1), static_cast<std::size_t>(i - 1))) {
    case 0:
      return 2;
    case 1:
      return 3;
    case 2:
      return 4;
    case 3:
      return 6;
  }
  throw Error("no finite braid relation for the pair " + std::to_string(i) + "," + std::to_string(j));
}

WeylWord alternating(int i, int j, int count) {
  WeylWord w;
  for (int k = 0; k < count; ++k) w.push_back(k % 2 == 0 ? i : j);
  return w;
}

}  // namespace

VerificationReport divided_difference_properties(const RootSystem& rs, std::size_t trials, std::uint64_t seed) {
  VerificationReport report;
  report.check = "divided-difference-properties";
  report.parameters["type"] = rs.name();
  report.parameters["trials"] = trials;
  report.parameters["seed"] = seed;
  const DividedDifference ops = divided_differences(rs);
  const int r = ops.rank();
  Rng rng(seed);
  std::size_t square = 0, braid = 0, leibniz = 0;
  for (std::size_t t = 0; t < trials; ++t) {
    const Polynomial f = random_form(ops.ring(), 1 + static_cast<std::uint32_t>(rng.below(5)), rng);
    const Polynomial g = random_form(ops.ring(), 1 + static_cast<std::uint32_t>(rng.below(3)), rng);
    const int i = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r)));
    if (!ops.apply(i, ops.apply(i, f)).is_zero()) ++square;
    if (r > 1) {
      int j = 1 + static_cast<int>(rng.below(static_cast<std::uint64_t>(r - 1)));
      if (j >= i) ++j;
      const int m = braid_order(rs, i, j);
      if (!(ops.apply_word(alternating(i, j, m), f) == ops.apply_word(alternating(j, i, m), f))) ++braid;
    }
    if (!(ops.apply(i, f * g) == ops.apply(i, f) * g + ops.frame().reflect(i, f) * ops.apply(i, g))) ++leibniz;
  }
  report.require(square == 0 && braid == 0 && leibniz == 0);
  report.results.push_back(Json{{"property", "square-zero"}, {"trials", trials}, {"failures", square}});
  report.results.push_back(Json{{"property", "braid"}, {"trials", trials}, {"failures", braid}});
  report.results.push_back(Json{{"property", "twisted-leibniz"}, {"trials", trials}, {"failures", leibniz}});
  return report;
}

SchubertExpansion schubert_basis(const RootSystem& rs, std::uint32_t length_cap, std::optional<SchubertSeed> seed) {
  const SchubertSeed chosen = seed.value_or(rs.rank() <= 3 ? SchubertSeed::kTopClass : SchubertSeed::kDualBasis);
  const std::size_t top_length = rs.positive_roots().size();
  if (chosen != SchubertSeed::kDualBasis && rs.rank() > 3) {
    throw Error(to_string(chosen) + " seed needs rank <= 3, " + rs.name() + " has rank " + std::to_string(rs.rank()));
  }
  if (chosen == SchubertSeed::kDualBasis && rs.rank() > 3 && length_cap > 4) {
    throw Error("length cap " + std::to_string(length_cap) + " exceeds 4 for " + rs.name());
  }
  const std::uint32_t cap = static_cast<std::uint32_t>(std::min<std::size_t>(length_cap, top_length));
  DividedDifference ops = divided_differences(rs);
  const bool descent = chosen != SchubertSeed::kDualBasis;

  // The ideal is needed up to the cap for tables and comparisons.
  const std::uint32_t ideal_degree = descent ? static_cast<std::uint32_t>(top_length) : cap;
  auto relations = borel_relations(rs, ops, ideal_degree);
  GroebnerBasis ideal = relations.empty()
                           ? GroebnerBasis(ops.ring(), {}, false, cap, GroebnerStats{})
                           : buchberger(relations, descent ? std::nullopt : std::optional<std::uint32_t>(cap));

  const auto elements = enumerate_weyl(rs, descent ? top_length : cap);
  std::vector<SchubertClass> classes;
  for (const auto& e : elements) {
    if (e.word.size() > cap) continue;
    auto words = reduced_words(rs, e);
    classes.push_back(SchubertClass{words.front(), e.key, static_cast<std::uint32_t>(e.word.size()),
                                    Polynomial(ops.ring())});
  }
  std::stable_sort(classes.begin(), classes.end(), [](const SchubertClass& a, const SchubertClass& b) {
    return a.length != b.length ? a.length < b.length : a.word < b.word;
  });

  SchubertExpansion out{ops, cap, chosen, ideal, top_length, {}, {}, 0, 0};
  if (descent) {
    // P_{w s_i} = d_i P_w whenever w s_i is shorter; every parent is compared.
    std::map<Weight, Polynomial> poly;
    Weight w0 = rs.rho();
    for (auto& c : w0) c = -c;
    poly.emplace(w0, chosen == SchubertSeed::kTopClass ? top_seed(rs, ops) : staircase_seed(rs, ops));
    std::vector<const WeylElement*> by_length(elements.size());
    for (std::size_t k = 0; k < elements.size(); ++k) by_length[k] = &elements[k];
    std::stable_sort(by_length.begin(), by_length.end(),
                     [](const WeylElement* a, const WeylElement* b) { return a->word.size() > b->word.size(); });
    for (const WeylElement* w : by_length) {
      auto it = poly.find(w->key);
      if (it == poly.end()) throw Error("element without a Schubert polynomial during descent");
      const Polynomial pw = it->second;
      for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) {
        if (w->key[static_cast<std::size_t>(i - 1)] >= 0) continue;
        Polynomial child = ops.apply(i, pw);
        const Weight ck = rs.simple_reflection(i, w->key);
        auto [slot, inserted] = poly.try_emplace(ck, child);
        if (!inserted) {
          ++out.path_checks;
          if (!(slot->second == child)) ++out.path_mismatches;
        }
      }
    }
    for (auto& c : classes) c.poly = poly.at(c.key);
  }

  for (std::uint32_t d = 1; d <= cap; ++d) {
    DegreeTable t;
    t.degree = d;
    t.monomials = standard_monomials(ideal, d);
    for (std::size_t k = 0; k < classes.size(); ++k) {
      if (classes[k].length == d) t.classes.push_back(k);
    }
    std::vector<Polynomial> inputs;
    for (const auto& m : t.monomials) inputs.push_back(Polynomial::monomial(ops.ring(), m));
    WordEvaluator eval(ops, std::move(inputs));
    t.matrix.assign(t.monomials.size(), std::vector<Rational>(t.classes.size(), 0));
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      const auto& vals = eval.values(classes[t.classes[c]].word);
      for (std::size_t r = 0; r < vals.size(); ++r) t.matrix[r][c] = constant_of(vals[r]);
    }
    t.integral = true;
    for (const auto& row : t.matrix) {
      for (const auto& v : row) t.integral = t.integral && is_integer(v);
    }
    if (t.monomials.size() != t.classes.size()) {
      throw Error("degree " + std::to_string(d) + " has " + std::to_string(t.monomials.size()) +
                  " standard monomials but " + std::to_string(t.classes.size()) + " elements");
    }
    if (descent) {
      t.determinant = determinant(t.matrix, nullptr);
    } else {
      // P_v = sum_m X[m][v] m with sum_m X[m][v] d_w(m) = [v == w], so X is
      // the inverse of the transpose.
      std::vector<std::vector<Rational>> transpose(t.classes.size(), std::vector<Rational>(t.monomials.size()));
      for (std::size_t r = 0; r < t.monomials.size(); ++r) {
        for (std::size_t c = 0; c < t.classes.size(); ++c) transpose[c][r] = t.matrix[r][c];
      }
      std::vector<std::vector<Rational>> x;
      t.determinant = determinant(transpose, &x);
      if (t.determinant == 0) throw Error("monomial table of degree " + std::to_string(d) + " is singular");
      for (std::size_t c = 0; c < t.classes.size(); ++c) {
        std::vector<Term> terms;
        for (std::size_t r = 0; r < t.monomials.size(); ++r) {
          if (x[r][c] != 0) terms.push_back(Term{t.monomials[r], x[r][c]});
        }
        classes[t.classes[c]].poly = Polynomial::from_terms(ops.ring(), std::move(terms));
      }
    }
    out.tables.push_back(std::move(t));
  }
  for (auto& c : classes) {
    if (c.length == 0) c.poly = Polynomial::constant(ops.ring(), 1);
  }
  if (descent) {
    for (auto& c : classes) {
      if (c.length == 0 && !(c.poly == Polynomial::constant(ops.ring(), 1))) ++out.path_mismatches;
    }
  }
  out.classes = std::move(classes);
  return out;
}

SchubertCoordinates express_in_schubert(const Polynomial& f, const SchubertExpansion& basis) {
  SchubertCoordinates out;
  if (f.is_zero()) return out;
  if (!f.ring()->same_variables(*basis.ops.ring())) throw Error("polynomial is not in the Schubert basis ring");
  if (!f.is_homogeneous()) throw Error("express_in_schubert needs a homogeneous polynomial");
  const Polynomial g = f.with_ring(basis.ops.ring());
  out.degree = *g.degree();
  if (out.degree > basis.length_cap) {
    throw Error("degree " + std::to_string(out.degree) + " is above the basis cap " +
                std::to_string(basis.length_cap));
  }
  for (const auto& c : basis.classes) {
    if (c.length != out.degree) continue;
    Rational a = constant_of(basis.ops.apply_word(c.word, g));
    out.integral = out.integral && is_integer(a);
    out.coefficients.emplace_back(c.word, a);
  }
  return out;
}

VerificationReport compare_modulo_ideal(const SchubertExpansion& a, const SchubertExpansion& b) {
  VerificationReport report;
  report.check = "schubert-seed-agreement";
  report.parameters["type"] = a.root_system().name();
  report.parameters["seeds"] = Json::array({to_string(a.seed), to_string(b.seed)});
  std::size_t compared = 0, differing = 0;
  for (const auto& c : a.classes) {
    const SchubertClass* other = b.find(c.key);
    if (other == nullptr) continue;
    ++compared;
    if (!a.ideal.normal_form(c.poly - other->poly.with_ring(c.poly.ring())).is_zero()) ++differing;
  }
  report.require(compared > 0 && differing == 0);
  report.results.push_back(Json{{"compared", compared}, {"differing", differing}, {"passed", report.passed}});
  return report;
}

VerificationReport reduced_word_independence(const SchubertExpansion& basis) {
  VerificationReport report;
  report.check = "reduced-word-independence";
  report.parameters["type"] = basis.root_system().name();
  report.parameters["length_cap"] = basis.length_cap;
  report.parameters["seed"] = to_string(basis.seed);
  // d_w on standard monomials, evaluated along every reduced word.
  std::size_t elements = 0, words = 0, mismatches = 0;
  for (const auto& t : basis.tables) {
    std::vector<Polynomial> inputs;
    for (const auto& m : t.monomials) inputs.push_back(Polynomial::monomial(basis.ops.ring(), m));
    WordEvaluator eval(basis.ops, inputs);
    for (std::size_t c = 0; c < t.classes.size(); ++c) {
      const SchubertClass& cls = basis.classes[t.classes[c]];
      const auto all = reduced_words(basis.root_system(), WeylElement{cls.key, cls.word});
      if (all.size() < 2) continue;
      ++elements;
      for (const auto& w : all) {
        ++words;
        const auto& vals = eval.values(w);
        for (std::size_t r = 0; r < vals.size(); ++r) {
          if (constant_of(vals[r]) != t.matrix[r][c]) {
            ++mismatches;
            break;
          }
        }
      }
    }
  }
  const bool ok = mismatches == 0 && basis.path_mismatches == 0;
  report.require(ok);
  report.results.push_back(Json{{"elements_with_several_words", elements},
                                {"words_checked", words},
                                {"word_mismatches", mismatches},
                                {"descent_paths_checked", basis.path_checks},
                                {"descent_path_mismatches", basis.path_mismatches},
                                {"passed", ok}});
  return report;
}

}  // namespace flagcoh
