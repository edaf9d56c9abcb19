#include "flagcoh/presentation.hpp"

#include <algorithm>
#include <atomic>
#include <chrono>
#include <thread>
#include <unordered_map>

#include "flagcoh/invariants.hpp"
#include "flagcoh/linalg.hpp"
#include "transcription.hpp"

namespace flagcoh {

GradedPresentation::GradedPresentation(std::string name, std::vector<Variable> generators,
                                       CoefficientRing coefficients, const std::vector<FormulaText>& abbreviations,
                                       const std::vector<FormulaText>& relations, std::string provenance,
                                       bool extended_grammar)
    : name_(std::move(name)), provenance_(std::move(provenance)) {
  ring_ = RingDescriptor::make(generators, coefficients);
  std::vector<Variable> all = generators;
  for (const auto& a : abbreviations) all.push_back(Variable{a.name, a.q_degree});
  authoring_ = RingDescriptor::make(std::move(all), coefficients);
  auto read = [&](const FormulaText& f) {
    try {
      Polynomial p = extended_grammar ? parse_expression(f.text, authoring_) : parse(f.text, authoring_);
      return NamedPolynomial{f.name, f.q_degree, std::move(p)};
    } catch (const ParseError& e) {
      throw ParseError("in " + f.name + ": " + e.what(), e.offset());
    }
  };
  for (const auto& a : abbreviations) abbreviations_.push_back(read(a));
  for (const auto& r : relations) relations_.push_back(read(r));
  build_expansion();
}

GradedPresentation GradedPresentation::from_polynomials(std::string name, Ring ring,
                                                        std::vector<NamedPolynomial> relations,
                                                        std::string provenance) {
  GradedPresentation p;
  p.name_ = std::move(name);
  p.provenance_ = std::move(provenance);
  p.ring_ = ring;
  p.authoring_ = std::move(ring);
  for (const auto& r : relations) {
    if (!same_ring(r.poly.ring(), p.ring_)) throw Error("relation " + r.name + " is not in the presentation ring");
  }
  p.relations_ = std::move(relations);
  p.build_expansion();
  return p;
}

void GradedPresentation::build_expansion() {
  SubstitutionMap map(authoring_, ring_);
  for (const auto& v : ring_->variables()) map.set_identity(v.name);
  images_.clear();
  for (const auto& a : abbreviations_) {
    // apply() throws if a later abbreviation is referenced.
    Polynomial image = map.apply(a.poly);
    map.set(a.name, image);
    images_.push_back(std::move(image));
  }
  expansion_.emplace(std::move(map));
}

const NamedPolynomial& GradedPresentation::relation(std::string_view name) const {
  for (const auto& r : relations_) {
    if (r.name == name) return r;
  }
  throw Error("presentation " + name_ + " has no relation " + std::string(name));
}

Polynomial GradedPresentation::expand(const Polynomial& p) const {
  if (abbreviations_.empty() && same_ring(p.ring(), ring_)) return p;
  return expansion_->apply(p);
}

const Polynomial& GradedPresentation::abbreviation_image(std::string_view name) const {
  for (std::size_t k = 0; k < abbreviations_.size(); ++k) {
    if (abbreviations_[k].name == name) return images_[k];
  }
  throw Error("presentation " + name_ + " has no abbreviation " + std::string(name));
}

GradedPresentation GradedPresentation::with_relation(std::string_view name, const Polynomial& poly) const {
  GradedPresentation copy = *this;
  for (auto& r : copy.relations_) {
    if (r.name != name) continue;
    if (!same_ring(poly.ring(), authoring_)) throw Error("replacement for " + r.name + " is in another ring");
    r.poly = poly;
    return copy;
  }
  throw Error("presentation " + name_ + " has no relation " + std::string(name));
}

Json GradedPresentation::to_json() const {
  Json j;
  j["format"] = kPresentationFormat;
  j["name"] = name_;
  j["coefficients"] = ring_->coefficients().name();
  j["generators"] = Json::array();
  for (const auto& v : ring_->variables()) j["generators"].push_back(Json{{"name", v.name}, {"q_degree", v.q_degree}});
  auto named = [](const std::vector<NamedPolynomial>& list) {
    Json a = Json::array();
    for (const auto& n : list) a.push_back(Json{{"name", n.name}, {"q_degree", n.q_degree}, {"poly", render(n.poly)}});
    return a;
  };
  j["abbreviations"] = named(abbreviations_);
  j["relations"] = named(relations_);
  j["provenance"] = provenance_;
  return j;
}

GradedPresentation GradedPresentation::from_json(const Json& j) {
  try {
    if (j.contains("format") && j.at("format") != kPresentationFormat) {
      throw Error("unsupported presentation format " + j.at("format").dump());
    }
    std::vector<Variable> generators;
    for (const auto& g : j.at("generators")) {
      generators.push_back(Variable{g.at("name").get<std::string>(), g.at("q_degree").get<std::uint32_t>()});
    }
    auto texts = [&](const char* key) {
      std::vector<FormulaText> out;
      if (!j.contains(key)) return out;
      for (const auto& r : j.at(key)) {
        out.push_back(FormulaText{r.at("name").get<std::string>(), r.at("q_degree").get<std::uint32_t>(),
                                  r.at("poly").get<std::string>()});
      }
      return out;
    };
    const std::string coeffs = j.value("coefficients", std::string("Z"));
    return GradedPresentation(j.at("name").get<std::string>(), std::move(generators),
                              parse_coefficient_ring(coeffs), texts("abbreviations"), texts("relations"),
                              j.value("provenance", std::string()));
  } catch (const Json::exception& e) {
    throw Error(std::string("malformed presentation: ") + e.what());
  }
}

bool operator==(const GradedPresentation& a, const GradedPresentation& b) {
  auto same = [](const std::vector<NamedPolynomial>& x, const std::vector<NamedPolynomial>& y) {
    if (x.size() != y.size()) return false;
    for (std::size_t k = 0; k < x.size(); ++k) {
      if (x[k].name != y[k].name || x[k].q_degree != y[k].q_degree || !(x[k].poly == y[k].poly)) return false;
    }
    return true;
  };
  return a.name_ == b.name_ && a.provenance_ == b.provenance_ && *a.ring_ == *b.ring_ &&
         *a.authoring_ == *b.authoring_ && same(a.abbreviations_, b.abbreviations_) &&
         same(a.relations_, b.relations_);
}

std::uint32_t indexed_degree(std::string_view name) {
  std::size_t k = name.size();
  while (k > 0 && name[k - 1] >= '0' && name[k - 1] <= '9') --k;
  if (k == name.size()) throw Error("relation name '" + std::string(name) + "' carries no degree index");
  return static_cast<std::uint32_t>(std::stoul(std::string(name.substr(k))));
}

VerificationReport transcription_audit(const GradedPresentation& p) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "transcription-audit";
  report.parameters["presentation"] = p.name();
  report.parameters["generators"] = p.ring()->size();
  report.parameters["relations"] = p.relations().size();
  auto audit = [&](const NamedPolynomial& n, const char* kind, bool indexed) {
    const bool homogeneous = !n.poly.is_zero() && n.poly.is_homogeneous();
    const std::uint32_t degree = homogeneous ? *n.poly.degree() : 0;
    bool ok = homogeneous && degree == n.q_degree;
    Json row{{"name", n.name}, {"kind", kind}, {"q_degree", n.q_degree}, {"homogeneous", homogeneous},
             {"terms", n.poly.size()}};
    if (indexed) {
      const std::uint32_t index = indexed_degree(n.name);
      row["indexed_degree"] = index;
      ok = ok && index == n.q_degree;
    }
    row["passed"] = ok;
    report.require(ok);
    report.results.push_back(row);
  };
  for (const auto& a : p.abbreviations()) audit(a, "abbreviation", false);
  for (const auto& r : p.relations()) audit(r, "relation", true);
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

namespace {

std::string elementary_text(int k, int n) {
  std::string out;
  std::vector<int> pick(static_cast<std::size_t>(k));
  for (int i = 0; i < k; ++i) pick[static_cast<std::size_t>(i)] = i + 1;
  while (true) {
    if (!out.empty()) out += " + ";
    for (int i = 0; i < k; ++i) out += (i ? "*t" : "t") + std::to_string(pick[static_cast<std::size_t>(i)]);
    int i = k - 1;
    while (i >= 0 && pick[static_cast<std::size_t>(i)] == n - k + i + 1) --i;
    if (i < 0) break;
    ++pick[static_cast<std::size_t>(i)];
    for (int m = i + 1; m < k; ++m) pick[static_cast<std::size_t>(m)] = pick[static_cast<std::size_t>(m - 1)] + 1;
  }
  return out;
}

std::vector<FormulaText> indexed(const std::vector<detail::TranscribedFormula>& list) {
  std::vector<FormulaText> out;
  for (const auto& f : list) out.push_back(FormulaText{std::string(f.name), indexed_degree(f.name), std::string(f.text)});
  return out;
}

void require_audit(const GradedPresentation& p) {
  const auto report = transcription_audit(p);
  if (report.passed) return;
  std::string bad;
  for (const auto& r : report.results) {
    if (!r["passed"].get<bool>()) bad += " " + r["name"].get<std::string>();
  }
  throw Error("transcription audit failed for " + p.name() + ":" + bad);
}

}  // namespace

GradedPresentation e8t_presentation() {
  std::vector<Variable> generators;
  for (int i = 1; i <= 8; ++i) generators.push_back(Variable{"t" + std::to_string(i), 1});
  generators.push_back(Variable{"t", 1});
  for (std::uint32_t i : {3, 4, 5, 6, 9, 10, 15}) generators.push_back(Variable{"g" + std::to_string(i), i});

  std::vector<FormulaText> abbreviations;
  for (int k = 1; k <= 8; ++k) {
    abbreviations.push_back(FormulaText{"c" + std::to_string(k), static_cast<std::uint32_t>(k), elementary_text(k, 8)});
  }
  const std::uint32_t uvwx_degrees[] = {1, 6, 10, 15};
  std::size_t k = 0;
  for (const auto& f : detail::uvwx_text()) {
    abbreviations.push_back(FormulaText{std::string(f.name), uvwx_degrees[k++], std::string(f.text)});
  }
  GradedPresentation p("E8T", std::move(generators), CoefficientRing::integers(), abbreviations,
                       indexed(detail::e8t_relation_text()),
                       "H*(E8/T; Z): generators t1..t8, t, gamma_i; c_k is e_k(t1..t8); u, v, w, x as stated", true);
  require_audit(p);
  return p;
}

GradedPresentation e8c_presentation() {
  std::vector<Variable> generators = {{"u", 1}, {"v", 6}, {"w", 10}, {"x", 15}};
  GradedPresentation p("E8C", std::move(generators), CoefficientRing::integers(), {},
                       indexed(detail::e8c_relation_text()), "H*(E8/C; Z): generators u, v, w, x", true);
  require_audit(p);
  return p;
}

GradedPresentation borel_presentation(const RootSystem& rs) {
  if (rs.rank() > 3) {
    throw Error("Borel presentation of " + rs.name() + " needs rank <= 3 (rank is " + std::to_string(rs.rank()) + ")");
  }
  const WeightFrame frame = WeightFrame::fundamental(rs);
  std::vector<NamedPolynomial> relations;
  for (int d : rs.chevalley_degrees()) {
    const auto oracle = power_sum_oracle(frame, static_cast<unsigned>(d));
    Polynomial p = expand_power_sum(oracle, 1000000).primitive();
    relations.push_back(NamedPolynomial{"p" + std::to_string(d), static_cast<std::uint32_t>(d), std::move(p)});
  }
  GradedPresentation p = GradedPresentation::from_polynomials(
      rs.name(), frame.ring(), std::move(relations),
      "Borel presentation of H*(" + rs.name() + "/T; Q): primitive parts of power sums over " +
          rs.invariant_weight_spec());
  require_audit(p);
  return p;
}

GradedPresentation builtin_presentation(std::string_view space) {
  if (space == "E8T") return e8t_presentation();
  if (space == "E8C") return e8c_presentation();
  return borel_presentation(RootSystem::build(space));
}

VerificationReport e8c_consistency(const GradedPresentation& e8t, const GradedPresentation& e8c) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport report;
  report.check = "e8c-consistency";
  SubstitutionMap rename(e8c.ring(), e8t.authoring_ring());
  for (const auto& v : e8c.ring()->variables()) rename.set_identity(v.name);
  auto text_of = [](const std::vector<detail::TranscribedFormula>& list, std::string_view name) {
    for (const auto& f : list) {
      if (f.name == name) return f.text;
    }
    throw Error("no transcription named " + std::string(name));
  };
  for (std::uint32_t d : {20U, 24U, 30U}) {
    const std::string rho = "rho" + std::to_string(d);
    const std::string r = "r" + std::to_string(d);
    const bool same_poly = rename.apply(e8c.relation(r).poly) == e8t.relation(rho).poly;
    const bool same_text = text_of(detail::e8t_relation_text(), rho) == text_of(detail::e8c_relation_text(), r);
    report.require(same_poly && same_text);
    report.results.push_back(Json{{"relation", rho}, {"against", r}, {"equal_polynomials", same_poly},
                                  {"identical_transcription", same_text}, {"passed", same_poly && same_text}});
  }
  report.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return report;
}

std::vector<Integer> ci_poincare_series(const std::vector<std::uint32_t>& gen_degrees,
                                        const std::vector<std::uint32_t>& rel_degrees, std::uint32_t cutoff) {
  if (gen_degrees.empty() || rel_degrees.empty()) throw Error("ci_poincare_series needs generator and relation degrees");
  std::vector<Integer> series(cutoff + 1, 0);
  series[0] = 1;
  for (std::uint32_t r : rel_degrees) {
    if (r == 0) throw Error("relation degree 0");
    for (std::size_t k = cutoff + 1; k-- > r;) series[k] -= series[k - r];
  }
  // Division by (1 - q^g) is a running sum with stride g.
  for (std::uint32_t g : gen_degrees) {
    if (g == 0) throw Error("generator degree 0");
    for (std::size_t k = g; k <= cutoff; ++k) series[k] += series[k - g];
  }
  return series;
}

namespace {

// Variables that occur in some relation only as a single term v with a
// nonzero constant coefficient. Ordering columns by these first lets the
// rows of such relations act as substitutions.
std::vector<std::size_t> pivot_variables(const std::vector<Polynomial>& relations, std::size_t nvars) {
  std::vector<std::pair<std::uint32_t, std::size_t>> found;
  std::vector<char> taken(nvars, 0);
  for (const auto& p : relations) {
    for (std::size_t v = 0; v < nvars; ++v) {
      if (taken[v]) continue;
      std::size_t occurrences = 0;
      bool linear = false;
      for (const auto& t : p.terms()) {
        if (t.monomial.exponent(v) == 0) continue;
        ++occurrences;
        linear = t.monomial.total_degree() == 1;
      }
      if (occurrences == 1 && linear) {
        found.emplace_back(*p.degree(), v);
        taken[v] = 1;
        break;
      }
    }
  }
  std::stable_sort(found.begin(), found.end(), [](auto& a, auto& b) { return a.first > b.first; });
  std::vector<std::size_t> out;
  for (auto& f : found) out.push_back(f.second);
  return out;
}

std::uint64_t degree_rank(const std::vector<Polynomial>& relations, const Ring& ring, std::uint32_t d,
                          const std::vector<std::size_t>& pivots, const LinearAlgebraOptions& options,
                          std::uint64_t& columns) {
  std::vector<Monomial> monomials = ring->monomials_of_degree(d);
  columns = monomials.size();
  if (monomials.size() > options.column_limit) {
    throw Error("graded dimension at q-degree " + std::to_string(d) + " needs " + std::to_string(monomials.size()) +
                " columns, limit is " + std::to_string(options.column_limit));
  }
  std::stable_sort(monomials.begin(), monomials.end(), [&](const Monomial& a, const Monomial& b) {
    for (std::size_t v : pivots) {
      if (a.exponent(v) != b.exponent(v)) return a.exponent(v) > b.exponent(v);
    }
    return false;
  });
  std::unordered_map<Monomial, std::uint32_t, MonomialHash> index;
  index.reserve(monomials.size());
  for (std::size_t k = 0; k < monomials.size(); ++k) index.emplace(monomials[k], static_cast<std::uint32_t>(k));

  const std::uint64_t p = options.prime;
  std::vector<linalg::SparseRow> rows;
  for (const auto& rel : relations) {
    const std::uint32_t e = *rel.degree();
    if (e > d) continue;
    std::vector<std::uint64_t> coeffs;
    for (const auto& t : rel.terms()) coeffs.push_back(modp::reduce(t.coeff, p));
    for (const auto& m : ring->monomials_of_degree(d - e)) {
      linalg::SparseRow row;
      std::vector<std::pair<std::uint32_t, std::uint64_t>> entries;
      for (std::size_t k = 0; k < rel.terms().size(); ++k) {
        if (coeffs[k] != 0) entries.emplace_back(index.at(m * rel.terms()[k].monomial), coeffs[k]);
      }
      std::sort(entries.begin(), entries.end());
      for (auto& [c, v] : entries) {
        row.cols.push_back(c);
        row.vals.push_back(v);
      }
      if (!row.cols.empty()) rows.push_back(std::move(row));
    }
  }
  // Seeded shuffle, then a stable sort by leading column.
  Rng rng(options.seed ^ (0x9E3779B97F4A7C15ULL * (d + 1)));
  for (std::size_t k = rows.size(); k > 1; --k) std::swap(rows[k - 1], rows[rng.below(k)]);
  std::stable_sort(rows.begin(), rows.end(),
                   [](const linalg::SparseRow& a, const linalg::SparseRow& b) { return a.cols[0] < b.cols[0]; });
  return linalg::sparse_rank(std::move(rows), monomials.size(), p);
}

}  // namespace

HilbertData graded_dimensions_linear_algebra(const GradedPresentation& pres, std::uint32_t cutoff,
                                             const LinearAlgebraOptions& options) {
  std::vector<Polynomial> relations;
  for (const auto& r : pres.relations()) {
    if (r.q_degree > cutoff) continue;
    Polynomial e = pres.expand(r.poly);
    if (!e.is_zero()) relations.push_back(std::move(e));
  }
  const Ring& ring = pres.ring();
  const auto pivots = pivot_variables(relations, ring->size());

  std::vector<std::uint64_t> dims(cutoff + 1, 0);
  std::vector<std::string> errors(cutoff + 1);
  auto work = [&](std::uint32_t d) {
    try {
      std::uint64_t columns = 0;
      const std::uint64_t rank = degree_rank(relations, ring, d, pivots, options, columns);
      dims[d] = columns - rank;
    } catch (const std::exception& e) {
      errors[d] = e.what();
    }
  };
  const unsigned jobs = std::max(1U, options.jobs);
  if (jobs == 1) {
    for (std::uint32_t d = 0; d <= cutoff; ++d) work(d);
  } else {
    // Largest degrees first; each degree is independent.
    std::atomic<std::uint32_t> next{0};
    std::vector<std::thread> threads;
    for (unsigned t = 0; t < jobs; ++t) {
      threads.emplace_back([&] {
        for (std::uint32_t k; (k = next++) <= cutoff;) work(cutoff - k);
      });
    }
    for (auto& th : threads) th.join();
  }
  for (const auto& e : errors) {
    if (!e.empty()) throw Error(e);
  }
  HilbertData h;
  h.graded_dimensions = std::move(dims);
  h.is_finite = false;
  for (auto v : h.graded_dimensions) h.total_dimension += v;
  return h;
}

VerificationReport palindrome_check(const HilbertData& h) {
  VerificationReport report;
  report.check = "palindrome";
  report.parameters["dimensions"] = h.graded_dimensions;
  if (!h.is_finite) {
    report.require(false);
    report.results.push_back(Json{{"diagnostic", "quotient is not known to be finite"}, {"passed", false}});
    return report;
  }
  const auto top = h.top_degree();
  const std::size_t t = top.value_or(0);
  report.parameters["top_degree"] = t;
  std::vector<std::size_t> mismatches;
  for (std::size_t d = 0; d <= t; ++d) {
    const std::uint64_t a = d < h.graded_dimensions.size() ? h.graded_dimensions[d] : 0;
    const std::uint64_t b = t - d < h.graded_dimensions.size() ? h.graded_dimensions[t - d] : 0;
    if (a != b) mismatches.push_back(d);
  }
  report.require(mismatches.empty());
  report.results.push_back(Json{{"mismatched_degrees", mismatches}, {"passed", mismatches.empty()}});
  return report;
}

}  // namespace flagcoh
