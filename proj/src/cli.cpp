#include "flagcoh/cli.hpp"

#include <CLI11.hpp>

#include <chrono>
#include <fstream>
#include <functional>
#include <iostream>
#include <set>
#include <sstream>

#include "flagcoh/groebner.hpp"
#include "flagcoh/invariants.hpp"
#include "flagcoh/presentation.hpp"
#include "flagcoh/rootsys.hpp"
#include "flagcoh/schubert.hpp"

namespace flagcoh {

namespace {

class UsageError : public Error {
 public:
  using Error::Error;
};

// Every randomized check draws its seed from here, in a fixed order.
class SeedStream {
 public:
  explicit SeedStream(std::uint64_t seed) : rng_(seed) {}
  std::uint64_t next() { return rng_.next(); }

 private:
  Rng rng_;
};

VerificationReport timed(const std::function<VerificationReport()>& f) {
  const auto start = std::chrono::steady_clock::now();
  VerificationReport r = f();
  r.wall_seconds = std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
  return r;
}

std::uint64_t prime_of(const RunConfig& c) { return c.prime.value_or(kDefaultPrime); }

CoefficientRing coefficients_of(const RunConfig& c) {
  if (c.coeff == "Q") return CoefficientRing::rationals();
  if (c.coeff == "p") return CoefficientRing::prime_field(prime_of(c));
  throw UsageError("--coeff must be Q or p, got " + c.coeff);
}

Json integers_json(const std::vector<Integer>& v) {
  Json j = Json::array();
  for (const auto& x : v) j.push_back(x.get_str());
  return j;
}

std::vector<std::uint32_t> generator_degrees(const GradedPresentation& p) {
  std::vector<std::uint32_t> out;
  for (const auto& v : p.ring()->variables()) out.push_back(v.q_degree);
  return out;
}

std::vector<std::uint32_t> relation_degrees(const GradedPresentation& p) {
  std::vector<std::uint32_t> out;
  for (const auto& r : p.relations()) out.push_back(r.q_degree);
  return out;
}

std::vector<Polynomial> expanded_relations(const GradedPresentation& p, const Ring& ring) {
  std::vector<Polynomial> out;
  for (const auto& r : p.relations()) out.push_back(p.expand(r.poly).with_ring(ring));
  return out;
}

std::vector<std::uint64_t> to_u64(const std::vector<Integer>& v) {
  std::vector<std::uint64_t> out;
  for (const auto& x : v) out.push_back(x.get_ui());
  return out;
}

// ---- roots ----

VerificationReport roots_report(const RootSystem& rs) {
  VerificationReport r;
  r.check = "roots";
  r.parameters["type"] = rs.name();
  const auto roots = generate_roots(rs.cartan(), 100000);
  const std::set<Weight> set(roots.begin(), roots.end());
  bool closed = true;
  for (const auto& a : roots) {
    for (int i = 1; i <= static_cast<int>(rs.rank()); ++i) closed = closed && set.count(rs.simple_reflection(i, a)) == 1;
  }
  // Number of roots from the Chevalley degrees: sum of 2 (d - 1).
  std::size_t expected = 0;
  for (int d : rs.chevalley_degrees()) expected += 2 * static_cast<std::size_t>(d - 1);
  r.require(closed && roots.size() == expected && set.size() == roots.size());
  r.results.push_back(Json{{"count", roots.size()},
                           {"positive", rs.positive_roots().size()},
                           {"expected_from_degrees", expected},
                           {"closed_under_simple_reflections", closed}});
  return r;
}

// ---- invariants ----

WeightFrame frame_for(const RootSystem& rs) {
  if (rs.name() == "E8") return TCoordinateFrame::e8(rs).canonical();
  return WeightFrame::fundamental(rs);
}

std::vector<VerificationReport> invariants_reports(const RunConfig& c, SeedStream& seeds) {
  const auto rs = RootSystem::build(c.type);
  const WeightFrame frame = frame_for(rs);
  std::vector<std::uint32_t> degrees = c.degrees;
  if (degrees.empty()) {
    for (int d : rs.chevalley_degrees()) degrees.push_back(static_cast<std::uint32_t>(d));
  }
  std::vector<VerificationReport> out;
  for (auto j : degrees) {
    InvarianceOptions opts;
    opts.prime = prime_of(c);
    opts.seed = seeds.next();
    opts.jobs = c.jobs;
    out.push_back(timed([&] { return invariance_check(power_sum_oracle(frame, j), opts); }));
  }
  return out;
}

// ---- presentation and poincare ----

GradedPresentation load_presentation(const RunConfig& c) {
  if (c.input.empty()) return builtin_presentation(c.space);
  std::ifstream in(c.input);
  if (!in) throw UsageError("cannot read " + c.input);
  Json j;
  try {
    j = Json::parse(in);
  } catch (const Json::exception& e) {
    throw UsageError(c.input + " is not JSON: " + e.what());
  }
  return GradedPresentation::from_json(j);
}

VerificationReport emit_report(const std::string& space, const std::string& path) {
  VerificationReport r;
  r.check = "emit-presentation";
  r.parameters["space"] = space;
  r.parameters["path"] = path;
  emit_presentation(space, path);
  r.results.push_back(Json{{"reparsed_equal", true}});
  return r;
}

VerificationReport poincare_report(const GradedPresentation& p, std::optional<std::uint32_t> cutoff) {
  VerificationReport r;
  r.check = "ci-poincare-series";
  r.parameters["space"] = p.name();
  const auto gens = generator_degrees(p), rels = relation_degrees(p);
  std::int64_t top = 0;
  for (auto d : rels) top += d;
  for (auto d : gens) top -= d;
  if (top < 0) throw UsageError("more generator degree than relation degree; series is not a polynomial");
  const std::uint32_t n = cutoff.value_or(static_cast<std::uint32_t>(top));
  r.parameters["cutoff"] = n;
  const auto s = ci_poincare_series(gens, rels, std::max<std::uint32_t>(n, static_cast<std::uint32_t>(top) + 1));
  Integer total = 0;
  bool nonnegative = true;
  for (std::size_t d = 0; d < s.size(); ++d) {
    total += s[d];
    nonnegative = nonnegative && s[d] >= 0;
  }
  const bool polynomial = s[static_cast<std::size_t>(top) + 1] == 0;
  r.require(nonnegative && polynomial);
  r.results.push_back(Json{{"coefficients", integers_json(std::vector<Integer>(s.begin(), s.begin() + n + 1))},
                           {"top_degree", top},
                           {"value_at_1", total.get_str()},
                           {"nonnegative", nonnegative}});
  return r;
}

// ---- groebner ----

VerificationReport groebner_report(const GradedPresentation& p, const RunConfig& c) {
  VerificationReport r;
  r.check = "groebner";
  r.parameters["space"] = p.name();
  r.parameters["coeff"] = c.coeff;
  if (c.coeff == "p") r.parameters["prime"] = prime_of(c);
  if (c.degree_cap) r.parameters["degree_cap"] = *c.degree_cap;
  if (!c.degree_cap && p.ring()->variables().size() > 8) {
    throw UsageError(p.name() + " has " + std::to_string(p.ring()->variables().size()) +
                     " generators; pass --degree-cap or use 'verify e8t-betti'");
  }
  const Ring ring = p.ring()->with_coefficients(coefficients_of(c));
  const GroebnerBasis gb = buchberger(expanded_relations(p, ring), c.degree_cap);
  Json res{{"basis_size", gb.generators().size()},
           {"truncated", gb.truncated()},
           {"pairs_considered", gb.stats().pairs_considered},
           {"zero_reductions", gb.stats().zero_reductions}};
  Json lead = Json::array();
  for (const auto& m : gb.leading_monomials()) lead.push_back(render(Polynomial::monomial(ring, m)));
  res["leading_monomials"] = lead;
  if (!gb.truncated()) {
    const auto h = quotient_dimension(gb, c.cutoff.value_or(60));
    res["finite"] = h.is_finite;
    res["graded_dimensions"] = h.graded_dimensions;
    if (h.is_finite) {
      res["total_dimension"] = h.total_dimension;
      res["top_degree"] = *h.top_degree();
    }
  }
  r.results.push_back(res);
  return r;
}

// ---- schubert ----

std::optional<SchubertSeed> parse_basis_seed(const std::string& s) {
  if (s.empty()) return std::nullopt;
  if (s == "top") return SchubertSeed::kTopClass;
  if (s == "staircase") return SchubertSeed::kStaircase;
  if (s == "dual") return SchubertSeed::kDualBasis;
  throw UsageError("--basis-seed must be top, staircase or dual, got " + s);
}

VerificationReport schubert_report(const SchubertExpansion& b, bool require_unimodular) {
  VerificationReport r;
  r.check = "schubert-basis";
  r.parameters["type"] = b.root_system().name();
  r.parameters["length_cap"] = b.length_cap;
  r.parameters["seed"] = to_string(b.seed);
  auto expected = to_u64(length_generating_function(b.root_system().chevalley_degrees()));
  expected.resize(b.length_cap + 1);
  const auto profile = b.degree_profile();
  bool unimodular = true;
  Json tables = Json::array();
  for (const auto& t : b.tables) {
    unimodular = unimodular && t.unimodular();
    tables.push_back(Json{{"degree", t.degree},
                          {"size", t.monomials.size()},
                          {"integral", t.integral},
                          {"determinant", to_string(t.determinant)},
                          {"unimodular", t.unimodular()}});
  }
  const bool ok = profile == expected && b.path_mismatches == 0 && (!require_unimodular || unimodular);
  r.require(ok);
  r.results.push_back(Json{{"degree_profile", profile},
                           {"length_generating_function", expected},
                           {"descent_paths_checked", b.path_checks},
                           {"descent_path_mismatches", b.path_mismatches},
                           {"tables", tables},
                           {"unimodular_required", require_unimodular}});
  return r;
}

// ---- verify ----

std::vector<VerificationReport> verify_e8c(const RunConfig& c) {
  std::vector<VerificationReport> out;
  const auto e8c = e8c_presentation();
  out.push_back(timed([&] { return transcription_audit(e8c); }));
  out.push_back(timed([&] { return e8c_consistency(e8t_presentation(), e8c); }));
  out.push_back(timed([&] {
    VerificationReport r;
    r.check = "e8c-groebner";
    r.parameters["coeff"] = c.coeff;
    const auto gens = generator_degrees(e8c), rels = relation_degrees(e8c);
    std::uint32_t top = 0;
    for (auto d : rels) top += d;
    for (auto d : gens) top -= d;
    const Integer expected_total = weyl_order(RootSystem::build("E8")) / weyl_order(RootSystem::build("E7"));
    const auto series = to_u64(ci_poincare_series(gens, rels, top + 1));

    auto certify = [&](const CoefficientRing& coeffs, const std::string& label) {
      const GroebnerBasis gb = buchberger(expanded_relations(e8c, e8c.ring()->with_coefficients(coeffs)));
      const HilbertData h = quotient_dimension(gb, top + 1);
      auto dims = h.graded_dimensions;
      dims.resize(top + 2, 0);
      const bool palin = h.is_finite && palindrome_check(h).passed;
      const bool ok = h.is_finite && Integer(std::to_string(h.total_dimension)) == expected_total &&
                      h.top_degree() == top && palin && dims == series;
      r.require(ok);
      r.results.push_back(Json{{"coefficients", label},
                               {"basis_size", gb.generators().size()},
                               {"total_dimension", h.total_dimension},
                               {"expected_total", expected_total.get_str()},
                               {"top_degree", h.top_degree() ? Json(*h.top_degree()) : Json(nullptr)},
                               {"expected_top_degree", top},
                               {"palindromic", palin},
                               {"graded_dimensions", h.graded_dimensions},
                               {"matches_ci_series", dims == series},
                               {"passed", ok}});
      return gb.leading_monomials();
    };
    if (c.coeff == "Q") {
      // Cheap modular run first; its leading monomials must agree.
      const auto lead_p = certify(CoefficientRing::prime_field(prime_of(c)), "p");
      const auto lead_q = certify(CoefficientRing::rationals(), "Q");
      const bool same = lead_p == lead_q;
      r.require(same);
      r.results.push_back(Json{{"leading_monomials_agree", same}});
    } else {
      certify(coefficients_of(c), c.coeff);
    }
    return r;
  }));
  return out;
}

std::vector<VerificationReport> verify_e8t_betti(const RunConfig& c, SeedStream& seeds) {
  std::vector<VerificationReport> out;
  const auto e8t = e8t_presentation();
  out.push_back(timed([&] { return transcription_audit(e8t); }));
  out.push_back(timed([&] {
    VerificationReport r;
    r.check = "e8t-betti";
    const std::uint32_t cutoff = c.cutoff.value_or(6);
    LinearAlgebraOptions opts;
    opts.prime = prime_of(c);
    opts.seed = seeds.next();
    opts.jobs = c.jobs;
    r.parameters["cutoff"] = cutoff;
    r.parameters["prime"] = opts.prime;
    r.parameters["seed"] = opts.seed;
    const HilbertData h = graded_dimensions_linear_algebra(e8t, cutoff, opts);
    const auto series = to_u64(ci_poincare_series(generator_degrees(e8t), relation_degrees(e8t), cutoff));
    const bool ok = h.graded_dimensions == series && series.size() > 1 && series[0] == 1 && series[1] == 8;
    r.require(ok);
    r.results.push_back(Json{{"graded_dimensions_mod_p", h.graded_dimensions},
                             {"ci_series", series},
                             {"match", ok},
                             {"note", "rank mod p is at most the rank over Q, so each dimension mod p bounds the "
                                      "rational dimension from above"}});
    return r;
  }));
  return out;
}

std::vector<VerificationReport> verify_toda(const RunConfig& c, SeedStream& seeds) {
  std::vector<std::uint32_t> js = c.degrees.empty() ? std::vector<std::uint32_t>{2, 8, 12} : c.degrees;
  for (auto j : js) {
    if (j != 2 && j != 8 && j != 12) {
      throw UsageError("--j accepts 2, 8 and 12; degree " + std::to_string(j) + " is not expanded");
    }
  }
  std::vector<VerificationReport> out;
  const auto e8t = e8t_presentation();
  const auto frame = TCoordinateFrame::e8(RootSystem::build("E8"));
  out.push_back(timed([&] {
    VerificationReport r;
    r.check = "gamma-elimination";
    const SubstitutionMap g = gamma_elimination_map(e8t);
    for (const char* name : {"rho1", "rho3", "rho4", "rho5", "rho6", "rho9", "rho10", "rho15"}) {
      const bool zero = g.apply(e8t.expanded_relation(name).with_ring(g.source())).is_zero();
      r.require(zero);
      r.results.push_back(Json{{"relation", name}, {"vanishes", zero}});
    }
    return r;
  }));
  std::optional<Polynomial> p8;
  for (auto j : js) {
    out.push_back(timed([&] {
      const Polynomial inv = expand_power_sum(power_sum_oracle(frame.canonical(), j), 10000000);
      if (j == 8) p8 = inv;
      CongruenceOptions opts;
      opts.seed = seeds.next();
      return verify_toda_congruence(j, inv, e8t, opts).report();
    }));
  }
  out.push_back(timed([&] {
    VerificationReport r;
    r.check = "toda-negative-control";
    const Polynomial t2 = Polynomial::variable(e8t.authoring_ring(), "t2");
    const auto bad = e8t.with_relation("rho8", e8t.relation("rho8").poly + pow(t2, 8));
    if (!p8) p8 = expand_power_sum(power_sum_oracle(frame.canonical(), 8), 10000000);
    CongruenceOptions opts;
    opts.seed = seeds.next();
    const auto cert = verify_toda_congruence(8, *p8, bad, opts);
    r.parameters["perturbation"] = "rho8 + t2^8";
    r.require(!cert.solved && cert.infeasible);
    r.results.push_back(Json{{"solved", cert.solved}, {"infeasible", cert.infeasible}, {"diagnostic", cert.diagnostic}});
    return r;
  }));
  return out;
}

std::vector<VerificationReport> verify_schubert_props(const RunConfig& c, SeedStream& seeds) {
  std::vector<VerificationReport> out;
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto rs = RootSystem::build(type);
    const std::uint64_t s = seeds.next();
    out.push_back(timed([&] { return divided_difference_properties(rs, c.trials, s); }));
  }
  for (const char* type : {"A2", "B2"}) {
    const auto rs = RootSystem::build(type);
    const auto basis = schubert_basis(rs, static_cast<std::uint32_t>(rs.positive_roots().size()));
    out.push_back(timed([&] { return schubert_report(basis, true); }));
    out.push_back(timed([&] { return reduced_word_independence(basis); }));
  }
  return out;
}

std::vector<VerificationReport> verify_small_groups() {
  std::vector<VerificationReport> out;
  for (const char* type : {"A2", "B2", "G2"}) {
    out.push_back(timed([&] {
      const auto rs = RootSystem::build(type);
      VerificationReport r;
      r.check = "borel-presentation";
      r.parameters["type"] = type;
      const auto p = borel_presentation(rs);
      const GroebnerBasis gb = buchberger(expanded_relations(p, p.ring()->with_coefficients(CoefficientRing::rationals())));
      const HilbertData h = quotient_dimension(gb);
      const auto enumerated = length_profile(rs);
      const auto lgf = to_u64(length_generating_function(rs.chevalley_degrees()));
      const Integer order = weyl_order(rs);
      const bool ok = h.is_finite && Integer(std::to_string(h.total_dimension)) == order &&
                      h.graded_dimensions == enumerated && enumerated == lgf;
      r.require(ok);
      r.results.push_back(Json{{"total_dimension", h.total_dimension},
                               {"weyl_order", order.get_str()},
                               {"graded_dimensions", h.graded_dimensions},
                               {"weyl_length_profile", enumerated},
                               {"length_generating_function", lgf},
                               {"invariant_weights", rs.invariant_weight_spec()},
                               {"passed", ok}});
      return r;
    }));
  }
  return out;
}

std::vector<VerificationReport> dispatch(const RunConfig& c, SeedStream& seeds) {
  std::vector<VerificationReport> out;
  const std::string& cmd = c.command;
  if (cmd == "roots") {
    const auto rs = RootSystem::build(c.type);
    out.push_back(timed([&] { return roots_report(rs); }));
  } else if (cmd == "invariants") {
    out = invariants_reports(c, seeds);
  } else if (cmd == "presentation") {
    const auto p = load_presentation(c);
    out.push_back(timed([&] { return transcription_audit(p); }));
    if (!c.emit.empty() && !c.input.empty()) throw UsageError("--emit writes built-in presentations; drop --input");
    if (!c.emit.empty()) out.push_back(timed([&] { return emit_report(c.space, c.emit); }));
  } else if (cmd == "poincare") {
    const auto p = load_presentation(c);
    out.push_back(timed([&] { return poincare_report(p, c.cutoff); }));
  } else if (cmd == "groebner") {
    const auto p = load_presentation(c);
    out.push_back(timed([&] { return groebner_report(p, c); }));
  } else if (cmd == "schubert") {
    const auto rs = RootSystem::build(c.type);
    const auto basis = schubert_basis(rs, c.cap, parse_basis_seed(c.basis_seed));
    out.push_back(timed([&] {
      VerificationReport r = schubert_report(basis, false);
      if (c.emit_basis) r.results.push_back(Json{{"basis", basis.to_json()}});
      return r;
    }));
    out.push_back(timed([&] { return reduced_word_independence(basis); }));
  } else if (cmd == "verify") {
    if (c.target == "e8c") {
      out = verify_e8c(c);
    } else if (c.target == "e8t-betti") {
      out = verify_e8t_betti(c, seeds);
    } else if (c.target == "toda") {
      out = verify_toda(c, seeds);
    } else if (c.target == "schubert-props") {
      out = verify_schubert_props(c, seeds);
    } else if (c.target == "small-groups") {
      out = verify_small_groups();
    } else {
      throw UsageError("unknown verify target '" + c.target + "'");
    }
  } else {
    throw UsageError("unknown command '" + cmd + "'");
  }
  return out;
}

std::string command_line(const RunConfig& c) { return c.target.empty() ? c.command : c.command + " " + c.target; }

}  // namespace

void emit_presentation(const std::string& space, const std::string& path) {
  const auto p = builtin_presentation(space);
  {
    std::ofstream f(path);
    if (!f) throw Error("cannot write " + path);
    f << p.to_json().dump(2) << "\n";
  }
  std::ifstream in(path);
  const auto back = GradedPresentation::from_json(Json::parse(in));
  if (!(back == p)) throw Error("re-read presentation differs from the built-in " + space);
}

RunResult run(const RunConfig& config) {
  RunResult result;
  result.report.command = command_line(config);
  result.report.seed = config.seed;
  SeedStream seeds(config.seed);
  try {
    if (config.format != "text" && config.format != "json") throw UsageError("--format must be text or json");
    if (config.jobs == 0) throw UsageError("--jobs must be positive");
    result.report.checks = dispatch(config, seeds);
    result.exit_code = result.report.passed() ? 0 : 1;
  } catch (const std::exception& e) {
    VerificationReport err;
    err.check = "error";
    err.passed = false;
    err.results.push_back(Json{{"message", e.what()}});
    result.report.checks.push_back(err);
    result.exit_code = 2;
  }
  result.rendered = config.format == "json" ? result.report.to_json().dump(2) + "\n" : result.report.to_text();
  return result;
}

ParsedArgs parse_arguments(const std::vector<std::string>& args, const char* env_seed) {
  ParsedArgs parsed;
  RunConfig c;
  if (env_seed != nullptr && *env_seed != '\0') {
    try {
      std::size_t used = 0;
      c.seed = std::stoull(env_seed, &used);
      if (used != std::string(env_seed).size()) throw std::invalid_argument("trailing characters");
    } catch (const std::exception&) {
      parsed.exit_code = 2;
      parsed.message = "FLAGCOH_SEED is not an unsigned integer: " + std::string(env_seed);
      return parsed;
    }
  }

  CLI::App app{"Cohomology of flag manifolds: root systems, presentations and Schubert classes", "flagcoh"};
  app.require_subcommand(1);
  app.fallthrough();
  app.add_option("--seed", c.seed, "Seed for all randomized checks (default: FLAGCOH_SEED or 0)");
  app.add_option("--prime", c.prime, "Prime for modular computations");
  app.add_option("--format", c.format, "Report format")->check(CLI::IsMember({"text", "json"}));
  app.add_option("--out", c.out, "Write the report to this file");
  app.add_option("--jobs", c.jobs, "Worker threads")->check(CLI::PositiveNumber);

  auto* roots = app.add_subcommand("roots", "Generate the root system and check closure");
  roots->add_option("--type", c.type, "Root system type")->required();

  auto* inv = app.add_subcommand("invariants", "Weyl invariance of root power sums");
  inv->add_option("--type", c.type, "Root system type")->required();
  inv->add_option("--degree", c.degrees, "Degrees (default: Chevalley degrees)")->delimiter(',');

  auto* pres = app.add_subcommand("presentation", "Audit a built-in presentation, optionally writing it as JSON");
  pres->add_option("--space", c.space, "E8T, E8C or a small type");
  pres->add_option("--input", c.input, "Presentation file to audit");
  pres->add_option("--emit", c.emit, "Output file for the presentation");

  auto* poin = app.add_subcommand("poincare", "Complete-intersection Poincare series");
  poin->add_option("--space", c.space, "E8T, E8C or a small type");
  poin->add_option("--input", c.input, "Presentation file");
  poin->add_option("--cutoff", c.cutoff, "Highest degree");

  auto* gb = app.add_subcommand("groebner", "Groebner basis and quotient dimensions");
  gb->add_option("--space", c.space, "E8T, E8C or a small type");
  gb->add_option("--input", c.input, "Presentation file");
  gb->add_option("--coeff", c.coeff, "Coefficients")->check(CLI::IsMember({"Q", "p"}));
  gb->add_option("--degree-cap", c.degree_cap, "Skip S-pairs above this degree");
  gb->add_option("--cutoff", c.cutoff, "Degree cutoff for an infinite quotient");

  auto* sch = app.add_subcommand("schubert", "Schubert classes up to a length cap");
  sch->add_option("--type", c.type, "Root system type")->required();
  sch->add_option("--cap", c.cap, "Length cap");
  sch->add_option("--basis-seed", c.basis_seed, "top, staircase or dual")
      ->check(CLI::IsMember({"top", "staircase", "dual"}));
  sch->add_flag("--emit-basis", c.emit_basis, "Include the classes and change-of-basis tables in the report");

  auto* ver = app.add_subcommand("verify", "Certification suites");
  ver->require_subcommand(1);
  auto* v_e8c = ver->add_subcommand("e8c", "E8/C Groebner certification");
  v_e8c->add_option("--coeff", c.coeff, "Coefficients")->check(CLI::IsMember({"Q", "p"}));
  auto* v_betti = ver->add_subcommand("e8t-betti", "E8/T graded dimensions against the series");
  v_betti->add_option("--cutoff", c.cutoff, "Highest degree (default 6)");
  auto* v_toda = ver->add_subcommand("toda", "Congruence certificates after gamma elimination");
  v_toda->add_option("--j", c.degrees, "Degrees among 2, 8, 12")->delimiter(',');
  auto* v_props = ver->add_subcommand("schubert-props", "Divided difference identities and small Schubert bases");
  v_props->add_option("--trials", c.trials, "Random trials per property");
  ver->add_subcommand("small-groups", "Borel presentations of A2, B2, G2");

  std::vector<std::string> reversed(args.rbegin(), args.rend());
  try {
    app.parse(reversed);
  } catch (const CLI::CallForHelp&) {
    parsed.message = app.help();
    return parsed;
  } catch (const CLI::ParseError& e) {
    parsed.exit_code = 2;
    parsed.message = e.what();
    return parsed;
  }
  for (auto* sub : app.get_subcommands()) {
    c.command = sub->get_name();
    for (auto* target : sub->get_subcommands()) c.target = target->get_name();
  }
  parsed.config = c;
  return parsed;
}

int main_entry(const std::vector<std::string>& args, const char* env_seed, std::ostream& out, std::ostream& err) {
  const ParsedArgs parsed = parse_arguments(args, env_seed);
  if (!parsed.config) {
    (parsed.exit_code == 0 ? out : err) << parsed.message << (parsed.message.ends_with('\n') ? "" : "\n");
    return parsed.exit_code;
  }
  const RunResult result = run(*parsed.config);
  if (parsed.config->out.empty()) {
    out << result.rendered;
  } else {
    std::ofstream f(parsed.config->out);
    if (!f) {
      err << "cannot write " << parsed.config->out << "\n" << result.rendered;
      return 2;
    }
    f << result.rendered;
  }
  if (result.exit_code == 2) err << "flagcoh: " << result.report.checks.back().results[0]["message"].get<std::string>() << "\n";
  return result.exit_code;
}

}  // namespace flagcoh
