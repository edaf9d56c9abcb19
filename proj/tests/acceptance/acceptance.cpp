// Acceptance suite: one line per criterion, exit status 0 only if all pass.

#include <bit>
#include <chrono>
#include <functional>
#include <iomanip>
#include <iostream>
#include <set>
#include <sstream>
#include <string>
#include <vector>

#include "flagcoh/cli.hpp"
#include "flagcoh/groebner.hpp"
#include "flagcoh/invariants.hpp"
#include "flagcoh/presentation.hpp"
#include "flagcoh/rootsys.hpp"
#include "flagcoh/schubert.hpp"

namespace {

using namespace flagcoh;

struct Outcome {
  bool passed = true;
  std::ostringstream detail;

  void require(bool ok, const std::string& what) {
    if (!ok) {
      passed = false;
      detail << " [failed: " << what << "]";
    }
  }
};

double seconds_since(std::chrono::steady_clock::time_point start) {
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - start).count();
}

// Oracle: prod(1 - q^r) / prod(1 - q^g) truncated at cutoff. Each 1/(1 - q^g)
// is a running sum with stride g, each (1 - q^r) a shifted difference.
std::vector<Integer> series_oracle(const std::vector<std::uint32_t>& numer, const std::vector<std::uint32_t>& denom,
                                   std::uint32_t cutoff) {
  std::vector<Integer> s(cutoff + 1, 0);
  s[0] = 1;
  for (auto g : denom) {
    for (std::uint32_t d = g; d <= cutoff; ++d) s[d] += s[d - g];
  }
  for (auto r : numer) {
    for (std::uint32_t d = cutoff + 1; d-- > r;) s[d] -= s[d - r];
  }
  return s;
}

RunReport run_cli(const RunConfig& c, Outcome& o) {
  const RunResult r = run(c);
  o.require(r.exit_code == 0, "exit code " + std::to_string(r.exit_code));
  return r.report;
}

const VerificationReport* find_check(const RunReport& r, const std::string& name, std::size_t nth = 0) {
  for (const auto& c : r.checks) {
    if (c.check == name && nth-- == 0) return &c;
  }
  return nullptr;
}

void criterion_roots(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto rs = RootSystem::build("E8");
  const auto roots = generate_roots(rs.cartan(), 100000);
  const double t = seconds_since(start);
  const std::set<Weight> set(roots.begin(), roots.end());
  bool closed = true;
  for (const auto& a : roots) {
    for (int i = 1; i <= 8; ++i) closed = closed && set.count(rs.simple_reflection(i, a)) == 1;
  }
  // dim E8 - rank, with the dimension from the exponents: rank + 2 sum (d - 1).
  std::size_t from_degrees = 0;
  for (int d : rs.chevalley_degrees()) from_degrees += 2 * static_cast<std::size_t>(d - 1);
  o.require(roots.size() == 248 - 8, "count against 248 - 8");
  o.require(roots.size() == from_degrees, "count against Chevalley degrees");
  o.require(set.size() == roots.size(), "distinct");
  o.require(closed, "closure");
  o.require(t < 5, "runtime");
  o.detail << roots.size() << " roots, closed=" << closed << ", " << std::fixed << std::setprecision(3) << t << " s";
}

void criterion_invariance(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  const auto rs = RootSystem::build("E8");
  const auto frame = TCoordinateFrame::e8(rs).canonical();
  Rng seeds(2024);
  int worst = -1000;
  std::size_t passed = 0;
  const std::vector<unsigned> degrees{2, 8, 12, 14, 18, 20, 24, 30};
  for (unsigned j : degrees) {
    InvarianceOptions opts;
    opts.trials = 20;
    opts.prime = kDefaultPrime;
    opts.seed = seeds.next();
    opts.jobs = 4;
    const auto r = invariance_check(power_sum_oracle(frame, j), opts);
    if (r.passed) ++passed;
    o.require(r.passed, "j=" + std::to_string(j));
    o.require(r.bound.has_value() && r.bound->trials == 20, "trial count j=" + std::to_string(j));
    if (r.bound) worst = std::max(worst, r.bound->per_trial_log2());
  }
  const double t = seconds_since(start);
  o.require(std::bit_width(kDefaultPrime) == 62, "62-bit prime");
  o.require(worst < -55, "per-trial bound below 2^-55");
  o.require(t < 60, "runtime");
  o.detail << passed << "/" << degrees.size() << " degrees, 20 trials per reflection, per-trial bound <= 2^" << worst
           << ", " << std::fixed << std::setprecision(2) << t << " s";
}

void criterion_rho2(Outcome& o) {
  const auto frame = TCoordinateFrame::e8(RootSystem::build("E8"));
  const Polynomial t = Polynomial::variable(frame.ring(), "t");
  const Polynomial rho2 = frame.elementary(2) - pow(t, 2).scaled(4);
  std::size_t fixed = 0;
  for (int i = 1; i <= 8; ++i) fixed += frame.reflect_polynomial(i, rho2) == rho2 ? 1 : 0;
  o.require(fixed == 8, "invariance");
  // Same polynomial as the presentation's relation once t1 is eliminated.
  const auto e8t = e8t_presentation();
  SubstitutionMap to_full(e8t.ring(), frame.full_ring());
  for (const auto& v : frame.full_ring()->variables()) to_full.set_identity(v.name);
  const bool same = frame.normalize(to_full.apply(e8t.expanded_relation("rho2"))) == rho2;
  o.require(same, "presentation rho2 equals c2 - 4t^2");
  o.detail << "fixed by " << fixed << "/8 reflections, " << rho2.terms().size() << " terms in canonical form";
}

void criterion_transcription(Outcome& o) {
  const auto e8t = e8t_presentation();
  const auto e8c = e8c_presentation();
  const auto a = transcription_audit(e8t);
  const auto b = transcription_audit(e8c);
  o.require(a.passed && e8t.relations().size() == 16, "rho audit");
  o.require(b.passed && e8c.relations().size() == 4, "r audit");
  const auto m = uvwx_substitution(e8t);
  const std::vector<std::pair<const char*, std::uint32_t>> degs{{"u", 1}, {"v", 6}, {"w", 10}, {"x", 15}};
  for (const auto& [name, d] : degs) {
    const Polynomial& p = m.image(name);
    o.require(p.is_homogeneous() && p.degree() == d, std::string(name) + " degree");
  }
  const Rational cx = m.image("x").coefficient_of_variable("g15");
  const Rational cw = m.image("w").coefficient_of_variable("g10");
  const Rational cv = m.image("v").coefficient_of_variable("g6");
  o.require(cx == 1 && cw == 1 && cv == 2, "gamma coefficients");
  o.detail << "16 rho and 4 r relations homogeneous of indexed degree; x:g15=" << cx << " w:g10=" << cw
           << " v:g6=" << cv;
}

void criterion_e8c(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  RunConfig c;
  c.command = "verify";
  c.target = "e8c";
  c.coeff = "Q";
  const RunReport r = run_cli(c, o);
  const VerificationReport* gb = find_check(r, "e8c-groebner");
  o.require(gb != nullptr && gb->passed, "groebner check");
  // Independent numerology: 696729600 / 2903040 and the degree sums.
  const Integer total = Integer("696729600") / Integer("2903040");
  const std::uint32_t top = (15 + 20 + 24 + 30) - (1 + 6 + 10 + 15);
  const auto series = series_oracle({15, 20, 24, 30}, {1, 6, 10, 15}, top + 1);
  if (gb != nullptr) {
    for (const auto& res : gb->results) {
      if (!res.contains("coefficients") || res["coefficients"] != "Q") continue;
      o.require(res["total_dimension"].get<std::uint64_t>() == total.get_ui(), "total 240");
      o.require(res["top_degree"].get<std::uint32_t>() == top, "top degree 57");
      o.require(res["palindromic"].get<bool>(), "palindrome");
      const auto dims = res["graded_dimensions"].get<std::vector<std::uint64_t>>();
      bool match = dims.size() == top + 1 && series[top + 1] == 0;
      for (std::size_t d = 0; match && d < dims.size(); ++d) match = Integer(std::to_string(dims[d])) == series[d];
      o.require(match, "series");
      o.detail << "dim " << res["total_dimension"] << ", top " << res["top_degree"] << ", palindromic, series match";
    }
  }
  const double t = seconds_since(start);
  o.require(t < 600, "runtime");
  o.detail << ", " << std::fixed << std::setprecision(3) << t << " s";
}

void criterion_e8t_betti(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  LinearAlgebraOptions opts;
  opts.jobs = 4;
  const HilbertData h = graded_dimensions_linear_algebra(e8t_presentation(), 6, opts);
  const auto series = series_oracle({2, 8, 12, 14, 18, 20, 24, 30}, {1, 1, 1, 1, 1, 1, 1, 1}, 6);
  bool match = h.graded_dimensions.size() == 7;
  for (std::size_t d = 0; match && d < 7; ++d) match = Integer(std::to_string(h.graded_dimensions[d])) == series[d];
  o.require(match, "series");
  o.require(h.graded_dimensions.size() > 1 && h.graded_dimensions[0] == 1 && h.graded_dimensions[1] == 8, "q0, q1");
  const double t = seconds_since(start);
  o.require(t < 600, "runtime");
  o.detail << "dims";
  for (auto d : h.graded_dimensions) o.detail << " " << d;
  o.detail << " match the series, " << std::fixed << std::setprecision(2) << t << " s";
}

void criterion_toda(Outcome& o) {
  const auto start = std::chrono::steady_clock::now();
  RunConfig c;
  c.command = "verify";
  c.target = "toda";
  c.degrees = {2, 8, 12};
  const RunReport r = run_cli(c, o);
  for (std::size_t k = 0; k < 3; ++k) {
    const VerificationReport* cert = find_check(r, "toda-congruence", k);
    o.require(cert != nullptr && cert->passed, "certificate " + std::to_string(k));
    if (cert == nullptr) continue;
    const Json& res = cert->results[0];
    o.require(res["solved"].get<bool>() && res["residual_zero"].get<bool>(), "residual");
    o.require(res["n"] != "0", "nonzero n");
    o.detail << "j=" << cert->parameters["j"] << " n=" << res["n"].get<std::string>() << "; ";
  }
  const VerificationReport* neg = find_check(r, "toda-negative-control");
  o.require(neg != nullptr && neg->passed, "negative control");
  const double t = seconds_since(start);
  o.require(t < 900, "runtime");
  o.detail << "perturbed rho8 infeasible, " << std::fixed << std::setprecision(1) << t << " s";
}

void criterion_gamma(Outcome& o) {
  const auto e8t = e8t_presentation();
  const SubstitutionMap g = gamma_elimination_map(e8t);
  std::size_t zero = 0;
  const std::vector<const char*> names{"rho3", "rho4", "rho5", "rho6", "rho9", "rho10", "rho15"};
  for (const char* name : names) {
    const bool z = g.apply(e8t.expanded_relation(name).with_ring(g.source())).is_zero();
    o.require(z, name);
    zero += z ? 1 : 0;
  }
  o.detail << zero << "/" << names.size() << " eliminated relations vanish exactly";
}

void criterion_small_groups(Outcome& o) {
  const std::vector<std::pair<const char*, std::uint64_t>> expected{{"A2", 6}, {"B2", 8}, {"G2", 12}};
  for (const auto& [type, total] : expected) {
    const auto rs = RootSystem::build(type);
    const auto p = borel_presentation(rs);
    const Ring q = p.ring()->with_coefficients(CoefficientRing::rationals());
    std::vector<Polynomial> rels;
    for (const auto& r : p.relations()) rels.push_back(p.expand(r.poly).with_ring(q));
    const HilbertData h = quotient_dimension(buchberger(rels));
    // Oracle: lengths of the enumerated Weyl group.
    std::vector<std::uint64_t> lengths;
    for (const auto& e : enumerate_weyl(rs, 1000)) {
      if (lengths.size() <= e.length()) lengths.resize(e.length() + 1, 0);
      ++lengths[e.length()];
    }
    o.require(h.is_finite && h.total_dimension == total, std::string(type) + " total");
    o.require(h.graded_dimensions == lengths, std::string(type) + " profile");
    o.detail << type << " dim " << h.total_dimension << "; ";
  }
  o.detail << "profiles equal Weyl length counts";
}

void criterion_divided_differences(Outcome& o) {
  Rng seeds(7);
  for (const char* type : {"A2", "B2", "G2"}) {
    const auto r = divided_difference_properties(RootSystem::build(type), 100, seeds.next());
    o.require(r.passed, std::string(type) + " identities");
  }
  for (const char* type : {"A2", "B2"}) {
    const auto rs = RootSystem::build(type);
    const auto b = schubert_basis(rs, 100);
    std::vector<std::uint64_t> lengths;
    for (const auto& e : enumerate_weyl(rs, 1000)) {
      if (lengths.size() <= e.length()) lengths.resize(e.length() + 1, 0);
      ++lengths[e.length()];
    }
    o.require(b.degree_profile() == lengths, std::string(type) + " profile");
    bool unimodular = true;
    for (const auto& t : b.tables) unimodular = unimodular && t.unimodular();
    o.require(unimodular, std::string(type) + " unimodular");
  }
  o.detail << "d_i^2 = 0, braid, twisted Leibniz: 100 trials each on A2 B2 G2; A2 B2 bases unimodular";
}

void criterion_determinism(Outcome& o) {
  const std::vector<std::pair<std::string, std::string>> commands{
      {"invariants", ""}, {"verify", "e8t-betti"}, {"verify", "schubert-props"}, {"verify", "small-groups"}};
  std::size_t identical = 0;
  for (const auto& [cmd, target] : commands) {
    RunConfig c;
    c.command = cmd;
    c.target = target;
    c.type = "E8";
    c.degrees = {2, 8, 12};
    c.seed = 987654321;
    c.jobs = 3;
    c.cutoff = 5;
    c.trials = 30;
    c.format = "json";
    const RunResult a = run(c), b = run(c);
    const bool same = a.report.payload().dump() == b.report.payload().dump();
    o.require(same && a.exit_code == 0, cmd + " " + target);
    identical += same ? 1 : 0;
  }
  o.detail << identical << "/" << commands.size() << " commands gave byte-identical payloads";
}

}  // namespace

int main() {
  const std::vector<std::pair<std::string, std::function<void(Outcome&)>>> criteria{
      {"root system", criterion_roots},
      {"invariance", criterion_invariance},
      {"rho2 exactness", criterion_rho2},
      {"transcription audit", criterion_transcription},
      {"E8/C certification", criterion_e8c},
      {"E8/T Betti", criterion_e8t_betti},
      {"Toda congruence", criterion_toda},
      {"gamma elimination", criterion_gamma},
      {"small groups", criterion_small_groups},
      {"divided differences", criterion_divided_differences},
      {"determinism", criterion_determinism},
  };
  int failures = 0;
  for (std::size_t k = 0; k < criteria.size(); ++k) {
    Outcome o;
    try {
      criteria[k].second(o);
    } catch (const std::exception& e) {
      o.passed = false;
      o.detail << " [exception: " << e.what() << "]";
    }
    if (!o.passed) ++failures;
    std::cout << (o.passed ? "PASS" : "FAIL") << " criterion " << (k + 1) << " (" << criteria[k].first
              << "): " << o.detail.str() << std::endl;
  }
  std::cout << (failures == 0 ? "all criteria passed" : std::to_string(failures) + " criteria failed") << std::endl;
  return failures == 0 ? 0 : 1;
}
