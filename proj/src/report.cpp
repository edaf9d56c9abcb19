#include "flagcoh/report.hpp"

#include <bit>
#include <iomanip>
#include <sstream>

namespace flagcoh {

int FailureBound::per_trial_log2() const {
  if (degree == 0) return -64;
  // degree < 2^a and prime >= 2^(b-1), so degree/prime < 2^(a-b+1).
  const int a = std::bit_width(degree);
  const int b = std::bit_width(prime);
  return a - b + 1;
}

Json FailureBound::to_json() const {
  Json j;
  j["per_trial"] = std::to_string(degree) + "/" + std::to_string(prime);
  j["per_trial_log2_le"] = per_trial_log2();
  j["trials"] = trials;
  j["per_identity_log2_le"] = static_cast<std::int64_t>(per_trial_log2()) * static_cast<std::int64_t>(trials);
  return j;
}

Json VerificationReport::payload() const {
  Json j;
  j["check"] = check;
  j["passed"] = passed;
  j["parameters"] = parameters;
  if (bound) j["failure_bound"] = bound->to_json();
  j["results"] = results;
  return j;
}

namespace {

void render_value(std::ostringstream& out, const Json& v, int indent) {
  const std::string pad(static_cast<std::size_t>(indent), ' ');
  if (v.is_object()) {
    for (const auto& [key, value] : v.items()) {
      if (value.is_structured()) {
        out << pad << key << ":\n";
        render_value(out, value, indent + 2);
      } else {
        out << pad << key << ": " << (value.is_string() ? value.get<std::string>() : value.dump()) << "\n";
      }
    }
  } else if (v.is_array()) {
    bool flat = true;
    for (const auto& e : v) flat = flat && !e.is_structured();
    if (flat) {
      out << pad << v.dump() << "\n";
      return;
    }
    for (const auto& e : v) {
      out << pad << "-\n";
      render_value(out, e, indent + 2);
    }
  } else {
    out << pad << (v.is_string() ? v.get<std::string>() : v.dump()) << "\n";
  }
}

}  // namespace

std::string VerificationReport::to_text() const {
  std::ostringstream out;
  out << "[" << (passed ? "PASS" : "FAIL") << "] " << check << "\n";
  Json p = payload();
  p.erase("check");
  p.erase("passed");
  render_value(out, p, 2);
  return out.str();
}

bool RunReport::passed() const {
  for (const auto& c : checks) {
    if (!c.passed) return false;
  }
  return true;
}

Json RunReport::payload() const {
  Json j;
  j["command"] = command;
  j["seed"] = seed;
  j["passed"] = passed();
  j["checks"] = Json::array();
  for (const auto& c : checks) j["checks"].push_back(c.payload());
  return j;
}

Json RunReport::to_json() const {
  Json j;
  j["format"] = kReportFormat;
  j["payload"] = payload();
  Json timing = Json::array();
  for (const auto& c : checks) {
    std::ostringstream s;
    s << std::fixed << std::setprecision(3) << c.wall_seconds;
    timing.push_back(Json{{"check", c.check}, {"wall_seconds", s.str()}});
  }
  j["timing"] = timing;
  return j;
}

std::string RunReport::to_text() const {
  std::ostringstream out;
  out << "flagcoh report (" << kReportFormat << ")\n";
  out << "command: " << command << "\n";
  out << "seed: " << seed << "\n";
  for (const auto& c : checks) {
    out << c.to_text();
    out << "  wall_seconds: " << std::fixed << std::setprecision(3) << c.wall_seconds << "\n";
  }
  out << "result: " << (passed() ? "PASS" : "FAIL") << "\n";
  return out.str();
}

}  // namespace flagcoh
