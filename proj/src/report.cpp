#include "loopbv/report.hpp"

#include <json.hpp>

namespace loopbv {

CheckCounter& CheckReport::counter(const std::string& identity) {
  for (auto& c : counters)
    if (c.identity == identity) return c;
  counters.push_back({identity, 0, 0});
  return counters.back();
}

void CheckReport::set(const std::string& identity, long long checked, long long failed) {
  CheckCounter& c = counter(identity);
  c.checked = checked;
  c.failed = failed;
}

bool CheckReport::passed() const {
  for (const auto& c : counters)
    if (c.failed != 0) return false;
  return true;
}

std::string render_text(std::span<const CheckReport> reports) {
  std::string out;
  for (const auto& r : reports) {
    out += "== " + r.title + "\n";
    for (const auto& c : r.counters) {
      out += "  " + c.identity + ": " + (c.failed == 0 ? "ok" : "FAIL") + " (" +
             std::to_string(c.checked) + " checked";
      if (c.failed != 0) out += ", " + std::to_string(c.failed) + " failed";
      out += ")\n";
    }
    for (const auto& e : r.examples) {
      out += "  counterexample [" + e.identity + "]\n";
      for (size_t i = 0; i < e.inputs.size(); ++i)
        out += "    arg" + std::to_string(i + 1) + " = " + e.inputs[i] + "\n";
      out += "    lhs  = " + e.lhs + "\n";
      out += "    rhs  = " + e.rhs + "\n";
    }
  }
  return out;
}

std::string render_json(std::span<const CheckReport> reports) {
  nlohmann::json out = nlohmann::json::array();
  for (const auto& r : reports) {
    nlohmann::json jr;
    jr["title"] = r.title;
    jr["passed"] = r.passed();
    jr["checks"] = nlohmann::json::array();
    for (const auto& c : r.counters)
      jr["checks"].push_back({{"identity", c.identity}, {"checked", c.checked}, {"failed", c.failed}});
    jr["counterexamples"] = nlohmann::json::array();
    for (const auto& e : r.examples)
      jr["counterexamples"].push_back(
          {{"identity", e.identity}, {"inputs", e.inputs}, {"lhs", e.lhs}, {"rhs", e.rhs}});
    out.push_back(std::move(jr));
  }
  return out.dump(2) + "\n";
}

}  // namespace loopbv
