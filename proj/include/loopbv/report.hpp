#pragma once
#include <span>
#include <string>
#include <vector>

namespace loopbv {

struct CheckCounter {
  std::string identity;
  long long checked = 0;
  long long failed = 0;
};

/// First failing tuple of a sweep, with both sides fully expanded so a
/// failure diagnoses itself.
struct Counterexample {
  std::string identity;
  std::vector<std::string> inputs;
  std::string lhs, rhs;
};

struct CheckReport {
  std::string title;
  std::vector<CheckCounter> counters;
  std::vector<Counterexample> examples;

  CheckCounter& counter(const std::string& identity);
  /// Safe when writing several counters in a row (counter() references are
  /// invalidated by later counter() calls).
  void set(const std::string& identity, long long checked, long long failed);
  bool passed() const;
};

std::string render_text(std::span<const CheckReport> reports);
std::string render_json(std::span<const CheckReport> reports);

}  // namespace loopbv
