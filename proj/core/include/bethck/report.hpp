#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <vector>

namespace bethck {

struct Violation {
  std::string check;    // e.g. "lemma1(7)", "forth_element"
  std::string witness;  // concrete input reproducing the failure
};

/// Outcome of one suite. pass iff violations is empty.
struct Report {
  std::string suite;
  bool pass = true;
  std::uint64_t cases = 0;
  std::vector<Violation> violations;
  std::vector<std::string> notes;  // informational only
  std::map<std::string, std::uint64_t> counters;
  std::optional<std::uint64_t> seed;
  double wall_seconds = 0;

  void fail(std::string check, std::string witness);
  void count(const std::string& key, std::uint64_t by = 1) { counters[key] += by; }
  /// Folds another report's cases, counters, notes and violations into this one.
  void merge(const Report& other);

  /// Stable JSON. Wall time is omitted unless with_timing, so that reports
  /// for a fixed seed are byte-identical.
  std::string to_json(bool with_timing = true) const;
  std::string to_text() const;
};

/// JSON array of reports, ordered by suite name.
std::string reports_json(std::vector<Report> reports, bool with_timing = true);

/// Violations listed per report are capped; the count keeps growing.
inline constexpr std::size_t max_listed_violations = 50;

}  // namespace bethck
