#include "bethck/report.hpp"

#include <algorithm>
#include <cstdio>
#include <sstream>

#include "json.hpp"

namespace bethck {

void Report::fail(std::string check, std::string witness) {
  pass = false;
  count("violations");
  if (violations.size() < max_listed_violations)
    violations.push_back({std::move(check), std::move(witness)});
}

void Report::merge(const Report& other) {
  cases += other.cases;
  for (const auto& [k, v] : other.counters) counters[k] += v;
  for (const auto& n : other.notes)
    if (std::find(notes.begin(), notes.end(), n) == notes.end()) notes.push_back(n);
  for (const auto& v : other.violations)
    if (violations.size() < max_listed_violations) violations.push_back(v);
  pass = pass && other.pass;
  wall_seconds += other.wall_seconds;
}

namespace {

nlohmann::ordered_json as_json(const Report& r, bool with_timing) {
  nlohmann::ordered_json j;
  j["suite"] = r.suite;
  j["pass"] = r.pass;
  j["cases"] = r.cases;
  if (r.seed) j["seed"] = *r.seed;
  j["counters"] = nlohmann::ordered_json::object();
  for (const auto& [k, v] : r.counters) j["counters"][k] = v;
  j["violations"] = nlohmann::ordered_json::array();
  for (const auto& v : r.violations) j["violations"].push_back({{"check", v.check}, {"witness", v.witness}});
  j["notes"] = r.notes;
  if (with_timing) j["wall_seconds"] = r.wall_seconds;
  return j;
}

}  // namespace

std::string Report::to_json(bool with_timing) const { return as_json(*this, with_timing).dump(2); }

std::string Report::to_text() const {
  std::ostringstream out;
  out << suite << ": " << (pass ? "PASS" : "FAIL") << " (" << cases << " cases";
  if (seed) out << ", seed " << *seed;
  char secs[32];
  std::snprintf(secs, sizeof secs, "%.2f", wall_seconds);
  out << ", " << secs << " s)\n";
  for (const auto& [k, v] : counters) out << "  " << k << " = " << v << '\n';
  for (const auto& v : violations) out << "  VIOLATION " << v.check << ": " << v.witness << '\n';
  for (const auto& n : notes) out << "  note: " << n << '\n';
  return out.str();
}

std::string reports_json(std::vector<Report> reports, bool with_timing) {
  std::stable_sort(reports.begin(), reports.end(),
                   [](const Report& a, const Report& b) { return a.suite < b.suite; });
  nlohmann::ordered_json arr = nlohmann::ordered_json::array();
  for (const auto& r : reports) arr.push_back(as_json(r, with_timing));
  return arr.dump(2);
}

}  // namespace bethck
