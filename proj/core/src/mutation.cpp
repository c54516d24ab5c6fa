#include "bethck/mutation.hpp"

#include <array>
#include <atomic>
#include <utility>

namespace bethck {

namespace {

std::atomic<Mutant> g_mutant{Mutant::none};

constexpr std::array<std::pair<Mutant, std::string_view>, 4> kNames{{
    {Mutant::none, "none"},
    {Mutant::companion_rule, "companion-rule"},
    {Mutant::k_without_j, "k-without-j"},
    {Mutant::drop_condition_d, "drop-condition-d"},
}};

}  // namespace

Mutant active_mutant() { return g_mutant.load(std::memory_order_relaxed); }
void set_active_mutant(Mutant m) { g_mutant.store(m, std::memory_order_relaxed); }

std::string_view mutant_name(Mutant m) {
  for (const auto& [k, name] : kNames)
    if (k == m) return name;
  return "unknown";
}

std::optional<Mutant> mutant_from_name(std::string_view name) {
  for (const auto& [k, n] : kNames)
    if (n == name) return k;
  return std::nullopt;
}

}  // namespace bethck
