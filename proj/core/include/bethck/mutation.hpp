#pragma once

#include <optional>
#include <string>
#include <string_view>

namespace bethck {

/// Deliberate faults that the suites must detect. `none` in production.
enum class Mutant {
  none,
  companion_rule,    // companion map sends 9N+7 to itself
  k_without_j,       // successor witness keeps J-elements in its second component
  drop_condition_d,  // Z membership ignores the companion-pattern condition
};

Mutant active_mutant();
void set_active_mutant(Mutant m);
std::string_view mutant_name(Mutant m);
std::optional<Mutant> mutant_from_name(std::string_view name);

/// Activates a mutant for the lifetime of the guard.
class ScopedMutant {
 public:
  explicit ScopedMutant(Mutant m) : saved_(active_mutant()) { set_active_mutant(m); }
  ~ScopedMutant() { set_active_mutant(saved_); }
  ScopedMutant(const ScopedMutant&) = delete;
  ScopedMutant& operator=(const ScopedMutant&) = delete;

 private:
  Mutant saved_;
};

}  // namespace bethck
