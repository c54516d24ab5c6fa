#pragma once

#include <cstdint>
#include <optional>
#include <span>
#include <string>
#include <vector>

#include "bethck/formula.hpp"
#include "bethck/world.hpp"

namespace bethck {

/// Which infinite model a point lives in: m1 has the states U, m2 has U plus u.
enum class Side : std::uint8_t { m1, m2 };

inline Side opposite(Side s) { return s == Side::m1 ? Side::m2 : Side::m1; }
const char* side_name(Side s);

bool is_state(Side side, const World& w);

struct AtomExtensions {
  UPSet p;  // a u b
  UPSet q;  // a
  UPSet r;  // gamma-preimage of a
  bool s;   // w in U
  const UPSet& of(Pred pred) const { return pred == Pred::P ? p : pred == Pred::Q ? q : r; }
};

/// Throws PreconditionError unless w is a state of the model.
AtomExtensions atom_extensions(Side side, const World& w);

/// The given number of <=-successors of w inside the model, w itself first.
std::vector<World> sample_successors(Side side, const World& w, std::uint64_t seed,
                                     std::size_t count);

struct Certificate {
  int axiom = 0;
  bool pass = true;
  std::vector<std::string> facts;     // what was checked, in order
  std::vector<std::string> failures;  // empty iff pass
  std::optional<Nat> witness;         // the element found for axiom 2 at w
  std::size_t successors_checked = 0;
  std::size_t witness_absorbed = 0;   // successors where w's own axiom-2 witness no longer works
};

/// Checks axiom `axiom` (1..3) of T at w by the constructive argument for its
/// truth: explicit set identities at w and at each given successor, plus a
/// concrete witness for axiom 2. successors must be <=-successors of w inside
/// the model (sample_successors produces such a list).
Certificate cert_lsat(Side side, const World& w, int axiom, std::span<const World> successors);

}  // namespace bethck
