#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <map>
#include <span>
#include <string>
#include <string_view>
#include <vector>

#include "bethck/formula.hpp"

namespace bethck {

using WorldMask = std::uint32_t;

/// Finite constant-domain Kripke model with at most 32 worlds and 32 elements.
/// Extensions are stored per element as the set of worlds where the atom holds.
struct FiniteCDModel {
  static constexpr int max_worlds = 32;
  static constexpr int max_domain = 32;

  int worlds = 1;
  std::vector<WorldMask> up{1};  // up[w]: worlds w' with w <= w' (reflexive, transitive)
  int domain = 1;
  std::array<std::vector<WorldMask>, 3> ext{std::vector<WorldMask>{0}, std::vector<WorldMask>{0},
                                            std::vector<WorldMask>{0}};
  WorldMask s = 0;

  WorldMask all_worlds() const { return worlds == 32 ? ~WorldMask{0} : (WorldMask{1} << worlds) - 1; }
  bool leq(int v, int w) const { return (up[v] >> w) & 1U; }
  bool holds(Pred p, int w, int a) const { return (ext[static_cast<int>(p)][a] >> w) & 1U; }
  void set(Pred p, int w, int a, bool on);
  bool forces_s(int w) const { return (s >> w) & 1U; }
  /// Worlds all of whose successors lie in mask.
  WorldMask box(WorldMask mask) const;
  bool is_up_set(WorldMask mask) const;

  /// Throws PreconditionError on a bad order (not reflexive/transitive) or a
  /// valuation that is not persistent.
  void validate() const;

  friend bool operator==(const FiniteCDModel&, const FiniteCDModel&) = default;
};

/// A formula compiled against a fixed order of free variables. Evaluation
/// returns the set of worlds forcing the formula.
class Evaluator {
 public:
  /// Throws UnboundVariableError if f has a free variable outside free_order.
  explicit Evaluator(const Formula& f, std::vector<std::string> free_order = {});

  WorldMask worlds(const FiniteCDModel& m, std::span<const int> free_values = {}) const;
  bool at(const FiniteCDModel& m, int w, std::span<const int> free_values = {}) const {
    return (worlds(m, free_values) >> w) & 1U;
  }
  std::size_t arity() const { return arity_; }

 private:
  struct Op {
    Formula::Kind kind;
    Pred pred;
    int slot;
    int lhs;
    int rhs;
  };
  int compile(const Formula& f, std::vector<std::pair<std::string, int>>& scope);
  WorldMask run(const FiniteCDModel& m, int op, int* env) const;

  std::vector<Op> ops_;
  int root_ = 0;
  int slots_ = 0;
  std::size_t arity_ = 0;
};

/// Forcing at world w under env. Throws UnboundVariableError when env misses
/// a free variable of f, PreconditionError on an out-of-range world or element.
bool forces(const FiniteCDModel& m, int w, const Formula& f,
            const std::map<std::string, int>& env = {});

/// The three axioms are forced at every world.
bool models_T(const FiniteCDModel& m);

/// A finite order on worlds 0..n-1, as successor masks.
struct Frame {
  int worlds = 1;
  std::vector<WorldMask> up{1};
};

enum class FrameFamily {
  rooted,       // rooted partial orders up to isomorphism (root = world 0)
  all_labeled,  // every partial order on 0..n-1
};

/// Frames with 1..max_worlds worlds (max_worlds <= 4 for rooted, <= 5 labeled).
std::vector<Frame> enumerate_frames(int max_worlds, FrameFamily family);

/// All up-closed subsets of the frame, in increasing numeric order.
std::vector<WorldMask> up_sets(const Frame& f);

/// Calls visit on every model over every frame of the family with 1..max_worlds
/// worlds and 1..max_domain elements, with every persistent valuation of P, Q,
/// R and s. The model passed is reused between calls. Within one frame and
/// valuation of P, Q, R the s-extension varies fastest.
/// visit returns false to stop early.
void for_each_model(int max_worlds, int max_domain, FrameFamily family,
                    const std::function<bool(const FiniteCDModel&)>& visit,
                    bool vary_s = true);

/// Materialized for_each_model (small bounds only).
std::vector<FiniteCDModel> enumerate_models(int max_worlds, int max_domain,
                                            FrameFamily family = FrameFamily::rooted,
                                            bool vary_s = true);

/// `model { worlds=n; order={(i,j),...}; dom=k; P[i]={...}; Q[i]={...};
///          R[i]={...}; s={i,...} }`
/// The order is the reflexive-transitive closure of the listed pairs. Omitted
/// extensions are empty. Throws ParseError, or PreconditionError when the
/// valuation is not persistent.
FiniteCDModel parse_model(std::string_view text);
std::string model_text(const FiniteCDModel& m);

}  // namespace bethck
