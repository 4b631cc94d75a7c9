#pragma once

#include <functional>
#include <optional>
#include <vector>

#include "attackmc/attack_tree.hpp"
#include "attackmc/efficient.hpp"
#include "attackmc/transition.hpp"

namespace attackmc {

inline constexpr int kDefaultBound = 1 << 16;

struct ExploreOptions {
  int bound = kDefaultBound;
  /// Expand each frontier with OpenMP. The merge into the visited set stays
  /// serial and frontier-ordered, so results are identical to serial mode.
  bool parallel = false;
};

/// Frontier BFS over the efficient transition function. States are interned
/// in discovery order, which assigns dense StateIds; parent links give
/// shortest event traces.
struct ExploreResult {
  std::vector<EGraph> states;        // index = StateId
  std::vector<int> depth;
  std::vector<int> parent;           // -1 at the root
  std::vector<Event> parent_event;   // meaningless at the root
  std::vector<StateSet> successors;  // edges recorded during expansion
  bool fixpoint = false;
  int fixpoint_depth = -1;           // least n with st_et(n) = st_et(n+1)
  int max_depth = 0;

  StateSpace to_state_space() const;
  EInfrastructure state(const EInfrastructure& model, StateId s) const;
};

ExploreResult explore(const EInfrastructure& e0, const ExploreOptions& opts = {});

/// All states reachable in at most n steps (sorted), plus whether that set is
/// already closed under the transition function.
std::pair<std::vector<EInfrastructure>, bool> st_et(const EInfrastructure& e0,
                                                    int n, bool parallel = false);

/// Least n <= max_bound at which st_et stops growing, or absent.
std::optional<int> fixpoint_bound(const EInfrastructure& e0, int max_bound);

using StatePredicate = std::function<bool(const EInfrastructure&)>;

/// Bounded attack model checking: intersect the reachable states with the
/// goal predicate. On a hit, reports the BFS-shortest event trace and a valid
/// attack tree for ({initial}, goal states) over the explored space. Absence
/// is a proof of unreachability only when fixpoint is set.
struct McResult {
  bool found = false;
  bool fixpoint = false;
  int fixpoint_depth = -1;
  std::size_t explored = 0;
  std::vector<std::pair<Event, EInfrastructure>> trace;  // empty if goal holds initially
  AttackTreePtr tree;                                    // null unless found
  ExploreResult reach;
  StateSet goal_states;
};

McResult mc_attack(const EInfrastructure& e0, const StatePredicate& goal,
                   int bound, bool parallel = false);

}  // namespace attackmc
