#pragma once

#include <optional>
#include <vector>

#include "attackmc/attack_tree.hpp"
#include "attackmc/transition.hpp"

namespace attackmc {

/// A concrete reachability witness: consecutive states are related by the
/// space's successor map.
struct WitnessPath {
  std::vector<StateId> states;

  bool operator==(const WitnessPath&) const = default;
};

/// BFS-shortest path from start into targets; among equal-length paths the
/// one expanding smallest state ids first. Absent if unreachable.
std::optional<WitnessPath> find_path(const StateSpace& space, StateId start,
                                     const StateSet& targets);

/// Turn a witness path ending inside target into the corresponding and-tree
/// of base attacks. The result satisfies is_valid.
AttackTreePtr path_to_and_tree(const WitnessPath& path, const StateSet& target,
                               const StateSpace& space);

/// Build a valid attack tree for goal (init, target): one and-tree per
/// initial state, wrapped in an or-tree when |init| > 1 (children ascending
/// by initial state id). Absent if some initial state cannot reach target.
std::optional<AttackTreePtr> synthesize(const StateSpace& space,
                                        const StateSet& init,
                                        const StateSet& target);

}  // namespace attackmc
