#include "attackmc/synthesis.hpp"

#include <deque>
#include <map>
#include <stdexcept>
#include <string>

namespace attackmc {

std::optional<WitnessPath> find_path(const StateSpace& space, StateId start,
                                     const StateSet& targets) {
  if (!space.states.contains(start))
    throw std::invalid_argument("find_path: start state " +
                                std::to_string(start) + " not in space");
  for (StateId t : targets)
    if (!space.states.contains(t))
      throw std::invalid_argument("find_path: target state " +
                                  std::to_string(t) + " not in space");

  std::map<StateId, StateId> parent;
  parent[start] = start;
  std::deque<StateId> queue{start};
  while (!queue.empty()) {
    StateId s = queue.front();
    queue.pop_front();
    if (targets.contains(s)) {
      std::vector<StateId> rev;
      for (StateId x = s;; x = parent.at(x)) {
        rev.push_back(x);
        if (x == start) break;
      }
      return WitnessPath{{rev.rbegin(), rev.rend()}};
    }
    // successors iterate in ascending id order
    for (StateId t : space.succ(s))
      if (parent.emplace(t, s).second) queue.push_back(t);
  }
  return std::nullopt;
}

AttackTreePtr path_to_and_tree(const WitnessPath& path, const StateSet& target,
                               const StateSpace& space) {
  const auto& p = path.states;
  if (p.empty()) throw std::invalid_argument("path_to_and_tree: empty path");
  if (!target.contains(p.back()))
    throw std::invalid_argument("path_to_and_tree: path does not end in target");
  for (std::size_t i = 0; i + 1 < p.size(); ++i)
    if (!space.succ(p[i]).contains(p[i + 1]))
      throw std::invalid_argument("path_to_and_tree: " + std::to_string(p[i]) +
                                  " -> " + std::to_string(p[i + 1]) +
                                  " is not a transition");

  AttackGoal goal{{p.front()}, target};
  if (p.size() == 1) return and_attack({}, goal);

  std::vector<AttackTreePtr> steps;
  for (std::size_t i = 0; i + 1 < p.size(); ++i) {
    StateSet post = (i + 2 == p.size()) ? target : StateSet{p[i + 1]};
    steps.push_back(base_attack(AttackGoal{{p[i]}, post}));
  }
  return and_attack(std::move(steps), goal);
}

std::optional<AttackTreePtr> synthesize(const StateSpace& space,
                                        const StateSet& init,
                                        const StateSet& target) {
  if (init.empty())
    throw std::invalid_argument("synthesize: initial state set must be nonempty");

  std::vector<AttackTreePtr> branches;
  for (StateId i : init) {  // ascending
    auto path = find_path(space, i, target);
    if (!path) return std::nullopt;
    branches.push_back(path_to_and_tree(*path, target, space));
  }
  if (branches.size() == 1) return branches.front();
  return or_attack(std::move(branches), AttackGoal{init, target});
}

}  // namespace attackmc
