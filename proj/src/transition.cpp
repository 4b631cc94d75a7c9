#include "attackmc/transition.hpp"

#include <algorithm>
#include <deque>
#include <stdexcept>
#include <string>

namespace attackmc {

bool subset(const StateSet& a, const StateSet& b) {
  return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

StateSet set_union(const StateSet& a, const StateSet& b) {
  StateSet r;
  std::set_union(a.begin(), a.end(), b.begin(), b.end(),
                 std::inserter(r, r.end()));
  return r;
}

StateSet set_intersect(const StateSet& a, const StateSet& b) {
  StateSet r;
  std::set_intersection(a.begin(), a.end(), b.begin(), b.end(),
                        std::inserter(r, r.end()));
  return r;
}

StateSet set_minus(const StateSet& a, const StateSet& b) {
  StateSet r;
  std::set_difference(a.begin(), a.end(), b.begin(), b.end(),
                      std::inserter(r, r.end()));
  return r;
}

const StateSet& StateSpace::succ(StateId s) const {
  auto it = successors.find(s);
  if (it == successors.end())
    throw std::invalid_argument("state " + std::to_string(s) +
                                " not in state space");
  return it->second;
}

void StateSpace::validate() const {
  if (successors.size() != states.size())
    throw std::invalid_argument("successor map keys differ from state set");
  for (const auto& [s, succs] : successors) {
    if (!states.contains(s))
      throw std::invalid_argument("successor map key " + std::to_string(s) +
                                  " not in state set");
    if (!subset(succs, states))
      throw std::invalid_argument("successors of " + std::to_string(s) +
                                  " leave the state set");
  }
}

static void require_subset(const StateSpace& space, const StateSet& s,
                           const char* what) {
  for (StateId x : s)
    if (!space.states.contains(x))
      throw std::invalid_argument(std::string(what) + ": state " +
                                  std::to_string(x) + " not in state space");
}

StateSet post_star(const StateSpace& space, const StateSet& init) {
  require_subset(space, init, "post_star");
  StateSet visited = init;
  // Worklist in ascending id order so exploration is deterministic.
  std::set<StateId> work(init.begin(), init.end());
  while (!work.empty()) {
    StateId s = *work.begin();
    work.erase(work.begin());
    for (StateId t : space.succ(s)) {
      if (visited.insert(t).second) work.insert(t);
    }
  }
  return visited;
}

KripkeModel mk_kripke(const StateSpace& space, const StateSet& init) {
  if (init.empty())
    throw std::invalid_argument("mk_kripke: initial state set must be nonempty");
  StateSet reach = post_star(space, init);
  StateSpace restricted;
  restricted.states = reach;
  for (StateId s : reach) restricted.successors[s] = space.succ(s);
  return KripkeModel{std::move(restricted), init};
}

StateSet pre_exists(const StateSpace& space, const StateSet& target) {
  require_subset(space, target, "pre_exists");
  StateSet r;
  for (StateId s : space.states) {
    const StateSet& succs = space.succ(s);
    if (std::any_of(succs.begin(), succs.end(),
                    [&](StateId t) { return target.contains(t); }))
      r.insert(s);
  }
  return r;
}

StateSet pre_forall(const StateSpace& space, const StateSet& target) {
  require_subset(space, target, "pre_forall");
  StateSet r;
  for (StateId s : space.states)
    if (subset(space.succ(s), target)) r.insert(s);
  return r;
}

bool holds(const KripkeModel& m, const StateSet& sat) {
  return subset(m.init, sat);
}

}  // namespace attackmc
