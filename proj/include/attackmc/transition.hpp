#pragma once

#include <map>
#include <set>

namespace attackmc {

using StateId = int;
using StateSet = std::set<StateId>;

bool subset(const StateSet& a, const StateSet& b);
StateSet set_union(const StateSet& a, const StateSet& b);
StateSet set_intersect(const StateSet& a, const StateSet& b);
StateSet set_minus(const StateSet& a, const StateSet& b);

/// A finite state space: a set of interned state ids plus a total successor
/// map over exactly that set.
struct StateSpace {
  StateSet states;
  std::map<StateId, StateSet> successors;

  const StateSet& succ(StateId s) const;
  void validate() const;
};

/// A state space together with its initial states. Built via mk_kripke, which
/// restricts the space to the states reachable from init.
struct KripkeModel {
  StateSpace space;
  StateSet init;
};

/// Reflexive-transitive successor closure of init within space.
StateSet post_star(const StateSpace& space, const StateSet& init);

KripkeModel mk_kripke(const StateSpace& space, const StateSet& init);

/// States with at least one successor in target.
StateSet pre_exists(const StateSpace& space, const StateSet& target);

/// States whose successors all lie in target; deadlock states qualify
/// vacuously.
StateSet pre_forall(const StateSpace& space, const StateSet& target);

/// A state-set property holds of a model iff it covers all initial states.
bool holds(const KripkeModel& m, const StateSet& sat);

}  // namespace attackmc
