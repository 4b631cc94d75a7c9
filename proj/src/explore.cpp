#include "attackmc/explore.hpp"

#include <algorithm>
#include <stdexcept>
#include <unordered_map>
#include <utility>

#include "attackmc/synthesis.hpp"

namespace attackmc {

StateSpace ExploreResult::to_state_space() const {
  StateSpace sp;
  for (StateId s = 0; s < static_cast<StateId>(states.size()); ++s) {
    sp.states.insert(s);
    sp.successors[s] = successors[s];
  }
  return sp;
}

EInfrastructure ExploreResult::state(const EInfrastructure& model, StateId s) const {
  return model.with_graph(states.at(s));
}

namespace {

using Expansion = std::vector<std::pair<Event, EGraph>>;

Expansion expand_one(const EInfrastructure& model, const EGraph& g) {
  Expansion out;
  EInfrastructure cur = model.with_graph(g);
  for (const Event& h : enum_events(cur)) {
    if (auto next = st_e(cur, h)) out.emplace_back(h, std::move(*next));
  }
  return out;
}

// Serial reference path; expand_frontier_parallel must produce the identical
// batch vector.
std::vector<Expansion> expand_frontier_serial(const EInfrastructure& model,
                                              const std::vector<EGraph>& states,
                                              const std::vector<StateId>& frontier) {
  std::vector<Expansion> batches(frontier.size());
  for (std::size_t i = 0; i < frontier.size(); ++i)
    batches[i] = expand_one(model, states[frontier[i]]);
  return batches;
}

std::vector<Expansion> expand_frontier_parallel(const EInfrastructure& model,
                                                const std::vector<EGraph>& states,
                                                const std::vector<StateId>& frontier) {
  std::vector<Expansion> batches(frontier.size());
  const auto n = static_cast<std::int64_t>(frontier.size());
#pragma omp parallel for schedule(dynamic, 4)
  for (std::int64_t i = 0; i < n; ++i)
    batches[i] = expand_one(model, states[frontier[i]]);
  return batches;
}

struct Interner {
  std::unordered_map<std::uint64_t, std::vector<StateId>> by_digest;
  std::vector<EGraph>* states;

  // looks up by digest, resolves collisions by structural comparison
  std::optional<StateId> find(const EGraph& g) const {
    auto it = by_digest.find(digest(g));
    if (it == by_digest.end()) return std::nullopt;
    for (StateId id : it->second)
      if ((*states)[id] == g) return id;
    return std::nullopt;
  }

  StateId insert(EGraph g) {
    StateId id = static_cast<StateId>(states->size());
    by_digest[digest(g)].push_back(id);
    states->push_back(std::move(g));
    return id;
  }
};

}  // namespace

ExploreResult explore(const EInfrastructure& e0, const ExploreOptions& opts) {
  if (opts.bound < 0) throw std::invalid_argument("explore: negative bound");
  if (!is_canonical(e0.graph))
    throw std::invalid_argument("explore: initial state is not canonical");

  ExploreResult r;
  Interner interner{{}, &r.states};
  interner.insert(e0.graph);
  r.depth = {0};
  r.parent = {-1};
  r.parent_event.push_back(MoveEvent{});
  r.successors.emplace_back();

  auto expand = opts.parallel ? expand_frontier_parallel : expand_frontier_serial;

  std::vector<StateId> frontier{0};
  int d = 0;
  while (true) {
    if (frontier.empty()) {
      r.fixpoint = true;
      r.fixpoint_depth = d - 1;
      break;
    }
    auto batches = expand(e0, r.states, frontier);

    if (d == opts.bound) {
      // peek only: states beyond the bound are not collected, but if the
      // last frontier generates nothing new the set is closed
      bool closed = true;
      for (std::size_t i = 0; i < frontier.size() && closed; ++i)
        for (auto& [ev, g] : batches[i]) {
          auto id = interner.find(g);
          if (!id) {
            closed = false;
            break;
          }
          r.successors[frontier[i]].insert(*id);
        }
      r.fixpoint = closed;
      r.fixpoint_depth = closed ? opts.bound : -1;
      break;
    }

    std::vector<StateId> next;
    for (std::size_t i = 0; i < frontier.size(); ++i) {
      StateId src = frontier[i];
      for (auto& [ev, g] : batches[i]) {
        StateId dst;
        if (auto id = interner.find(g)) {
          dst = *id;
        } else {
          dst = interner.insert(std::move(g));
          r.depth.push_back(d + 1);
          r.parent.push_back(src);
          r.parent_event.push_back(ev);
          r.successors.emplace_back();
          next.push_back(dst);
        }
        r.successors[src].insert(dst);
      }
    }
    frontier = std::move(next);
    ++d;
    if (!frontier.empty()) r.max_depth = d;
  }
  return r;
}

std::pair<std::vector<EInfrastructure>, bool> st_et(const EInfrastructure& e0,
                                                    int n, bool parallel) {
  ExploreResult r = explore(e0, ExploreOptions{n, parallel});
  std::vector<EInfrastructure> states;
  states.reserve(r.states.size());
  for (const EGraph& g : r.states) states.push_back(e0.with_graph(g));
  std::sort(states.begin(), states.end());
  return {std::move(states), r.fixpoint};
}

std::optional<int> fixpoint_bound(const EInfrastructure& e0, int max_bound) {
  ExploreResult r = explore(e0, ExploreOptions{max_bound, false});
  if (!r.fixpoint) return std::nullopt;
  return r.fixpoint_depth;
}

McResult mc_attack(const EInfrastructure& e0, const StatePredicate& goal,
                   int bound, bool parallel) {
  McResult res;
  res.reach = explore(e0, ExploreOptions{bound, parallel});
  res.fixpoint = res.reach.fixpoint;
  res.fixpoint_depth = res.reach.fixpoint_depth;
  res.explored = res.reach.states.size();

  for (StateId s = 0; s < static_cast<StateId>(res.reach.states.size()); ++s)
    if (goal(e0.with_graph(res.reach.states[s]))) res.goal_states.insert(s);
  if (res.goal_states.empty()) return res;

  res.found = true;
  // discovery order is BFS order, so the smallest goal id is at minimal depth
  StateId hit = *res.goal_states.begin();
  std::vector<std::pair<Event, EInfrastructure>> rev;
  for (StateId s = hit; res.reach.parent[s] != -1; s = res.reach.parent[s])
    rev.emplace_back(res.reach.parent_event[s], res.reach.state(e0, s));
  res.trace.assign(rev.rbegin(), rev.rend());

  StateSpace space = res.reach.to_state_space();
  auto tree = synthesize(space, StateSet{0}, res.goal_states);
  if (!tree)
    throw std::logic_error("mc_attack: goal state found but synthesis failed");
  res.tree = *tree;
  return res;
}

}  // namespace attackmc
