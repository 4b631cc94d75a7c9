#include "attackmc/infra.hpp"

#include <stdexcept>

namespace attackmc {

const char* to_string(Action a) {
  switch (a) {
    case Action::Move: return "move";
    case Action::Get: return "get";
    case Action::Put: return "put";
  }
  return "?";
}

bool ActorCondition::matches(const ActorId& a) const {
  switch (kind) {
    case Kind::Any: return true;
    case Kind::Id:
    case Kind::In: return actors.contains(a);
  }
  return false;
}

std::pair<LocationId, LocationId> norm_edge(LocationId a, LocationId b) {
  if (b < a) std::swap(a, b);
  return {std::move(a), std::move(b)};
}

bool InfraGraph::has_edge(const LocationId& a, const LocationId& b) const {
  return edges.contains(norm_edge(a, b));
}

static const std::set<ActorId> kNoActors;
static const std::set<LabeledDatum> kNoData;

const std::set<ActorId>& InfraGraph::actors_at(const LocationId& l) const {
  auto it = actor_at.find(l);
  return it == actor_at.end() ? kNoActors : it->second;
}

const std::set<LabeledDatum>& InfraGraph::store_at(const LocationId& l) const {
  auto it = store.find(l);
  return it == store.end() ? kNoData : it->second;
}

void validate(const Infrastructure& inf) {
  const InfraGraph& g = inf.graph;
  for (const auto& [a, b] : g.edges)
    if (!g.nodes.contains(a) || !g.nodes.contains(b))
      throw std::invalid_argument("edge endpoint not a declared location: " +
                                  a + "--" + b);
  std::set<ActorId> seen;
  for (const auto& [l, actors] : g.actor_at) {
    if (!g.nodes.contains(l))
      throw std::invalid_argument("actors placed at undeclared location " + l);
    for (const ActorId& a : actors)
      if (!seen.insert(a).second)
        throw std::invalid_argument("actor " + a + " placed at two locations");
  }
  for (const auto& [l, items] : g.store) {
    if (!g.nodes.contains(l))
      throw std::invalid_argument("data stored at undeclared location " + l);
    for (const LabeledDatum& d : items)
      if (d.label.readers.contains(d.label.owner))
        throw std::invalid_argument("label owner " + d.label.owner +
                                    " listed among its readers");
  }
  for (const auto& [l, entries] : inf.policy)
    if (!g.nodes.contains(l))
      throw std::invalid_argument("policy for undeclared location " + l);
}

bool policy_allows(const LocalPolicy& policy, const LocationId& l,
                   const ActorId& a, Action act) {
  auto it = policy.find(l);
  if (it == policy.end()) return false;
  for (const PolicyEntry& e : it->second)
    if (e.actions.contains(act) && e.who.matches(a)) return true;
  return false;
}

bool enables(const Infrastructure& inf, const LocationId& l, const ActorId& a,
             Action act) {
  if (!inf.graph.nodes.contains(l))
    throw std::invalid_argument("enables: unknown location " + l);
  return policy_allows(inf.policy, l, a, act);
}

bool global_policy(const Infrastructure& inf) {
  // label of each value's first occurrence; any later mismatch violates
  std::map<DataValue, DlmLabel> seen;
  for (const auto& [l, items] : inf.graph.store) {
    for (const LabeledDatum& d : items) {
      auto [it, fresh] = seen.emplace(d.value, d.label);
      if (!fresh && it->second != d.label) return false;
    }
  }
  return true;
}

std::set<Infrastructure> abstract_successors(const Infrastructure& inf,
                                             const std::set<DataValue>& data_universe,
                                             const std::set<DlmLabel>& label_universe) {
  std::set<Infrastructure> out;
  const InfraGraph& g = inf.graph;
  auto emit = [&](Infrastructure next) {
    if (next != inf) out.insert(std::move(next));
  };

  for (const auto& [loc, actors] : g.actor_at) {
    for (const ActorId& a : actors) {
      // MOVE: relocate along an edge into a location enabling move
      for (const LocationId& dst : g.nodes) {
        if (dst == loc || !g.has_edge(loc, dst)) continue;
        if (!policy_allows(inf.policy, dst, a, Action::Move)) continue;
        Infrastructure next = inf;
        next.graph.actor_at[loc].erase(a);
        if (next.graph.actor_at[loc].empty()) next.graph.actor_at.erase(loc);
        next.graph.actor_at[dst].insert(a);
        emit(std::move(next));
      }
      // GET: copy an accessible datum from here or next door
      if (policy_allows(inf.policy, loc, a, Action::Get)) {
        for (const LocationId& src : g.nodes) {
          if (src != loc && !g.has_edge(loc, src)) continue;
          for (const LabeledDatum& d : g.store_at(src)) {
            if (!d.label.may_access(a)) continue;
            Infrastructure next = inf;
            next.graph.store[loc].insert(d);
            emit(std::move(next));
          }
        }
      }
      // PUT: insert any universe value under a label the actor owns
      if (policy_allows(inf.policy, loc, a, Action::Put)) {
        for (const DlmLabel& lb : label_universe) {
          if (lb.owner != a) continue;
          for (const DataValue& v : data_universe) {
            Infrastructure next = inf;
            next.graph.store[loc].insert(LabeledDatum{lb, v});
            emit(std::move(next));
          }
        }
      }
    }
  }
  return out;
}

}  // namespace attackmc
