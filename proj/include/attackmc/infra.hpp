#pragma once

#include <compare>
#include <map>
#include <set>
#include <string>
#include <utility>
#include <vector>

namespace attackmc {

using ActorId = std::string;
using LocationId = std::string;
using DataValue = std::string;

/// Decentralized-label-model privacy label: an owning actor plus the actors
/// allowed to read. Owner access is implicit; owner must not appear in
/// readers.
struct DlmLabel {
  ActorId owner;
  std::set<ActorId> readers;

  bool may_access(const ActorId& a) const {
    return a == owner || readers.contains(a);
  }
  auto operator<=>(const DlmLabel&) const = default;
};

struct LabeledDatum {
  DlmLabel label;
  DataValue value;

  auto operator<=>(const LabeledDatum&) const = default;
};

enum class Action { Move, Get, Put };

const char* to_string(Action a);

/// Who a policy entry applies to: anybody, one actor, or a named set.
struct ActorCondition {
  enum class Kind { Any, Id, In };
  Kind kind = Kind::Any;
  std::set<ActorId> actors;  // singleton for Id, nonempty for In

  bool matches(const ActorId& a) const;
  auto operator<=>(const ActorCondition&) const = default;
};

struct PolicyEntry {
  ActorCondition who;
  std::set<Action> actions;

  auto operator<=>(const PolicyEntry&) const = default;
};

/// Per-location access policies; absence of a matching entry means the
/// action is not enabled.
using LocalPolicy = std::map<LocationId, std::vector<PolicyEntry>>;

/// Location graph with actor placement and DLM-labeled data stores.
/// Edges are unordered and stored as normalized (min, max) pairs.
struct InfraGraph {
  std::set<LocationId> nodes;
  std::set<std::pair<LocationId, LocationId>> edges;
  std::map<LocationId, std::set<ActorId>> actor_at;
  std::map<LocationId, std::set<LabeledDatum>> store;

  bool has_edge(const LocationId& a, const LocationId& b) const;
  const std::set<ActorId>& actors_at(const LocationId& l) const;
  const std::set<LabeledDatum>& store_at(const LocationId& l) const;

  auto operator<=>(const InfraGraph&) const = default;
};

std::pair<LocationId, LocationId> norm_edge(LocationId a, LocationId b);

struct Infrastructure {
  InfraGraph graph;
  LocalPolicy policy;

  auto operator<=>(const Infrastructure&) const = default;
};

/// Checks the representation invariants (edge endpoints declared, actors
/// placed at exactly one declared location, policy keys declared). Throws on
/// violation.
void validate(const Infrastructure& inf);

/// Policy lookup without node membership check; used where the location is
/// known to be valid.
bool policy_allows(const LocalPolicy& policy, const LocationId& l,
                   const ActorId& a, Action act);

/// True iff some policy entry at l matches the actor and grants the action.
/// Throws on an unknown location.
bool enables(const Infrastructure& inf, const LocationId& l, const ActorId& a,
             Action act);

/// Data privacy requirement: every occurrence of the same data value,
/// anywhere in the system, carries the same label.
bool global_policy(const Infrastructure& inf);

/// One-step successors of an infrastructure state under the MOVE/GET/PUT
/// rules, over the given finite data and label universes. States equal to
/// the input are excluded.
std::set<Infrastructure> abstract_successors(const Infrastructure& inf,
                                             const std::set<DataValue>& data_universe,
                                             const std::set<DlmLabel>& label_universe);

}  // namespace attackmc
