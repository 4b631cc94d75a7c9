#pragma once

#include <memory>
#include <vector>

#include "attackmc/transition.hpp"

namespace attackmc {

/// An attack goal: the initial states and the attacked property, both as
/// state sets. Equality is set equality.
struct AttackGoal {
  StateSet pre;
  StateSet post;

  bool operator==(const AttackGoal&) const = default;
};

enum class NodeKind { Base, And, Or };

struct AttackTree;
using AttackTreePtr = std::shared_ptr<const AttackTree>;

/// Attack trees: a base attack, or an ordered sequence of sub-attacks
/// combined conjunctively or disjunctively. Every node carries a goal.
struct AttackTree {
  NodeKind kind;
  AttackGoal goal;
  std::vector<AttackTreePtr> children;  // empty for Base
};

AttackTreePtr base_attack(AttackGoal goal);
AttackTreePtr and_attack(std::vector<AttackTreePtr> children, AttackGoal goal);
AttackTreePtr or_attack(std::vector<AttackTreePtr> children, AttackGoal goal);

/// Goal projection: the goal stored at the root, for all three constructors.
const AttackGoal& attack(const AttackTree& t);

/// The recursive validity predicate. Base attacks require every pre-state to
/// have a one-step transition into the post set; and-nodes chain their
/// children's goals in sequence; or-nodes split the pre set over alternatives.
/// Child order is significant and is checked exactly as given.
/// Throws if any state set in the tree leaves the space.
bool is_valid(const AttackTree& t, const StateSpace& space);

}  // namespace attackmc
