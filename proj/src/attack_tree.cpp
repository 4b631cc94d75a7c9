#include "attackmc/attack_tree.hpp"

#include <algorithm>
#include <span>
#include <stdexcept>
#include <string>
#include <utility>

namespace attackmc {

AttackTreePtr base_attack(AttackGoal goal) {
  return std::make_shared<AttackTree>(AttackTree{NodeKind::Base, std::move(goal), {}});
}

AttackTreePtr and_attack(std::vector<AttackTreePtr> children, AttackGoal goal) {
  return std::make_shared<AttackTree>(
      AttackTree{NodeKind::And, std::move(goal), std::move(children)});
}

AttackTreePtr or_attack(std::vector<AttackTreePtr> children, AttackGoal goal) {
  return std::make_shared<AttackTree>(
      AttackTree{NodeKind::Or, std::move(goal), std::move(children)});
}

const AttackGoal& attack(const AttackTree& t) { return t.goal; }

static void require_in_space(const StateSet& s, const StateSpace& space) {
  for (StateId x : s)
    if (!space.states.contains(x))
      throw std::invalid_argument("attack tree mentions state " +
                                  std::to_string(x) + " outside the state space");
}

static void check_tree_states(const AttackTree& t, const StateSpace& space) {
  require_in_space(t.goal.pre, space);
  require_in_space(t.goal.post, space);
  for (const auto& c : t.children) check_tree_states(*c, space);
}

static bool valid(const AttackTree& t, const StateSpace& space);

// And-case over a child sequence with an ambient goal; intermediate goals are
// rebuilt per the recursion instead of materializing new nodes.
static bool valid_and(std::span<const AttackTreePtr> as, const AttackGoal& s,
                      const StateSpace& space) {
  if (as.empty()) return subset(s.pre, s.post);
  const AttackTree& a = *as.front();
  if (as.size() == 1) return valid(a, space) && attack(a) == s;
  return valid(a, space) && attack(a).pre == s.pre &&
         valid_and(as.subspan(1), AttackGoal{attack(a).post, s.post}, space);
}

static bool valid_or(std::span<const AttackTreePtr> as, const AttackGoal& s,
                     const StateSpace& space) {
  if (as.empty()) return subset(s.pre, s.post);
  const AttackTree& a = *as.front();
  if (as.size() == 1)
    return valid(a, space) && subset(s.pre, attack(a).pre) &&
           subset(attack(a).post, s.post);
  return valid(a, space) && subset(attack(a).pre, s.pre) &&
         subset(attack(a).post, s.post) &&
         valid_or(as.subspan(1),
                  AttackGoal{set_minus(s.pre, attack(a).pre), s.post}, space);
}

static bool valid(const AttackTree& t, const StateSpace& space) {
  switch (t.kind) {
    case NodeKind::Base:
      return std::all_of(t.goal.pre.begin(), t.goal.pre.end(), [&](StateId x) {
        const StateSet& succs = space.succ(x);
        return std::any_of(t.goal.post.begin(), t.goal.post.end(),
                           [&](StateId y) { return succs.contains(y); });
      });
    case NodeKind::And:
      return valid_and(t.children, t.goal, space);
    case NodeKind::Or:
      return valid_or(t.children, t.goal, space);
  }
  return false;
}

bool is_valid(const AttackTree& t, const StateSpace& space) {
  check_tree_states(t, space);
  return valid(t, space);
}

}  // namespace attackmc
