#include "doctest.h"

#include "attackmc/attack_tree.hpp"
#include "attackmc/ctl.hpp"
#include "attackmc/synthesis.hpp"
#include "support/oracles.hpp"

using namespace attackmc;
using namespace attackmc::testing;

namespace {

StateSpace chain3() {
  StateSpace sp;
  sp.states = {0, 1, 2};
  sp.successors = {{0, {1}}, {1, {2}}, {2, {}}};
  return sp;
}

}  // namespace

TEST_CASE("attack projection returns the root goal for all constructors") {
  AttackGoal g{{0}, {1}};
  CHECK(attack(*base_attack(g)) == g);
  CHECK(attack(*and_attack({base_attack(g)}, g)) == g);
  CHECK(attack(*or_attack({}, g)) == g);
}

// the eight recursion cases of the validity predicate
TEST_CASE("validity: base attack") {
  StateSpace sp = chain3();
  CHECK(is_valid(*base_attack({{0}, {1}}), sp));
  CHECK_FALSE(is_valid(*base_attack({{0}, {2}}), sp));  // not a single step
  CHECK_FALSE(is_valid(*base_attack({{2}, {0}}), sp));  // deadlock pre-state
}

TEST_CASE("validity: empty and-node is pre within post") {
  StateSpace sp = chain3();
  CHECK(is_valid(*and_attack({}, {{0}, {0, 1}}), sp));
  CHECK_FALSE(is_valid(*and_attack({}, {{0, 1}, {0}}), sp));
}

TEST_CASE("validity: singleton and-node requires an equal goal") {
  StateSpace sp = chain3();
  auto step = base_attack({{0}, {1}});
  CHECK(is_valid(*and_attack({step}, {{0}, {1}}), sp));
  CHECK_FALSE(is_valid(*and_attack({step}, {{0}, {1, 2}}), sp));  // goal differs
}

TEST_CASE("validity: multi-child and-node chains goals") {
  StateSpace sp = chain3();
  auto t = and_attack({base_attack({{0}, {1}}), base_attack({{1}, {2}})},
                      {{0}, {2}});
  CHECK(is_valid(*t, sp));
  // first child must share the pre set
  auto bad = and_attack({base_attack({{1}, {2}}), base_attack({{1}, {2}})},
                        {{0}, {2}});
  CHECK_FALSE(is_valid(*bad, sp));
}

TEST_CASE("validity: empty or-node is pre within post") {
  StateSpace sp = chain3();
  CHECK(is_valid(*or_attack({}, {{0}, {0, 1}}), sp));
  CHECK_FALSE(is_valid(*or_attack({}, {{0, 1}, {0}}), sp));
}

TEST_CASE("validity: singleton or-node covers the pre set") {
  StateSpace sp = chain3();
  auto step = base_attack({{0, 1}, {1, 2}});
  CHECK(is_valid(*or_attack({step}, {{0}, {1, 2}}), sp));  // child pre superset
  CHECK_FALSE(is_valid(*or_attack({base_attack({{0}, {1}})}, {{0, 1}, {1, 2}}), sp));
}

TEST_CASE("validity: multi-child or-node splits the pre set") {
  StateSpace sp = chain3();
  auto t = or_attack({base_attack({{0}, {1, 2}}), base_attack({{1}, {1, 2}})},
                     {{0, 1}, {1, 2}});
  CHECK(is_valid(*t, sp));
  // second alternative cannot cover the remaining pre states
  auto bad = or_attack({base_attack({{0}, {1, 2}}), base_attack({{0}, {1, 2}})},
                       {{0, 1}, {1, 2}});
  CHECK_FALSE(is_valid(*bad, sp));
}

TEST_CASE("validity: nested mixed tree") {
  StateSpace sp = chain3();
  auto and_part = and_attack({base_attack({{0}, {1}}), base_attack({{1}, {2}})},
                             {{0}, {2}});
  auto t = or_attack({and_part, base_attack({{1}, {2}})}, {{0, 1}, {2}});
  CHECK(is_valid(*t, sp));
}

TEST_CASE("validity rejects states outside the space") {
  StateSpace sp = chain3();
  CHECK_THROWS_AS(is_valid(*base_attack({{0}, {9}}), sp), std::invalid_argument);
}

TEST_CASE("is_valid terminates on random trees") {
  Rng rng(14001);
  for (int i = 0; i < 500; ++i) {
    StateSpace sp = random_space(rng);
    auto t = random_tree(rng, sp, 5);
    (void)is_valid(*t, sp);  // any verdict; must not hang or throw
  }
}

TEST_CASE("singleton and-collapse preserves validity") {
  Rng rng(14002);
  int valid_seen = 0;
  for (int i = 0; i < 500; ++i) {
    StateSpace sp = random_space(rng);
    auto a = random_tree(rng, sp, 3);
    auto wrapped = and_attack({a}, attack(*a));
    CHECK(is_valid(*wrapped, sp) == is_valid(*a, sp));
    if (is_valid(*a, sp)) ++valid_seen;
  }
  CHECK(valid_seen > 0);
}

// valid trees imply a path from every pre state into the post set
TEST_CASE("valid trees satisfy EF of their goal") {
  Rng rng(14003);
  int checked = 0;
  for (int i = 0; i < 400; ++i) {
    StateSpace sp = random_space(rng);
    StateSet init = random_nonempty_subset(rng, sp.states);
    StateSet target = random_subset(rng, sp.states);
    auto t = synthesize(sp, init, target);
    if (!t) continue;

    for (int m = 0; m < 3; ++m) {
      auto candidate = m == 0 ? *t : mutate_tree(rng, **t, sp);
      if (!is_valid(*candidate, sp)) continue;
      const AttackGoal& goal = attack(*candidate);
      if (goal.pre.empty()) continue;
      KripkeModel model = mk_kripke(sp, goal.pre);
      AtomEnv env{{"s", set_intersect(goal.post, model.space.states)}};
      CHECK(check(model, env, *f_unary(CtlOp::EF, f_atom("s"))));
      ++checked;
    }
  }
  CHECK(checked > 100);
}
