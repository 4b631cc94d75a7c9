#include "doctest.h"

#include "attackmc/transition.hpp"
#include "support/oracles.hpp"

using namespace attackmc;
using namespace attackmc::testing;

namespace {

// s0 -> s1 -> s2, plus an unreachable s3
StateSpace chain4() {
  StateSpace sp;
  sp.states = {0, 1, 2, 3};
  sp.successors = {{0, {1}}, {1, {2}}, {2, {}}, {3, {}}};
  return sp;
}

}  // namespace

TEST_CASE("post_star on a chain") {
  StateSpace sp = chain4();
  CHECK(post_star(sp, {0}) == StateSet{0, 1, 2});
  CHECK(post_star(sp, {}) == StateSet{});
  CHECK(post_star(sp, {2}) == StateSet{2});
  CHECK_THROWS_AS(post_star(sp, {7}), std::invalid_argument);
}

TEST_CASE("post_star on an edgeless space is reflexive only") {
  StateSpace sp;
  sp.states = {0};
  sp.successors = {{0, {}}};
  CHECK(post_star(sp, {0}) == StateSet{0});
}

TEST_CASE("mk_kripke restricts to the reachable states") {
  StateSpace sp = chain4();
  KripkeModel m = mk_kripke(sp, {0});
  CHECK(m.space.states == StateSet{0, 1, 2});
  CHECK(m.init == StateSet{0});
  m.space.validate();

  StateSpace single;
  single.states = {0};
  single.successors = {{0, {}}};
  CHECK(mk_kripke(single, {0}).space.states == StateSet{0});

  CHECK_THROWS_AS(mk_kripke(sp, {}), std::invalid_argument);
}

TEST_CASE("pre_exists / pre_forall on small fixtures") {
  StateSpace sp = chain4();
  CHECK(pre_exists(sp, {2}) == StateSet{1});
  CHECK(pre_exists(sp, {}) == StateSet{});
  // all non-deadlock states have some successor in the full set
  CHECK(pre_exists(sp, sp.states) == StateSet{0, 1});

  // s0 -> {s1, s2}
  StateSpace branch;
  branch.states = {0, 1, 2};
  branch.successors = {{0, {1, 2}}, {1, {}}, {2, {}}};
  CHECK(pre_forall(branch, {1}) == StateSet{1, 2});  // deadlocks vacuous, s0 out
  CHECK(pre_forall(branch, branch.states) == branch.states);

  StateSpace deadlocks;
  deadlocks.states = {0, 1};
  deadlocks.successors = {{0, {}}, {1, {}}};
  CHECK(pre_forall(deadlocks, {}) == deadlocks.states);
}

TEST_CASE("holds is init containment") {
  StateSpace sp = chain4();
  KripkeModel m = mk_kripke(sp, {0});
  CHECK(holds(m, {0, 1}));
  CHECK_FALSE(holds(m, {1, 2}));
}

TEST_CASE("post_star properties on random spaces") {
  Rng rng(12001);
  for (int i = 0; i < 300; ++i) {
    StateSpace sp = random_space(rng);
    StateSet init = random_subset(rng, sp.states);
    StateSet closure = post_star(sp, init);
    CHECK(subset(init, closure));
    CHECK(post_star(sp, closure) == closure);  // idempotent
    CHECK(closure == oracle_post_star(sp, init));

    // monotone in the initial set
    StateSet smaller = random_subset(rng, init);
    CHECK(subset(post_star(sp, smaller), closure));
  }
}

TEST_CASE("predecessor transformers are monotone; universal implies existential off deadlocks") {
  Rng rng(12002);
  for (int i = 0; i < 300; ++i) {
    StateSpace sp = random_space(rng);
    StateSet s = random_subset(rng, sp.states);
    StateSet bigger = set_union(s, random_subset(rng, sp.states));
    CHECK(subset(pre_exists(sp, s), pre_exists(sp, bigger)));
    CHECK(subset(pre_forall(sp, s), pre_forall(sp, bigger)));

    StateSet non_deadlock;
    for (StateId x : sp.states)
      if (!sp.succ(x).empty()) non_deadlock.insert(x);
    CHECK(subset(set_intersect(pre_forall(sp, s), non_deadlock), pre_exists(sp, s)));
  }
}
