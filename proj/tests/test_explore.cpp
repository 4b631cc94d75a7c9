#include "doctest.h"

#include <algorithm>
#include <deque>

#include "attackmc/explore.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace attackmc;
using namespace attackmc::testing;

namespace {

// independent closure oracle over the set-based transition rules
std::set<Infrastructure> abstract_closure(const Infrastructure& inf,
                                          const std::set<DataValue>& d,
                                          const std::set<DlmLabel>& f) {
  std::set<Infrastructure> seen{inf};
  std::deque<Infrastructure> work{inf};
  while (!work.empty()) {
    Infrastructure cur = work.front();
    work.pop_front();
    for (const Infrastructure& next : abstract_successors(cur, d, f))
      if (seen.insert(next).second) work.push_back(next);
  }
  return seen;
}

std::set<Infrastructure> abstract_states(const EInfrastructure& model,
                                         const std::vector<EInfrastructure>& states) {
  std::set<Infrastructure> out;
  for (const auto& e : states) out.insert(eset_i(e));
  (void)model;
  return out;
}

std::vector<Event> trace_to(const ExploreResult& r, StateId s) {
  std::vector<Event> rev;
  for (StateId x = s; r.parent[x] != -1; x = r.parent[x])
    rev.push_back(r.parent_event[x]);
  return {rev.rbegin(), rev.rend()};
}

}  // namespace

TEST_CASE("st_et bound zero returns only the initial state") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  auto [states, fix] = st_et(e, 0);
  REQUIRE(states.size() == 1);
  CHECK(states[0] == e);
  CHECK_FALSE(fix);  // the fixture has successors

  Infrastructure still;
  EInfrastructure idle = repr(still, {"d"}, {{"a", {}}});
  auto [one, fixed] = st_et(idle, 0);
  CHECK(one.size() == 1);
  CHECK(fixed);
}

TEST_CASE("healthcare reachable set matches the closure oracle") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  auto [states, fix] = st_et(e, 1000);
  CHECK(fix);
  auto oracle = abstract_closure(hc.inf, hc.data_universe, hc.label_universe);
  CHECK(states.size() == oracle.size());
  CHECK(abstract_states(e, states) == oracle);
}

TEST_CASE("st_et is monotone in the bound") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  std::vector<EInfrastructure> prev;
  for (int n = 0; n <= 6; ++n) {
    auto [states, fix] = st_et(e, n);
    CHECK(std::includes(states.begin(), states.end(), prev.begin(), prev.end()));
    prev = std::move(states);
  }
}

TEST_CASE("fixpoint_bound on the fixture and degenerate cases") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  auto n = fixpoint_bound(e, 1000);
  REQUIRE(n);
  // stable beyond the fixpoint
  auto at = st_et(e, *n).first;
  for (int k = 1; k <= 3; ++k) CHECK(st_et(e, *n + k).first == at);
  if (*n > 0) CHECK(st_et(e, *n - 1).first.size() < at.size());

  Infrastructure still;
  EInfrastructure idle = repr(still, {"d"}, {{"a", {}}});
  CHECK(fixpoint_bound(idle, 10) == 0);

  CHECK_FALSE(fixpoint_bound(e, 0));  // has successors, bound too small
}

TEST_CASE("exploration matches the closure oracle on random models") {
  Rng rng(18001);
  for (int i = 0; i < 250; ++i) {
    RandomInfra r = random_infrastructure(rng);
    EInfrastructure e = repr(r.inf, r.data_universe, r.label_universe);
    auto oracle = abstract_closure(r.inf, r.data_universe, r.label_universe);

    auto fb = fixpoint_bound(e, 1 << 12);
    REQUIRE(fb);
    auto [states, fix] = st_et(e, 1 << 12);
    CHECK(fix);
    CHECK(abstract_states(e, states) == oracle);

    // membership soundness and path completeness via replayed traces
    ExploreResult reach = explore(e, ExploreOptions{1 << 12, false});
    for (StateId s = 0; s < static_cast<StateId>(reach.states.size()); ++s) {
      auto hs = trace_to(reach, s);
      auto replay = fold_o(e, hs);
      REQUIRE(replay);
      CHECK(replay->graph == reach.states[s]);
      CHECK(oracle.contains(eset_i(*replay)));
    }
  }
}

TEST_CASE("parallel expansion produces the identical exploration") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  ExploreResult serial = explore(e, ExploreOptions{1000, false});
  ExploreResult parallel = explore(e, ExploreOptions{1000, true});
  CHECK(serial.states == parallel.states);
  CHECK(serial.depth == parallel.depth);
  CHECK(serial.parent == parallel.parent);
  CHECK(serial.successors == parallel.successors);
  CHECK(serial.fixpoint == parallel.fixpoint);
  CHECK(serial.fixpoint_depth == parallel.fixpoint_depth);

  Rng rng(18002);
  for (int i = 0; i < 50; ++i) {
    RandomInfra r = random_infrastructure(rng);
    EInfrastructure re = repr(r.inf, r.data_universe, r.label_universe);
    ExploreResult a = explore(re, ExploreOptions{1 << 12, false});
    ExploreResult b = explore(re, ExploreOptions{1 << 12, true});
    CHECK(a.states == b.states);
    CHECK(a.parent == b.parent);
  }
}

TEST_CASE("mc_attack reproduces the two-step privacy attack") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();
  auto violated = [](const EInfrastructure& s) { return !global_policy(eset_i(s)); };
  McResult res = mc_attack(e, violated, 1000);
  REQUIRE(res.found);
  CHECK(res.fixpoint);
  REQUIRE(res.trace.size() == 2);

  const auto* mv = std::get_if<MoveEvent>(&res.trace[0].first);
  REQUIRE(mv);
  CHECK(mv->actor == "Eve");
  CHECK(mv->from == "home");
  CHECK(mv->to == "cloud");
  const auto* put = std::get_if<PutEvent>(&res.trace[1].first);
  REQUIRE(put);
  CHECK(put->actor == "Eve");
  CHECK(put->at == "cloud");
  CHECK(put->value == "42");

  REQUIRE(res.tree);
  StateSpace space = res.reach.to_state_space();
  CHECK(is_valid(*res.tree, space));
  CHECK(attack(*res.tree).pre == StateSet{0});
  for (StateId s : attack(*res.tree).post)
    CHECK(violated(e.with_graph(res.reach.states[s])));
}

TEST_CASE("mc_attack trivial and unreachable goals") {
  Healthcare hc;
  EInfrastructure e = hc.efficient();

  McResult now = mc_attack(e, [](const EInfrastructure&) { return true; }, 10);
  REQUIRE(now.found);
  CHECK(now.trace.empty());
  CHECK(now.tree->kind == NodeKind::And);
  CHECK(now.tree->children.empty());

  McResult never = mc_attack(e, [](const EInfrastructure&) { return false; }, 1000);
  CHECK_FALSE(never.found);
  CHECK(never.fixpoint);  // absence is a proof here
}

TEST_CASE("mc_attack trees are valid on random models") {
  Rng rng(18003);
  int found = 0;
  for (int i = 0; i < 150; ++i) {
    RandomInfra r = random_infrastructure(rng);
    EInfrastructure e = repr(r.inf, r.data_universe, r.label_universe);
    auto goal = [](const EInfrastructure& s) {
      return !global_policy(eset_i(s));
    };
    McResult res = mc_attack(e, goal, 1 << 12);
    if (!res.found) continue;
    ++found;
    StateSpace space = res.reach.to_state_space();
    CHECK(is_valid(*res.tree, space));
    CHECK(attack(*res.tree).pre == StateSet{0});
    CHECK(attack(*res.tree).post == res.goal_states);
  }
  CHECK(found > 0);
}
