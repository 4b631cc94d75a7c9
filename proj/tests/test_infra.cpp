#include "doctest.h"

#include <algorithm>

#include "attackmc/infra.hpp"
#include "support/fixtures.hpp"
#include "support/oracles.hpp"

using namespace attackmc;
using namespace attackmc::testing;

TEST_CASE("enables on the healthcare fixture") {
  Healthcare hc;
  CHECK(enables(hc.inf, "cloud", "Eve", Action::Put));
  CHECK(enables(hc.inf, "cloud", "Patient", Action::Get));
  // no policy entries at home
  CHECK_FALSE(enables(hc.inf, "home", "Eve", Action::Put));
  CHECK_THROWS_AS(enables(hc.inf, "nowhere", "Eve", Action::Put),
                  std::invalid_argument);
}

TEST_CASE("enables matches conditions exactly") {
  Healthcare hc;
  hc.inf.policy["home"] = {
      {ActorCondition{ActorCondition::Kind::Id, {"Patient"}}, {Action::Get}}};
  CHECK(enables(hc.inf, "home", "Patient", Action::Get));
  CHECK_FALSE(enables(hc.inf, "home", "Eve", Action::Get));
  CHECK_FALSE(enables(hc.inf, "home", "Patient", Action::Put));

  hc.inf.policy["sphone"] = {
      {ActorCondition{ActorCondition::Kind::In, {"Patient", "Doctor"}},
       {Action::Move}}};
  CHECK(enables(hc.inf, "sphone", "Doctor", Action::Move));
  CHECK_FALSE(enables(hc.inf, "sphone", "Eve", Action::Move));
}

TEST_CASE("global_policy detects conflicting labels on the same value") {
  Healthcare hc;
  CHECK(global_policy(hc.inf));

  // same value at two locations, same label: fine
  hc.inf.graph.store["hospital"].insert(
      LabeledDatum{{"Patient", {"Doctor"}}, "42"});
  CHECK(global_policy(hc.inf));

  // Eve relabels the value as her own
  hc.inf.graph.store["cloud"].insert(LabeledDatum{{"Eve", {}}, "42"});
  CHECK_FALSE(global_policy(hc.inf));
}

TEST_CASE("abstract successors: Eve's put at the cloud") {
  Healthcare hc;
  // after Eve moved to the cloud
  hc.inf.graph.actor_at["home"] = {"Patient"};
  hc.inf.graph.actor_at["cloud"] = {"Eve"};

  auto succs = abstract_successors(hc.inf, hc.data_universe, hc.label_universe);
  Infrastructure expected = hc.inf;
  expected.graph.store["cloud"].insert(LabeledDatum{{"Eve", {}}, "42"});
  CHECK(succs.contains(expected));
  for (const auto& s : succs) CHECK(s != hc.inf);
}

TEST_CASE("abstract successors: move relocates an actor") {
  Healthcare hc;
  auto succs = abstract_successors(hc.inf, hc.data_universe, hc.label_universe);
  Infrastructure moved = hc.inf;
  moved.graph.actor_at["home"] = {"Eve"};
  moved.graph.actor_at["cloud"] = {"Patient"};
  CHECK(succs.contains(moved));
}

TEST_CASE("abstract successors: no actors, no successors") {
  Healthcare hc;
  hc.inf.graph.actor_at.clear();
  CHECK(abstract_successors(hc.inf, hc.data_universe, hc.label_universe).empty());
}

TEST_CASE("successors preserve structure and actor uniqueness") {
  auto subset_of = [](const std::set<LabeledDatum>& a,
                      const std::set<LabeledDatum>& b) {
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
  };
  Rng rng(16001);
  for (int i = 0; i < 400; ++i) {
    RandomInfra r = random_infrastructure(rng);
    validate(r.inf);
    for (const Infrastructure& s :
         abstract_successors(r.inf, r.data_universe, r.label_universe)) {
      CHECK(s.graph.nodes == r.inf.graph.nodes);
      CHECK(s.graph.edges == r.inf.graph.edges);
      CHECK(s.policy == r.inf.policy);
      validate(s);  // actor uniqueness holds in every successor

      // stores only grow
      for (const auto& [loc, items] : r.inf.graph.store)
        CHECK(subset_of(items, s.graph.store_at(loc)));
    }
  }
}

TEST_CASE("only put can break a holding global policy") {
  Rng rng(16002);
  for (int i = 0; i < 400; ++i) {
    RandomInfra r = random_infrastructure(rng);
    if (!global_policy(r.inf)) continue;
    // disable put everywhere: every successor keeps the policy
    Infrastructure no_put = r.inf;
    for (auto& [loc, entries] : no_put.policy)
      for (auto& e : entries) e.actions.erase(Action::Put);
    for (const Infrastructure& s :
         abstract_successors(no_put, r.data_universe, r.label_universe))
      CHECK(global_policy(s));
  }
}

TEST_CASE("validate flags broken invariants") {
  Healthcare hc;
  Infrastructure bad = hc.inf;
  bad.graph.actor_at["cloud"].insert("Eve");  // second placement
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = hc.inf;
  bad.graph.edges.insert(norm_edge("home", "mars"));
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);

  bad = hc.inf;
  bad.policy["mars"] = {};
  CHECK_THROWS_AS(validate(bad), std::invalid_argument);
}
