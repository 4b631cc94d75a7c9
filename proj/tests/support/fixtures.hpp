// The IoT healthcare scenario used across suites: Patient and Eve at home,
// Doctor at the hospital, the patient's datum in the cloud, and a permissive
// cloud policy. Mirrors models/healthcare.json.
#pragma once

#include "attackmc/efficient.hpp"
#include "attackmc/infra.hpp"

namespace attackmc::testing {

struct Healthcare {
  Infrastructure inf;
  std::set<DataValue> data_universe{"42"};
  std::set<DlmLabel> label_universe{{"Patient", {"Doctor"}}, {"Eve", {}}};

  Healthcare() {
    InfraGraph& g = inf.graph;
    g.nodes = {"home", "sphone", "cloud", "hospital"};
    g.edges = {norm_edge("home", "cloud"), norm_edge("sphone", "cloud"),
               norm_edge("hospital", "cloud")};
    g.actor_at = {{"home", {"Patient", "Eve"}}, {"hospital", {"Doctor"}}};
    g.store = {{"cloud", {LabeledDatum{{"Patient", {"Doctor"}}, "42"}}}};
    inf.policy["cloud"] = {
        {ActorCondition{ActorCondition::Kind::Any, {}},
         {Action::Move, Action::Get, Action::Put}}};
  }

  EInfrastructure efficient() const {
    return repr(inf, data_universe, label_universe);
  }
};

}  // namespace attackmc::testing
