// Compares serial and OpenMP frontier expansion on scaled-up infrastructures.
// The parallel path must produce the identical exploration, so the comparison
// is purely about wall time.
#include <chrono>
#include <cstdio>
#include <string>

#include "attackmc/explore.hpp"

using namespace attackmc;

namespace {

// a hub-and-spoke infrastructure: n actors at spoke locations around a
// permissive hub, each owning a label; values shared from a small pool
EInfrastructure scaled_model(int actors, int values) {
  Infrastructure inf;
  std::set<DataValue> d;
  std::set<DlmLabel> f;
  inf.graph.nodes.insert("hub");
  inf.policy["hub"] = {{ActorCondition{ActorCondition::Kind::Any, {}},
                        {Action::Move, Action::Get, Action::Put}}};
  for (int i = 0; i < actors; ++i) {
    LocationId loc = "loc" + std::to_string(i);
    ActorId actor = "actor" + std::to_string(i);
    inf.graph.nodes.insert(loc);
    inf.graph.edges.insert(norm_edge(loc, "hub"));
    inf.graph.actor_at[loc].insert(actor);
    f.insert({actor, {}});
  }
  for (int v = 0; v < values; ++v) d.insert("v" + std::to_string(v));
  return repr(inf, d, f);
}

double run(const EInfrastructure& e, bool parallel, std::size_t* states) {
  auto t0 = std::chrono::steady_clock::now();
  ExploreResult r = explore(e, ExploreOptions{6, parallel});
  *states = r.states.size();
  return std::chrono::duration<double>(std::chrono::steady_clock::now() - t0)
      .count();
}

}  // namespace

int main(int argc, char** argv) {
  int actors = argc > 1 ? std::atoi(argv[1]) : 3;
  int values = argc > 2 ? std::atoi(argv[2]) : 2;
  EInfrastructure e = scaled_model(actors, values);

  std::size_t ns = 0, np = 0;
  double serial = run(e, false, &ns);
  double parallel = run(e, true, &np);
  std::printf("model: %d actors, %d values, depth bound 6\n", actors, values);
  std::printf("serial:   %8zu states in %.3fs\n", ns, serial);
  std::printf("parallel: %8zu states in %.3fs (%.2fx)\n", np, parallel,
              parallel > 0 ? serial / parallel : 0.0);
  return ns == np ? 0 : 1;
}
