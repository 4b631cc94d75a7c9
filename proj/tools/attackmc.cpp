#include <cstdlib>
#include <fstream>
#include <iostream>
#include <sstream>
#include <string>

#include "CLI11.hpp"
#include "json.hpp"

#include "attackmc/ctl.hpp"
#include "attackmc/dot.hpp"
#include "attackmc/explore.hpp"
#include "attackmc/goal.hpp"
#include "attackmc/model_io.hpp"

using namespace attackmc;
using nlohmann::json;

namespace {

// exit codes: 0 holds/safe (fixpoint reached), 1 usage or input error,
// 2 attack found / property fails, 3 bound exhausted without fixpoint
constexpr int kExitSafe = 0;
constexpr int kExitError = 1;
constexpr int kExitAttack = 2;
constexpr int kExitUnknown = 3;

#ifdef _OPENMP
constexpr bool kParallel = true;
#else
constexpr bool kParallel = false;
#endif

int default_bound() {
  if (const char* env = std::getenv("ATTACKMC_BOUND")) {
    char* end = nullptr;
    long v = std::strtol(env, &end, 10);
    if (end && *end == '\0' && v >= 0) return static_cast<int>(v);
    throw ParseError("invalid ATTACKMC_BOUND value: " + std::string(env), 0, 0);
  }
  return kDefaultBound;
}

void write_file(const std::string& path, const std::string& text) {
  std::ofstream out(path);
  if (!out) throw ParseError("cannot write file: " + path, 0, 0);
  out << text;
}

int run_check(const std::string& model_path, const std::string& goal_text,
              int bound, bool as_json, const std::string& dot_path,
              bool show_trace) {
  ModelFile model = load_model(model_path);
  EInfrastructure e0 = to_einfrastructure(model);
  GoalPtr goal = parse_goal(goal_text, model);
  McResult res = mc_attack(e0, goal_predicate(goal), bound, kParallel);

  if (as_json) {
    json doc;
    doc["goal"] = to_string(*goal);
    doc["bound"] = bound;
    doc["fixpoint"] = res.fixpoint;
    doc["fixpoint_depth"] = res.fixpoint_depth;
    doc["explored"] = res.explored;
    doc["verdict"] = res.found ? "attack" : (res.fixpoint ? "safe" : "unknown");
    if (res.found) {
      json trace = json::array();
      for (const auto& [ev, state] : res.trace)
        trace.push_back({{"event", to_string(ev)},
                         {"state", summarize(state.graph)},
                         {"digest", digest_hex(state.graph)}});
      doc["trace"] = std::move(trace);
      doc["attack_tree"] = json::parse(attack_tree_to_json(*res.tree, res.reach.states));
    }
    std::cout << doc.dump(2) << "\n";
  } else if (res.found) {
    std::cout << "attack found: " << to_string(*goal) << "\n";
    std::cout << "trace length: " << res.trace.size() << " event(s), "
              << res.explored << " state(s) explored\n";
    if (show_trace) {
      std::cout << "initial: " << summarize(e0.graph) << "\n";
      for (const auto& [ev, state] : res.trace)
        std::cout << "  " << to_string(ev) << "  ->  " << summarize(state.graph)
                  << "\n";
    }
  } else if (res.fixpoint) {
    std::cout << "no attack: " << to_string(*goal)
              << " is unreachable (fixpoint at depth " << res.fixpoint_depth
              << ", " << res.explored << " state(s))\n";
  } else {
    std::cout << "unknown: bound " << bound << " exhausted without fixpoint ("
              << res.explored << " state(s))\n";
  }

  if (!dot_path.empty() && res.found) write_file(dot_path, emit_dot(*res.tree));
  return res.found ? kExitAttack : (res.fixpoint ? kExitSafe : kExitUnknown);
}

int run_reach(const std::string& model_path, int bound, bool stats) {
  ModelFile model = load_model(model_path);
  EInfrastructure e0 = to_einfrastructure(model);
  ExploreResult r = explore(e0, ExploreOptions{bound, kParallel});
  std::cout << "reachable states: " << r.states.size() << "\n";
  if (r.fixpoint)
    std::cout << "fixpoint bound: " << r.fixpoint_depth << "\n";
  else
    std::cout << "bound " << bound << " exhausted without fixpoint\n";
  if (stats) {
    std::map<int, int> per_depth;
    for (int d : r.depth) ++per_depth[d];
    for (const auto& [d, n] : per_depth)
      std::cout << "depth " << d << ": " << n << " state(s)\n";
  }
  return r.fixpoint ? kExitSafe : kExitUnknown;
}

AttackTreePtr remap_tree(const AttackTree& t,
                         const std::map<StateId, StateId>& to_local) {
  auto remap_set = [&](const StateSet& s) {
    StateSet out;
    for (StateId x : s) {
      auto it = to_local.find(x);
      if (it == to_local.end())
        throw ParseError("tree state index " + std::to_string(x) +
                             " has no matching reachable state",
                         0, 0);
      out.insert(it->second);
    }
    return out;
  };
  AttackGoal goal{remap_set(t.goal.pre), remap_set(t.goal.post)};
  std::vector<AttackTreePtr> children;
  for (const auto& c : t.children) children.push_back(remap_tree(*c, to_local));
  switch (t.kind) {
    case NodeKind::Base: return base_attack(std::move(goal));
    case NodeKind::And: return and_attack(std::move(children), std::move(goal));
    case NodeKind::Or: return or_attack(std::move(children), std::move(goal));
  }
  throw ParseError("corrupt attack tree", 0, 0);
}

int run_validate_tree(const std::string& tree_path, const std::string& model_path,
                      int bound) {
  std::ifstream in(tree_path);
  if (!in) throw ParseError("cannot open tree file: " + tree_path, 0, 0);
  std::ostringstream buf;
  buf << in.rdbuf();
  LoadedTree loaded = attack_tree_from_json(buf.str());

  ModelFile model = load_model(model_path);
  EInfrastructure e0 = to_einfrastructure(model);
  ExploreResult r = explore(e0, ExploreOptions{bound, kParallel});

  std::map<std::string, StateId> by_digest;
  for (StateId s = 0; s < static_cast<StateId>(r.states.size()); ++s)
    by_digest[digest_hex(r.states[s])] = s;
  std::map<StateId, StateId> to_local;
  for (StateId i = 0; i < static_cast<StateId>(loaded.state_digests.size()); ++i) {
    auto it = by_digest.find(loaded.state_digests[i]);
    if (it != by_digest.end()) to_local[i] = it->second;
  }

  AttackTreePtr tree = remap_tree(*loaded.tree, to_local);
  bool valid = is_valid(*tree, r.to_state_space());
  std::cout << (valid ? "valid" : "invalid") << "\n";
  return valid ? kExitSafe : kExitAttack;
}

int run_ctl(const std::string& model_path, const std::string& formula_text,
            int bound) {
  ModelFile model = load_model(model_path);
  EInfrastructure e0 = to_einfrastructure(model);
  ParsedCtl parsed = parse_ctl(formula_text, model);
  ExploreResult r = explore(e0, ExploreOptions{bound, kParallel});
  if (!r.fixpoint) {
    std::cout << "unknown: bound " << bound << " exhausted without fixpoint ("
              << r.states.size() << " state(s))\n";
    return kExitUnknown;
  }
  KripkeModel m = mk_kripke(r.to_state_space(), StateSet{0});
  AtomEnv env;
  for (const auto& [name, goal] : parsed.atoms) {
    StateSet sat;
    for (StateId s = 0; s < static_cast<StateId>(r.states.size()); ++s)
      if (eval_goal(*goal, e0.with_graph(r.states[s]))) sat.insert(s);
    env[name] = std::move(sat);
  }
  bool ok = check(m, env, *parsed.formula);
  std::cout << (ok ? "holds" : "fails") << " (" << r.states.size()
            << " reachable state(s), fixpoint at depth " << r.fixpoint_depth
            << ")\n";
  return ok ? kExitSafe : kExitAttack;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"explicit-state model checking and attack tree synthesis for "
               "infrastructure models"};
  app.require_subcommand(1);

  std::string model_path, tree_path, goal_text, formula_text, dot_path;
  int bound = -1;
  bool as_json = false, show_trace = false, stats = false;

  auto* check_cmd = app.add_subcommand("check", "search for an attack reaching a goal");
  check_cmd->add_option("model", model_path, "model file (JSON)")->required();
  check_cmd->add_option("--goal", goal_text, "goal expression")->required();
  check_cmd->add_option("--bound", bound, "exploration depth bound");
  check_cmd->add_flag("--json", as_json, "machine-readable result on stdout");
  check_cmd->add_option("--dot", dot_path, "write the attack tree as DOT");
  check_cmd->add_flag("--trace", show_trace, "print the event trace");

  auto* policy_cmd = app.add_subcommand("policy", "check the global privacy policy");
  policy_cmd->add_option("model", model_path, "model file (JSON)")->required();
  policy_cmd->add_option("--bound", bound, "exploration depth bound");

  auto* reach_cmd = app.add_subcommand("reach", "count reachable states");
  reach_cmd->add_option("model", model_path, "model file (JSON)")->required();
  reach_cmd->add_option("--bound", bound, "exploration depth bound");
  reach_cmd->add_flag("--stats", stats, "per-depth state counts");

  auto* validate_cmd = app.add_subcommand("validate-tree", "check a serialized attack tree");
  validate_cmd->add_option("tree", tree_path, "attack tree file (JSON)")->required();
  validate_cmd->add_option("model", model_path, "model file (JSON)")->required();

  auto* ctl_cmd = app.add_subcommand("ctl", "evaluate a CTL formula over the reachable states");
  ctl_cmd->add_option("model", model_path, "model file (JSON)")->required();
  ctl_cmd->add_option("--formula", formula_text, "CTL formula")->required();
  ctl_cmd->add_option("--bound", bound, "exploration depth bound");

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : kExitError;
  }

  try {
    if (bound < 0) bound = default_bound();
    if (check_cmd->parsed())
      return run_check(model_path, goal_text, bound, as_json, dot_path, show_trace);
    if (policy_cmd->parsed())
      return run_check(model_path, "policy_violation", bound, false, "", false);
    if (reach_cmd->parsed()) return run_reach(model_path, bound, stats);
    if (validate_cmd->parsed())
      return run_validate_tree(tree_path, model_path, bound);
    if (ctl_cmd->parsed()) return run_ctl(model_path, formula_text, bound);
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return kExitError;
  }
  return kExitError;
}
