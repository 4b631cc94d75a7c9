#include "attackmc/dot.hpp"

#include <sstream>

#include "attackmc/model_io.hpp"

namespace attackmc {

namespace {

std::string set_label(const StateSet& s) {
  std::ostringstream os;
  os << "{";
  bool first = true;
  for (StateId x : s) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << "}";
  return os.str();
}

int emit_node(std::ostringstream& os, const AttackTree& t, int& next_id) {
  int id = next_id++;
  switch (t.kind) {
    case NodeKind::Base:
      os << "  n" << id << " [shape=ellipse, label=\"" << set_label(t.goal.pre)
         << " => " << set_label(t.goal.post) << "\"];\n";
      break;
    case NodeKind::And:
      os << "  n" << id << " [shape=box, label=\"AND " << set_label(t.goal.pre)
         << " => " << set_label(t.goal.post) << "\"];\n";
      break;
    case NodeKind::Or:
      os << "  n" << id << " [shape=diamond, label=\"OR " << set_label(t.goal.pre)
         << " => " << set_label(t.goal.post) << "\"];\n";
      break;
  }
  for (const auto& c : t.children) {
    int cid = emit_node(os, *c, next_id);
    os << "  n" << id << " -> n" << cid << ";\n";
  }
  return id;
}

}  // namespace

std::string emit_dot(const AttackTree& t) {
  std::ostringstream os;
  os << "digraph attack_tree {\n";
  int next_id = 0;
  emit_node(os, t, next_id);
  os << "}\n";
  return os.str();
}

std::string emit_dot(const ExploreResult& reach) {
  std::ostringstream os;
  os << "digraph states {\n";
  for (StateId s = 0; s < static_cast<StateId>(reach.states.size()); ++s)
    os << "  s" << s << " [label=\"" << s << ": " << summarize(reach.states[s])
       << "\"];\n";
  for (StateId s = 0; s < static_cast<StateId>(reach.states.size()); ++s)
    for (StateId t : reach.successors[s]) os << "  s" << s << " -> s" << t << ";\n";
  os << "}\n";
  return os.str();
}

}  // namespace attackmc
