#pragma once

#include <string>
#include <vector>

#include "attackmc/attack_tree.hpp"
#include "attackmc/explore.hpp"

namespace attackmc {

/// DOT rendering of an attack tree: and-nodes as boxes, or-nodes as
/// diamonds, base attacks as ellipses labeled "pre => post". Node ids and
/// output bytes are deterministic.
std::string emit_dot(const AttackTree& t);

/// DOT rendering of an explored state graph, nodes labeled with state
/// summaries.
std::string emit_dot(const ExploreResult& reach);

}  // namespace attackmc
