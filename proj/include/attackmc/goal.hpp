#pragma once

#include <map>
#include <memory>
#include <string>

#include "attackmc/ctl.hpp"
#include "attackmc/efficient.hpp"
#include "attackmc/explore.hpp"
#include "attackmc/model_io.hpp"

namespace attackmc {

/// Goal expressions over infrastructure states:
///   goal := "enables" "(" LOC "," ACTOR "," ACTION ")" | "policy_violation"
///         | "!" goal | goal "&&" goal | goal "||" goal | "(" goal ")"
/// with precedence ! > && > ||, left-associative.
struct GoalExpr;
using GoalPtr = std::shared_ptr<const GoalExpr>;

struct GoalExpr {
  enum class Kind { Enables, PolicyViolation, Not, And, Or };
  Kind kind;
  LocationId loc;      // Enables
  ActorId actor;       // Enables
  Action action{};     // Enables
  GoalPtr lhs, rhs;
};

/// Parses a goal expression, resolving identifiers against the model.
/// Throws ParseError with position info on syntax or resolution errors.
GoalPtr parse_goal(const std::string& text, const ModelFile& model);

std::string to_string(const GoalExpr& g);

bool eval_goal(const GoalExpr& g, const EInfrastructure& state);

StatePredicate goal_predicate(GoalPtr g);

/// CTL formula text: the goal grammar extended with prefix temporal
/// operators EX, AX, EF, AF, EG, AG applied to a parenthesized operand.
struct ParsedCtl {
  FormulaPtr formula;
  std::map<std::string, GoalPtr> atoms;  // atom name -> goal predicate
};

ParsedCtl parse_ctl(const std::string& text, const ModelFile& model);

}  // namespace attackmc
