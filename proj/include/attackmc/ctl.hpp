#pragma once

#include <functional>
#include <map>
#include <memory>
#include <string>

#include "attackmc/transition.hpp"

namespace attackmc {

/// CTL formulas. Atoms are named predicates resolved through an AtomEnv at
/// evaluation time, so parsed goal expressions and programmatic state sets
/// share one evaluation path.
enum class CtlOp {
  Atom, Neg, Conj, Disj,
  EX, AX, EF, AF, EG, AG, EU, AU,
};

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

struct Formula {
  CtlOp op;
  std::string atom;   // CtlOp::Atom only
  FormulaPtr lhs;     // unary operand / left operand
  FormulaPtr rhs;     // EU/AU/Conj/Disj second operand
};

FormulaPtr f_atom(std::string name);
FormulaPtr f_neg(FormulaPtr f);
FormulaPtr f_conj(FormulaPtr a, FormulaPtr b);
FormulaPtr f_disj(FormulaPtr a, FormulaPtr b);
FormulaPtr f_unary(CtlOp op, FormulaPtr f);
FormulaPtr f_binary(CtlOp op, FormulaPtr a, FormulaPtr b);

using AtomEnv = std::map<std::string, StateSet>;
using SetTransformer = std::function<StateSet(const StateSet&)>;

/// Least fixpoint of a monotone transformer, iterated up from the empty set.
/// Throws if iteration exceeds |universe|+1 rounds (non-monotone transformer).
StateSet lfp(const SetTransformer& f, const StateSet& universe);

/// Greatest fixpoint, iterated down from the universe.
StateSet gfp(const SetTransformer& f, const StateSet& universe);

/// Set of model states satisfying the formula.
StateSet eval(const KripkeModel& m, const AtomEnv& env, const Formula& phi);

/// True iff all initial states satisfy the formula.
bool check(const KripkeModel& m, const AtomEnv& env, const Formula& phi);

}  // namespace attackmc
