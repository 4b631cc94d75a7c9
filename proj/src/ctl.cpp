#include "attackmc/ctl.hpp"

#include <stdexcept>
#include <utility>

namespace attackmc {

FormulaPtr f_atom(std::string name) {
  return std::make_shared<Formula>(Formula{CtlOp::Atom, std::move(name), nullptr, nullptr});
}

FormulaPtr f_neg(FormulaPtr f) {
  return std::make_shared<Formula>(Formula{CtlOp::Neg, {}, std::move(f), nullptr});
}

FormulaPtr f_conj(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{CtlOp::Conj, {}, std::move(a), std::move(b)});
}

FormulaPtr f_disj(FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{CtlOp::Disj, {}, std::move(a), std::move(b)});
}

FormulaPtr f_unary(CtlOp op, FormulaPtr f) {
  return std::make_shared<Formula>(Formula{op, {}, std::move(f), nullptr});
}

FormulaPtr f_binary(CtlOp op, FormulaPtr a, FormulaPtr b) {
  return std::make_shared<Formula>(Formula{op, {}, std::move(a), std::move(b)});
}

StateSet lfp(const SetTransformer& f, const StateSet& universe) {
  StateSet z;
  for (std::size_t round = 0; round <= universe.size() + 1; ++round) {
    StateSet next = f(z);
    if (next == z) return z;
    z = std::move(next);
  }
  throw std::logic_error("lfp: no fixpoint within |universe|+1 iterations "
                         "(transformer is not monotone)");
}

StateSet gfp(const SetTransformer& f, const StateSet& universe) {
  StateSet z = universe;
  for (std::size_t round = 0; round <= universe.size() + 1; ++round) {
    StateSet next = f(z);
    if (next == z) return z;
    z = std::move(next);
  }
  throw std::logic_error("gfp: no fixpoint within |universe|+1 iterations "
                         "(transformer is not monotone)");
}

StateSet eval(const KripkeModel& m, const AtomEnv& env, const Formula& phi) {
  const StateSpace& sp = m.space;
  const StateSet& all = sp.states;
  auto sub = [&](const FormulaPtr& f) { return eval(m, env, *f); };

  switch (phi.op) {
    case CtlOp::Atom: {
      auto it = env.find(phi.atom);
      if (it == env.end())
        throw std::invalid_argument("unresolved atom: " + phi.atom);
      return set_intersect(it->second, all);
    }
    case CtlOp::Neg:
      return set_minus(all, sub(phi.lhs));
    case CtlOp::Conj:
      return set_intersect(sub(phi.lhs), sub(phi.rhs));
    case CtlOp::Disj:
      return set_union(sub(phi.lhs), sub(phi.rhs));
    case CtlOp::EX:
      return pre_exists(sp, sub(phi.lhs));
    case CtlOp::AX:
      return pre_forall(sp, sub(phi.lhs));
    case CtlOp::EF: {
      StateSet f = sub(phi.lhs);
      return lfp([&](const StateSet& z) { return set_union(f, pre_exists(sp, z)); }, all);
    }
    case CtlOp::AF: {
      StateSet f = sub(phi.lhs);
      return lfp([&](const StateSet& z) { return set_union(f, pre_forall(sp, z)); }, all);
    }
    case CtlOp::EG: {
      StateSet f = sub(phi.lhs);
      return gfp([&](const StateSet& z) { return set_intersect(f, pre_exists(sp, z)); }, all);
    }
    case CtlOp::AG: {
      StateSet f = sub(phi.lhs);
      return gfp([&](const StateSet& z) { return set_intersect(f, pre_forall(sp, z)); }, all);
    }
    case CtlOp::EU: {
      StateSet f = sub(phi.lhs), g = sub(phi.rhs);
      return lfp([&](const StateSet& z) {
        return set_union(g, set_intersect(f, pre_exists(sp, z)));
      }, all);
    }
    case CtlOp::AU: {
      StateSet f = sub(phi.lhs), g = sub(phi.rhs);
      return lfp([&](const StateSet& z) {
        return set_union(g, set_intersect(f, pre_forall(sp, z)));
      }, all);
    }
  }
  throw std::logic_error("eval: unknown operator");
}

bool check(const KripkeModel& m, const AtomEnv& env, const Formula& phi) {
  return holds(m, eval(m, env, phi));
}

}  // namespace attackmc
