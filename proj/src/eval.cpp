#include "hey/eval.hpp"

#include <algorithm>
#include <stdexcept>

namespace hey {
namespace {

// Formulas are compiled to postfix programs over variable slots so the inner
// valuation loop runs without name lookups or recursion.
enum class Op : uint8_t { PushBot, PushVar, Meet, Join, Imp };
struct Instr {
  Op op;
  int slot = 0;
};
using Program = std::vector<Instr>;

void compile_rec(const Formula* f, const std::map<std::string, int>& slots,
                 Program& out) {
  switch (f->kind) {
    case Formula::Bot:
      out.push_back({Op::PushBot, 0});
      return;
    case Formula::Var: {
      auto it = slots.find(f->name);
      if (it == slots.end())
        throw std::invalid_argument("unbound variable '" + f->name + "'");
      out.push_back({Op::PushVar, it->second});
      return;
    }
    case Formula::And:
    case Formula::Or:
    case Formula::Imp:
      compile_rec(f->lhs.get(), slots, out);
      compile_rec(f->rhs.get(), slots, out);
      out.push_back({f->kind == Formula::And  ? Op::Meet
                     : f->kind == Formula::Or ? Op::Join
                                              : Op::Imp,
                     0});
      return;
  }
  throw std::logic_error("bad formula kind");
}

Program compile(const FormulaPtr& f, const std::map<std::string, int>& slots) {
  Program p;
  compile_rec(f.get(), slots, p);
  return p;
}

int run(const HeytingAlgebra& a, const Program& p, const std::vector<int>& env,
        StepCounter& sc) {
  sc.charge(p.size());
  // Stack depth is bounded by program length.
  static thread_local std::vector<int> stack;
  stack.clear();
  for (const Instr& in : p) {
    switch (in.op) {
      case Op::PushBot:
        stack.push_back(a.bot);
        break;
      case Op::PushVar:
        stack.push_back(env[in.slot]);
        break;
      case Op::Meet:
      case Op::Join:
      case Op::Imp: {
        int y = stack.back();
        stack.pop_back();
        int x = stack.back();
        stack.pop_back();
        stack.push_back(in.op == Op::Meet   ? a.meet(x, y)
                        : in.op == Op::Join ? a.join(x, y)
                                            : a.imp(x, y));
        break;
      }
    }
  }
  return stack.back();
}

std::map<std::string, int> slot_map(const std::vector<std::string>& vars) {
  std::map<std::string, int> slots;
  for (size_t i = 0; i < vars.size(); ++i) slots[vars[i]] = (int)i;
  return slots;
}

Valuation to_valuation(const std::vector<std::string>& vars,
                       const std::vector<int>& env) {
  Valuation v;
  for (size_t i = 0; i < vars.size(); ++i) v[vars[i]] = env[i];
  return v;
}

void flatten_and(const FormulaPtr& f, std::vector<FormulaPtr>& out) {
  if (f->kind == Formula::And) {
    flatten_and(f->lhs, out);
    flatten_and(f->rhs, out);
  } else {
    out.push_back(f);
  }
}

// Depth-first refutation search for f = (c1 /\ ... /\ cm) -> x.  Visits
// complete valuations in the same lexicographic order as the generic sweep,
// but evaluates each conjunct as soon as its variables are bound and prunes
// a branch once the running meet drops to or below the consequent's value
// (the implication is then top on the whole subtree by residuation).
struct ImpChainSearch {
  const HeytingAlgebra& a;
  const std::vector<std::string>& vars;
  std::vector<Program> conjuncts;        // grouped: by_depth[d] indexes these
  std::vector<std::vector<int>> by_depth;
  int rhs_slot;
  StepCounter& sc;
  std::vector<int> env;
  ValidityResult out;

  ImpChainSearch(const HeytingAlgebra& a_, const FormulaPtr& f,
                 const std::vector<std::string>& vars_, StepCounter& sc_)
      : a(a_), vars(vars_), sc(sc_) {
    auto slots = slot_map(vars);
    std::vector<FormulaPtr> parts;
    flatten_and(f->lhs, parts);
    by_depth.assign(vars.size() + 1, {});
    for (const FormulaPtr& c : parts) {
      conjuncts.push_back(compile(c, slots));
      int last = -1;
      for (const std::string& v : variables(c))
        last = std::max(last, slots.at(v));
      // Constant conjuncts complete before any assignment.
      by_depth[last + 1].push_back((int)conjuncts.size() - 1);
    }
    rhs_slot = slots.at(f->rhs->name);
    env.assign(vars.size(), 0);
  }

  bool dfs(size_t depth, int meet_so_far) {
    if (depth == vars.size()) {
      int value = a.imp(meet_so_far, env[rhs_slot]);
      if (value == a.top) return false;
      out.valid = false;
      out.witness = RefutationWitness{to_valuation(vars, env), value, {}};
      return true;
    }
    for (int val = 0; val < a.n; ++val) {
      sc.charge();
      env[depth] = val;
      int m = meet_so_far;
      for (int ci : by_depth[depth + 1]) m = a.meet(m, run(a, conjuncts[ci], env, sc));
      if ((int)depth >= rhs_slot && a.le(m, env[rhs_slot])) continue;
      if (dfs(depth + 1, m)) return true;
    }
    return false;
  }

  ValidityResult search() {
    int m = a.top;
    for (int ci : by_depth[0]) m = a.meet(m, run(a, conjuncts[ci], env, sc));
    dfs(0, m);
    return out;
  }
};

bool is_imp_chain_to_var(const FormulaPtr& f) {
  return f->kind == Formula::Imp && f->rhs->kind == Formula::Var;
}

ValidityResult formula_valid_counted(const HeytingAlgebra& a,
                                     const FormulaPtr& f, StepCounter& sc) {
  std::vector<std::string> vars = variables(f);
  if (is_imp_chain_to_var(f) && !vars.empty())
    return ImpChainSearch(a, f, vars, sc).search();

  Program prog = compile(f, slot_map(vars));
  std::vector<int> env(vars.size(), 0);
  for (;;) {
    int value = run(a, prog, env, sc);
    if (value != a.top)
      return {false, RefutationWitness{to_valuation(vars, env), value, {}}};
    // Advance the odometer; the last variable moves fastest.
    size_t i = vars.size();
    while (i > 0 && env[i - 1] == a.n - 1) env[--i] = 0;
    if (i == 0) return {true, std::nullopt};
    ++env[i - 1];
  }
}

ValidityResult rule_valid_counted(const HeytingAlgebra& a, const Rule& r,
                                  StepCounter& sc) {
  std::vector<std::string> vars = variables(r);
  auto slots = slot_map(vars);
  std::vector<Program> premises;
  for (const FormulaPtr& p : r.premises) premises.push_back(compile(p, slots));
  Program conclusion = compile(r.conclusion, slots);

  std::vector<int> env(vars.size(), 0);
  for (;;) {
    bool all_top = true;
    for (const Program& p : premises)
      if (run(a, p, env, sc) != a.top) {
        all_top = false;
        break;
      }
    if (all_top) {
      int value = run(a, conclusion, env, sc);
      if (value != a.top) {
        std::vector<int> pv(premises.size(), a.top);
        return {false, RefutationWitness{to_valuation(vars, env), value, pv}};
      }
    }
    size_t i = vars.size();
    while (i > 0 && env[i - 1] == a.n - 1) env[--i] = 0;
    if (i == 0) return {true, std::nullopt};
    ++env[i - 1];
  }
}

}  // namespace

int evaluate(const HeytingAlgebra& a, const FormulaPtr& f, const Valuation& v) {
  std::map<std::string, int> slots;
  std::vector<int> env;
  for (const auto& [name, val] : v) {
    if (val < 0 || val >= a.n)
      throw std::invalid_argument("valuation value out of range for '" + name +
                                  "'");
    slots[name] = (int)env.size();
    env.push_back(val);
  }
  Program prog = compile(f, slots);  // throws on unbound variables
  StepCounter sc{default_budgets().eval_steps};
  return run(a, prog, env, sc);
}

ValidityResult formula_valid(const HeytingAlgebra& a, const FormulaPtr& f,
                             const Budgets& b) {
  StepCounter sc{b.eval_steps};
  return formula_valid_counted(a, f, sc);
}

ValidityResult rule_valid(const HeytingAlgebra& a, const Rule& r,
                          const Budgets& b) {
  StepCounter sc{b.eval_steps};
  return rule_valid_counted(a, r, sc);
}

bool separates(const HeytingAlgebra& a, const std::vector<FormulaPtr>& gamma,
               const FormulaPtr& f, const Budgets& b) {
  for (const FormulaPtr& g : gamma)
    if (!formula_valid(a, g, b).valid) return false;
  return !formula_valid(a, f, b).valid;
}

bool separates_rules(const HeytingAlgebra& a, const std::vector<Rule>& gamma,
                     const Rule& r, const Budgets& b) {
  for (const Rule& g : gamma)
    if (!rule_valid(a, g, b).valid) return false;
  return !rule_valid(a, r, b).valid;
}

InstanceCheckResult instance_check(const HeytingAlgebra& a, const Rule& r,
                                   const Substitution& s, const Budgets& b) {
  InstanceCheckResult res;
  res.instance = substitute(r, s);
  for (const FormulaPtr& p : res.instance.premises)
    if (!formula_valid(a, p, b).valid) return res;  // inconclusive
  ValidityResult concl = formula_valid(a, res.instance.conclusion, b);
  if (concl.valid) return res;  // inconclusive
  res.counterexample = true;
  res.witness = concl.witness;
  return res;
}

}  // namespace hey
