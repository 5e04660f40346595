#pragma once

#include <map>
#include <optional>
#include <string>
#include <vector>

#include "hey/algebra.hpp"
#include "hey/budget.hpp"
#include "hey/formula.hpp"

namespace hey {

// Total assignment of algebra elements to variable names.
using Valuation = std::map<std::string, int>;
using Substitution = std::map<std::string, FormulaPtr>;

// Homomorphic extension of v; throws std::invalid_argument on an unbound
// variable.
int evaluate(const HeytingAlgebra& a, const FormulaPtr& f, const Valuation& v);

struct RefutationWitness {
  Valuation assignment;
  int value = 0;                    // value reached by the refuted formula
  std::vector<int> premise_values;  // rules only; every entry equals top
};

struct ValidityResult {
  bool valid = true;
  std::optional<RefutationWitness> witness;
};

// Exhaustive check over all valuations, enumerated lexicographically over
// the sorted variable names with element indices ascending; the first
// refuting valuation wins.  Throws budget_exceeded past eval_steps.
ValidityResult formula_valid(const HeytingAlgebra& a, const FormulaPtr& f,
                             const Budgets& b = default_budgets());

// A rule is refuted by a valuation sending every premise to top and the
// conclusion below top.
ValidityResult rule_valid(const HeytingAlgebra& a, const Rule& r,
                          const Budgets& b = default_budgets());

// True iff every member of gamma is valid in a while f is refuted in a.
bool separates(const HeytingAlgebra& a, const std::vector<FormulaPtr>& gamma,
               const FormulaPtr& f, const Budgets& b = default_budgets());
bool separates_rules(const HeytingAlgebra& a, const std::vector<Rule>& gamma,
                     const Rule& r, const Budgets& b = default_budgets());

struct InstanceCheckResult {
  bool counterexample = false;  // true: this instance refutes admissibility
  Rule instance;                // the substituted rule
  // Refutation of the instantiated conclusion when counterexample is true.
  std::optional<RefutationWitness> witness;
};

// Applies s to r.  A counterexample requires every instantiated premise to
// be valid in a and the instantiated conclusion refuted; anything else is
// inconclusive (a single instance can never certify admissibility).
InstanceCheckResult instance_check(const HeytingAlgebra& a, const Rule& r,
                                   const Substitution& s,
                                   const Budgets& b = default_budgets());

}  // namespace hey
