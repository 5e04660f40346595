#pragma once

#include <map>
#include <memory>
#include <stdexcept>
#include <string>
#include <vector>

namespace hey {

struct Formula;
using FormulaPtr = std::shared_ptr<const Formula>;

// Propositional formulas over bot, /\, \/, ->.  top and ~ are sugar:
// top = bot -> bot, ~a = a -> bot; the printer re-sugars both.
struct Formula {
  enum Kind { Var, Bot, And, Or, Imp };
  Kind kind;
  std::string name;       // Var only
  FormulaPtr lhs, rhs;    // And/Or/Imp
};

FormulaPtr mk_var(std::string name);
FormulaPtr mk_bot();
FormulaPtr mk_top();
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b);
FormulaPtr mk_not(FormulaPtr a);

bool is_top(const FormulaPtr& f);
bool is_not(const FormulaPtr& f);
bool formula_equal(const FormulaPtr& a, const FormulaPtr& b);

struct parse_error : std::runtime_error {
  size_t position;
  parse_error(const std::string& what, size_t pos)
      : std::runtime_error(what), position(pos) {}
};

// Grammar: imp is right-associative and binds loosest, then \/, then /\,
// then ~; atoms are identifiers, bot, top, and parenthesized formulas.
FormulaPtr parse_formula(const std::string& text);
std::string format_formula(const FormulaPtr& f);

// Sorted, deduplicated variable names.
std::vector<std::string> variables(const FormulaPtr& f);
FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& sub);

// Multiple-premise inference rule "A1, A2 / B".
struct Rule {
  std::vector<FormulaPtr> premises;
  FormulaPtr conclusion;
};

Rule parse_rule(const std::string& text);
std::string format_rule(const Rule& r);
std::vector<std::string> variables(const Rule& r);
Rule substitute(const Rule& r, const std::map<std::string, FormulaPtr>& sub);

// Named rule schemes.
Rule modus_ponens();
Rule visser_rule(int n);  // n >= 1
Rule mints_rule();
Rule harrop_rule();

}  // namespace hey
