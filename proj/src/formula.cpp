#include "hey/formula.hpp"

#include <algorithm>
#include <cctype>
#include <set>
#include <sstream>

namespace hey {

namespace {

FormulaPtr node(Formula::Kind k, std::string name, FormulaPtr l, FormulaPtr r) {
  auto f = std::make_shared<Formula>();
  f->kind = k;
  f->name = std::move(name);
  f->lhs = std::move(l);
  f->rhs = std::move(r);
  return f;
}

}  // namespace

FormulaPtr mk_var(std::string name) {
  return node(Formula::Var, std::move(name), nullptr, nullptr);
}
FormulaPtr mk_bot() { return node(Formula::Bot, "", nullptr, nullptr); }
FormulaPtr mk_top() { return mk_imp(mk_bot(), mk_bot()); }
FormulaPtr mk_and(FormulaPtr a, FormulaPtr b) {
  return node(Formula::And, "", std::move(a), std::move(b));
}
FormulaPtr mk_or(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Or, "", std::move(a), std::move(b));
}
FormulaPtr mk_imp(FormulaPtr a, FormulaPtr b) {
  return node(Formula::Imp, "", std::move(a), std::move(b));
}
FormulaPtr mk_not(FormulaPtr a) { return mk_imp(std::move(a), mk_bot()); }

bool is_top(const FormulaPtr& f) {
  return f->kind == Formula::Imp && f->lhs->kind == Formula::Bot &&
         f->rhs->kind == Formula::Bot;
}

bool is_not(const FormulaPtr& f) {
  return f->kind == Formula::Imp && f->rhs->kind == Formula::Bot;
}

bool formula_equal(const FormulaPtr& a, const FormulaPtr& b) {
  if (a == b) return true;
  if (a->kind != b->kind) return false;
  switch (a->kind) {
    case Formula::Var: return a->name == b->name;
    case Formula::Bot: return true;
    default:
      return formula_equal(a->lhs, b->lhs) && formula_equal(a->rhs, b->rhs);
  }
}

namespace {

struct Parser {
  const std::string& s;
  size_t pos = 0;

  explicit Parser(const std::string& text) : s(text) {}

  void skip_ws() {
    while (pos < s.size() && std::isspace((unsigned char)s[pos])) ++pos;
  }

  bool eat(const std::string& tok) {
    skip_ws();
    if (s.compare(pos, tok.size(), tok) == 0) {
      pos += tok.size();
      return true;
    }
    return false;
  }

  [[noreturn]] void fail(const std::string& what) {
    throw parse_error(what + " at position " + std::to_string(pos), pos);
  }

  std::string ident() {
    skip_ws();
    size_t start = pos;
    if (pos < s.size() &&
        (std::isalpha((unsigned char)s[pos]) || s[pos] == '_')) {
      ++pos;
      while (pos < s.size() && (std::isalnum((unsigned char)s[pos]) ||
                                s[pos] == '_' || s[pos] == '\''))
        ++pos;
    }
    if (start == pos) fail("expected identifier");
    return s.substr(start, pos - start);
  }

  FormulaPtr parse_imp() {
    FormulaPtr lhs = parse_or();
    if (eat("->")) return mk_imp(lhs, parse_imp());
    return lhs;
  }

  FormulaPtr parse_or() {
    FormulaPtr f = parse_and();
    while (true) {
      skip_ws();
      if (s.compare(pos, 2, "\\/") == 0) {
        pos += 2;
        f = mk_or(f, parse_and());
      } else {
        return f;
      }
    }
  }

  FormulaPtr parse_and() {
    FormulaPtr f = parse_unary();
    while (true) {
      skip_ws();
      if (s.compare(pos, 2, "/\\") == 0) {
        pos += 2;
        f = mk_and(f, parse_unary());
      } else {
        return f;
      }
    }
  }

  FormulaPtr parse_unary() {
    skip_ws();
    if (eat("~")) return mk_not(parse_unary());
    return parse_atom();
  }

  FormulaPtr parse_atom() {
    skip_ws();
    if (eat("(")) {
      FormulaPtr f = parse_imp();
      if (!eat(")")) fail("expected ')'");
      return f;
    }
    std::string id = ident();
    if (id == "bot") return mk_bot();
    if (id == "top") return mk_top();
    return mk_var(id);
  }

  FormulaPtr parse_all() {
    FormulaPtr f = parse_imp();
    skip_ws();
    if (pos != s.size()) fail("trailing input");
    return f;
  }
};

}  // namespace

FormulaPtr parse_formula(const std::string& text) {
  Parser p(text);
  return p.parse_all();
}

namespace {

// Precedence levels: -> is 1 (right-assoc), \/ is 2, /\ is 3, ~ is 4,
// atoms are 5.  A subformula is parenthesized when its level is below the
// minimum its context demands.
void print(const FormulaPtr& f, int min_prec, std::ostream& os) {
  if (is_top(f)) {
    os << "top";
    return;
  }
  if (is_not(f)) {
    if (min_prec > 4) {
      os << "(";
      print(f, 0, os);
      os << ")";
    } else {
      os << "~";
      print(f->lhs, 4, os);
    }
    return;
  }
  switch (f->kind) {
    case Formula::Var: os << f->name; return;
    case Formula::Bot: os << "bot"; return;
    case Formula::Imp:
      if (min_prec > 1) os << "(";
      print(f->lhs, 2, os);
      os << " -> ";
      print(f->rhs, 1, os);
      if (min_prec > 1) os << ")";
      return;
    case Formula::Or:
      if (min_prec > 2) os << "(";
      print(f->lhs, 2, os);
      os << " \\/ ";
      print(f->rhs, 3, os);
      if (min_prec > 2) os << ")";
      return;
    case Formula::And:
      if (min_prec > 3) os << "(";
      print(f->lhs, 3, os);
      os << " /\\ ";
      print(f->rhs, 4, os);
      if (min_prec > 3) os << ")";
      return;
  }
}

void collect_vars(const FormulaPtr& f, std::set<std::string>& out) {
  switch (f->kind) {
    case Formula::Var: out.insert(f->name); return;
    case Formula::Bot: return;
    default:
      collect_vars(f->lhs, out);
      collect_vars(f->rhs, out);
  }
}

}  // namespace

std::string format_formula(const FormulaPtr& f) {
  std::ostringstream os;
  print(f, 0, os);
  return os.str();
}

std::vector<std::string> variables(const FormulaPtr& f) {
  std::set<std::string> s;
  collect_vars(f, s);
  return std::vector<std::string>(s.begin(), s.end());
}

FormulaPtr substitute(const FormulaPtr& f,
                      const std::map<std::string, FormulaPtr>& sub) {
  switch (f->kind) {
    case Formula::Var: {
      auto it = sub.find(f->name);
      return it == sub.end() ? f : it->second;
    }
    case Formula::Bot: return f;
    case Formula::And: return mk_and(substitute(f->lhs, sub), substitute(f->rhs, sub));
    case Formula::Or: return mk_or(substitute(f->lhs, sub), substitute(f->rhs, sub));
    default: return mk_imp(substitute(f->lhs, sub), substitute(f->rhs, sub));
  }
}

Rule parse_rule(const std::string& text) {
  // Split at the bare '/' separator; "/\" and "\/" are connective halves.
  size_t slash = std::string::npos;
  for (size_t i = 0; i < text.size(); ++i) {
    if (text[i] != '/') continue;
    if (i + 1 < text.size() && text[i + 1] == '\\') continue;
    if (i > 0 && text[i - 1] == '\\') continue;
    if (slash != std::string::npos)
      throw parse_error("multiple rule separators", i);
    slash = i;
  }
  if (slash == std::string::npos)
    throw parse_error("missing '/' rule separator", text.size());
  Rule r;
  std::string left = text.substr(0, slash);
  // Comma-separated premises; the grammar has no commas inside formulas.
  size_t start = 0;
  auto flush = [&](size_t end) {
    std::string part = left.substr(start, end - start);
    size_t a = part.find_first_not_of(" \t\r\n");
    if (a == std::string::npos) return;
    FormulaPtr f = parse_formula(part);
    for (const auto& p : r.premises)
      if (formula_equal(p, f)) return;
    r.premises.push_back(f);
  };
  for (size_t i = 0; i < left.size(); ++i)
    if (left[i] == ',') {
      flush(i);
      start = i + 1;
    }
  flush(left.size());
  r.conclusion = parse_formula(text.substr(slash + 1));
  return r;
}

std::string format_rule(const Rule& r) {
  std::ostringstream os;
  for (size_t i = 0; i < r.premises.size(); ++i) {
    if (i) os << ", ";
    os << format_formula(r.premises[i]);
  }
  if (!r.premises.empty()) os << " ";
  os << "/ " << format_formula(r.conclusion);
  return os.str();
}

std::vector<std::string> variables(const Rule& r) {
  std::set<std::string> s;
  for (const auto& p : r.premises) collect_vars(p, s);
  collect_vars(r.conclusion, s);
  return std::vector<std::string>(s.begin(), s.end());
}

Rule substitute(const Rule& r, const std::map<std::string, FormulaPtr>& sub) {
  Rule out;
  for (const auto& p : r.premises) {
    FormulaPtr f = substitute(p, sub);
    bool dup = false;
    for (const auto& q : out.premises)
      if (formula_equal(q, f)) dup = true;
    if (!dup) out.premises.push_back(f);
  }
  out.conclusion = substitute(r.conclusion, sub);
  return out;
}

Rule modus_ponens() {
  Rule r;
  r.premises = {mk_var("p"), mk_imp(mk_var("p"), mk_var("q"))};
  r.conclusion = mk_var("q");
  return r;
}

Rule visser_rule(int n) {
  if (n < 1) throw std::invalid_argument("visser rule needs n >= 1");
  auto p = [](int i) { return mk_var("p" + std::to_string(i)); };
  auto q = [](int i) { return mk_var("q" + std::to_string(i)); };
  FormulaPtr r = mk_var("r");
  FormulaPtr ants = mk_imp(p(1), q(1));
  for (int i = 2; i <= n; ++i) ants = mk_and(ants, mk_imp(p(i), q(i)));
  Rule rule;
  rule.premises = {mk_or(r, mk_imp(ants, mk_or(p(n + 1), p(n + 2))))};
  FormulaPtr concl = r;
  for (int j = 1; j <= n + 2; ++j) concl = mk_or(concl, mk_imp(ants, p(j)));
  rule.conclusion = concl;
  return rule;
}

Rule mints_rule() {
  FormulaPtr p1 = mk_var("p1"), p2 = mk_var("p2"), q = mk_var("q"),
             r = mk_var("r");
  FormulaPtr a = mk_imp(p1, q);
  Rule rule;
  rule.premises = {mk_or(r, mk_imp(a, mk_or(p1, p2)))};
  rule.conclusion = mk_or(mk_or(r, mk_imp(a, p1)), mk_imp(a, p2));
  return rule;
}

Rule harrop_rule() {
  FormulaPtr p = mk_var("p"), q = mk_var("q"), r = mk_var("r");
  Rule rule;
  rule.premises = {mk_imp(mk_not(p), mk_or(q, r))};
  rule.conclusion = mk_or(mk_imp(mk_not(p), q), mk_imp(mk_not(p), r));
  return rule;
}

}  // namespace hey
