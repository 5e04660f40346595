#include "hey/repro.hpp"

#include <algorithm>
#include <chrono>
#include <functional>
#include <sstream>
#include <utility>

#include "hey/eval.hpp"
#include "hey/jankov.hpp"
#include "hey/morphisms.hpp"
#include "hey/quasivariety.hpp"
#include "hey/standard.hpp"

namespace hey {
namespace {

using CheckResult = std::pair<std::string, std::string>;  // computed, cert

struct Check {
  std::string id;
  std::function<CheckResult(const Budgets&)> run;
};

std::string yn(bool b) { return b ? "yes" : "no"; }

std::string map_str(const std::vector<int>& m) {
  std::ostringstream os;
  os << "[";
  for (size_t i = 0; i < m.size(); ++i) os << (i ? "," : "") << m[i];
  os << "]";
  return os.str();
}

std::string val_str(const Valuation& v) {
  std::ostringstream os;
  bool first = true;
  for (const auto& [name, x] : v) {
    os << (first ? "" : " ") << name << "=" << x;
    first = false;
  }
  return os.str();
}

const HeytingAlgebra& cat(const std::string& name) {
  return catalog_algebra(name).alg;
}

void add_fig1(std::vector<Check>& cs) {
  cs.push_back({"fig1/c5p-embeds-in-c7p", [](const Budgets&) {
                  auto r = find_homs(cat("C5p"), cat("C7p"), HomMode::Injective, 1);
                  return CheckResult{yn(!r.homs.empty()),
                                     r.homs.empty() ? "" : "map " + map_str(r.homs[0].map)};
                }});
  cs.push_back({"fig1/c10p-subdirect-in-c5p-x-c7p", [](const Budgets&) {
                  std::vector<const HeytingAlgebra*> fs{&cat("C5p"), &cat("C7p")};
                  auto r = subdirect_embedding_check(cat("C10p"), fs);
                  return CheckResult{yn(r.found), r.found ? "map " + map_str(r.map) : ""};
                }});
  cs.push_back({"fig1/c7p-image-of-c10p", [](const Budgets&) {
                  auto r = find_homs(cat("C10p"), cat("C7p"), HomMode::Surjective, 1);
                  return CheckResult{yn(!r.homs.empty()),
                                     r.homs.empty() ? "" : "map " + map_str(r.homs[0].map)};
                }});
  cs.push_back({"fig1/no-embedding-c7p-into-c10p", [](const Budgets&) {
                  auto r = find_homs(cat("C7p"), cat("C10p"), HomMode::Injective, 1);
                  return CheckResult{yn(r.homs.empty() && r.exhausted),
                                     "exhaustive search"};
                }});
  cs.push_back({"fig1/c5p-in-qvar-c7p", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C7p"), b);
                  MemberResult m = member(cat("C5p"), q);
                  return CheckResult{yn(m.member),
                                     m.member ? std::to_string(m.separating.size()) +
                                                    " separating homs"
                                              : ""};
                }});
  cs.push_back({"fig1/c10p-in-qvar-c7p", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C7p"), b);
                  MemberResult m = member(cat("C10p"), q);
                  return CheckResult{yn(m.member),
                                     m.member ? std::to_string(m.separating.size()) +
                                                    " separating homs"
                                              : ""};
                }});
  cs.push_back({"fig1/c7p-totally-non-projective", [](const Budgets& b) {
                  TnpResult t = totally_non_projective(cat("C7p"), b);
                  std::string cert;
                  if (t.verdict == Verdict::Yes)
                    cert = "bad preimage " + t.wp.counterexample.label;
                  return CheckResult{to_string(t.verdict), cert};
                }});
}

void add_th_rnpr(std::vector<Check>& cs) {
  cs.push_back({"th_rnpr/c7p-in-qvar-c16", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  MemberResult m = member(cat("C7p"), q);
                  std::string cert;
                  if (!m.member)
                    cert = "unseparated pair (" + std::to_string(m.unseparated.first) +
                           "," + std::to_string(m.unseparated.second) + ")";
                  return CheckResult{yn(m.member), cert};
                }});
  cs.push_back({"th_rnpr/c10p-irreducible-in-qvar-c16", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  QIrreducibleResult r = q_irreducible(cat("C10p"), q);
                  return CheckResult{yn(r.irreducible),
                                     r.irreducible
                                         ? "witness element " + std::to_string(r.witness)
                                         : ""};
                }});
  cs.push_back({"th_rnpr/c10p-weakly-projective-in-qvar-c16", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  WpResult w = weakly_projective(cat("C10p"), q);
                  std::string cert;
                  if (w.verdict == Verdict::No) cert = w.counterexample.label;
                  return CheckResult{to_string(w.verdict), cert};
                }});
  cs.push_back({"th_rnpr/c10p-wp-counterexample-is-c12p", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  WpResult w = weakly_projective(cat("C10p"), q);
                  if (w.verdict == Verdict::ExceedsBudget)
                    return CheckResult{"exceeds-budget", ""};
                  if (w.verdict != Verdict::No) return CheckResult{"no", "no counterexample"};
                  return CheckResult{yn(isomorphic(w.counterexample, cat("C12p"))),
                                     w.counterexample.label};
                }});
  cs.push_back({"th_rnpr/qvar-c16-primitive", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  PrimitiveResult p = primitive(q);
                  std::string cert;
                  if (p.verdict == Verdict::No) cert = "failing " + p.failing.label;
                  return CheckResult{to_string(p.verdict), cert};
                }});
  cs.push_back({"th_rnpr/qvar-c16-failing-irreducible-is-c10p", [](const Budgets& b) {
                  QvarHandle q = make_qvar(cat("C16"), b);
                  PrimitiveResult p = primitive(q);
                  if (p.verdict == Verdict::ExceedsBudget)
                    return CheckResult{"exceeds-budget", ""};
                  if (p.verdict != Verdict::No) return CheckResult{"no", "no failure"};
                  return CheckResult{yn(isomorphic(p.failing, cat("C10p"))),
                                     p.failing.label};
                }});
  for (int n : {2, 3, 4, 5, 6, 8, 9, 10, 11, 12, 13, 14, 15}) {
    cs.push_back({"th_rnpr/primitive-cyclic-" + std::to_string(n),
                  [n](const Budgets& b) {
                    QvarHandle q = make_qvar(cyclic_algebra(n).alg, b);
                    PrimitiveResult p = primitive(q);
                    std::string cert;
                    if (p.verdict == Verdict::No) cert = "failing " + p.failing.label;
                    if (p.verdict == Verdict::ExceedsBudget)
                      cert = std::to_string(p.undecided.size()) + " undecided";
                    return CheckResult{to_string(p.verdict), cert};
                  }});
  }
  for (int n : {11, 13, 15}) {
    cs.push_back({"th_rnpr/cyclic-" + std::to_string(n) + "-witness-is-c7p",
                  [n](const Budgets& b) {
                    QvarHandle q = make_qvar(cyclic_algebra(n).alg, b);
                    PrimitiveResult p = primitive(q);
                    if (p.verdict == Verdict::ExceedsBudget)
                      return CheckResult{"exceeds-budget", ""};
                    if (p.verdict != Verdict::No) return CheckResult{"no", "no failure"};
                    return CheckResult{yn(isomorphic(p.failing, cat("C7p"))),
                                       p.failing.label};
                  }});
  }
}

Substitution mints_sigma() {
  return {{"p1", parse_formula("~~q")},
          {"p2", parse_formula("~q")},
          {"r", parse_formula("~~q -> q")}};
}

void add_th_noleast(std::vector<Check>& cs) {
  cs.push_back({"th_noleast/premise-instance-valid-in-c7", [](const Budgets& b) {
                  Rule inst = substitute(mints_rule(), mints_sigma());
                  ValidityResult r =
                      formula_valid(cyclic_algebra(7).alg, inst.premises.at(0), b);
                  return CheckResult{yn(r.valid), format_formula(inst.premises.at(0))};
                }});
  cs.push_back({"th_noleast/conclusion-instance-refuted-in-c7", [](const Budgets& b) {
                  Rule inst = substitute(mints_rule(), mints_sigma());
                  ValidityResult r =
                      formula_valid(cyclic_algebra(7).alg, inst.conclusion, b);
                  std::string cert;
                  if (!r.valid)
                    cert = val_str(r.witness->assignment) + " -> value " +
                           std::to_string(r.witness->value);
                  return CheckResult{yn(!r.valid), cert};
                }});
  cs.push_back({"th_noleast/glivenko-disjunction-refuted-in-c7", [](const Budgets& b) {
                  FormulaPtr f = parse_formula("(~~q -> q) \\/ ~~q \\/ ~q");
                  ValidityResult r = formula_valid(cyclic_algebra(7).alg, f, b);
                  std::string cert;
                  if (!r.valid)
                    cert = val_str(r.witness->assignment) + " -> value " +
                           std::to_string(r.witness->value);
                  return CheckResult{yn(!r.valid), cert};
                }});
  cs.push_back({"th_noleast/refutation-verdicts-agree", [](const Budgets& b) {
                  const HeytingAlgebra& c7 = cyclic_algebra(7).alg;
                  Rule inst = substitute(mints_rule(), mints_sigma());
                  bool r1 = !formula_valid(c7, inst.conclusion, b).valid;
                  bool r2 =
                      !formula_valid(c7, parse_formula("(~~q -> q) \\/ ~~q \\/ ~q"), b)
                           .valid;
                  return CheckResult{yn(r1 == r2),
                                     "conclusion " + yn(r1) + ", disjunction " + yn(r2)};
                }});
  cs.push_back({"th_noleast/mints-instance-counterexample", [](const Budgets& b) {
                  InstanceCheckResult r =
                      instance_check(cyclic_algebra(7).alg, mints_rule(), mints_sigma(), b);
                  std::string cert;
                  if (r.counterexample) cert = val_str(r.witness->assignment);
                  return CheckResult{yn(r.counterexample), cert};
                }});
  cs.push_back({"th_noleast/sc-primitive-c7", [](const Budgets& b) {
                  ScResult r = sc_primitive_cyclic(cyclic_algebra(7).alg, b);
                  return CheckResult{to_string(r.verdict),
                                     "free algebra size " + std::to_string(r.free_size)};
                }});
  cs.push_back({"th_noleast/sc-primitive-c2", [](const Budgets& b) {
                  ScResult r = sc_primitive_cyclic(two_element_algebra(), b);
                  return CheckResult{to_string(r.verdict),
                                     "free algebra size " + std::to_string(r.free_size)};
                }});
}

std::vector<HeytingAlgebra> jankov_pool(int max_n) {
  std::vector<HeytingAlgebra> pool;
  for (const std::string& name : catalog_names()) {
    const HeytingAlgebra& a = cat(name);
    if (a.n <= max_n) pool.push_back(a);
  }
  for (int n = 1; n <= max_n; ++n) pool.push_back(chain_algebra(n));
  for (int n = 2; n <= max_n; ++n) pool.push_back(cyclic_algebra(n).alg);
  return pool;
}

bool is_si(const HeytingAlgebra& a) {
  return a.nontrivial() && second_greatest(a).has_value();
}

void add_jankov(std::vector<Check>& cs) {
  cs.push_back({"jankov/self-refutation", [](const Budgets& b) {
                  int checked = 0;
                  for (const HeytingAlgebra& a : jankov_pool(10)) {
                    if (!is_si(a)) continue;
                    JankovFormula j = jankov_formula(a);
                    if (formula_valid(a, j.formula, b).valid)
                      return CheckResult{"no", "not refuted in " + a.label};
                    if (evaluate(a, j.formula, identity_valuation(j)) == a.top)
                      return CheckResult{"no", "identity valuation fails in " + a.label};
                    ++checked;
                  }
                  return CheckResult{"yes", std::to_string(checked) + " algebras"};
                }});
  cs.push_back({"jankov/correspondence", [](const Budgets& b) {
                  std::vector<HeytingAlgebra> pool = jankov_pool(10);
                  int pairs = 0;
                  for (const HeytingAlgebra& a : pool) {
                    if (!is_si(a)) continue;
                    JankovFormula j = jankov_formula(a);
                    for (const HeytingAlgebra& bb : pool) {
                      bool valid = formula_valid(bb, j.formula, b).valid;
                      bool insh = in_sh(a, bb);
                      if (valid != !insh)
                        return CheckResult{"no", "mismatch at (" + a.label + ", " +
                                                     bb.label + ")"};
                      ++pairs;
                    }
                  }
                  return CheckResult{"yes", std::to_string(pairs) + " pairs"};
                }});
}

}  // namespace

bool ReproReport::any_red() const {
  for (const ReproRow& r : rows)
    if (r.red()) return true;
  return false;
}

int ReproReport::count_green() const {
  int k = 0;
  for (const ReproRow& r : rows) k += r.ok ? 1 : 0;
  return k;
}

int ReproReport::count_exceeds() const {
  int k = 0;
  for (const ReproRow& r : rows) k += (!r.ok && !r.red()) ? 1 : 0;
  return k;
}

std::vector<std::string> repro_suites() {
  return {"fig1", "th_rnpr", "th_noleast", "jankov", "all"};
}

ReproReport run_repro(const std::string& suite, const Budgets& budgets) {
  std::vector<Check> cs;
  bool all = suite == "all";
  if (all || suite == "fig1") add_fig1(cs);
  if (all || suite == "th_rnpr") add_th_rnpr(cs);
  if (all || suite == "th_noleast") add_th_noleast(cs);
  if (all || suite == "jankov") add_jankov(cs);
  if (cs.empty()) throw std::invalid_argument("unknown suite: " + suite);

  Json expected = load_json_file(data_directory() + "/repro_expected.json");
  ReproReport rep;
  rep.suite = suite;
  for (const Check& c : cs) {
    ReproRow row;
    row.id = c.id;
    if (expected.contains(c.id)) row.expected = expected[c.id].get<std::string>();
    auto t0 = std::chrono::steady_clock::now();
    try {
      auto [computed, cert] = c.run(budgets);
      row.computed = computed;
      row.certificate = cert;
    } catch (const budget_exceeded&) {
      row.computed = "exceeds-budget";
    }
    row.wall_ms = std::chrono::duration<double, std::milli>(
                      std::chrono::steady_clock::now() - t0)
                      .count();
    row.ok = row.computed == row.expected;
    rep.rows.push_back(row);
  }
  std::sort(rep.rows.begin(), rep.rows.end(),
            [](const ReproRow& a, const ReproRow& b) { return a.id < b.id; });
  return rep;
}

Json report_to_json(const ReproReport& r) {
  Json rows = Json::array();
  for (const ReproRow& row : r.rows)
    rows.push_back({{"id", row.id},
                    {"expected", row.expected},
                    {"computed", row.computed},
                    {"ok", row.ok},
                    {"certificate", row.certificate},
                    {"wall_ms", row.wall_ms}});
  return {{"suite", r.suite},
          {"rows", rows},
          {"green", r.count_green()},
          {"exceeds_budget", r.count_exceeds()},
          {"red", r.any_red()}};
}

std::string report_to_text(const ReproReport& r) {
  std::ostringstream os;
  size_t width = 0;
  for (const ReproRow& row : r.rows) width = std::max(width, row.id.size());
  for (const ReproRow& row : r.rows) {
    std::string status = row.ok ? "pass" : (row.red() ? "FAIL" : "over");
    os << status << "  " << row.id << std::string(width - row.id.size() + 2, ' ')
       << "expected=" << row.expected << " computed=" << row.computed;
    if (!row.certificate.empty()) os << "  [" << row.certificate << "]";
    os << "  (" << (int)row.wall_ms << " ms)\n";
  }
  os << r.suite << ": " << r.rows.size() << " checks, " << r.count_green()
     << " green, " << r.count_exceeds() << " over budget, "
     << (r.any_red() ? "RED" : "no red") << "\n";
  return os.str();
}

}  // namespace hey
