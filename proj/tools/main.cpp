#include <fstream>
#include <iostream>
#include <string>
#include <vector>

#include "CLI11.hpp"

#include "hey/algebra.hpp"
#include "hey/budget.hpp"
#include "hey/eval.hpp"
#include "hey/formula.hpp"
#include "hey/jankov.hpp"
#include "hey/json_io.hpp"
#include "hey/morphisms.hpp"
#include "hey/quasivariety.hpp"
#include "hey/repro.hpp"
#include "hey/standard.hpp"

using namespace hey;

namespace {

bool g_json = false;
Budgets g_budgets;
int g_exit = 0;

void emit(const Json& j, const std::string& text) {
  if (g_json)
    std::cout << j.dump(2) << "\n";
  else
    std::cout << text;
}

int verdict_exit(Verdict v) { return v == Verdict::ExceedsBudget ? 2 : 0; }

std::string elem_name(const AlgebraHandle& h, int i) {
  if (!h.has_frame) return std::to_string(i);
  std::string s = "{";
  bool first = true;
  for (int p = 0; p < h.frame.n; ++p)
    if (h.elems[i] >> p & 1) {
      if (!first) s += " ";
      s += h.frame.name_of(p);
      first = false;
    }
  return s + "}";
}

std::vector<std::pair<int, int>> algebra_covers(const HeytingAlgebra& a) {
  std::vector<std::pair<int, int>> cs;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (x == y || !a.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < a.n && cover; ++z)
        if (z != x && z != y && a.le(x, z) && a.le(z, y)) cover = false;
      if (cover) cs.push_back({x, y});
    }
  return cs;
}

Json witness_json(const RefutationWitness& w) {
  Json j{{"assignment", w.assignment}, {"value", w.value}};
  if (!w.premise_values.empty()) j["premise_values"] = w.premise_values;
  return j;
}

std::string witness_text(const RefutationWitness& w) {
  std::string s;
  for (const auto& [name, v] : w.assignment)
    s += (s.empty() ? "" : " ") + name + "=" + std::to_string(v);
  return s + " -> value " + std::to_string(w.value);
}

int cmd_alg_show(const std::string& spec) {
  AlgebraHandle h = resolve_algebra(spec);
  Json j{{"label", h.alg.label},
         {"description", h.description},
         {"n", h.alg.n},
         {"bot", h.alg.bot},
         {"top", h.alg.top}};
  std::string text = h.alg.label + ": " + h.description + " (n=" +
                     std::to_string(h.alg.n) + ", bot=" + std::to_string(h.alg.bot) +
                     ", top=" + std::to_string(h.alg.top) + ")\n";
  if (h.alg.n <= 128) {
    auto cs = algebra_covers(h.alg);
    Json jc = Json::array();
    text += "elements:\n";
    Json names = Json::array();
    for (int i = 0; i < h.alg.n; ++i) {
      text += "  " + std::to_string(i) + ": " + elem_name(h, i) + "\n";
      names.push_back(elem_name(h, i));
    }
    text += "covers:\n";
    for (auto [x, y] : cs) {
      text += "  " + std::to_string(x) + " < " + std::to_string(y) + "\n";
      jc.push_back({x, y});
    }
    j["elements"] = names;
    j["covers"] = jc;
  } else {
    text += "(tables elided at this size)\n";
  }
  if (h.has_frame) j["frame"] = poset_to_json(h.frame);
  emit(j, text);
  return 0;
}

int cmd_alg_check(const std::string& spec) {
  AlgebraHandle h = resolve_algebra(spec);
  ValidationReport r = validate_algebra(h.alg);
  Json j{{"label", h.alg.label}, {"ok", r.ok}, {"failures", r.failures}};
  std::string text = h.alg.label + ": " +
                     (r.ok ? "ok, all Heyting algebra laws hold (n=" +
                                 std::to_string(h.alg.n) + ")\n"
                           : "INVALID\n");
  for (const std::string& f : r.failures) text += "  " + f + "\n";
  emit(j, text);
  return r.ok ? 0 : 1;
}

int cmd_alg_homs(const std::string& sa, const std::string& sb, bool inj, bool sur,
                 bool iso, uint64_t cap) {
  AlgebraHandle a = resolve_algebra(sa), b = resolve_algebra(sb);
  HomMode mode = HomMode::All;
  if (iso)
    mode = HomMode::Bijective;
  else if (inj)
    mode = HomMode::Injective;
  else if (sur)
    mode = HomMode::Surjective;
  HomSearchResult r = find_homs(a.alg, b.alg, mode, cap);
  Json maps = Json::array();
  std::string text = std::to_string(r.homs.size()) + " homomorphism(s) " +
                     a.alg.label + " -> " + b.alg.label +
                     (r.exhausted ? "" : " (search truncated)") + "\n";
  for (const Homomorphism& h : r.homs) {
    maps.push_back(h.map);
    text += "  [";
    for (size_t i = 0; i < h.map.size(); ++i)
      text += (i ? "," : "") + std::to_string(h.map[i]);
    text += "]";
    if (h.injective) text += " injective";
    if (h.surjective) text += " surjective";
    text += "\n";
  }
  emit(Json{{"count", r.homs.size()}, {"maps", maps}, {"exhausted", r.exhausted}},
       text);
  return 0;
}

int cmd_alg_subalgebras(const std::string& spec) {
  AlgebraHandle h = resolve_algebra(spec);
  auto subs = subalgebras_up_to_iso(h.alg);
  Json arr = Json::array();
  std::string text = std::to_string(subs.size()) + " subalgebra(s) of " +
                     h.alg.label + " up to isomorphism\n";
  for (const Subalgebra& s : subs) {
    arr.push_back({{"n", s.alg.n}, {"carrier", s.back}});
    text += "  n=" + std::to_string(s.alg.n) + " carrier [";
    for (size_t i = 0; i < s.back.size(); ++i)
      text += (i ? "," : "") + std::to_string(s.back[i]);
    text += "]\n";
  }
  emit(Json{{"count", subs.size()}, {"subalgebras", arr}}, text);
  return 0;
}

int cmd_alg_quotients(const std::string& spec) {
  AlgebraHandle h = resolve_algebra(spec);
  auto qs = quotients_up_to_iso(h.alg);
  Json arr = Json::array();
  std::string text = std::to_string(qs.size()) + " quotient(s) of " + h.alg.label +
                     " up to isomorphism\n";
  for (const QuotientResult& q : qs) {
    arr.push_back({{"n", q.alg.n}, {"map", q.fwd}});
    text += "  n=" + std::to_string(q.alg.n) + " map [";
    for (size_t i = 0; i < q.fwd.size(); ++i)
      text += (i ? "," : "") + std::to_string(q.fwd[i]);
    text += "]\n";
  }
  emit(Json{{"count", qs.size()}, {"quotients", arr}}, text);
  return 0;
}

int cmd_alg_subdirect(const std::string& sa, const std::vector<std::string>& fs) {
  AlgebraHandle a = resolve_algebra(sa);
  std::vector<AlgebraHandle> hs;
  for (const std::string& s : fs) hs.push_back(resolve_algebra(s));
  std::vector<const HeytingAlgebra*> ptrs;
  for (const AlgebraHandle& h : hs) ptrs.push_back(&h.alg);
  SubdirectResult r = subdirect_embedding_check(a.alg, ptrs);
  std::string text;
  if (r.found) {
    text = "subdirect embedding found: [";
    for (size_t i = 0; i < r.map.size(); ++i)
      text += (i ? "," : "") + std::to_string(r.map[i]);
    text += "]\n";
  } else {
    text = "no subdirect embedding\n";
  }
  emit(Json{{"found", r.found}, {"map", r.map}}, text);
  return 0;
}

int cmd_alg_product(const std::vector<std::string>& fs) {
  std::vector<AlgebraHandle> hs;
  for (const std::string& s : fs) hs.push_back(resolve_algebra(s));
  std::vector<const HeytingAlgebra*> ptrs;
  for (const AlgebraHandle& h : hs) ptrs.push_back(&h.alg);
  HeytingAlgebra p = product_algebra(ptrs, g_budgets.table_cap);
  emit(Json{{"label", p.label}, {"n", p.n}, {"algebra", algebra_to_json(p)}},
       p.label + ": n=" + std::to_string(p.n) + "\n");
  return 0;
}

int cmd_alg_free(const std::string& sb, int k) {
  AlgebraHandle b = resolve_algebra(sb);
  QvarHandle q = make_qvar(b.alg, g_budgets);
  FreeAlgebraResult f = free_algebra(q, k);
  std::string text = f.alg.label + ": n=" + std::to_string(f.alg.n) +
                     ", generators [";
  for (size_t i = 0; i < f.generators.size(); ++i)
    text += (i ? "," : "") + std::to_string(f.generators[i]);
  text += "]\n";
  emit(Json{{"label", f.alg.label},
            {"n", f.alg.n},
            {"generators", f.generators},
            {"algebra", algebra_to_json(f.alg)}},
       text);
  return 0;
}

int cmd_alg_export(const std::string& spec, const std::string& format,
                   const std::string& out) {
  AlgebraHandle h = resolve_algebra(spec);
  std::string payload;
  if (format == "dot") {
    payload = h.has_frame ? h.frame.to_dot() : algebra_to_dot(h.alg);
  } else if (format == "json") {
    Json j{{"algebra", algebra_to_json(h.alg)}};
    if (h.has_frame) j["frame"] = poset_to_json(h.frame);
    payload = j.dump(2) + "\n";
  } else {
    throw std::invalid_argument("unknown export format: " + format);
  }
  if (out.empty() || out == "-") {
    std::cout << payload;
  } else {
    std::ofstream f(out);
    if (!f) throw std::runtime_error("cannot write " + out);
    f << payload;
  }
  return 0;
}

int cmd_logic_valid(const std::string& spec, const std::string& ftext) {
  AlgebraHandle h = resolve_algebra(spec);
  FormulaPtr f = parse_formula(ftext);
  ValidityResult r = formula_valid(h.alg, f, g_budgets);
  Json j{{"algebra", h.alg.label}, {"formula", format_formula(f)}, {"valid", r.valid}};
  std::string text;
  if (r.valid) {
    text = "valid in " + h.alg.label + "\n";
  } else {
    j["witness"] = witness_json(*r.witness);
    text = "refuted in " + h.alg.label + ": " + witness_text(*r.witness) + "\n";
  }
  emit(j, text);
  return 0;
}

int cmd_logic_rule_valid(const std::string& spec, const std::string& rtext) {
  AlgebraHandle h = resolve_algebra(spec);
  Rule r = parse_rule(rtext);
  ValidityResult v = rule_valid(h.alg, r, g_budgets);
  Json j{{"algebra", h.alg.label}, {"rule", format_rule(r)}, {"valid", v.valid}};
  std::string text;
  if (v.valid) {
    text = "rule valid in " + h.alg.label + "\n";
  } else {
    j["witness"] = witness_json(*v.witness);
    text = "rule refuted in " + h.alg.label + ": " + witness_text(*v.witness) + "\n";
  }
  emit(j, text);
  return 0;
}

Rule named_or_parsed_rule(const std::string& rtext) {
  if (rtext == "mints") return mints_rule();
  if (rtext == "harrop") return harrop_rule();
  if (rtext == "modus-ponens") return modus_ponens();
  if (rtext.rfind("visser:", 0) == 0)
    return visser_rule(std::stoi(rtext.substr(7)));
  return parse_rule(rtext);
}

int cmd_logic_instance_check(const std::string& spec, const std::string& rtext,
                             const std::vector<std::string>& subs) {
  AlgebraHandle h = resolve_algebra(spec);
  Rule r = named_or_parsed_rule(rtext);
  Substitution sigma;
  for (const std::string& s : subs) {
    size_t eq = s.find('=');
    if (eq == std::string::npos)
      throw std::invalid_argument("--sub expects VAR=FORMULA, got: " + s);
    sigma[s.substr(0, eq)] = parse_formula(s.substr(eq + 1));
  }
  InstanceCheckResult res = instance_check(h.alg, r, sigma, g_budgets);
  Json j{{"algebra", h.alg.label},
         {"rule", format_rule(r)},
         {"instance", format_rule(res.instance)},
         {"counterexample", res.counterexample}};
  std::string text = "instance: " + format_rule(res.instance) + "\n";
  if (res.counterexample) {
    j["witness"] = witness_json(*res.witness);
    text += "counterexample in " + h.alg.label + ": " + witness_text(*res.witness) +
            "\n";
  } else {
    text += "inconclusive (instance does not refute the rule in " + h.alg.label +
            ")\n";
  }
  emit(j, text);
  return 0;
}

int cmd_logic_separates(const std::string& spec, const std::string& ftext,
                        const std::vector<std::string>& gamma_texts) {
  AlgebraHandle h = resolve_algebra(spec);
  std::vector<FormulaPtr> gamma;
  for (const std::string& g : gamma_texts) gamma.push_back(parse_formula(g));
  FormulaPtr f = parse_formula(ftext);
  bool s = separates(h.alg, gamma, f, g_budgets);
  emit(Json{{"algebra", h.alg.label}, {"separates", s}},
       std::string(s ? "yes" : "no") + ": " + h.alg.label +
           (s ? " validates the set and refutes the formula\n"
              : " does not separate\n"));
  return 0;
}

int cmd_rules(const Rule& r) {
  Json prem = Json::array();
  for (const FormulaPtr& p : r.premises) prem.push_back(format_formula(p));
  emit(Json{{"premises", prem}, {"conclusion", format_formula(r.conclusion)}},
       format_rule(r) + "\n");
  return 0;
}

int cmd_qvar_member(const std::string& sa, const std::string& sb) {
  AlgebraHandle a = resolve_algebra(sa), b = resolve_algebra(sb);
  QvarHandle q = make_qvar(b.alg, g_budgets);
  MemberResult m = member(a.alg, q);
  Json j{{"algebra", a.alg.label},
         {"generator", b.alg.label},
         {"member", m.member}};
  std::string text;
  if (m.member) {
    Json seps = Json::array();
    for (const Homomorphism& h : m.separating) seps.push_back(h.map);
    j["separating"] = seps;
    text = "yes: " + std::to_string(m.separating.size()) +
           " homomorphism(s) separate all pairs\n";
  } else {
    j["unseparated"] = {m.unseparated.first, m.unseparated.second};
    text = "no: elements " + std::to_string(m.unseparated.first) + " and " +
           std::to_string(m.unseparated.second) + " cannot be separated\n";
  }
  emit(j, text);
  return 0;
}

int cmd_qvar_irreducible(const std::string& sa, const std::string& sb) {
  AlgebraHandle a = resolve_algebra(sa), b = resolve_algebra(sb);
  QvarHandle q = make_qvar(b.alg, g_budgets);
  QIrreducibleResult r = q_irreducible(a.alg, q);
  Json j{{"algebra", a.alg.label},
         {"generator", b.alg.label},
         {"irreducible", r.irreducible}};
  std::string text;
  if (r.irreducible) {
    j["witness"] = r.witness;
    text = "yes: witness element " + std::to_string(r.witness) + "\n";
  } else {
    j["separating_filters"] = r.separating_filters;
    text = "no: separating principal filters at [";
    for (size_t i = 0; i < r.separating_filters.size(); ++i)
      text += (i ? "," : "") + std::to_string(r.separating_filters[i]);
    text += "]\n";
  }
  emit(j, text);
  return 0;
}

Json wp_json(const WpResult& w) {
  Json j{{"verdict", to_string(w.verdict)}, {"note", w.note}};
  if (w.verdict == Verdict::No) {
    j["counterexample"] = {{"label", w.counterexample.label},
                           {"n", w.counterexample.n},
                           {"algebra", algebra_to_json(w.counterexample)}};
    j["surjection"] = w.surjection;
  }
  return j;
}

std::string wp_text(const WpResult& w) {
  std::string text = to_string(w.verdict);
  if (!w.note.empty()) text += " (" + w.note + ")";
  if (w.verdict == Verdict::No) {
    text += ": counterexample " + w.counterexample.label + " (n=" +
            std::to_string(w.counterexample.n) + "), surjection [";
    for (size_t i = 0; i < w.surjection.size(); ++i)
      text += (i ? "," : "") + std::to_string(w.surjection[i]);
    text += "]";
  }
  return text + "\n";
}

int cmd_qvar_projective(const std::string& sa, const std::string& sb) {
  AlgebraHandle a = resolve_algebra(sa), b = resolve_algebra(sb);
  QvarHandle q = make_qvar(b.alg, g_budgets);
  WpResult w = weakly_projective(a.alg, q);
  Json j = wp_json(w);
  j["algebra"] = a.alg.label;
  j["generator"] = b.alg.label;
  emit(j, wp_text(w));
  return verdict_exit(w.verdict);
}

int cmd_qvar_tnp(const std::string& sa) {
  AlgebraHandle a = resolve_algebra(sa);
  TnpResult t = totally_non_projective(a.alg, g_budgets);
  Json j{{"algebra", a.alg.label},
         {"verdict", to_string(t.verdict)},
         {"weak_projectivity", wp_json(t.wp)}};
  std::string text = to_string(t.verdict);
  if (t.verdict == Verdict::Yes)
    text += ": no proper preimage embeds, e.g. " + t.wp.counterexample.label;
  if (t.verdict == Verdict::No) text += ": the algebra is weakly projective";
  emit(j, text + "\n");
  return verdict_exit(t.verdict);
}

int cmd_qvar_primitive(const std::string& sb) {
  AlgebraHandle b = resolve_algebra(sb);
  QvarHandle q = make_qvar(b.alg, g_budgets);
  PrimitiveResult p = primitive(q);
  Json j{{"generator", b.alg.label}, {"verdict", to_string(p.verdict)}};
  std::string text = to_string(p.verdict);
  if (p.verdict == Verdict::No) {
    j["certificate"] = {{"failing", p.failing.label},
                        {"n", p.failing.n},
                        {"weak_projectivity", wp_json(p.failure)}};
    text += ": irreducible subalgebra " + p.failing.label +
            " is not weakly projective; " + wp_text(p.failure);
  } else {
    if (!p.undecided.empty()) j["undecided"] = p.undecided;
    text += "\n";
  }
  emit(j, text);
  return verdict_exit(p.verdict);
}

int cmd_qvar_sc_primitive(const std::string& sb) {
  AlgebraHandle b = resolve_algebra(sb);
  ScResult r = sc_primitive_cyclic(b.alg, g_budgets);
  Json j{{"generator", b.alg.label},
         {"verdict", to_string(r.verdict)},
         {"free_size", r.free_size}};
  std::string text = std::string(to_string(r.verdict)) +
                     ": one-generated free algebra has " +
                     std::to_string(r.free_size) + " elements";
  if (r.inner.verdict == Verdict::No) {
    j["certificate"] = {{"failing", r.inner.failing.label},
                        {"weak_projectivity", wp_json(r.inner.failure)}};
    text += "; failing irreducible " + r.inner.failing.label;
  }
  emit(j, text + "\n");
  return verdict_exit(r.verdict);
}

int cmd_jankov_formula(const std::string& sa) {
  AlgebraHandle a = resolve_algebra(sa);
  JankovFormula j = jankov_formula(a.alg);
  Json out{{"algebra", a.alg.label},
           {"formula", format_formula(j.formula)},
           {"omega", j.var_of_element[j.omega]},
           {"variables", j.var_of_element}};
  emit(out, format_formula(j.formula) + "\n");
  return 0;
}

int cmd_jankov_check(const std::string& sa, const std::string& sb) {
  AlgebraHandle a = resolve_algebra(sa), b = resolve_algebra(sb);
  JankovFormula j = jankov_formula(a.alg);
  bool valid = formula_valid(b.alg, j.formula, g_budgets).valid;
  bool insh = in_sh(a.alg, b.alg);
  bool consistent = valid == !insh;
  Json out{{"algebra", a.alg.label},
           {"target", b.alg.label},
           {"formula_valid", valid},
           {"in_sh", insh},
           {"consistent", consistent}};
  std::string text = "X(" + a.alg.label + ") " +
                     (valid ? "valid" : "refuted") + " in " + b.alg.label + "; " +
                     a.alg.label +
                     (insh ? " embeds into a quotient of " : " not in SH of ") +
                     b.alg.label + (consistent ? "" : "  MISMATCH") + "\n";
  emit(out, text);
  return consistent ? 0 : 1;
}

int cmd_repro_run(const std::string& suite, const std::string& json_file) {
  ReproReport rep = run_repro(suite, g_budgets);
  std::cout << report_to_text(rep);
  if (!json_file.empty()) {
    std::string payload = report_to_json(rep).dump(2) + "\n";
    if (json_file == "-") {
      std::cout << payload;
    } else {
      std::ofstream f(json_file);
      if (!f) throw std::runtime_error("cannot write " + json_file);
      f << payload;
    }
  }
  return rep.any_red() ? 1 : 0;
}

}  // namespace

int main(int argc, char** argv) {
  CLI::App app{"finite Heyting algebras, inference rules, and quasivariety checks"};
  app.require_subcommand(1);
  g_budgets = default_budgets();
  app.add_flag("--json", g_json, "emit machine-readable JSON");
  app.add_option("--budget-eval-steps", g_budgets.eval_steps,
                 "valuation search step budget");
  app.add_option("--budget-search-steps", g_budgets.search_steps,
                 "morphism/partition search step budget");
  app.add_option("--budget-free-size", g_budgets.free_size,
                 "free algebra closure cap");
  app.add_option("--budget-enum-cap", g_budgets.enum_cap,
                 "subset/filter enumeration cap");
  app.add_option("--budget-table-cap", g_budgets.table_cap,
                 "largest materialized operation table");
  app.add_option("--budget-witness-power", g_budgets.witness_power,
                 "largest exponent in the witness search");
  app.add_option("--budget-frame-cap", g_budgets.frame_cap,
                 "universal frame point cap");

  std::string s_spec, s_spec2, s_formula, s_rule, s_suite, s_out, s_format = "json";
  std::vector<std::string> s_list, s_subs, s_gamma;
  bool f_inj = false, f_sur = false, f_iso = false;
  uint64_t o_cap = 0;
  int o_k = 1, o_n = 1;

  CLI::App* alg = app.add_subcommand("alg", "algebra construction and inspection");
  alg->require_subcommand(1);
  alg->fallthrough();
  {
    CLI::App* c = alg->add_subcommand("show", "print elements and cover pairs");
    c->fallthrough();
    c->add_option("spec", s_spec, "algebra address (kind:arg)")->required();
    c->callback([&] { g_exit = cmd_alg_show(s_spec); });
  }
  {
    CLI::App* c = alg->add_subcommand("check", "verify the Heyting algebra laws");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->callback([&] { g_exit = cmd_alg_check(s_spec); });
  }
  {
    CLI::App* c = alg->add_subcommand("homs", "enumerate homomorphisms A -> B");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("b", s_spec2)->required();
    c->add_flag("--injective", f_inj, "only embeddings");
    c->add_flag("--surjective", f_sur, "only surjections");
    c->add_flag("--iso", f_iso, "only isomorphisms");
    c->add_option("--cap", o_cap, "stop after this many maps");
    c->callback(
        [&] { g_exit = cmd_alg_homs(s_spec, s_spec2, f_inj, f_sur, f_iso, o_cap); });
  }
  {
    CLI::App* c = alg->add_subcommand("subalgebras", "subalgebras up to isomorphism");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->callback([&] { g_exit = cmd_alg_subalgebras(s_spec); });
  }
  {
    CLI::App* c = alg->add_subcommand("quotients", "quotients up to isomorphism");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->callback([&] { g_exit = cmd_alg_quotients(s_spec); });
  }
  {
    CLI::App* c = alg->add_subcommand(
        "subdirect", "look for a subdirect embedding into a product");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("factors", s_list)->required()->expected(-1);
    c->callback([&] { g_exit = cmd_alg_subdirect(s_spec, s_list); });
  }
  {
    CLI::App* c = alg->add_subcommand("product", "direct product of algebras");
    c->fallthrough();
    c->add_option("factors", s_list)->required()->expected(-2);
    c->callback([&] { g_exit = cmd_alg_product(s_list); });
  }
  {
    CLI::App* c = alg->add_subcommand("free", "free algebra of Q(B) on k generators");
    c->fallthrough();
    c->add_option("b", s_spec)->required();
    c->add_option("k", o_k)->required();
    c->callback([&] { g_exit = cmd_alg_free(s_spec, o_k); });
  }
  {
    CLI::App* c = alg->add_subcommand("export", "write JSON or DOT");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->add_option("--format", s_format, "json | dot");
    c->add_option("--out", s_out, "output file ('-' for stdout)");
    c->callback([&] { g_exit = cmd_alg_export(s_spec, s_format, s_out); });
  }

  CLI::App* logic = app.add_subcommand("logic", "validity in a finite algebra");
  logic->require_subcommand(1);
  logic->fallthrough();
  {
    CLI::App* c = logic->add_subcommand("valid", "formula validity");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->add_option("formula", s_formula)->required();
    c->callback([&] { g_exit = cmd_logic_valid(s_spec, s_formula); });
  }
  {
    CLI::App* c = logic->add_subcommand("rule-valid", "inference rule validity");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->add_option("rule", s_rule, "\"A1, A2 / B\"")->required();
    c->callback([&] { g_exit = cmd_logic_rule_valid(s_spec, s_rule); });
  }
  {
    CLI::App* c = logic->add_subcommand(
        "instance-check", "does a substitution instance refute the rule?");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->add_option("rule", s_rule, "rule text, or mints | harrop | modus-ponens | visser:n")
        ->required();
    c->add_option("--sub", s_subs, "VAR=FORMULA (repeatable)");
    c->callback([&] { g_exit = cmd_logic_instance_check(s_spec, s_rule, s_subs); });
  }
  {
    CLI::App* c = logic->add_subcommand(
        "separates", "algebra validates --gamma formulas and refutes the target");
    c->fallthrough();
    c->add_option("spec", s_spec)->required();
    c->add_option("formula", s_formula)->required();
    c->add_option("--gamma", s_gamma, "context formula (repeatable)");
    c->callback([&] { g_exit = cmd_logic_separates(s_spec, s_formula, s_gamma); });
  }

  CLI::App* rules = app.add_subcommand("rules", "named rule schemes");
  rules->require_subcommand(1);
  rules->fallthrough();
  {
    CLI::App* c = rules->add_subcommand("visser", "Visser rule V_n");
    c->fallthrough();
    c->add_option("n", o_n)->required();
    c->callback([&] { g_exit = cmd_rules(visser_rule(o_n)); });
  }
  rules->add_subcommand("mints", "Mints rule")->callback([&] {
    g_exit = cmd_rules(mints_rule());
  });
  rules->add_subcommand("harrop", "Harrop rule")->callback([&] {
    g_exit = cmd_rules(harrop_rule());
  });

  CLI::App* qvar = app.add_subcommand("qvar", "quasivariety predicates over Q(B)");
  qvar->require_subcommand(1);
  qvar->fallthrough();
  {
    CLI::App* c = qvar->add_subcommand("member", "is A in Q(B)?");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("b", s_spec2)->required();
    c->callback([&] { g_exit = cmd_qvar_member(s_spec, s_spec2); });
  }
  {
    CLI::App* c = qvar->add_subcommand("irreducible", "is A Q(B)-irreducible?");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("b", s_spec2)->required();
    c->callback([&] { g_exit = cmd_qvar_irreducible(s_spec, s_spec2); });
  }
  {
    CLI::App* c = qvar->add_subcommand("projective", "is A weakly projective in Q(B)?");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("b", s_spec2)->required();
    c->callback([&] { g_exit = cmd_qvar_projective(s_spec, s_spec2); });
  }
  {
    CLI::App* c = qvar->add_subcommand("tnp", "is A totally non-projective?");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->callback([&] { g_exit = cmd_qvar_tnp(s_spec); });
  }
  {
    CLI::App* c = qvar->add_subcommand("primitive", "is Q(B) primitive?");
    c->fallthrough();
    c->add_option("b", s_spec)->required();
    c->callback([&] { g_exit = cmd_qvar_primitive(s_spec); });
  }
  {
    CLI::App* c = qvar->add_subcommand(
        "sc-primitive", "is the structural completion of Q(B) primitive? (B one-generated)");
    c->fallthrough();
    c->add_option("b", s_spec)->required();
    c->callback([&] { g_exit = cmd_qvar_sc_primitive(s_spec); });
  }
  {
    CLI::App* c = qvar->add_subcommand("free", "free algebra of Q(B) on k generators");
    c->fallthrough();
    c->add_option("b", s_spec)->required();
    c->add_option("k", o_k)->required();
    c->callback([&] { g_exit = cmd_alg_free(s_spec, o_k); });
  }

  CLI::App* jankov = app.add_subcommand("jankov", "Jankov formulas");
  jankov->require_subcommand(1);
  jankov->fallthrough();
  {
    CLI::App* c = jankov->add_subcommand(
        "formula", "characteristic formula of a subdirectly irreducible algebra");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->callback([&] { g_exit = cmd_jankov_formula(s_spec); });
  }
  {
    CLI::App* c = jankov->add_subcommand(
        "check", "validity of X(A) in B against the SH(B) criterion");
    c->fallthrough();
    c->add_option("a", s_spec)->required();
    c->add_option("b", s_spec2)->required();
    c->callback([&] { g_exit = cmd_jankov_check(s_spec, s_spec2); });
  }

  CLI::App* repro = app.add_subcommand("repro", "reproduction suites");
  repro->require_subcommand(1);
  repro->fallthrough();
  {
    CLI::App* c = repro->add_subcommand("run", "run a suite of recorded checks");
    c->fallthrough();
    c->add_option("suite", s_suite, "fig1 | th_rnpr | th_noleast | jankov | all")
        ->required();
    c->add_option("--json", s_out, "also write a JSON report to this file");
    c->callback([&] { g_exit = cmd_repro_run(s_suite, s_out); });
  }

  try {
    app.parse(argc, argv);
  } catch (const CLI::ParseError& e) {
    int code = app.exit(e);
    return code == 0 ? 0 : 1;
  } catch (const budget_exceeded&) {
    std::cerr << "exceeds-budget\n";
    return 2;
  } catch (const parse_error& e) {
    std::cerr << "formula parse error at position " << e.position << ": "
              << e.what() << "\n";
    return 1;
  } catch (const std::exception& e) {
    std::cerr << "error: " << e.what() << "\n";
    return 1;
  }
  return g_exit;
}
