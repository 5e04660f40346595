#include <pybind11/pybind11.h>
#include <pybind11/stl.h>

#include "hey/eval.hpp"
#include "hey/formula.hpp"
#include "hey/jankov.hpp"
#include "hey/json_io.hpp"
#include "hey/morphisms.hpp"
#include "hey/quasivariety.hpp"
#include "hey/repro.hpp"
#include "hey/standard.hpp"

namespace py = pybind11;
using namespace hey;

namespace {

HeytingAlgebra alg_of(const std::string& spec) {
  return resolve_algebra(spec).alg;
}

Rule rule_of(const std::string& text) {
  if (text == "mints") return mints_rule();
  if (text == "harrop") return harrop_rule();
  if (text == "modus-ponens") return modus_ponens();
  if (text.rfind("visser:", 0) == 0) return visser_rule(std::stoi(text.substr(7)));
  return parse_rule(text);
}

py::dict describe(const std::string& spec) {
  AlgebraHandle h = resolve_algebra(spec);
  py::dict d;
  d["label"] = h.alg.label;
  d["description"] = h.description;
  d["n"] = h.alg.n;
  d["bot"] = h.alg.bot;
  d["top"] = h.alg.top;
  d["has_frame"] = h.has_frame;
  return d;
}

py::object witness_dict(const std::optional<RefutationWitness>& w) {
  if (!w) return py::none();
  py::dict d;
  d["assignment"] = w->assignment;
  d["value"] = w->value;
  if (!w->premise_values.empty()) d["premise_values"] = w->premise_values;
  return d;
}

}  // namespace

PYBIND11_MODULE(heyting, m) {
  m.doc() = "finite Heyting algebras, inference rules, and quasivariety checks";

  py::register_exception<budget_exceeded>(m, "BudgetExceeded", PyExc_RuntimeError);

  m.def("describe", &describe, py::arg("spec"),
        "label, size, and bounds of the algebra at the given address");
  m.def("size", [](const std::string& s) { return alg_of(s).n; }, py::arg("spec"));
  m.def(
      "validate",
      [](const std::string& s) {
        ValidationReport r = validate_algebra(alg_of(s));
        return py::make_tuple(r.ok, r.failures);
      },
      py::arg("spec"), "(ok, failure messages) for the Heyting algebra laws");
  m.def(
      "isomorphic",
      [](const std::string& a, const std::string& b) {
        return isomorphic(alg_of(a), alg_of(b));
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "hom_count",
      [](const std::string& a, const std::string& b, const std::string& mode) {
        HomMode hm = HomMode::All;
        if (mode == "injective") hm = HomMode::Injective;
        else if (mode == "surjective") hm = HomMode::Surjective;
        else if (mode == "bijective") hm = HomMode::Bijective;
        else if (mode != "all") throw std::invalid_argument("unknown mode: " + mode);
        HomSearchResult r = find_homs(alg_of(a), alg_of(b), hm);
        if (!r.exhausted) throw budget_exceeded{};
        return r.homs.size();
      },
      py::arg("a"), py::arg("b"), py::arg("mode") = "all");

  m.def(
      "member",
      [](const std::string& a, const std::string& b) {
        return member(alg_of(a), make_qvar(alg_of(b))).member;
      },
      py::arg("a"), py::arg("b"), "is A in the quasivariety generated by B?");
  m.def(
      "q_irreducible",
      [](const std::string& a, const std::string& b) {
        return q_irreducible(alg_of(a), make_qvar(alg_of(b))).irreducible;
      },
      py::arg("a"), py::arg("b"));
  m.def(
      "weakly_projective",
      [](const std::string& a, const std::string& b) {
        return std::string(to_string(weakly_projective(alg_of(a), make_qvar(alg_of(b))).verdict));
      },
      py::arg("a"), py::arg("b"), "verdict string: yes | no | exceeds-budget");
  m.def(
      "totally_non_projective",
      [](const std::string& a) {
        return std::string(to_string(totally_non_projective(alg_of(a)).verdict));
      },
      py::arg("a"));
  m.def(
      "primitive",
      [](const std::string& b) {
        return std::string(to_string(primitive(make_qvar(alg_of(b))).verdict));
      },
      py::arg("b"));
  m.def(
      "sc_primitive",
      [](const std::string& b) {
        return std::string(to_string(sc_primitive_cyclic(alg_of(b)).verdict));
      },
      py::arg("b"));
  m.def(
      "free_size",
      [](const std::string& b, int k) {
        return free_algebra(make_qvar(alg_of(b)), k).alg.n;
      },
      py::arg("b"), py::arg("k") = 1);

  m.def(
      "formula_valid",
      [](const std::string& spec, const std::string& f) {
        return formula_valid(alg_of(spec), parse_formula(f)).valid;
      },
      py::arg("spec"), py::arg("formula"));
  m.def(
      "refute",
      [](const std::string& spec, const std::string& f) {
        return witness_dict(formula_valid(alg_of(spec), parse_formula(f)).witness);
      },
      py::arg("spec"), py::arg("formula"),
      "refuting valuation as a dict, or None when the formula is valid");
  m.def(
      "rule_valid",
      [](const std::string& spec, const std::string& rule) {
        return rule_valid(alg_of(spec), rule_of(rule)).valid;
      },
      py::arg("spec"), py::arg("rule"),
      "rule text \"A1, A2 / B\" or mints | harrop | modus-ponens | visser:n");
  m.def(
      "instance_check",
      [](const std::string& spec, const std::string& rule,
         const std::map<std::string, std::string>& sub) {
        Substitution sigma;
        for (const auto& [k, v] : sub) sigma[k] = parse_formula(v);
        InstanceCheckResult r = instance_check(alg_of(spec), rule_of(rule), sigma);
        py::dict d;
        d["counterexample"] = r.counterexample;
        d["instance"] = format_rule(r.instance);
        d["witness"] = witness_dict(r.witness);
        return d;
      },
      py::arg("spec"), py::arg("rule"), py::arg("substitution"));

  m.def(
      "jankov_formula",
      [](const std::string& spec) { return format_formula(jankov_formula(alg_of(spec)).formula); },
      py::arg("spec"));
  m.def(
      "jankov_check",
      [](const std::string& a, const std::string& b) {
        HeytingAlgebra aa = alg_of(a), bb = alg_of(b);
        bool valid = formula_valid(bb, jankov_formula(aa).formula).valid;
        return valid == !in_sh(aa, bb);
      },
      py::arg("a"), py::arg("b"),
      "does validity of the characteristic formula match the SH criterion?");
  m.def(
      "in_sh",
      [](const std::string& a, const std::string& b) {
        return in_sh(alg_of(a), alg_of(b));
      },
      py::arg("a"), py::arg("b"));

  m.def(
      "repro",
      [](const std::string& suite) {
        return report_to_json(run_repro(suite, default_budgets())).dump();
      },
      py::arg("suite") = "all",
      "run a reproduction suite (fig1 | th_rnpr | th_noleast | jankov | all), "
      "returning the JSON report as a string");
  m.def(
      "export_json",
      [](const std::string& spec) {
        AlgebraHandle h = resolve_algebra(spec);
        Json j{{"algebra", algebra_to_json(h.alg)}};
        if (h.has_frame) j["frame"] = poset_to_json(h.frame);
        return j.dump(2);
      },
      py::arg("spec"));
  m.def("catalog_names", [] { return catalog_names(); });
}
