#include "hey/jankov.hpp"

#include <optional>
#include <stdexcept>

#include "hey/morphisms.hpp"

namespace hey {

JankovFormula jankov_formula(const HeytingAlgebra& a) {
  std::optional<int> sg = a.nontrivial() ? second_greatest(a) : std::nullopt;
  if (!sg)
    throw std::invalid_argument(
        "jankov formula requires a subdirectly irreducible algebra");
  JankovFormula j;
  j.omega = *sg;
  size_t width = std::to_string(a.n - 1).size();
  j.var_of_element.resize(a.n);
  for (int x = 0; x < a.n; ++x) {
    if (x == j.omega) {
      j.var_of_element[x] = "w";
      continue;
    }
    std::string num = std::to_string(x);
    j.var_of_element[x] = "x" + std::string(width - num.size(), '0') + num;
  }

  auto pv = [&](int x) { return mk_var(j.var_of_element[x]); };
  auto equiv = [](FormulaPtr l, FormulaPtr r) {
    return mk_and(mk_imp(l, r), mk_imp(r, l));
  };
  FormulaPtr delta;
  auto conj = [&](FormulaPtr c) { delta = delta ? mk_and(delta, c) : c; };
  // Pin bot; top needs no conjunct (it is forced through p_{x->x}).
  conj(equiv(pv(a.bot), mk_bot()));
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      conj(equiv(pv(a.meet(x, y)), mk_and(pv(x), pv(y))));
      conj(equiv(pv(a.join(x, y)), mk_or(pv(x), pv(y))));
      conj(equiv(pv(a.imp(x, y)), mk_imp(pv(x), pv(y))));
    }
  j.formula = mk_imp(delta, pv(j.omega));
  return j;
}

Valuation identity_valuation(const JankovFormula& j) {
  Valuation v;
  for (int x = 0; x < (int)j.var_of_element.size(); ++x)
    v[j.var_of_element[x]] = x;
  return v;
}

bool in_sh(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  for (const Filter& f : filters(b)) {
    QuotientResult qr = quotient(b, f);
    if (qr.alg.n < a.n) continue;
    if (!find_homs(a, qr.alg, HomMode::Injective, 1).homs.empty()) return true;
  }
  return false;
}

}  // namespace hey
