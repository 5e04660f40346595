#include "hey/budget.hpp"

#include <cstdlib>

namespace hey {

namespace {

void seed_from_env(Budgets& b) {
  auto get = [](const char* name, uint64_t& out) {
    if (const char* v = std::getenv(name)) {
      char* end = nullptr;
      unsigned long long parsed = std::strtoull(v, &end, 10);
      if (end && *end == '\0' && parsed > 0) out = parsed;
    }
  };
  get("HEYTING_BUDGET_EVAL", b.eval_steps);
  get("HEYTING_BUDGET_SEARCH", b.search_steps);
  get("HEYTING_BUDGET_FREE", b.free_size);
  get("HEYTING_BUDGET_ENUM", b.enum_cap);
  get("HEYTING_BUDGET_TABLE", b.table_cap);
  uint64_t wp = 0, fc = 0;
  get("HEYTING_BUDGET_WITNESS_POWER", wp);
  get("HEYTING_BUDGET_FRAME", fc);
  if (wp) b.witness_power = (int)wp;
  if (fc) b.frame_cap = (int)fc;
}

}  // namespace

Budgets& default_budgets() {
  static Budgets b = [] {
    Budgets fresh;
    seed_from_env(fresh);
    return fresh;
  }();
  return b;
}

}  // namespace hey
