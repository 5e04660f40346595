#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>

namespace hey {

enum class Verdict { Yes, No, ExceedsBudget };

inline const char* to_string(Verdict v) {
  switch (v) {
    case Verdict::Yes: return "yes";
    case Verdict::No: return "no";
    default: return "exceeds-budget";
  }
}

// Resource limits for the search procedures.  All deep searches charge
// against one of these; running out is reported as Verdict::ExceedsBudget,
// never as a silent wrong answer.
struct Budgets {
  uint64_t eval_steps = 100000000;   // valuation-search nodes
  uint64_t search_steps = 100000000; // closure / backtracking steps
  uint64_t free_size = 20000;        // free-algebra closure size cap
  uint64_t enum_cap = 1000000;       // up-set / filter enumeration cap
  uint64_t table_cap = 4096;         // largest algebra held as full tables
  int witness_power = 3;             // generator powers tried in witness search
  int frame_cap = 64;                // universal frame point cap
};

// Process-wide defaults, seeded once from HEYTING_BUDGET_* environment
// variables; the CLI flags override per invocation.
Budgets& default_budgets();

struct budget_exceeded : std::runtime_error {
  budget_exceeded() : std::runtime_error("budget exceeded") {}
};

struct StepCounter {
  uint64_t left;
  explicit StepCounter(uint64_t n) : left(n) {}
  void charge(uint64_t k = 1) {
    if (left < k) throw budget_exceeded{};
    left -= k;
  }
  bool try_charge(uint64_t k = 1) {
    if (left < k) return false;
    left -= k;
    return true;
  }
};

}  // namespace hey
