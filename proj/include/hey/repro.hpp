#pragma once

#include <string>
#include <vector>

#include "hey/budget.hpp"
#include "hey/json_io.hpp"

namespace hey {

// One reproduction check.  A row is green when computed equals expected and
// red when they differ with a decided verdict; a computed "exceeds-budget"
// against a decided expectation is neither (reported, but not a failure of
// the runner).
struct ReproRow {
  std::string id;
  std::string expected;
  std::string computed;
  bool ok = false;
  std::string certificate;
  double wall_ms = 0.0;

  bool red() const { return !ok && computed != "exceeds-budget"; }
};

struct ReproReport {
  std::string suite;
  std::vector<ReproRow> rows;

  bool any_red() const;
  int count_green() const;
  int count_exceeds() const;
};

// suite: fig1 | th_rnpr | th_noleast | jankov | all.  Expected verdicts come
// from repro_expected.json in the data directory; rows are sorted by id and
// deterministic apart from wall_ms.
ReproReport run_repro(const std::string& suite,
                      const Budgets& budgets = default_budgets());

std::vector<std::string> repro_suites();

Json report_to_json(const ReproReport& r);
std::string report_to_text(const ReproReport& r);

}  // namespace hey
