#pragma once

#include <string>
#include <vector>

#include "hey/algebra.hpp"
#include "hey/eval.hpp"
#include "hey/formula.hpp"

namespace hey {

// Characteristic formula of a finite subdirectly irreducible algebra: the
// operation diagram over one variable per element, implying the variable of
// the second-greatest element.  That variable is named "w" so it sorts
// before the element variables "x<index>".
struct JankovFormula {
  FormulaPtr formula;
  std::vector<std::string> var_of_element;  // element index -> variable name
  int omega = -1;                           // the second-greatest element
};

JankovFormula jankov_formula(const HeytingAlgebra& a);

// The valuation p_x -> x; it refutes jankov_formula(a) in a itself.
Valuation identity_valuation(const JankovFormula& j);

// Brute-force oracle: does a embed into some quotient of b?  Sweeps every
// filter of b and runs an exhaustive embedding search on the quotient.
bool in_sh(const HeytingAlgebra& a, const HeytingAlgebra& b);

}  // namespace hey
