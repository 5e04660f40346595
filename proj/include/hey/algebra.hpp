#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "hey/budget.hpp"
#include "hey/poset.hpp"

namespace hey {

// Finite Heyting algebra as dense operation tables over indices 0..n-1.
struct HeytingAlgebra {
  int n = 0;
  int bot = 0, top = 0;
  std::vector<uint16_t> meet_t, join_t, imp_t;  // n*n, row-major
  std::string label;

  int meet(int a, int b) const { return meet_t[(size_t)a * n + b]; }
  int join(int a, int b) const { return join_t[(size_t)a * n + b]; }
  int imp(int a, int b) const { return imp_t[(size_t)a * n + b]; }
  int neg(int a) const { return imp(a, bot); }
  bool le(int a, int b) const { return meet(a, b) == a; }
  bool nontrivial() const { return bot != top; }
};

HeytingAlgebra trivial_algebra();
HeytingAlgebra two_element_algebra();

// One failed law with a witness tuple, or everything passed.
struct ValidationReport {
  bool ok = true;
  std::vector<std::string> failures;  // "law (witness elements)" lines
};

// Exhaustive law check: bounded distributive lattice + residuation.
ValidationReport validate_algebra(const HeytingAlgebra& a,
                                  uint64_t step_budget = 0);

// Up-set algebra of a frame, with the element <-> mask dictionary kept for
// frame-level reasoning.  Elements are sorted by (popcount, mask), so bot is
// index 0 and top is index n-1.
struct UpsetAlgebra {
  HeytingAlgebra alg;
  Poset frame;
  std::vector<Mask> elems;

  int index_of(Mask m) const;
};

UpsetAlgebra upset_algebra(const Poset& p, uint64_t size_cap = 0);

HeytingAlgebra product_algebra(const std::vector<const HeytingAlgebra*>& factors,
                               uint64_t size_cap = 0);
// Element index <-> factor coordinates for the product above.
std::vector<int> product_coords(const std::vector<const HeytingAlgebra*>& factors,
                                int element);

// Quotient by the principal filter of x, realized as the interval [bot, x]
// with relativized implication.  back maps new index -> old index; fwd is the
// canonical surjection old -> new.
struct IntervalQuotient {
  HeytingAlgebra alg;
  std::vector<int> back;
  std::vector<int> fwd;
};
IntervalQuotient interval_quotient(const HeytingAlgebra& a, int x);

// Dual frame: join-irreducible elements with the order reversed.  For any
// finite Heyting algebra a, a is isomorphic to the up-set algebra of its dual
// frame.  element_mask gives, per element of a, the mask of join-irreducibles
// below it (its image under that isomorphism).
struct DualFrame {
  Poset frame;
  std::vector<int> ji;              // frame point -> element of a
  std::vector<Mask> element_mask;   // element of a -> up-set mask
};
DualFrame dual_frame(const HeytingAlgebra& a);

// The unique coatom above all non-top elements, if present.
std::optional<int> second_greatest(const HeytingAlgebra& a);

// Cheap iso-invariant: (n, sorted multiset of down-set sizes).
std::vector<int> downset_profile(const HeytingAlgebra& a);

}  // namespace hey
