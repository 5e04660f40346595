#pragma once

#include <optional>
#include <vector>

#include "hey/algebra.hpp"
#include "hey/budget.hpp"

namespace hey {

struct Homomorphism {
  std::vector<int> map;  // source element -> target element
  bool injective = false;
  bool surjective = false;
};

// Exhaustive check of the hom property over all element pairs.
bool is_homomorphism(const HeytingAlgebra& a, const HeytingAlgebra& b,
                     const std::vector<int>& map);

enum class HomMode { All, First, Injective, Surjective, Bijective };

struct HomSearchResult {
  std::vector<Homomorphism> homs;
  bool exhausted = true;  // false when the cap stopped the search
};

// Backtracking over images of a generating sequence of a, in lexicographic
// image order; an empty exhausted result proves nonexistence.
HomSearchResult find_homs(const HeytingAlgebra& a, const HeytingAlgebra& b,
                          HomMode mode, uint64_t cap = 0,
                          StepCounter* steps = nullptr);

bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b);

// Least subset containing seed plus the constants, closed under meet, join,
// imp.  Returns element indices of a, sorted.
std::vector<int> closure_in(const HeytingAlgebra& a, std::vector<int> seed,
                            StepCounter* steps = nullptr);

struct Subalgebra {
  HeytingAlgebra alg;
  std::vector<int> back;  // new index -> element of the parent
};

Subalgebra subalgebra_from_closure(const HeytingAlgebra& a,
                                   const std::vector<int>& closed);
Subalgebra subalgebra_generated(const HeytingAlgebra& a,
                                const std::vector<int>& seed);

// All subuniverses of a (closure system saturation).  Sorted subsets of
// element indices, ascending by size then lexicographic.
std::vector<std::vector<int>> all_subuniverses(const HeytingAlgebra& a,
                                               uint64_t cap = 0);

// Representatives up to isomorphism, ascending by size.
std::vector<Subalgebra> subalgebras_up_to_iso(const HeytingAlgebra& a,
                                              uint64_t cap = 0);

// Smallest k <= cap with a k-element generating subset; exhaustive over
// subsets in increasing size.
std::optional<int> min_generators(const HeytingAlgebra& a, int cap);

// Filters, each as a sorted element list.  In a finite Heyting algebra every
// filter is principal, so these are the up-sets of single elements.
struct Filter {
  std::vector<int> members;
  int generator;  // least element
};
std::vector<Filter> filters(const HeytingAlgebra& a);

// Quotient by a filter; classes via x ~ y iff (x->y)/\(y->x) in f.
struct QuotientResult {
  HeytingAlgebra alg;
  std::vector<int> fwd;  // canonical surjection
};
QuotientResult quotient(const HeytingAlgebra& a, const Filter& f);

// Quotients up to isomorphism (one per filter, deduplicated).
std::vector<QuotientResult> quotients_up_to_iso(const HeytingAlgebra& a);

// Injective a -> product(factors) with all projections surjective.
struct SubdirectResult {
  bool found = false;
  std::vector<int> map;  // element of a -> product element
};
SubdirectResult subdirect_embedding_check(
    const HeytingAlgebra& a, const std::vector<const HeytingAlgebra*>& factors);

// Kernel filter {x : h(x) = top} of a surjective hom.
Filter kernel_filter(const HeytingAlgebra& a, const HeytingAlgebra& b,
                     const std::vector<int>& map);

}  // namespace hey
