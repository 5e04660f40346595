#pragma once

#include <memory>
#include <string>
#include <vector>

#include "hey/algebra.hpp"

namespace hey {

// n-element linear Heyting algebra, n >= 1.
HeytingAlgebra chain_algebra(int n);

// Ladder frame prefix on points f1..fk: f_i < f_j iff i >= j+2.
Poset ladder_prefix_poset(int k);
UpsetAlgebra ladder_prefix_algebra(int k);

// One-generated n-element quotients-of-prefix algebras.  cyclic_algebra
// returns the canonical first candidate; cyclic_candidates returns all
// non-isomorphic ones found within the prefix depth bound.
UpsetAlgebra cyclic_algebra(int n);
std::vector<UpsetAlgebra> cyclic_candidates(int n);

// Stored figure frames: C5p, C7p, C10p, C12p, C16.  Loaded from the data
// directory and cross-checked once per process against their asserted mutual
// relationships; a failed check throws.
const UpsetAlgebra& catalog_algebra(const std::string& name);
std::vector<std::string> catalog_names();

// Where the data files live: HEYTING_DATA_DIR, ./data, or the source tree.
std::string data_directory();

// Algebra addressing: trivial | chain:n | cyclic:n | rnprefix:k |
// catalog:NAME | file:PATH | product:A,B[,C...] | free:B,k.
// catalog:C<n> for a bare number aliases cyclic(n).
struct AlgebraHandle {
  HeytingAlgebra alg;
  std::string description;
  // Frame view when the construction provides one (empty frame otherwise).
  Poset frame;
  std::vector<Mask> elems;
  bool has_frame = false;
};

AlgebraHandle resolve_algebra(const std::string& spec);

}  // namespace hey
