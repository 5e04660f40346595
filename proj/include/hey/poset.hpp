#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "hey/budget.hpp"

namespace hey {

// Subsets of a poset are bit masks, so posets are capped at 64 points.
using Mask = uint64_t;

inline int popcount(Mask m) { return __builtin_popcountll(m); }
inline Mask bit(int i) { return Mask(1) << i; }

// Finite poset on points 0..n-1.  up[i] is the principal up-set of i
// (including i itself) as a bit mask.
struct Poset {
  int n = 0;
  std::vector<Mask> up;
  std::vector<std::string> names;

  bool leq(int i, int j) const { return (up[i] >> j) & 1; }
  bool lt(int i, int j) const { return i != j && leq(i, j); }
  Mask full() const { return n == 64 ? ~Mask(0) : (bit(n) - 1); }
  Mask strict_up(int i) const { return up[i] & ~bit(i); }
  Mask down(int i) const;  // principal down-set, including i

  bool is_upset(Mask m) const;
  // All up-sets, sorted by (popcount, mask value); throws budget_exceeded
  // past cap.
  std::vector<Mask> upsets(uint64_t cap) const;

  std::vector<std::pair<int, int>> covers() const;  // (lower, upper)
  std::vector<int> maximal_points() const;
  std::vector<int> minimal_points() const;
  bool rooted() const;  // unique minimal point
  int height(int i) const { return heights().at(i); }
  std::vector<int> heights() const;  // longest chain strictly above each point

  // Subposet induced by mask; back (if given) receives new-index -> old-index.
  Poset induced(Mask m, std::vector<int>* back = nullptr) const;

  std::string name_of(int i) const;
  std::string to_dot() const;
};

// Build from a cover list; closes transitively and rejects cycles.
Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> names = {});

bool poset_iso(const Poset& a, const Poset& b);
// Map old-index-in-a -> index-in-b if isomorphic.
std::optional<std::vector<int>> poset_iso_map(const Poset& a, const Poset& b);

// Order-invariant fingerprint; equal for isomorphic posets, cheap pre-filter.
uint64_t poset_fingerprint(const Poset& p);

// p-morphisms f : P -> Q, i.e. monotone maps with f(up_P(x)) = up_Q(f(x)).
struct PMorphismQuery {
  Mask codomain_within = ~Mask(0);  // only map into this subset of Q
  bool surjective = false;          // image must be all of Q
  uint64_t map_cap = 1000000;       // stop after this many maps
};

struct PMorphismResult {
  std::vector<std::vector<int>> maps;  // each maps P-point -> Q-point
  bool exhausted = true;               // false if map_cap stopped the search
};

PMorphismResult p_morphisms(const Poset& p, const Poset& q,
                            const PMorphismQuery& query, StepCounter& steps);

// Distinct images of p-morphisms P -> Q (as masks over Q), search exhaustive.
std::vector<Mask> p_morphism_images(const Poset& p, const Poset& q,
                                    StepCounter& steps);

bool has_surjective_p_morphism(const Poset& p, const Poset& q,
                               StepCounter& steps);

// Embeddings of P as an up-closed subframe of Q: masks m with induced(m)
// isomorphic to P and m up-closed.
std::vector<Mask> upset_copies(const Poset& p, const Poset& q);

// Every frame containing an up-closed copy of D retracts onto it when every
// up-set S of D is up(d) or up(d) minus d for some point d.
bool retractable_frame(const Poset& d);

}  // namespace hey
