#include "doctest.h"

#include <random>
#include <set>

#include "hey/algebra.hpp"
#include "hey/morphisms.hpp"
#include "hey/standard.hpp"

using namespace hey;

namespace {

Poset diamond() {
  return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}});
}

Poset random_poset(std::mt19937& rng, int max_n) {
  std::uniform_int_distribution<int> size(1, max_n);
  std::bernoulli_distribution edge(0.35);
  int n = size(rng);
  std::vector<std::pair<int, int>> covers;
  for (int i = 0; i < n; ++i)
    for (int j = i + 1; j < n; ++j)
      if (edge(rng)) covers.push_back({i, j});
  return poset_from_covers(n, covers);
}

}  // namespace

TEST_CASE("trivial and two-element algebras") {
  HeytingAlgebra t = trivial_algebra();
  CHECK(t.n == 1);
  CHECK(!t.nontrivial());
  CHECK(validate_algebra(t).ok);

  HeytingAlgebra c2 = two_element_algebra();
  CHECK(c2.n == 2);
  CHECK(c2.bot == 0);
  CHECK(c2.top == 1);
  CHECK(c2.neg(0) == 1);
  CHECK(c2.neg(1) == 0);
  CHECK(c2.imp(1, 0) == 0);
  CHECK(c2.le(0, 1));
  CHECK(!c2.le(1, 0));
  CHECK(validate_algebra(c2).ok);
}

TEST_CASE("up-set algebra of the diamond") {
  UpsetAlgebra u = upset_algebra(diamond());
  CHECK(u.alg.n == 6);
  CHECK(u.alg.bot == 0);
  CHECK(u.alg.top == 5);
  CHECK(u.elems.front() == 0);
  CHECK(u.elems.back() == u.frame.full());
  for (int i = 0; i < u.alg.n; ++i) CHECK(u.index_of(u.elems[i]) == i);
  CHECK(validate_algebra(u.alg).ok);
  // meet/join are intersection/union of up-sets
  for (int i = 0; i < u.alg.n; ++i)
    for (int j = 0; j < u.alg.n; ++j) {
      CHECK(u.elems[u.alg.meet(i, j)] == (u.elems[i] & u.elems[j]));
      CHECK(u.elems[u.alg.join(i, j)] == (u.elems[i] | u.elems[j]));
    }
}

TEST_CASE("validate_algebra passes on 200 random up-set algebras") {
  std::mt19937 rng(97);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = random_poset(rng, 8);
    UpsetAlgebra u = upset_algebra(p);
    ValidationReport r = validate_algebra(u.alg);
    CAPTURE(trial);
    CAPTURE(u.alg.n);
    CHECK(r.ok);
    CHECK(r.failures.empty());
  }
}

TEST_CASE("validate_algebra rejects single-entry imp mutations") {
  std::mt19937 rng(98);
  for (int trial = 0; trial < 200; ++trial) {
    Poset p = random_poset(rng, 8);
    UpsetAlgebra u = upset_algebra(p);
    int n = u.alg.n;
    REQUIRE(n >= 2);
    std::uniform_int_distribution<int> cell(0, n * n - 1);
    int c = cell(rng);
    HeytingAlgebra broken = u.alg;
    broken.imp_t[c] = (uint16_t)((broken.imp_t[c] + 1) % n);
    ValidationReport r = validate_algebra(broken);
    CAPTURE(trial);
    CAPTURE(c);
    CHECK(!r.ok);
    CHECK(!r.failures.empty());
  }
}

TEST_CASE("validate_algebra reports broken lattice laws") {
  HeytingAlgebra a = chain_algebra(3);
  a.join_t[1 * 3 + 2] = 0;
  CHECK(!validate_algebra(a).ok);

  HeytingAlgebra b = chain_algebra(3);
  b.meet_t[0 * 3 + 1] = 1;  // breaks commutativity with meet(1,0) = 0
  CHECK(!validate_algebra(b).ok);
}

TEST_CASE("products are pointwise") {
  HeytingAlgebra c2 = two_element_algebra();
  HeytingAlgebra p = product_algebra({&c2, &c2});
  CHECK(p.n == 4);
  CHECK(validate_algebra(p).ok);
  CHECK(isomorphic(p, upset_algebra(poset_from_covers(2, {})).alg));

  std::set<std::vector<int>> seen;
  for (int e = 0; e < p.n; ++e) {
    std::vector<int> c = product_coords({&c2, &c2}, e);
    REQUIRE(c.size() == 2);
    CHECK(c[0] >= 0);
    CHECK(c[0] < 2);
    seen.insert(c);
  }
  CHECK(seen.size() == 4);
  // operations act coordinatewise
  for (int x = 0; x < p.n; ++x)
    for (int y = 0; y < p.n; ++y) {
      auto cx = product_coords({&c2, &c2}, x), cy = product_coords({&c2, &c2}, y);
      auto cm = product_coords({&c2, &c2}, p.meet(x, y));
      auto ci = product_coords({&c2, &c2}, p.imp(x, y));
      for (int k = 0; k < 2; ++k) {
        CHECK(cm[k] == c2.meet(cx[k], cy[k]));
        CHECK(ci[k] == c2.imp(cx[k], cy[k]));
      }
    }
}

TEST_CASE("product size cap") {
  HeytingAlgebra c8 = chain_algebra(8);
  CHECK_THROWS_AS((void)product_algebra({&c8, &c8, &c8}, 100), budget_exceeded);
}

TEST_CASE("interval quotients") {
  HeytingAlgebra c5 = chain_algebra(5);
  IntervalQuotient q = interval_quotient(c5, 2);
  CHECK(q.alg.n == 3);
  CHECK(validate_algebra(q.alg).ok);
  CHECK(isomorphic(q.alg, chain_algebra(3)));
  CHECK(is_homomorphism(c5, q.alg, q.fwd));
  for (int y = 0; y < 5; ++y) {
    CHECK(q.back[q.fwd[y]] == c5.meet(y, 2));
    CHECK((q.fwd[y] == q.alg.top) == c5.le(2, y));
  }
  // quotient at top is the identity, at bot the trivial algebra
  CHECK(interval_quotient(c5, 4).alg.n == 5);
  CHECK(interval_quotient(c5, 0).alg.n == 1);
}

TEST_CASE("dual frames invert up-set algebras") {
  for (const Poset& p :
       {diamond(), poset_from_covers(4, {{0, 1}, {1, 2}, {2, 3}}),
        poset_from_covers(5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}})}) {
    UpsetAlgebra u = upset_algebra(p);
    DualFrame d = dual_frame(u.alg);
    CHECK(poset_iso(d.frame, p));
    // element_mask is an order isomorphism onto the up-sets of the dual frame
    std::set<Mask> masks;
    for (int i = 0; i < u.alg.n; ++i) {
      CHECK(d.frame.is_upset(d.element_mask[i]));
      masks.insert(d.element_mask[i]);
      for (int j = 0; j < u.alg.n; ++j)
        CHECK(u.alg.le(i, j) ==
              ((d.element_mask[i] & d.element_mask[j]) == d.element_mask[i]));
    }
    CHECK((int)masks.size() == u.alg.n);
    // join-irreducibles map to principal up-sets
    for (int pt = 0; pt < d.frame.n; ++pt)
      CHECK(d.element_mask[d.ji[pt]] == d.frame.up[pt]);
  }
}

TEST_CASE("second greatest element") {
  CHECK(second_greatest(chain_algebra(5)) == 3);
  CHECK(second_greatest(two_element_algebra()) == 0);
  CHECK(!second_greatest(trivial_algebra()).has_value());
  HeytingAlgebra c2 = two_element_algebra();
  HeytingAlgebra sq = product_algebra({&c2, &c2});
  CHECK(!second_greatest(sq).has_value());

  UpsetAlgebra u = upset_algebra(diamond());
  auto sg = second_greatest(u.alg);
  REQUIRE(sg.has_value());
  for (int y = 0; y < u.alg.n; ++y)
    if (y != u.alg.top) CHECK(u.alg.le(y, *sg));
}

TEST_CASE("downset profiles are iso-invariant") {
  HeytingAlgebra c2 = two_element_algebra();
  HeytingAlgebra sq = product_algebra({&c2, &c2});
  CHECK(downset_profile(chain_algebra(4)) == downset_profile(chain_algebra(4)));
  CHECK(downset_profile(chain_algebra(4)) != downset_profile(sq));
  CHECK(downset_profile(upset_algebra(diamond()).alg) ==
        downset_profile(catalog_algebra("C5p").alg));
}
