#include "doctest.h"

#include <algorithm>
#include <set>

#include "hey/poset.hpp"

using namespace hey;

namespace {

Poset chain_poset(int n) {
  std::vector<std::pair<int, int>> cs;
  for (int i = 0; i + 1 < n; ++i) cs.push_back({i, i + 1});
  return poset_from_covers(n, cs);
}

Poset diamond() {
  // r < m1, m2 < t
  return poset_from_covers(4, {{0, 1}, {0, 2}, {1, 3}, {2, 3}},
                           {"r", "m1", "m2", "t"});
}

// 5-point single-top frame: a < b < c < T, a < d < T.
Poset p7t() {
  return poset_from_covers(5, {{0, 1}, {0, 3}, {1, 2}, {2, 4}, {3, 4}},
                           {"a", "b", "c", "d", "T"});
}

bool is_p_morphism(const Poset& p, const Poset& q, const std::vector<int>& f) {
  for (int x = 0; x < p.n; ++x) {
    // forth: monotone image of the cone
    for (int y = 0; y < p.n; ++y)
      if (p.leq(x, y) && !q.leq(f[x], f[y])) return false;
    // back: every point above f(x) is hit from above x
    for (int z = 0; z < q.n; ++z) {
      if (!q.leq(f[x], z)) continue;
      bool hit = false;
      for (int y = 0; y < p.n && !hit; ++y)
        if (p.leq(x, y) && f[y] == z) hit = true;
      if (!hit) return false;
    }
  }
  return true;
}

}  // namespace

TEST_CASE("poset_from_covers closes transitively") {
  Poset c = chain_poset(4);
  CHECK(c.leq(0, 3));
  CHECK(c.leq(1, 3));
  CHECK(!c.leq(3, 0));
  CHECK(c.lt(0, 1));
  CHECK(!c.lt(1, 1));
  CHECK(c.covers() == std::vector<std::pair<int, int>>{{0, 1}, {1, 2}, {2, 3}});
}

TEST_CASE("poset_from_covers rejects cycles") {
  CHECK_THROWS(poset_from_covers(2, {{0, 1}, {1, 0}}));
  CHECK_THROWS(poset_from_covers(3, {{0, 1}, {1, 2}, {2, 0}}));
}

TEST_CASE("minimal, maximal, rooted, heights") {
  Poset d = diamond();
  CHECK(d.minimal_points() == std::vector<int>{0});
  CHECK(d.maximal_points() == std::vector<int>{3});
  CHECK(d.rooted());
  CHECK(d.heights() == std::vector<int>{2, 1, 1, 0});

  Poset two = poset_from_covers(2, {});  // antichain
  CHECK(!two.rooted());
  CHECK(two.minimal_points().size() == 2);
}

TEST_CASE("down-sets and strict cones") {
  Poset d = diamond();
  CHECK(d.down(3) == d.full());
  CHECK(d.down(1) == (bit(0) | bit(1)));
  CHECK(d.strict_up(0) == (bit(1) | bit(2) | bit(3)));
}

TEST_CASE("up-set enumeration is sorted and complete") {
  Poset d = diamond();
  auto ups = d.upsets(1000);
  CHECK(ups.size() == 6);  // {}, {t}, {m1,t}, {m2,t}, {m1,m2,t}, all
  for (Mask m : ups) CHECK(d.is_upset(m));
  for (size_t i = 0; i + 1 < ups.size(); ++i) {
    int pa = popcount(ups[i]), pb = popcount(ups[i + 1]);
    CHECK((pa < pb || (pa == pb && ups[i] < ups[i + 1])));
  }
  CHECK(ups.front() == 0);
  CHECK(ups.back() == d.full());
  // not an up-set: {r}
  CHECK(!d.is_upset(bit(0)));
  CHECK(p7t().upsets(1000).size() == 8);
}

TEST_CASE("up-set enumeration respects the cap") {
  Poset five = poset_from_covers(5, {});  // 2^5 up-sets
  CHECK_THROWS_AS((void)five.upsets(10), budget_exceeded);
}

TEST_CASE("induced subposet with back map") {
  Poset d = diamond();
  std::vector<int> back;
  Poset up1 = d.induced(d.up[1], &back);  // {m1, t}
  CHECK(up1.n == 2);
  CHECK(back.size() == 2);
  CHECK(up1.leq(0, 1));
  CHECK(d.leq(back[0], back[1]));
  CHECK(up1.name_of(0) == "m1");
}

TEST_CASE("poset isomorphism and fingerprints") {
  Poset d = diamond();
  // same shape, permuted labels
  Poset d2 = poset_from_covers(4, {{3, 1}, {3, 2}, {1, 0}, {2, 0}});
  CHECK(poset_iso(d, d2));
  CHECK(poset_fingerprint(d) == poset_fingerprint(d2));
  auto m = poset_iso_map(d, d2);
  REQUIRE(m.has_value());
  for (int x = 0; x < 4; ++x)
    for (int y = 0; y < 4; ++y) CHECK(d.leq(x, y) == d2.leq((*m)[x], (*m)[y]));

  CHECK(!poset_iso(d, chain_poset(4)));
  CHECK(!poset_iso_map(d, chain_poset(4)).has_value());
  CHECK(!poset_iso(chain_poset(3), chain_poset(4)));
}

TEST_CASE("p-morphism search returns exactly the valid maps") {
  StepCounter steps(1000000);
  Poset c2 = chain_poset(2);
  PMorphismResult r = p_morphisms(c2, c2, {}, steps);
  CHECK(r.exhausted);
  // identity and the constant map onto the top point
  CHECK(r.maps.size() == 2);
  for (const auto& f : r.maps) CHECK(is_p_morphism(c2, c2, f));

  PMorphismQuery surj;
  surj.surjective = true;
  r = p_morphisms(c2, c2, surj, steps);
  CHECK(r.maps.size() == 1);
  CHECK(r.maps[0] == std::vector<int>{0, 1});
}

TEST_CASE("p-morphism images and surjections") {
  StepCounter steps(10000000);
  Poset c2 = chain_poset(2);
  auto imgs = p_morphism_images(c2, c2, steps);
  std::set<Mask> s(imgs.begin(), imgs.end());
  CHECK(s == std::set<Mask>{bit(1), bit(0) | bit(1)});

  CHECK(has_surjective_p_morphism(chain_poset(3), chain_poset(2), steps));
  CHECK(!has_surjective_p_morphism(chain_poset(2), chain_poset(3), steps));
  CHECK(!has_surjective_p_morphism(chain_poset(3), diamond(), steps));
}

TEST_CASE("up-closed copies") {
  Poset d = diamond();
  Poset one = poset_from_covers(1, {});
  // singleton up-sets are exactly the maximal points
  auto copies = upset_copies(one, d);
  REQUIRE(copies.size() == 1);
  CHECK(copies[0] == bit(3));
  // the 2-chain sits up-closed in the diamond twice: {m1,t} and {m2,t}
  CHECK(upset_copies(chain_poset(2), d).size() == 2);
  // a copy of the whole poset is the full mask
  auto whole = upset_copies(d, d);
  REQUIRE(whole.size() == 1);
  CHECK(whole[0] == d.full());
  CHECK(upset_copies(chain_poset(3), d).empty());
}

TEST_CASE("retractable frames") {
  CHECK(retractable_frame(chain_poset(1)));
  CHECK(retractable_frame(chain_poset(4)));
  CHECK(retractable_frame(diamond()));
  // {c,d,T} is an up-set of p7t but neither a cone nor a punctured cone
  CHECK(!retractable_frame(p7t()));
}

TEST_CASE("dot export mentions every point") {
  Poset d = diamond();
  std::string dot = d.to_dot();
  for (int i = 0; i < d.n; ++i)
    CHECK(dot.find(d.name_of(i)) != std::string::npos);
}
