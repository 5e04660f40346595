#include "doctest.h"

#include <set>

#include "hey/quasivariety.hpp"
#include "hey/standard.hpp"

using namespace hey;

namespace {

// every pair of distinct elements must be split by some hom of the family
void check_separating(const HeytingAlgebra& a, const HeytingAlgebra& b,
                      const std::vector<Homomorphism>& family) {
  for (const Homomorphism& h : family) {
    REQUIRE(h.map.size() == (size_t)a.n);
    CHECK(is_homomorphism(a, b, h.map));
  }
  for (int x = 0; x < a.n; ++x)
    for (int y = x + 1; y < a.n; ++y) {
      bool split = false;
      for (const Homomorphism& h : family)
        if (h.map[x] != h.map[y]) { split = true; break; }
      CAPTURE(x);
      CAPTURE(y);
      CHECK(split);
    }
}

}  // namespace

TEST_CASE("membership in the quasivariety of the sixteen-element algebra") {
  QvarHandle q16 = make_qvar(catalog_algebra("C16").alg);

  std::set<int> in = {2, 3, 4, 5, 6, 8, 16};
  for (int n = 2; n <= 16; ++n) {
    MemberResult r = member(cyclic_algebra(n).alg, q16);
    CAPTURE(n);
    CHECK(r.member == (in.count(n) > 0));
    if (r.member) {
      CHECK(r.unseparated == std::pair<int, int>{-1, -1});
      check_separating(cyclic_algebra(n).alg, q16.generator, r.separating);
    } else {
      CHECK(r.unseparated.first >= 0);
      CHECK(r.unseparated.second >= 0);
      CHECK(r.unseparated.first != r.unseparated.second);
    }
  }

  for (int n = 2; n <= 5; ++n)
    CHECK(member(chain_algebra(n), q16).member);
  CHECK(!member(chain_algebra(6), q16).member);
}

TEST_CASE("a reported unseparated pair really is inseparable") {
  QvarHandle q16 = make_qvar(catalog_algebra("C16").alg);
  for (const HeytingAlgebra& a :
       {cyclic_algebra(7).alg, chain_algebra(6)}) {
    MemberResult r = member(a, q16);
    REQUIRE(!r.member);
    HomSearchResult all = find_homs(a, q16.generator, HomMode::All);
    REQUIRE(all.exhausted);
    for (const Homomorphism& h : all.homs)
      CHECK(h.map[r.unseparated.first] == h.map[r.unseparated.second]);
  }
}

TEST_CASE("membership between chains") {
  QvarHandle q4 = make_qvar(chain_algebra(4));
  CHECK(member(chain_algebra(3), q4).member);
  CHECK(!member(chain_algebra(5), q4).member);
}

TEST_CASE("free algebra sizes") {
  CHECK(free_algebra(make_qvar(two_element_algebra()), 1).alg.n == 4);
  CHECK(free_algebra(make_qvar(chain_algebra(3)), 1).alg.n == 6);
  CHECK(free_algebra(make_qvar(chain_algebra(4)), 1).alg.n == 6);
  CHECK(free_algebra(make_qvar(catalog_algebra("C5p").alg), 1).alg.n == 6);
  CHECK(free_algebra(make_qvar(cyclic_algebra(7).alg), 1).alg.n == 10);
  CHECK(free_algebra(make_qvar(two_element_algebra()), 2).alg.n == 16);
}

TEST_CASE("free algebra structure") {
  QvarHandle q2 = make_qvar(two_element_algebra());
  FreeAlgebraResult f1 = free_algebra(q2, 1);
  REQUIRE(f1.generators.size() == 1);
  REQUIRE(f1.derivations.size() == (size_t)f1.alg.n);
  CHECK(validate_algebra(f1.alg).ok);
  // the generator's tuple is the projection: one digit per valuation
  CHECK(f1.tuples[f1.generators[0]] == std::vector<uint16_t>{0, 1});
  // replaying the derivations inside the free algebra itself is the identity
  std::vector<int> identity(f1.alg.n);
  for (int i = 0; i < f1.alg.n; ++i) identity[i] = i;
  CHECK(replay_derivations(f1.derivations, f1.alg, f1.generators) == identity);

  FreeAlgebraResult f2 = free_algebra(q2, 2);
  REQUIRE(f2.generators.size() == 2);
  // first generator's digit is most significant in the valuation index
  CHECK(f2.tuples[f2.generators[0]] == std::vector<uint16_t>{0, 0, 1, 1});
  CHECK(f2.tuples[f2.generators[1]] == std::vector<uint16_t>{0, 1, 0, 1});

  FreeAlgebraResult f7 = free_algebra(make_qvar(cyclic_algebra(7).alg), 1);
  std::vector<int> id7(f7.alg.n);
  for (int i = 0; i < f7.alg.n; ++i) id7[i] = i;
  CHECK(replay_derivations(f7.derivations, f7.alg, f7.generators) == id7);
}

TEST_CASE("free algebra universal property") {
  // replaying the derivations at any element of a member yields a hom
  for (const char* spec : {"catalog:C5p", "chain:4"}) {
    AlgebraHandle target = resolve_algebra(spec);
    FreeAlgebraResult f = free_algebra(make_qvar(target.alg), 1);
    for (int t = 0; t < target.alg.n; ++t) {
      std::vector<int> image =
          replay_derivations(f.derivations, target.alg, {t});
      CAPTURE(spec);
      CAPTURE(t);
      CHECK(is_homomorphism(f.alg, target.alg, image));
      CHECK(image[f.generators[0]] == t);
    }
  }
}

TEST_CASE("free algebra honors its budget") {
  Budgets tight = default_budgets();
  tight.free_size = 4;
  QvarHandle q7 = make_qvar(cyclic_algebra(7).alg, tight);
  CHECK_THROWS_AS((void)free_algebra(q7, 1), budget_exceeded);
}

TEST_CASE("q-irreducibility") {
  QvarHandle q16 = make_qvar(catalog_algebra("C16").alg);

  QIrreducibleResult r7p = q_irreducible(catalog_algebra("C7p").alg, q16);
  CHECK(r7p.irreducible);
  CHECK(r7p.witness == second_greatest(catalog_algebra("C7p").alg).value());
  CHECK(r7p.witness == 6);

  QIrreducibleResult r10p = q_irreducible(catalog_algebra("C10p").alg, q16);
  CHECK(r10p.irreducible);
  CHECK(r10p.witness == 8);

  // subdirectly irreducible members take the second-greatest shortcut
  QIrreducibleResult rc = q_irreducible(chain_algebra(3), q16);
  CHECK(rc.irreducible);
  CHECK(rc.witness == 1);
}

TEST_CASE("q-reducibility certificates replay") {
  // the four-element Boolean algebra splits subdirectly over two quotients
  HeytingAlgebra c4 = cyclic_algebra(4).alg;
  QvarHandle q2 = make_qvar(two_element_algebra());
  QIrreducibleResult r = q_irreducible(c4, q2);
  CHECK(!r.irreducible);
  CHECK(r.witness == -1);
  REQUIRE(r.separating_filters == std::vector<int>{1, 2});

  std::vector<QuotientResult> qs;
  for (int g : r.separating_filters) {
    Filter f;
    for (int x = 0; x < c4.n; ++x)
      if (c4.le(g, x)) f.members.push_back(x);
    f.generator = g;
    qs.push_back(quotient(c4, f));
    CHECK(member(qs.back().alg, q2).member);
    CHECK(qs.back().alg.n < c4.n);
  }
  std::vector<const HeytingAlgebra*> factors;
  for (const QuotientResult& qr : qs) factors.push_back(&qr.alg);
  CHECK(subdirect_embedding_check(c4, factors).found);
}

TEST_CASE("weak projectivity positives") {
  CHECK(weakly_projective(two_element_algebra(),
                          make_qvar(two_element_algebra()))
            .verdict == Verdict::Yes);
  CHECK(weakly_projective(chain_algebra(4), make_qvar(chain_algebra(6)))
            .verdict == Verdict::Yes);
  CHECK(weakly_projective(catalog_algebra("C5p").alg,
                          make_qvar(catalog_algebra("C7p").alg))
            .verdict == Verdict::Yes);
}

TEST_CASE("weak projectivity failure carries a full certificate") {
  const HeytingAlgebra& c7p = catalog_algebra("C7p").alg;
  QvarHandle q = make_qvar(c7p);
  WpResult r = weakly_projective(c7p, q);
  REQUIRE(r.verdict == Verdict::No);

  // counterexample: a member of the quasivariety...
  CHECK(r.counterexample.n == 11);
  CHECK(isomorphic(r.counterexample, catalog_algebra("C10p").alg));
  CHECK(member(r.counterexample, q).member);
  // ...mapping onto the algebra...
  REQUIRE(r.surjection.size() == (size_t)r.counterexample.n);
  CHECK(is_homomorphism(r.counterexample, c7p, r.surjection));
  std::set<int> image(r.surjection.begin(), r.surjection.end());
  CHECK((int)image.size() == c7p.n);
  // ...that provably does not contain it
  HomSearchResult emb = find_homs(c7p, r.counterexample, HomMode::Injective);
  CHECK(emb.homs.empty());
  CHECK(emb.exhausted);
  CHECK(r.note.find("witness") != std::string::npos);
}

TEST_CASE("weak projectivity requires membership") {
  CHECK_THROWS_AS((void)weakly_projective(chain_algebra(3),
                                          make_qvar(two_element_algebra())),
                  std::invalid_argument);
}

TEST_CASE("total non-projectivity") {
  TnpResult r = totally_non_projective(catalog_algebra("C7p").alg);
  CHECK(r.verdict == Verdict::Yes);
  CHECK(r.wp.verdict == Verdict::No);
  CHECK(isomorphic(r.wp.counterexample, catalog_algebra("C10p").alg));

  CHECK(totally_non_projective(two_element_algebra()).verdict == Verdict::No);
  CHECK(totally_non_projective(chain_algebra(5)).verdict == Verdict::No);
  CHECK(totally_non_projective(catalog_algebra("C5p").alg).verdict ==
        Verdict::No);
  CHECK(totally_non_projective(catalog_algebra("C10p").alg).verdict ==
        Verdict::No);
  CHECK(totally_non_projective(catalog_algebra("C12p").alg).verdict ==
        Verdict::No);
}

TEST_CASE("primitive quasivarieties") {
  CHECK(primitive(make_qvar(two_element_algebra())).verdict == Verdict::Yes);
  CHECK(primitive(make_qvar(chain_algebra(5))).verdict == Verdict::Yes);
  PrimitiveResult p5 = primitive(make_qvar(catalog_algebra("C5p").alg));
  CHECK(p5.verdict == Verdict::Yes);
  CHECK(p5.undecided.empty());
  CHECK(!p5.irreducibles.empty());
}

TEST_CASE("non-primitive quasivarieties expose the failing member") {
  const HeytingAlgebra& c7p = catalog_algebra("C7p").alg;
  QvarHandle q = make_qvar(c7p);
  PrimitiveResult r = primitive(q);
  REQUIRE(r.verdict == Verdict::No);
  CHECK(r.undecided.empty());
  CHECK(r.failing.n == 8);
  CHECK(isomorphic(r.failing, c7p));
  REQUIRE(r.failure.verdict == Verdict::No);
  CHECK(isomorphic(r.failure.counterexample, catalog_algebra("C10p").alg));
  CHECK(is_homomorphism(r.failure.counterexample, r.failing,
                        r.failure.surjection));
  HomSearchResult emb =
      find_homs(r.failing, r.failure.counterexample, HomMode::Injective);
  CHECK(emb.homs.empty());
  CHECK(emb.exhausted);

  PrimitiveResult r11 = primitive(make_qvar(cyclic_algebra(11).alg));
  REQUIRE(r11.verdict == Verdict::No);
  CHECK(isomorphic(r11.failing, c7p));
}

TEST_CASE("structural completion primitivity for one-generated algebras") {
  ScResult t = sc_primitive_cyclic(trivial_algebra());
  CHECK(t.verdict == Verdict::Yes);
  CHECK(t.free_size == 1);

  ScResult r2 = sc_primitive_cyclic(two_element_algebra());
  CHECK(r2.verdict == Verdict::Yes);
  CHECK(r2.free_size == 4);
  CHECK(r2.inner.verdict == Verdict::Yes);

  ScResult r7 = sc_primitive_cyclic(cyclic_algebra(7).alg);
  CHECK(r7.verdict == Verdict::Yes);
  CHECK(r7.free_size == 10);

  CHECK_THROWS_AS((void)sc_primitive_cyclic(catalog_algebra("C5p").alg),
                  std::invalid_argument);
}

TEST_CASE("decision procedures are deterministic") {
  QvarHandle q16 = make_qvar(catalog_algebra("C16").alg);
  MemberResult a = member(cyclic_algebra(7).alg, q16);
  MemberResult b = member(cyclic_algebra(7).alg, q16);
  CHECK(a.member == b.member);
  CHECK(a.unseparated == b.unseparated);

  FreeAlgebraResult f1 = free_algebra(make_qvar(chain_algebra(3)), 1);
  FreeAlgebraResult f2 = free_algebra(make_qvar(chain_algebra(3)), 1);
  CHECK(f1.alg.n == f2.alg.n);
  CHECK(f1.alg.imp_t == f2.alg.imp_t);
  CHECK(f1.generators == f2.generators);
  CHECK(f1.tuples == f2.tuples);
}
