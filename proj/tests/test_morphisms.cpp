#include "doctest.h"

#include <set>

#include "hey/morphisms.hpp"
#include "hey/standard.hpp"

using namespace hey;

namespace {

// Factorization through the kernel: h and the canonical surjection induce the
// same partition, and the quotient is isomorphic to the image.
void check_kernel_factorization(const HeytingAlgebra& a,
                                const HeytingAlgebra& b,
                                const std::vector<int>& h) {
  REQUIRE(is_homomorphism(a, b, h));
  Filter k = kernel_filter(a, b, h);
  // the kernel is a genuine filter: principal at its generator
  CHECK(std::binary_search(k.members.begin(), k.members.end(), k.generator));
  for (int x : k.members) CHECK(a.le(k.generator, x));
  for (int x = 0; x < a.n; ++x)
    CHECK(a.le(k.generator, x) ==
          std::binary_search(k.members.begin(), k.members.end(), x));
  // membership in the kernel is exactly "mapped to top"
  for (int x = 0; x < a.n; ++x)
    CHECK((h[x] == b.top) ==
          std::binary_search(k.members.begin(), k.members.end(), x));
  QuotientResult q = quotient(a, k);
  CHECK(q.alg.n == b.n);
  CHECK(isomorphic(q.alg, b));
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      CHECK((h[x] == h[y]) == (q.fwd[x] == q.fwd[y]));
}

}  // namespace

TEST_CASE("hom search on small chains") {
  HeytingAlgebra c3 = chain_algebra(3);
  HomSearchResult r = find_homs(c3, c3, HomMode::All);
  CHECK(r.exhausted);
  REQUIRE(r.homs.size() == 2);
  CHECK(r.homs[0].map == std::vector<int>{0, 1, 2});
  CHECK(r.homs[1].map == std::vector<int>{0, 2, 2});
  for (const Homomorphism& h : r.homs) {
    CHECK(is_homomorphism(c3, c3, h.map));
    std::set<int> img(h.map.begin(), h.map.end());
    CHECK(h.injective == ((int)img.size() == c3.n));
    CHECK(h.surjective == ((int)img.size() == c3.n));
  }

  // the only non-identity endomorphism is neither injective nor surjective
  CHECK(r.homs[1].injective == false);
  CHECK(r.homs[1].surjective == false);

  HomSearchResult first = find_homs(c3, c3, HomMode::First);
  CHECK(first.homs.size() == 1);
  CHECK(!first.exhausted);  // stopped by the implicit cap of one

  HomSearchResult capped = find_homs(c3, c3, HomMode::All, 1);
  CHECK(capped.homs.size() == 1);
  CHECK(!capped.exhausted);
}

TEST_CASE("hom search modes") {
  HeytingAlgebra c3 = chain_algebra(3), c4 = chain_algebra(4);
  HomSearchResult inj = find_homs(c3, c4, HomMode::Injective);
  CHECK(inj.exhausted);
  CHECK(inj.homs.size() == 2);  // the middle element goes to 1 or 2
  for (const Homomorphism& h : inj.homs) {
    CHECK(h.injective);
    CHECK(is_homomorphism(c3, c4, h.map));
  }

  HomSearchResult surj = find_homs(c4, c3, HomMode::Surjective);
  CHECK(surj.exhausted);
  REQUIRE(surj.homs.size() == 1);
  CHECK(surj.homs[0].map == std::vector<int>{0, 1, 2, 2});
  CHECK(surj.homs[0].surjective);

  // size screens make impossible searches exhausted and empty
  CHECK(find_homs(c4, c3, HomMode::Injective).homs.empty());
  CHECK(find_homs(c4, c3, HomMode::Injective).exhausted);
  CHECK(find_homs(c3, c4, HomMode::Surjective).homs.empty());

  HomSearchResult iso = find_homs(c4, c4, HomMode::Bijective);
  REQUIRE(iso.homs.size() == 1);
  CHECK(iso.homs[0].map == std::vector<int>{0, 1, 2, 3});
}

TEST_CASE("isomorphic") {
  CHECK(isomorphic(chain_algebra(4), chain_algebra(4)));
  CHECK(!isomorphic(chain_algebra(4), chain_algebra(5)));
  CHECK(!isomorphic(chain_algebra(4), cyclic_algebra(4).alg));
  // equal size does not mean isomorphic: the two 11-element algebras differ
  CHECK(!isomorphic(cyclic_algebra(11).alg, catalog_algebra("C10p").alg));
  CHECK(isomorphic(catalog_algebra("C16").alg, cyclic_algebra(16).alg));
}

TEST_CASE("closures and generated subalgebras") {
  const HeytingAlgebra& c7 = cyclic_algebra(7).alg;
  std::vector<int> consts = closure_in(c7, {});
  CHECK(consts == std::vector<int>{c7.bot, c7.top});

  // some single element generates everything
  bool found = false;
  for (int x = 0; x < c7.n && !found; ++x)
    found = (int)closure_in(c7, {x}).size() == c7.n;
  CHECK(found);

  std::vector<int> closed = closure_in(c7, {second_greatest(c7).value()});
  Subalgebra s = subalgebra_from_closure(c7, closed);
  CHECK(s.alg.n == (int)closed.size());
  CHECK(validate_algebra(s.alg).ok);
  // the inclusion is a homomorphism: check via the back map against c7
  for (int i = 0; i < s.alg.n; ++i)
    for (int j = 0; j < s.alg.n; ++j)
      CHECK(s.back[s.alg.imp(i, j)] == c7.imp(s.back[i], s.back[j]));

  CHECK(subalgebra_generated(c7, {}).alg.n == 2);
}

TEST_CASE("subuniverse enumeration") {
  CHECK(all_subuniverses(two_element_algebra()).size() == 1);
  auto chain3 = all_subuniverses(chain_algebra(3));
  REQUIRE(chain3.size() == 2);
  CHECK(chain3[0] == std::vector<int>{0, 2});
  CHECK(chain3[1] == std::vector<int>{0, 1, 2});
  CHECK(all_subuniverses(catalog_algebra("C5p").alg).size() == 9);
  auto c7subs = all_subuniverses(cyclic_algebra(7).alg);
  CHECK(c7subs.size() == 6);
  for (size_t i = 0; i + 1 < c7subs.size(); ++i)
    CHECK(c7subs[i].size() <= c7subs[i + 1].size());
  // each returned set is closed
  for (const auto& s : c7subs)
    CHECK(closure_in(cyclic_algebra(7).alg, s) == s);
}

TEST_CASE("subalgebras up to isomorphism") {
  auto sizes = [](const std::vector<Subalgebra>& subs) {
    std::vector<int> out;
    for (const Subalgebra& s : subs) out.push_back(s.alg.n);
    return out;
  };
  CHECK(sizes(subalgebras_up_to_iso(catalog_algebra("C5p").alg)) ==
        std::vector<int>{2, 3, 4, 6});
  CHECK(sizes(subalgebras_up_to_iso(catalog_algebra("C7p").alg)) ==
        std::vector<int>{2, 3, 4, 5, 6, 8});
  CHECK(sizes(subalgebras_up_to_iso(catalog_algebra("C10p").alg)) ==
        std::vector<int>{2, 3, 4, 5, 5, 6, 6, 7, 8, 8, 9, 11});
  // pairwise non-isomorphic
  auto subs = subalgebras_up_to_iso(catalog_algebra("C10p").alg);
  for (size_t i = 0; i < subs.size(); ++i)
    for (size_t j = i + 1; j < subs.size(); ++j)
      CHECK(!isomorphic(subs[i].alg, subs[j].alg));
  // the eight-element single-top algebra is an image of this one, not a
  // subalgebra: neither eight-element subalgebra matches it
  int eights = 0;
  for (const Subalgebra& s : subs)
    if (s.alg.n == 8) {
      ++eights;
      CHECK(!isomorphic(s.alg, catalog_algebra("C7p").alg));
    }
  CHECK(eights == 2);
}

TEST_CASE("minimum generator counts") {
  CHECK(min_generators(trivial_algebra(), 4) == 0);
  CHECK(min_generators(two_element_algebra(), 4) == 0);
  CHECK(min_generators(chain_algebra(3), 4) == 1);
  CHECK(min_generators(chain_algebra(4), 4) == 2);
  CHECK(min_generators(chain_algebra(6), 6) == 4);
  CHECK(min_generators(cyclic_algebra(7).alg, 4) == 1);
  CHECK(min_generators(cyclic_algebra(16).alg, 4) == 1);
  CHECK(min_generators(catalog_algebra("C5p").alg, 4) == 2);
  CHECK(min_generators(catalog_algebra("C10p").alg, 4) == 2);
  // cap smaller than the answer yields nothing
  CHECK(!min_generators(chain_algebra(6), 2).has_value());
}

TEST_CASE("filters are principal") {
  const HeytingAlgebra& c7 = cyclic_algebra(7).alg;
  std::vector<Filter> fs = filters(c7);
  CHECK(fs.size() == 7);  // one per element
  std::set<int> gens;
  for (const Filter& f : fs) {
    gens.insert(f.generator);
    for (int x : f.members) {
      CHECK(c7.le(f.generator, x));
      // meet-closed and upward closed
      for (int y : f.members)
        CHECK(std::binary_search(f.members.begin(), f.members.end(),
                                 c7.meet(x, y)));
    }
    CHECK(std::binary_search(f.members.begin(), f.members.end(), c7.top));
  }
  CHECK((int)gens.size() == c7.n);
  // sorted by size: the first is the top filter, the last the whole algebra
  CHECK(fs.front().members.size() == 1);
  CHECK(fs.back().members.size() == 7);
}

TEST_CASE("quotients") {
  HeytingAlgebra c3 = chain_algebra(3);
  std::vector<Filter> fs = filters(c3);
  for (const Filter& f : fs) {
    QuotientResult q = quotient(c3, f);
    CHECK(is_homomorphism(c3, q.alg, q.fwd));
    CHECK(q.alg.n + (int)f.members.size() == c3.n + 1);
  }
  auto qs = quotients_up_to_iso(cyclic_algebra(7).alg);
  std::multiset<int> sizes;
  for (const QuotientResult& q : qs) sizes.insert(q.alg.n);
  CHECK(sizes == std::multiset<int>{1, 2, 3, 4, 6, 7});
}

TEST_CASE("subdirect embeddings") {
  const HeytingAlgebra& c5p = catalog_algebra("C5p").alg;
  const HeytingAlgebra& c7p = catalog_algebra("C7p").alg;
  const HeytingAlgebra& c10p = catalog_algebra("C10p").alg;
  SubdirectResult r = subdirect_embedding_check(c10p, {&c5p, &c7p});
  CHECK(r.found);
  REQUIRE((int)r.map.size() == c10p.n);
  // verify injectivity and surjective projections against the product
  HeytingAlgebra prod = product_algebra({&c5p, &c7p});
  CHECK(is_homomorphism(c10p, prod, r.map));
  std::set<int> img(r.map.begin(), r.map.end());
  CHECK((int)img.size() == c10p.n);
  std::set<int> pr0, pr1;
  for (int e : r.map) {
    std::vector<int> c = product_coords({&c5p, &c7p}, e);
    pr0.insert(c[0]);
    pr1.insert(c[1]);
  }
  CHECK((int)pr0.size() == c5p.n);
  CHECK((int)pr1.size() == c7p.n);

  HeytingAlgebra c2 = two_element_algebra();
  CHECK(!subdirect_embedding_check(chain_algebra(3), {&c2, &c2}).found);
  HeytingAlgebra sq = product_algebra({&c2, &c2});
  CHECK(subdirect_embedding_check(sq, {&c2, &c2}).found);
}

TEST_CASE("kernel filters factor surjections") {
  // chain surjection
  HeytingAlgebra c4 = chain_algebra(4), c3 = chain_algebra(3);
  for (const Homomorphism& h : find_homs(c4, c3, HomMode::Surjective).homs)
    check_kernel_factorization(c4, c3, h.map);
  // figure surjection: the eleven-element algebra onto the eight-element one
  const HeytingAlgebra& c10p = catalog_algebra("C10p").alg;
  const HeytingAlgebra& c7p = catalog_algebra("C7p").alg;
  HomSearchResult surj = find_homs(c10p, c7p, HomMode::Surjective);
  CHECK(surj.exhausted);
  CHECK(!surj.homs.empty());
  for (const Homomorphism& h : surj.homs)
    check_kernel_factorization(c10p, c7p, h.map);
}
