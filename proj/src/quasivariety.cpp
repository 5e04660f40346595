#include "hey/quasivariety.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <optional>
#include <set>
#include <stdexcept>

#include "hey/universal.hpp"

namespace hey {
namespace {

// Element of alg named by an up-closed mask of its dual frame: the join of
// the join-irreducibles in the mask.
int element_of_mask(const HeytingAlgebra& alg, const DualFrame& d, Mask m) {
  int e = alg.bot;
  for (int y = 0; y < d.frame.n; ++y)
    if ((m >> y) & 1) e = alg.join(e, d.ji[y]);
  return e;
}

// Homomorphism a -> generator whose dual p-morphism has the given image
// inside a's dual frame.
Homomorphism hom_for_image(const HeytingAlgebra& a, const DualFrame& da,
                           const QvarHandle& q, Mask image, StepCounter& sc) {
  std::vector<int> back;
  Poset sub = da.frame.induced(image, &back);
  PMorphismQuery query;
  query.surjective = true;
  query.map_cap = 1;
  PMorphismResult pm = p_morphisms(q.dual.frame, sub, query, sc);
  if (pm.maps.empty()) throw std::logic_error("image without p-morphism");
  std::vector<int> g(q.dual.frame.n);
  for (int y = 0; y < q.dual.frame.n; ++y) g[y] = back[pm.maps[0][y]];

  Homomorphism h;
  h.map.resize(a.n);
  std::vector<bool> seen(q.generator.n, false);
  for (int e = 0; e < a.n; ++e) {
    Mask pre = 0;
    for (int y = 0; y < q.dual.frame.n; ++y)
      if ((da.element_mask[e] >> g[y]) & 1) pre |= bit(y);
    h.map[e] = element_of_mask(q.generator, q.dual, pre);
    seen[h.map[e]] = true;
  }
  int hit = 0;
  for (bool s : seen) hit += s ? 1 : 0;
  h.surjective = hit == q.generator.n;
  h.injective = image == da.frame.full();
  return h;
}

// Subuniverse generated by seed, abandoned once it grows past max_size.
std::optional<std::vector<int>> closure_bounded(const HeytingAlgebra& p,
                                                const std::vector<int>& seed,
                                                size_t max_size,
                                                StepCounter& sc) {
  std::set<int> in(seed.begin(), seed.end());
  in.insert(p.bot);
  in.insert(p.top);
  if (in.size() > max_size) return std::nullopt;
  std::vector<int> all(in.begin(), in.end());
  for (size_t i = 0; i < all.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      sc.charge();
      int x = all[i], y = all[j];
      int vals[4] = {p.meet(x, y), p.join(x, y), p.imp(x, y), p.imp(y, x)};
      for (int v : vals)
        if (in.insert(v).second) {
          if (in.size() > max_size) return std::nullopt;
          all.push_back(v);
        }
    }
  }
  return std::vector<int>(in.begin(), in.end());
}

std::string generator_label(const QvarHandle& q) {
  return q.generator.label.empty() ? std::string("B") : q.generator.label;
}

}  // namespace

QvarHandle make_qvar(const HeytingAlgebra& b, const Budgets& budgets) {
  ValidationReport rep = validate_algebra(b);
  if (!rep.ok)
    throw std::invalid_argument("quasivariety generator is not a Heyting algebra: " +
                                rep.failures.front());
  QvarHandle q;
  q.generator = b;
  q.budgets = budgets;
  q.dual = dual_frame(b);
  return q;
}

MemberResult member(const HeytingAlgebra& a, const QvarHandle& q) {
  MemberResult res;
  if (a.n <= 1) {
    res.member = true;
    return res;
  }
  StepCounter sc(q.budgets.search_steps);
  DualFrame da = dual_frame(a);
  std::vector<Mask> images = p_morphism_images(q.dual.frame, da.frame, sc);
  Mask covered = 0;
  for (Mask m : images) covered |= m;

  if (covered != da.frame.full()) {
    // A frame point no image reaches yields indistinguishable elements: two
    // elements are separated by some hom iff an image meets their symmetric
    // difference of join-irreducible sets.
    res.member = false;
    for (int i = 0; i < a.n && res.unseparated.first < 0; ++i)
      for (int j = i + 1; j < a.n; ++j)
        if (((da.element_mask[i] ^ da.element_mask[j]) & covered) == 0) {
          res.unseparated = {i, j};
          break;
        }
    return res;
  }

  res.member = true;
  Mask got = 0;
  for (Mask m : images) {
    if ((m & ~got) == 0) continue;
    got |= m;
    res.separating.push_back(hom_for_image(a, da, q, m, sc));
    if (got == da.frame.full()) break;
  }
  return res;
}

FreeAlgebraResult free_algebra(const QvarHandle& q, int k) {
  if (k < 0) throw std::invalid_argument("free algebra: k must be >= 0");
  const HeytingAlgebra& B = q.generator;
  StepCounter sc(q.budgets.search_steps);

  uint64_t m = 1;  // valuation count = |B|^k = tuple length
  for (int i = 0; i < k; ++i) {
    m *= (uint64_t)B.n;
    if (m > q.budgets.enum_cap) throw budget_exceeded{};
  }

  FreeAlgebraResult res;
  std::map<std::vector<uint16_t>, int> index;
  auto add = [&](const std::vector<uint16_t>& t, Derivation d) -> int {
    auto it = index.find(t);
    if (it != index.end()) return it->second;
    int id = (int)res.tuples.size();
    if ((uint64_t)id + 1 > q.budgets.free_size) throw budget_exceeded{};
    index.emplace(t, id);
    res.tuples.push_back(t);
    res.derivations.push_back(d);
    return id;
  };

  std::vector<uint16_t> t(m);
  std::fill(t.begin(), t.end(), (uint16_t)B.bot);
  int bot_id = add(t, {0, -1, -1});
  std::fill(t.begin(), t.end(), (uint16_t)B.top);
  int top_id = add(t, {1, -1, -1});
  for (int i = 0; i < k; ++i) {
    uint64_t stride = 1;
    for (int j = i + 1; j < k; ++j) stride *= (uint64_t)B.n;
    for (uint64_t v = 0; v < m; ++v)
      t[v] = (uint16_t)((v / stride) % (uint64_t)B.n);
    res.generators.push_back(add(t, {2, i, -1}));
  }

  // Pairwise saturation in discovery order.
  for (size_t i = 0; i < res.tuples.size(); ++i) {
    for (size_t j = 0; j <= i; ++j) {
      sc.charge(m);
      std::vector<uint16_t> x = res.tuples[j], y = res.tuples[i], r(m);
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.meet(x[v], y[v]);
      add(r, {3, (int)j, (int)i});
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.join(x[v], y[v]);
      add(r, {4, (int)j, (int)i});
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.imp(x[v], y[v]);
      add(r, {5, (int)j, (int)i});
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.imp(y[v], x[v]);
      add(r, {5, (int)i, (int)j});
    }
  }

  int n = (int)res.tuples.size();
  if ((uint64_t)n > q.budgets.table_cap) throw budget_exceeded{};
  HeytingAlgebra& A = res.alg;
  A.n = n;
  A.bot = bot_id;
  A.top = top_id;
  A.label = "F(" + generator_label(q) + "," + std::to_string(k) + ")";
  A.meet_t.resize((size_t)n * n);
  A.join_t.resize((size_t)n * n);
  A.imp_t.resize((size_t)n * n);
  std::vector<uint16_t> r(m);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      sc.charge(m);
      const auto& x = res.tuples[i];
      const auto& y = res.tuples[j];
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.meet(x[v], y[v]);
      A.meet_t[(size_t)i * n + j] = (uint16_t)index.at(r);
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.join(x[v], y[v]);
      A.join_t[(size_t)i * n + j] = (uint16_t)index.at(r);
      for (uint64_t v = 0; v < m; ++v) r[v] = (uint16_t)B.imp(x[v], y[v]);
      A.imp_t[(size_t)i * n + j] = (uint16_t)index.at(r);
    }
  return res;
}

std::vector<int> replay_derivations(const std::vector<Derivation>& ds,
                                    const HeytingAlgebra& target,
                                    const std::vector<int>& gen_images) {
  std::vector<int> val(ds.size());
  for (size_t i = 0; i < ds.size(); ++i) {
    const Derivation& d = ds[i];
    switch (d.op) {
      case 0: val[i] = target.bot; break;
      case 1: val[i] = target.top; break;
      case 2: val[i] = gen_images.at(d.a); break;
      case 3: val[i] = target.meet(val[d.a], val[d.b]); break;
      case 4: val[i] = target.join(val[d.a], val[d.b]); break;
      case 5: val[i] = target.imp(val[d.a], val[d.b]); break;
      default: throw std::logic_error("bad derivation op");
    }
  }
  return val;
}

QIrreducibleResult q_irreducible(const HeytingAlgebra& a, const QvarHandle& q) {
  if (a.n <= 1)
    throw std::invalid_argument("q_irreducible: algebra must be nontrivial");
  QIrreducibleResult res;
  // Subdirectly irreducible algebras are Q-irreducible outright: every
  // proper quotient collapses the second-greatest element into top.
  if (std::optional<int> sg = second_greatest(a)) {
    res.irreducible = true;
    res.witness = *sg;
    return res;
  }

  std::vector<int> member_xs;
  int star = a.bot;
  for (int x = 0; x < a.n; ++x) {
    if (x == a.top) continue;
    IntervalQuotient iq = interval_quotient(a, x);
    if (member(iq.alg, q).member) {
      member_xs.push_back(x);
      star = a.join(star, x);
    }
  }
  if (star != a.top) {
    res.irreducible = true;
    res.witness = star;
    return res;
  }

  res.irreducible = false;
  // Greedy point-separating family among the member quotients: the quotient
  // by up(x) keeps (i, j) apart iff x is not below (i<->j).
  std::vector<std::pair<int, int>> pending;
  for (int i = 0; i < a.n; ++i)
    for (int j = i + 1; j < a.n; ++j) pending.push_back({i, j});
  for (int x : member_xs) {
    if (pending.empty()) break;
    std::vector<std::pair<int, int>> still;
    for (auto [i, j] : pending) {
      int biimp = a.meet(a.imp(i, j), a.imp(j, i));
      if (a.le(x, biimp)) still.push_back({i, j});
    }
    if (still.size() < pending.size()) {
      res.separating_filters.push_back(x);
      pending = std::move(still);
    }
  }
  if (!pending.empty())
    throw std::logic_error("separating family incomplete despite star == top");
  return res;
}

WpResult weakly_projective(const HeytingAlgebra& a, const QvarHandle& q) {
  WpResult res;
  if (a.n <= 2) {
    // The trivial algebra and the two-element algebra embed into every
    // (nontrivial) preimage.
    res.note = "small algebra";
    return res;
  }
  if (!member(a, q).member)
    throw std::invalid_argument(
        "weakly_projective: algebra is not a member of the quasivariety");

  DualFrame da = dual_frame(a);
  if (retractable_frame(da.frame)) {
    // Every frame with an up-closed copy of a's dual frame retracts onto the
    // copy, so every preimage admits an embedding of a.
    res.note = "retractable dual frame";
    return res;
  }

  std::optional<int> mg = min_generators(a, a.n);
  int gens = mg ? *mg : a.n;
  std::string phase_note;

  // Witness phase: hunt for a bad preimage among subalgebras of small powers
  // of the generator.  Only able to answer "no"; exactness comes later.
  try {
    StepCounter sc2(q.budgets.search_steps);
    int seed_cap = std::min(gens, 3);
    for (int e = 1; e <= q.budgets.witness_power; ++e) {
      uint64_t psize = 1;
      bool oversize = false;
      for (int i = 0; i < e; ++i) {
        psize *= (uint64_t)q.generator.n;
        if (psize > 2048) {
          oversize = true;
          break;
        }
      }
      if (oversize) break;
      if (psize <= (uint64_t)a.n) continue;  // bad preimages are larger than a
      std::vector<const HeytingAlgebra*> fs(e, &q.generator);
      HeytingAlgebra P = product_algebra(fs, 4096);

      std::set<std::vector<int>> cands;
      std::vector<int> seed;
      std::function<void(int, int)> grow = [&](int start, int left) {
        if (!seed.empty()) {
          auto cl = closure_bounded(P, seed, 512, sc2);
          if (cl && (int)cl->size() > a.n) cands.insert(*cl);
        }
        if (left == 0) return;
        for (int x = start; x < P.n; ++x) {
          seed.push_back(x);
          grow(x + 1, left - 1);
          seed.pop_back();
        }
      };
      grow(0, seed_cap);

      std::vector<std::vector<int>> ordered(cands.begin(), cands.end());
      std::sort(ordered.begin(), ordered.end(),
                [](const std::vector<int>& u, const std::vector<int>& v) {
                  return u.size() != v.size() ? u.size() < v.size() : u < v;
                });
      for (const std::vector<int>& cl : ordered) {
        Subalgebra S = subalgebra_from_closure(P, cl);
        HomSearchResult sur = find_homs(S.alg, a, HomMode::Surjective, 1, &sc2);
        if (sur.homs.empty()) continue;
        HomSearchResult emb = find_homs(a, S.alg, HomMode::Injective, 1, &sc2);
        if (emb.homs.empty() && emb.exhausted) {
          res.verdict = Verdict::No;
          res.counterexample = S.alg;
          res.counterexample.label =
              "subalgebra of " + generator_label(q) + "^" + std::to_string(e) +
              "(n=" + std::to_string(S.alg.n) + ")";
          res.surjection = sur.homs[0].map;
          res.note = "witness search";
          return res;
        }
      }
    }
  } catch (const budget_exceeded&) {
    phase_note = "witness search hit budget; ";
  }

  // Exact phase: every preimage surjection can be cut down to a g-generated
  // one, and those are exactly the quotients Up(W) of the g-generated free
  // algebra, realized as up-sets W of the universal frame.
  try {
    StepCounter sc3(q.budgets.search_steps);
    SiFrames si = si_frames(q.generator, sc3);
    UniversalFrame u = universal_frame(si, gens, q.budgets.frame_cap, sc3);
    std::vector<Mask> images = p_morphism_images(q.dual.frame, u.frame, sc3);
    std::vector<Mask> copies = upset_copies(da.frame, u.frame);
    if (copies.empty())
      throw std::logic_error("universal frame misses the target algebra");

    for (Mask w : u.frame.upsets(q.budgets.enum_cap)) {
      bool surjects = false;
      for (Mask c : copies)
        if ((c & ~w) == 0) {
          surjects = true;
          break;
        }
      if (!surjects) continue;
      Mask covered = 0;
      for (Mask im : images)
        if ((im & ~w) == 0) covered |= im;
      if ((w & ~covered) != 0) continue;  // Up(w) is not a member of q
      std::vector<int> backw;
      Poset wf = u.frame.induced(w, &backw);
      if (has_surjective_p_morphism(wf, da.frame, sc3)) continue;  // a embeds

      // Up(w) is a member, surjects onto a, and admits no embedding of a.
      res.verdict = Verdict::No;
      UpsetAlgebra ua = upset_algebra(wf, q.budgets.enum_cap);
      res.counterexample = ua.alg;
      res.counterexample.label =
          "free-quotient(n=" + std::to_string(ua.alg.n) + ")";
      // Canonical surjection: restrict up-sets of w to the first up-closed
      // copy of a's dual frame inside w.
      Mask c = 0;
      for (Mask cand : copies)
        if ((cand & ~w) == 0) {
          c = cand;
          break;
        }
      std::vector<int> backc;
      Poset cf = u.frame.induced(c, &backc);
      std::vector<int> iso = *poset_iso_map(cf, da.frame);
      std::vector<int> u2w(u.frame.n, -1);
      for (int i = 0; i < wf.n; ++i) u2w[backw[i]] = i;
      std::map<Mask, int> elem_of;
      for (int e = 0; e < a.n; ++e) elem_of[da.element_mask[e]] = e;
      res.surjection.resize(ua.alg.n);
      for (int e = 0; e < ua.alg.n; ++e) {
        Mask s = ua.elems[e];  // up-set of wf
        Mask am = 0;
        for (int tpt = 0; tpt < cf.n; ++tpt)
          if ((s >> u2w[backc[tpt]]) & 1) am |= bit(iso[tpt]);
        res.surjection[e] = elem_of.at(am);
      }
      res.note = phase_note + "exact sweep";
      return res;
    }
    res.verdict = Verdict::Yes;
    res.note = phase_note + "exact sweep";
    return res;
  } catch (const budget_exceeded&) {
    res.verdict = Verdict::ExceedsBudget;
    res.note = phase_note + "exact sweep hit budget";
    return res;
  }
}

TnpResult totally_non_projective(const HeytingAlgebra& a,
                                 const Budgets& budgets) {
  if (a.n <= 1)
    throw std::invalid_argument(
        "totally_non_projective: algebra must be nontrivial");
  TnpResult res;
  QvarHandle q = make_qvar(a, budgets);
  res.wp = weakly_projective(a, q);
  res.verdict = res.wp.verdict == Verdict::Yes  ? Verdict::No
                : res.wp.verdict == Verdict::No ? Verdict::Yes
                                                : Verdict::ExceedsBudget;
  return res;
}

PrimitiveResult primitive(const QvarHandle& q) {
  PrimitiveResult res;
  std::vector<Subalgebra> subs;
  try {
    subs = subalgebras_up_to_iso(q.generator, q.budgets.enum_cap);
  } catch (const budget_exceeded&) {
    res.verdict = Verdict::ExceedsBudget;
    res.undecided.push_back("subalgebra enumeration");
    return res;
  }
  int idx = 0;
  for (const Subalgebra& s : subs) {
    ++idx;
    if (s.alg.n <= 1) continue;
    HeytingAlgebra cand = s.alg;
    cand.label = generator_label(q) + ":sub" + std::to_string(idx) +
                 "(n=" + std::to_string(cand.n) + ")";
    bool irr = false;
    try {
      irr = q_irreducible(cand, q).irreducible;
    } catch (const budget_exceeded&) {
      res.undecided.push_back(cand.label);
      continue;
    }
    if (!irr) continue;
    res.irreducibles.push_back(cand);
    WpResult wp;
    try {
      wp = weakly_projective(cand, q);
    } catch (const budget_exceeded&) {
      wp.verdict = Verdict::ExceedsBudget;
      wp.note = "budget";
    }
    if (wp.verdict == Verdict::No) {
      res.verdict = Verdict::No;
      res.failing = cand;
      res.failure = std::move(wp);
      return res;
    }
    if (wp.verdict == Verdict::ExceedsBudget) res.undecided.push_back(cand.label);
  }
  res.verdict = res.undecided.empty() ? Verdict::Yes : Verdict::ExceedsBudget;
  return res;
}

ScResult sc_primitive_cyclic(const HeytingAlgebra& b, const Budgets& budgets) {
  QvarHandle qb = make_qvar(b, budgets);
  if (!min_generators(b, 1))
    throw std::invalid_argument(
        "sc-primitive requires a one-generated algebra");
  FreeAlgebraResult f = free_algebra(qb, 1);
  ScResult res;
  res.free_size = f.alg.n;
  QvarHandle qf = make_qvar(f.alg, budgets);
  res.inner = primitive(qf);
  res.verdict = res.inner.verdict;
  return res;
}

}  // namespace hey
