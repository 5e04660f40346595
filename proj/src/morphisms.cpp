#include "hey/morphisms.hpp"

#include <algorithm>
#include <functional>
#include <set>

namespace hey {

bool is_homomorphism(const HeytingAlgebra& a, const HeytingAlgebra& b,
                     const std::vector<int>& map) {
  if ((int)map.size() != a.n) return false;
  for (int x : map)
    if (x < 0 || x >= b.n) return false;
  if (map[a.bot] != b.bot || map[a.top] != b.top) return false;
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (map[a.meet(x, y)] != b.meet(map[x], map[y])) return false;
      if (map[a.join(x, y)] != b.join(map[x], map[y])) return false;
      if (map[a.imp(x, y)] != b.imp(map[x], map[y])) return false;
    }
  return true;
}

std::vector<int> closure_in(const HeytingAlgebra& a, std::vector<int> seed,
                            StepCounter* steps) {
  std::vector<char> in(a.n, 0);
  std::vector<int> list;
  auto add = [&](int x) {
    if (!in[x]) {
      in[x] = 1;
      list.push_back(x);
    }
  };
  add(a.bot);
  add(a.top);
  for (int x : seed) add(x);
  for (size_t i = 0; i < list.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      if (steps) steps->charge(3);
      int x = list[i], y = list[j];
      add(a.meet(x, y));
      add(a.join(x, y));
      add(a.imp(x, y));
      add(a.imp(y, x));
    }
  std::sort(list.begin(), list.end());
  return list;
}

namespace {

// Greedy generating sequence: repeatedly add the element whose closure grows
// the current subuniverse most (ties to the smallest index).
std::vector<int> generating_sequence(const HeytingAlgebra& a,
                                     StepCounter* steps) {
  std::vector<int> gens;
  std::vector<int> current = closure_in(a, {}, steps);
  while ((int)current.size() < a.n) {
    std::vector<char> in(a.n, 0);
    for (int x : current) in[x] = 1;
    int best = -1;
    size_t best_size = 0;
    for (int x = 0; x < a.n; ++x) {
      if (in[x]) continue;
      std::vector<int> seed = current;
      seed.push_back(x);
      size_t sz = closure_in(a, seed, steps).size();
      if (sz > best_size) {
        best_size = sz;
        best = x;
      }
    }
    gens.push_back(best);
    std::vector<int> seed = current;
    seed.push_back(best);
    current = closure_in(a, seed, steps);
  }
  return gens;
}

// Propagate gen images over the subuniverse they generate; every derived
// pair is checked, so a completed map is a verified homomorphism on that
// subuniverse.  `required` is its size (a.n once all generators are seeded);
// reaching it certifies the propagation saw every element.
bool extend_hom(const HeytingAlgebra& a, const HeytingAlgebra& b,
                const std::vector<int>& gens, const std::vector<int>& images,
                size_t n_gens, int required, bool need_injective,
                std::vector<int>& map, StepCounter* steps) {
  map.assign(a.n, -1);
  std::vector<int> used(need_injective ? b.n : 0, 0);
  std::vector<int> known;
  auto set = [&](int x, int v) -> bool {
    if (map[x] != -1) return map[x] == v;
    if (need_injective) {
      if (used[v]) return false;
      used[v] = 1;
    }
    map[x] = v;
    known.push_back(x);
    return true;
  };
  if (!set(a.bot, b.bot)) return false;
  if (!set(a.top, b.top)) return false;
  for (size_t i = 0; i < n_gens; ++i)
    if (!set(gens[i], images[i])) return false;
  for (size_t i = 0; i < known.size(); ++i)
    for (size_t j = 0; j <= i; ++j) {
      if (steps) steps->charge(3);
      int x = known[i], y = known[j];
      if (!set(a.meet(x, y), b.meet(map[x], map[y]))) return false;
      if (!set(a.join(x, y), b.join(map[x], map[y]))) return false;
      if (!set(a.imp(x, y), b.imp(map[x], map[y]))) return false;
      if (!set(a.imp(y, x), b.imp(map[y], map[x]))) return false;
    }
  return (int)known.size() == required;
}

}  // namespace

HomSearchResult find_homs(const HeytingAlgebra& a, const HeytingAlgebra& b,
                          HomMode mode, uint64_t cap, StepCounter* steps) {
  HomSearchResult res;
  if (cap == 0) cap = (mode == HomMode::First) ? 1 : ~uint64_t(0);
  StepCounter local(default_budgets().search_steps);
  if (!steps) steps = &local;
  bool need_inj = mode == HomMode::Injective || mode == HomMode::Bijective;
  bool need_surj = mode == HomMode::Surjective || mode == HomMode::Bijective;
  if (need_inj && a.n > b.n) {
    res.exhausted = true;
    return res;
  }
  if (need_surj && a.n < b.n) {
    res.exhausted = true;
    return res;
  }
  std::vector<int> gens = generating_sequence(a, steps);
  // Sizes of the prefix subuniverses <g_1..g_d>: a consistent partial map on
  // prefix d must reach exactly that many elements, which prunes an image
  // choice as soon as the generated fragment disagrees.
  std::vector<int> prefix_size(gens.size() + 1);
  for (size_t d = 0; d <= gens.size(); ++d)
    prefix_size[d] = (int)closure_in(a, {gens.begin(), gens.begin() + d}, steps)
                         .size();
  std::vector<int> images(gens.size(), 0);
  std::vector<int> map;
  bool truncated = false;
  // Depth-first over image tuples, lexicographically ascending.
  std::function<bool(size_t)> dfs = [&](size_t depth) -> bool {
    steps->charge();
    if (!extend_hom(a, b, gens, images, depth, prefix_size[depth], need_inj,
                    map, steps))
      return false;
    if (depth == gens.size()) {
      bool ok = true;
      if (need_surj) {
        std::vector<char> hit(b.n, 0);
        for (int v : map) hit[v] = 1;
        ok = std::find(hit.begin(), hit.end(), 0) == hit.end();
      }
      if (ok) {
        Homomorphism h;
        h.map = map;
        std::set<int> img(map.begin(), map.end());
        h.injective = (int)img.size() == a.n;
        h.surjective = (int)img.size() == b.n;
        res.homs.push_back(std::move(h));
        if (res.homs.size() >= cap) {
          truncated = true;
          return true;
        }
      }
      return false;
    }
    for (int v = 0; v < b.n; ++v) {
      images[depth] = v;
      if (dfs(depth + 1)) return true;
    }
    return false;
  };
  bool stopped = dfs(0);
  res.exhausted = !stopped || !truncated;
  return res;
}

bool isomorphic(const HeytingAlgebra& a, const HeytingAlgebra& b) {
  if (a.n != b.n) return false;
  if (downset_profile(a) != downset_profile(b)) return false;
  return !find_homs(a, b, HomMode::Bijective, 1).homs.empty();
}

Subalgebra subalgebra_from_closure(const HeytingAlgebra& a,
                                   const std::vector<int>& closed) {
  Subalgebra s;
  s.back = closed;
  std::vector<int> fwd(a.n, -1);
  int n = (int)closed.size();
  for (int i = 0; i < n; ++i) fwd[closed[i]] = i;
  s.alg.n = n;
  s.alg.bot = fwd[a.bot];
  s.alg.top = fwd[a.top];
  s.alg.meet_t.resize((size_t)n * n);
  s.alg.join_t.resize((size_t)n * n);
  s.alg.imp_t.resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      s.alg.meet_t[(size_t)i * n + j] = (uint16_t)fwd[a.meet(closed[i], closed[j])];
      s.alg.join_t[(size_t)i * n + j] = (uint16_t)fwd[a.join(closed[i], closed[j])];
      s.alg.imp_t[(size_t)i * n + j] = (uint16_t)fwd[a.imp(closed[i], closed[j])];
    }
  return s;
}

Subalgebra subalgebra_generated(const HeytingAlgebra& a,
                                const std::vector<int>& seed) {
  return subalgebra_from_closure(a, closure_in(a, seed));
}

std::vector<std::vector<int>> all_subuniverses(const HeytingAlgebra& a,
                                               uint64_t cap) {
  if (cap == 0) cap = default_budgets().enum_cap;
  StepCounter steps(default_budgets().search_steps);
  std::set<std::vector<int>> seen;
  std::vector<std::vector<int>> queue;
  auto push = [&](std::vector<int> s) {
    if (seen.insert(s).second) {
      if (seen.size() > cap) throw budget_exceeded{};
      queue.push_back(std::move(s));
    }
  };
  push(closure_in(a, {}, &steps));
  for (size_t i = 0; i < queue.size(); ++i) {
    std::vector<int> base = queue[i];
    std::vector<char> in(a.n, 0);
    for (int x : base) in[x] = 1;
    for (int x = 0; x < a.n; ++x) {
      if (in[x]) continue;
      std::vector<int> seed = base;
      seed.push_back(x);
      push(closure_in(a, seed, &steps));
    }
  }
  std::vector<std::vector<int>> out(seen.begin(), seen.end());
  std::sort(out.begin(), out.end(), [](const auto& x, const auto& y) {
    return x.size() != y.size() ? x.size() < y.size() : x < y;
  });
  return out;
}

std::vector<Subalgebra> subalgebras_up_to_iso(const HeytingAlgebra& a,
                                              uint64_t cap) {
  std::vector<Subalgebra> out;
  std::vector<std::vector<int>> profiles;
  for (const auto& s : all_subuniverses(a, cap)) {
    Subalgebra sub = subalgebra_from_closure(a, s);
    auto prof = downset_profile(sub.alg);
    bool dup = false;
    for (size_t i = 0; i < out.size() && !dup; ++i)
      if (profiles[i] == prof && isomorphic(out[i].alg, sub.alg)) dup = true;
    if (!dup) {
      out.push_back(std::move(sub));
      profiles.push_back(std::move(prof));
    }
  }
  return out;
}

std::optional<int> min_generators(const HeytingAlgebra& a, int cap) {
  if (a.n > 2048) throw budget_exceeded{};
  StepCounter steps(default_budgets().search_steps);
  std::vector<int> subset;
  std::function<bool(int, int)> try_size = [&](int k, int from) -> bool {
    if (k == 0)
      return (int)closure_in(a, subset, &steps).size() == a.n;
    for (int x = from; x < a.n; ++x) {
      subset.push_back(x);
      if (try_size(k - 1, x + 1)) return true;
      subset.pop_back();
    }
    return false;
  };
  for (int k = 0; k <= cap; ++k)
    if (try_size(k, 0)) return k;
  return std::nullopt;
}

std::vector<Filter> filters(const HeytingAlgebra& a) {
  std::vector<Filter> out;
  for (int g = 0; g < a.n; ++g) {
    Filter f;
    f.generator = g;
    for (int y = 0; y < a.n; ++y)
      if (a.le(g, y)) f.members.push_back(y);
    std::sort(f.members.begin(), f.members.end());
    out.push_back(std::move(f));
  }
  std::sort(out.begin(), out.end(), [](const Filter& x, const Filter& y) {
    return x.members.size() != y.members.size()
               ? x.members.size() < y.members.size()
               : x.members < y.members;
  });
  return out;
}

QuotientResult quotient(const HeytingAlgebra& a, const Filter& f) {
  IntervalQuotient iq = interval_quotient(a, f.generator);
  QuotientResult q;
  q.alg = std::move(iq.alg);
  q.fwd = std::move(iq.fwd);
  return q;
}

std::vector<QuotientResult> quotients_up_to_iso(const HeytingAlgebra& a) {
  std::vector<QuotientResult> out;
  std::vector<std::vector<int>> profiles;
  for (const Filter& f : filters(a)) {
    QuotientResult q = quotient(a, f);
    auto prof = downset_profile(q.alg);
    bool dup = false;
    for (size_t i = 0; i < out.size() && !dup; ++i)
      if (profiles[i] == prof && isomorphic(out[i].alg, q.alg)) dup = true;
    if (!dup) {
      out.push_back(std::move(q));
      profiles.push_back(std::move(prof));
    }
  }
  return out;
}

SubdirectResult subdirect_embedding_check(
    const HeytingAlgebra& a, const std::vector<const HeytingAlgebra*>& factors) {
  HeytingAlgebra p = product_algebra(factors);
  SubdirectResult res;
  auto found = find_homs(a, p, HomMode::Injective, 0);
  for (const auto& h : found.homs) {
    bool all_surj = true;
    for (size_t i = 0; i < factors.size() && all_surj; ++i) {
      std::vector<char> hit(factors[i]->n, 0);
      for (int x = 0; x < a.n; ++x) hit[product_coords(factors, h.map[x])[i]] = 1;
      if (std::find(hit.begin(), hit.end(), 0) != hit.end()) all_surj = false;
    }
    if (all_surj) {
      res.found = true;
      res.map = h.map;
      return res;
    }
  }
  if (!found.exhausted) throw budget_exceeded{};
  return res;
}

Filter kernel_filter(const HeytingAlgebra& a, const HeytingAlgebra& b,
                     const std::vector<int>& map) {
  Filter f;
  f.generator = a.top;
  for (int x = 0; x < a.n; ++x)
    if (map[x] == b.top) {
      f.members.push_back(x);
      f.generator = a.meet(f.generator, x);
    }
  std::sort(f.members.begin(), f.members.end());
  return f;
}

}  // namespace hey
