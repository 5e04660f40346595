#include "hey/poset.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace hey {

Mask Poset::down(int i) const {
  Mask m = 0;
  for (int j = 0; j < n; ++j)
    if (leq(j, i)) m |= bit(j);
  return m;
}

bool Poset::is_upset(Mask m) const {
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1)
      if ((up[i] & ~m) != 0) return false;
  return true;
}

namespace {

// Points ordered so that everything strictly above a point comes first.
std::vector<int> top_down_order(const Poset& p) {
  std::vector<int> order(p.n);
  for (int i = 0; i < p.n; ++i) order[i] = i;
  std::stable_sort(order.begin(), order.end(), [&](int a, int b) {
    return popcount(p.up[a]) < popcount(p.up[b]);
  });
  return order;
}

}  // namespace

std::vector<Mask> Poset::upsets(uint64_t cap) const {
  std::vector<int> order = top_down_order(*this);
  std::vector<Mask> out;
  std::function<void(size_t, Mask)> rec = [&](size_t k, Mask cur) {
    if (k == order.size()) {
      if (out.size() >= cap) throw budget_exceeded{};
      out.push_back(cur);
      return;
    }
    int x = order[k];
    rec(k + 1, cur);
    if ((strict_up(x) & ~cur) == 0) rec(k + 1, cur | bit(x));
  };
  rec(0, 0);
  std::sort(out.begin(), out.end(), [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  });
  return out;
}

std::vector<std::pair<int, int>> Poset::covers() const {
  std::vector<std::pair<int, int>> out;
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      if (!lt(i, j)) continue;
      bool direct = true;
      for (int z = 0; z < n && direct; ++z)
        if (z != i && z != j && lt(i, z) && lt(z, j)) direct = false;
      if (direct) out.push_back({i, j});
    }
  return out;
}

std::vector<int> Poset::maximal_points() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i)
    if (strict_up(i) == 0) out.push_back(i);
  return out;
}

std::vector<int> Poset::minimal_points() const {
  std::vector<int> out;
  for (int i = 0; i < n; ++i) {
    bool minimal = true;
    for (int j = 0; j < n && minimal; ++j)
      if (lt(j, i)) minimal = false;
    if (minimal) out.push_back(i);
  }
  return out;
}

bool Poset::rooted() const { return n > 0 && minimal_points().size() == 1; }

std::vector<int> Poset::heights() const {
  std::vector<int> h(n, 0);
  for (int x : top_down_order(*this)) {
    int best = 0;
    for (int y = 0; y < n; ++y)
      if (lt(x, y)) best = std::max(best, h[y] + 1);
    h[x] = best;
  }
  return h;
}

Poset Poset::induced(Mask m, std::vector<int>* back) const {
  std::vector<int> old_of;
  std::vector<int> new_of(n, -1);
  for (int i = 0; i < n; ++i)
    if ((m >> i) & 1) {
      new_of[i] = (int)old_of.size();
      old_of.push_back(i);
    }
  Poset q;
  q.n = (int)old_of.size();
  q.up.assign(q.n, 0);
  for (int a = 0; a < q.n; ++a) {
    Mask u = up[old_of[a]] & m;
    for (int j = 0; j < n; ++j)
      if ((u >> j) & 1) q.up[a] |= bit(new_of[j]);
  }
  if (!names.empty()) {
    q.names.resize(q.n);
    for (int a = 0; a < q.n; ++a) q.names[a] = names[old_of[a]];
  }
  if (back) *back = old_of;
  return q;
}

std::string Poset::name_of(int i) const {
  if (i >= 0 && i < (int)names.size() && !names[i].empty()) return names[i];
  return "p" + std::to_string(i);
}

std::string Poset::to_dot() const {
  std::ostringstream os;
  os << "digraph poset {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < n; ++i)
    os << "  n" << i << " [label=\"" << name_of(i) << "\"];\n";
  for (auto [lo, hi] : covers()) os << "  n" << lo << " -> n" << hi << ";\n";
  os << "}\n";
  return os.str();
}

Poset poset_from_covers(int n, const std::vector<std::pair<int, int>>& covers,
                        std::vector<std::string> names) {
  if (n < 0 || n > 64) throw std::invalid_argument("poset size must be 0..64");
  std::vector<std::vector<int>> above(n);
  for (auto [lo, hi] : covers) {
    if (lo < 0 || lo >= n || hi < 0 || hi >= n || lo == hi)
      throw std::invalid_argument("bad cover edge");
    above[lo].push_back(hi);
  }
  Poset p;
  p.n = n;
  p.up.assign(n, 0);
  p.names = std::move(names);
  // Iterate reachability to a fixpoint; a cycle would put i above itself.
  for (int i = 0; i < n; ++i) p.up[i] = bit(i);
  bool changed = true;
  int rounds = 0;
  while (changed) {
    if (++rounds > n + 1) throw std::invalid_argument("cover relation has a cycle");
    changed = false;
    for (int i = 0; i < n; ++i)
      for (int j : above[i]) {
        Mask want = p.up[i] | p.up[j];
        if (want != p.up[i]) {
          p.up[i] = want;
          changed = true;
        }
      }
  }
  for (int i = 0; i < n; ++i)
    for (int j : above[i])
      if (i != j && ((p.up[j] >> i) & 1))
        throw std::invalid_argument("cover relation has a cycle");
  return p;
}

namespace {

// Weisfeiler-Leman style refinement over the order relation; equal label
// vectors are necessary for isomorphism.
std::vector<uint64_t> iso_labels(const Poset& p) {
  auto h = p.heights();
  std::vector<uint64_t> lab(p.n);
  for (int i = 0; i < p.n; ++i)
    lab[i] = (uint64_t)popcount(p.up[i]) * 1315423911u +
             (uint64_t)popcount(p.down(i)) * 2654435761u + (uint64_t)h[i];
  for (int round = 0; round < 3; ++round) {
    std::vector<uint64_t> next(p.n);
    for (int i = 0; i < p.n; ++i) {
      std::vector<uint64_t> ups, downs;
      for (int j = 0; j < p.n; ++j) {
        if (p.lt(i, j)) ups.push_back(lab[j]);
        if (p.lt(j, i)) downs.push_back(lab[j]);
      }
      std::sort(ups.begin(), ups.end());
      std::sort(downs.begin(), downs.end());
      uint64_t v = lab[i];
      for (uint64_t u : ups) v = v * 1000003u + u + 1;
      for (uint64_t d : downs) v = v * 999983u + d + 2;
      next[i] = v;
    }
    lab = next;
  }
  return lab;
}

}  // namespace

uint64_t poset_fingerprint(const Poset& p) {
  auto lab = iso_labels(p);
  std::sort(lab.begin(), lab.end());
  uint64_t h = 1469598103934665603ull ^ (uint64_t)p.n;
  for (uint64_t v : lab) {
    h ^= v;
    h *= 1099511628211ull;
  }
  return h;
}

std::optional<std::vector<int>> poset_iso_map(const Poset& a, const Poset& b) {
  if (a.n != b.n) return std::nullopt;
  auto la = iso_labels(a), lb = iso_labels(b);
  {
    auto sa = la, sb = lb;
    std::sort(sa.begin(), sa.end());
    std::sort(sb.begin(), sb.end());
    if (sa != sb) return std::nullopt;
  }
  std::vector<int> order(a.n);
  for (int i = 0; i < a.n; ++i) order[i] = i;
  // Rare labels first shrink the branching factor.
  std::map<uint64_t, int> freq;
  for (auto v : la) freq[v]++;
  std::stable_sort(order.begin(), order.end(),
                   [&](int x, int y) { return freq[la[x]] < freq[la[y]]; });
  std::vector<int> img(a.n, -1);
  Mask used = 0;
  std::function<bool(size_t)> rec = [&](size_t k) -> bool {
    if (k == order.size()) return true;
    int x = order[k];
    for (int c = 0; c < b.n; ++c) {
      if ((used >> c) & 1) continue;
      if (la[x] != lb[c]) continue;
      bool ok = true;
      for (size_t t = 0; t < k && ok; ++t) {
        int y = order[t];
        if (a.leq(x, y) != b.leq(c, img[y])) ok = false;
        if (a.leq(y, x) != b.leq(img[y], c)) ok = false;
      }
      if (!ok) continue;
      img[x] = c;
      used |= bit(c);
      if (rec(k + 1)) return true;
      used &= ~bit(c);
      img[x] = -1;
    }
    return false;
  };
  if (!rec(0)) return std::nullopt;
  return img;
}

bool poset_iso(const Poset& a, const Poset& b) {
  return poset_iso_map(a, b).has_value();
}

namespace {

template <class Fn>
void enumerate_p_morphisms(const Poset& p, const Poset& q,
                           const PMorphismQuery& query, StepCounter& steps,
                           Fn&& emit, bool& exhausted) {
  std::vector<int> order = top_down_order(p);
  std::vector<int> img(p.n, -1);
  bool stop = false;
  std::function<void(size_t, Mask)> rec = [&](size_t k, Mask image) {
    if (stop) return;
    if (k == order.size()) {
      if (query.surjective && image != q.full()) return;
      if (!emit(img)) {
        stop = true;
        exhausted = false;
      }
      return;
    }
    if (query.surjective) {
      // Not enough unassigned points left to hit the missing targets.
      int missing = popcount(q.full() & ~image);
      if ((int)(order.size() - k) < missing) return;
    }
    int x = order[k];
    for (int c = 0; c < q.n; ++c) {
      if (!((query.codomain_within >> c) & 1)) continue;
      steps.charge();
      // f(up(x)) must equal up_Q(c); strict-up images are already fixed.
      Mask m = bit(c);
      for (int y = 0; y < p.n; ++y)
        if (p.lt(x, y)) m |= bit(img[y]);
      if (m != q.up[c]) continue;
      img[x] = c;
      rec(k + 1, image | bit(c));
      img[x] = -1;
      if (stop) return;
    }
  };
  rec(0, 0);
}

}  // namespace

PMorphismResult p_morphisms(const Poset& p, const Poset& q,
                            const PMorphismQuery& query, StepCounter& steps) {
  PMorphismResult res;
  enumerate_p_morphisms(
      p, q, query, steps,
      [&](const std::vector<int>& m) {
        res.maps.push_back(m);
        return res.maps.size() < query.map_cap;
      },
      res.exhausted);
  return res;
}

std::vector<Mask> p_morphism_images(const Poset& p, const Poset& q,
                                    StepCounter& steps) {
  std::set<Mask> images;
  bool exhausted = true;
  PMorphismQuery query;
  enumerate_p_morphisms(
      p, q, query, steps,
      [&](const std::vector<int>& m) {
        Mask im = 0;
        for (int c : m) im |= bit(c);
        images.insert(im);
        return true;
      },
      exhausted);
  return std::vector<Mask>(images.begin(), images.end());
}

bool has_surjective_p_morphism(const Poset& p, const Poset& q,
                               StepCounter& steps) {
  bool found = false;
  bool exhausted = true;
  PMorphismQuery query;
  query.surjective = true;
  enumerate_p_morphisms(
      p, q, query, steps,
      [&](const std::vector<int>&) {
        found = true;
        return false;
      },
      exhausted);
  return found;
}

std::vector<Mask> upset_copies(const Poset& p, const Poset& q) {
  std::vector<Mask> out;
  auto all = q.upsets(default_budgets().enum_cap);
  for (Mask m : all) {
    if (popcount(m) != p.n) continue;
    if (poset_iso(p, q.induced(m))) out.push_back(m);
  }
  return out;
}

bool retractable_frame(const Poset& d) {
  auto sets = d.upsets(1u << 20);
  for (Mask s : sets) {
    bool ok = false;
    for (int x = 0; x < d.n && !ok; ++x)
      if (d.up[x] == s || d.strict_up(x) == s) ok = true;
    if (!ok) return false;
  }
  return true;
}

}  // namespace hey
