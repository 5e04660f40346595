#include "hey/universal.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <set>

namespace hey {

namespace {

// Quotient of f by a partition, if the partition is the kernel of a
// p-morphism onto a poset.
std::optional<Poset> partition_quotient(const Poset& f,
                                        const std::vector<int>& cls, int m) {
  // Class order: reachability between classes, closed transitively.
  std::vector<Mask> up(m, 0);
  for (int i = 0; i < m; ++i) up[i] = bit(i);
  for (int x = 0; x < f.n; ++x)
    for (int y = 0; y < f.n; ++y)
      if (f.lt(x, y)) up[cls[x]] |= bit(cls[y]);
  // Transitive closure.
  bool changed = true;
  while (changed) {
    changed = false;
    for (int i = 0; i < m; ++i) {
      Mask acc = up[i];
      for (int j = 0; j < m; ++j)
        if ((up[i] >> j) & 1) acc |= up[j];
      if (acc != up[i]) {
        up[i] = acc;
        changed = true;
      }
    }
  }
  // Antisymmetry.
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (i != j && ((up[i] >> j) & 1) && ((up[j] >> i) & 1)) return std::nullopt;
  Poset q;
  q.n = m;
  q.up = up;
  // p-morphism condition: image of each principal up-set is principal.
  for (int x = 0; x < f.n; ++x) {
    Mask img = 0;
    for (int y = 0; y < f.n; ++y)
      if (f.leq(x, y)) img |= bit(cls[y]);
    if (img != q.up[cls[x]]) return std::nullopt;
  }
  return q;
}

}  // namespace

std::vector<Poset> p_morphic_image_frames(const Poset& f, StepCounter& steps) {
  if (f.n > 12) throw budget_exceeded{};
  std::vector<Poset> out;
  std::vector<uint64_t> prints;
  auto add = [&](const Poset& q) {
    uint64_t fp = poset_fingerprint(q);
    for (size_t i = 0; i < out.size(); ++i)
      if (prints[i] == fp && poset_iso(out[i], q)) return;
    out.push_back(q);
    prints.push_back(fp);
  };
  // Enumerate set partitions via restricted growth strings.
  std::vector<int> cls(f.n, 0);
  std::function<void(int, int)> rec = [&](int i, int used) {
    if (i == f.n) {
      steps.charge(16);
      if (auto q = partition_quotient(f, cls, used)) add(*q);
      return;
    }
    for (int c = 0; c <= used && c < f.n; ++c) {
      steps.charge();
      cls[i] = c;
      rec(i + 1, std::max(used, c + 1));
    }
  };
  if (f.n > 0) rec(0, 0);
  std::sort(out.begin(), out.end(), [](const Poset& a, const Poset& b) {
    return a.n != b.n ? a.n < b.n : poset_fingerprint(a) < poset_fingerprint(b);
  });
  return out;
}

SiFrames si_frames(const HeytingAlgebra& b, StepCounter& steps) {
  SiFrames si;
  if (!b.nontrivial()) return si;
  DualFrame d = dual_frame(b);
  std::vector<uint64_t> prints;
  auto add = [&](const Poset& q) {
    uint64_t fp = poset_fingerprint(q);
    for (size_t i = 0; i < si.frames.size(); ++i)
      if (prints[i] == fp && poset_iso(si.frames[i], q)) return;
    si.frames.push_back(q);
    prints.push_back(fp);
    si.max_size = std::max(si.max_size, q.n);
  };
  for (const Poset& img : p_morphic_image_frames(d.frame, steps))
    for (Mask m : img.upsets(1u << 16)) {
      if (m == 0) continue;
      Poset sub = img.induced(m);
      if (sub.rooted()) add(sub);
    }
  std::sort(si.frames.begin(), si.frames.end(), [](const Poset& a, const Poset& b) {
    return a.n != b.n ? a.n < b.n : poset_fingerprint(a) < poset_fingerprint(b);
  });
  return si;
}

namespace {

bool frame_in_list(const SiFrames& si, const Poset& f) {
  uint64_t fp = poset_fingerprint(f);
  for (const Poset& g : si.frames)
    if (g.n == f.n && poset_fingerprint(g) == fp && poset_iso(g, f)) return true;
  return false;
}

}  // namespace

UniversalFrame universal_frame(const SiFrames& si, int k, int point_cap,
                               StepCounter& steps) {
  UniversalFrame u;
  u.frame.n = 0;
  if (si.frames.empty()) return u;
  int ncolors = 1 << k;
  std::set<std::pair<std::vector<int>, int>> keys;  // (cover antichain, color)
  auto try_add = [&](const std::vector<int>& covers, int color) {
    steps.charge(4);
    auto key = std::make_pair(covers, color);
    if (keys.count(key)) return;
    // The candidate's rooted up-frame must be one of the si frames.
    Mask above = 0;
    for (int c : covers) above |= u.frame.up[c];
    Poset test;
    {
      std::vector<int> back;
      Poset upper = u.frame.induced(above, &back);
      test.n = upper.n + 1;
      test.up.assign(test.n, 0);
      for (int i = 0; i < upper.n; ++i) test.up[i] = upper.up[i];
      test.up[upper.n] = (test.n == 64 ? ~Mask(0) : (bit(test.n) - 1));
    }
    if (!frame_in_list(si, test)) return;
    if (u.frame.n >= point_cap || u.frame.n >= 64) throw budget_exceeded{};
    int p = u.frame.n++;
    u.frame.up.push_back(bit(p) | above);
    u.colors.push_back((uint8_t)color);
    keys.insert(key);
  };
  // Maximal points: one per color subset.
  for (int color = 0; color < ncolors; ++color) try_add({}, color);
  // Saturate: new points sit under antichains of existing points.
  bool grew = true;
  while (grew) {
    grew = false;
    int frozen = u.frame.n;
    std::vector<int> pick;
    std::function<void(int)> antichains = [&](int from) {
      if (!pick.empty()) {
        Mask above = 0;
        for (int c : pick) above |= u.frame.up[c];
        if (popcount(above) + 1 <= si.max_size) {
          int common = (1 << k) - 1;
          for (int c : pick) common &= u.colors[c];
          for (int color = 0; color < ncolors; ++color) {
            if ((color & ~common) != 0) continue;
            // A single cover with the same color set would duplicate it.
            if (pick.size() == 1 && color == u.colors[pick[0]]) continue;
            try_add(pick, color);
          }
        }
      }
      for (int p = from; p < frozen; ++p) {
        steps.charge();
        bool comparable = false;
        for (int cprev : pick)
          if (u.frame.leq(p, cprev) || u.frame.leq(cprev, p)) comparable = true;
        if (comparable) continue;
        // Pruning: adding p must keep the covered region small enough.
        Mask above = bit(p) | u.frame.up[p];
        for (int c : pick) above |= u.frame.up[c];
        if (popcount(above) + 1 > si.max_size) continue;
        pick.push_back(p);
        antichains(p + 1);
        pick.pop_back();
      }
    };
    int before = u.frame.n;
    antichains(0);
    if (u.frame.n > before) grew = true;
  }
  return u;
}

std::vector<Mask> universal_generators(const UniversalFrame& u, int k) {
  std::vector<Mask> gens(k, 0);
  for (int p = 0; p < u.frame.n; ++p)
    for (int i = 0; i < k; ++i)
      if ((u.colors[p] >> i) & 1) gens[i] |= bit(p);
  return gens;
}

}  // namespace hey
