#include "hey/algebra.hpp"

#include <algorithm>
#include <sstream>
#include <stdexcept>
#include <unordered_map>

namespace hey {

HeytingAlgebra trivial_algebra() {
  HeytingAlgebra a;
  a.n = 1;
  a.bot = a.top = 0;
  a.meet_t = a.join_t = a.imp_t = {0};
  a.label = "trivial";
  return a;
}

HeytingAlgebra two_element_algebra() {
  HeytingAlgebra a;
  a.n = 2;
  a.bot = 0;
  a.top = 1;
  a.meet_t = {0, 0, 0, 1};
  a.join_t = {0, 1, 1, 1};
  a.imp_t = {1, 1, 0, 1};
  a.label = "C2";
  return a;
}

namespace {

std::string witness(std::initializer_list<int> xs) {
  std::ostringstream os;
  os << "(";
  bool first = true;
  for (int x : xs) {
    if (!first) os << ",";
    os << x;
    first = false;
  }
  os << ")";
  return os.str();
}

}  // namespace

ValidationReport validate_algebra(const HeytingAlgebra& a, uint64_t step_budget) {
  ValidationReport rep;
  if (step_budget == 0) step_budget = default_budgets().search_steps;
  StepCounter steps(step_budget);
  auto fail = [&](const std::string& law, std::string w) {
    rep.ok = false;
    rep.failures.push_back(law + " " + std::move(w));
  };
  int n = a.n;
  if (n <= 0 || a.bot < 0 || a.bot >= n || a.top < 0 || a.top >= n ||
      (int)a.meet_t.size() != n * n || (int)a.join_t.size() != n * n ||
      (int)a.imp_t.size() != n * n) {
    fail("malformed tables", "");
    return rep;
  }
  for (int x = 0; x < n * n; ++x)
    if (a.meet_t[x] >= n || a.join_t[x] >= n || a.imp_t[x] >= n) {
      fail("table entry out of range", witness({x / n, x % n}));
      return rep;
    }
  // One witness per law; laws checked independently.
  bool comm_ok = true, idem_ok = true, absorb_ok = true, bound_ok = true;
  for (int x = 0; x < n && (comm_ok || idem_ok || absorb_ok || bound_ok); ++x) {
    steps.charge(n);
    if (idem_ok && (a.meet(x, x) != x || a.join(x, x) != x)) {
      fail("idempotence", witness({x}));
      idem_ok = false;
    }
    if (bound_ok && (a.meet(x, a.bot) != a.bot || a.join(x, a.top) != a.top ||
                     a.meet(x, a.top) != x || a.join(x, a.bot) != x)) {
      fail("bounds", witness({x}));
      bound_ok = false;
    }
    for (int y = 0; y < n; ++y) {
      if (comm_ok && (a.meet(x, y) != a.meet(y, x) || a.join(x, y) != a.join(y, x))) {
        fail("commutativity", witness({x, y}));
        comm_ok = false;
      }
      if (absorb_ok && (a.meet(x, a.join(x, y)) != x || a.join(x, a.meet(x, y)) != x)) {
        fail("absorption", witness({x, y}));
        absorb_ok = false;
      }
    }
  }
  bool assoc_ok = true, distr_ok = true, resid_ok = true;
  for (int x = 0; x < n && (assoc_ok || distr_ok || resid_ok); ++x)
    for (int y = 0; y < n; ++y) {
      steps.charge(n);
      for (int z = 0; z < n; ++z) {
        if (assoc_ok && (a.meet(a.meet(x, y), z) != a.meet(x, a.meet(y, z)) ||
                         a.join(a.join(x, y), z) != a.join(x, a.join(y, z)))) {
          fail("associativity", witness({x, y, z}));
          assoc_ok = false;
        }
        if (distr_ok &&
            a.meet(x, a.join(y, z)) != a.join(a.meet(x, y), a.meet(x, z))) {
          fail("distributivity", witness({x, y, z}));
          distr_ok = false;
        }
        // meet(x,y) <= z  iff  x <= imp(y,z)
        if (resid_ok && ((a.meet(a.meet(x, y), z) == a.meet(x, y)) !=
                         (a.meet(x, a.imp(y, z)) == x))) {
          fail("residuation", witness({x, y, z}));
          resid_ok = false;
        }
      }
    }
  return rep;
}

int UpsetAlgebra::index_of(Mask m) const {
  auto cmp = [](Mask a, Mask b) {
    int pa = popcount(a), pb = popcount(b);
    return pa != pb ? pa < pb : a < b;
  };
  auto it = std::lower_bound(elems.begin(), elems.end(), m, cmp);
  if (it == elems.end() || *it != m) throw std::logic_error("not an up-set element");
  return (int)(it - elems.begin());
}

UpsetAlgebra upset_algebra(const Poset& p, uint64_t size_cap) {
  if (size_cap == 0) size_cap = default_budgets().table_cap;
  UpsetAlgebra u;
  u.frame = p;
  u.elems = p.upsets(size_cap);
  int n = (int)u.elems.size();
  std::unordered_map<Mask, int> idx;
  idx.reserve(n * 2);
  for (int i = 0; i < n; ++i) idx[u.elems[i]] = i;
  HeytingAlgebra& a = u.alg;
  a.n = n;
  a.bot = 0;
  a.top = n - 1;
  a.meet_t.resize((size_t)n * n);
  a.join_t.resize((size_t)n * n);
  a.imp_t.resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      Mask U = u.elems[i], V = u.elems[j];
      a.meet_t[(size_t)i * n + j] = (uint16_t)idx.at(U & V);
      a.join_t[(size_t)i * n + j] = (uint16_t)idx.at(U | V);
      Mask w = 0;
      for (int x = 0; x < p.n; ++x)
        if ((p.up[x] & U & ~V) == 0) w |= bit(x);
      a.imp_t[(size_t)i * n + j] = (uint16_t)idx.at(w);
    }
  return u;
}

HeytingAlgebra product_algebra(const std::vector<const HeytingAlgebra*>& factors,
                               uint64_t size_cap) {
  if (factors.empty()) throw std::invalid_argument("empty product");
  if (size_cap == 0) size_cap = default_budgets().table_cap;
  uint64_t total = 1;
  for (auto* f : factors) {
    total *= (uint64_t)f->n;
    if (total > size_cap) throw budget_exceeded{};
  }
  int n = (int)total;
  HeytingAlgebra a;
  a.n = n;
  a.meet_t.resize((size_t)n * n);
  a.join_t.resize((size_t)n * n);
  a.imp_t.resize((size_t)n * n);
  size_t k = factors.size();
  std::vector<int> strides(k);
  {
    uint64_t s = 1;
    for (size_t i = k; i-- > 0;) {
      strides[i] = (int)s;
      s *= factors[i]->n;
    }
  }
  auto coord = [&](int e, size_t i) { return (e / strides[i]) % factors[i]->n; };
  int botv = 0, topv = 0;
  for (size_t i = 0; i < k; ++i) {
    botv += factors[i]->bot * strides[i];
    topv += factors[i]->top * strides[i];
  }
  a.bot = botv;
  a.top = topv;
  for (int x = 0; x < n; ++x)
    for (int y = 0; y < n; ++y) {
      int m = 0, j = 0, im = 0;
      for (size_t i = 0; i < k; ++i) {
        int xi = coord(x, i), yi = coord(y, i);
        m += factors[i]->meet(xi, yi) * strides[i];
        j += factors[i]->join(xi, yi) * strides[i];
        im += factors[i]->imp(xi, yi) * strides[i];
      }
      a.meet_t[(size_t)x * n + y] = (uint16_t)m;
      a.join_t[(size_t)x * n + y] = (uint16_t)j;
      a.imp_t[(size_t)x * n + y] = (uint16_t)im;
    }
  return a;
}

std::vector<int> product_coords(const std::vector<const HeytingAlgebra*>& factors,
                                int element) {
  size_t k = factors.size();
  std::vector<int> strides(k), out(k);
  uint64_t s = 1;
  for (size_t i = k; i-- > 0;) {
    strides[i] = (int)s;
    s *= factors[i]->n;
  }
  for (size_t i = 0; i < k; ++i) out[i] = (element / strides[i]) % factors[i]->n;
  return out;
}

IntervalQuotient interval_quotient(const HeytingAlgebra& a, int x) {
  IntervalQuotient q;
  q.fwd.assign(a.n, -1);
  for (int y = 0; y < a.n; ++y)
    if (a.le(y, x)) {
      q.fwd[y] = (int)q.back.size();
      q.back.push_back(y);
    }
  int n = (int)q.back.size();
  q.alg.n = n;
  q.alg.bot = q.fwd[a.bot];
  q.alg.top = q.fwd[x];
  q.alg.meet_t.resize((size_t)n * n);
  q.alg.join_t.resize((size_t)n * n);
  q.alg.imp_t.resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      int u = q.back[i], v = q.back[j];
      q.alg.meet_t[(size_t)i * n + j] = (uint16_t)q.fwd[a.meet(u, v)];
      q.alg.join_t[(size_t)i * n + j] = (uint16_t)q.fwd[a.join(u, v)];
      q.alg.imp_t[(size_t)i * n + j] = (uint16_t)q.fwd[a.meet(a.imp(u, v), x)];
    }
  // The canonical surjection y -> y /\ x.
  for (int y = 0; y < a.n; ++y)
    if (q.fwd[y] == -1) q.fwd[y] = q.fwd[a.meet(y, x)];
  return q;
}

DualFrame dual_frame(const HeytingAlgebra& a) {
  if (a.n > 2048) throw budget_exceeded{};
  DualFrame d;
  for (int x = 0; x < a.n; ++x) {
    if (x == a.bot) continue;
    // Join-irreducible iff a unique lower cover; equivalently the strict
    // down-set has a greatest element.
    int count = 0;
    for (int y = 0; y < a.n; ++y) {
      if (y == x || !a.le(y, x)) continue;
      bool maximal_below = true;
      for (int z = 0; z < a.n && maximal_below; ++z)
        if (z != y && z != x && a.le(y, z) && a.le(z, x)) maximal_below = false;
      if (maximal_below) ++count;
    }
    if (count == 1) d.ji.push_back(x);
  }
  int m = (int)d.ji.size();
  if (m > 64) throw budget_exceeded{};
  d.frame.n = m;
  d.frame.up.assign(m, 0);
  for (int i = 0; i < m; ++i)
    for (int j = 0; j < m; ++j)
      if (a.le(d.ji[j], d.ji[i])) d.frame.up[i] |= bit(j);
  d.element_mask.assign(a.n, 0);
  for (int e = 0; e < a.n; ++e)
    for (int i = 0; i < m; ++i)
      if (a.le(d.ji[i], e)) d.element_mask[e] |= bit(i);
  return d;
}

std::optional<int> second_greatest(const HeytingAlgebra& a) {
  if (!a.nontrivial()) return std::nullopt;
  int s = a.bot;
  for (int x = 0; x < a.n; ++x)
    if (x != a.top) s = a.join(s, x);
  if (s == a.top) return std::nullopt;
  return s;
}

std::vector<int> downset_profile(const HeytingAlgebra& a) {
  std::vector<int> prof;
  prof.push_back(a.n);
  std::vector<int> sizes(a.n, 0);
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y)
      if (a.le(y, x)) ++sizes[x];
  std::sort(sizes.begin(), sizes.end());
  prof.insert(prof.end(), sizes.begin(), sizes.end());
  return prof;
}

}  // namespace hey
