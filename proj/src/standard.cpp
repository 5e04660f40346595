#include "hey/standard.hpp"

#include <filesystem>
#include <map>
#include <stdexcept>

#include "hey/json_io.hpp"
#include "hey/morphisms.hpp"
#include "hey/quasivariety.hpp"

#ifndef HEY_SOURCE_DIR
#define HEY_SOURCE_DIR "."
#endif

namespace hey {

HeytingAlgebra chain_algebra(int n) {
  if (n < 1 || n > 4096) throw std::invalid_argument("chain size out of range");
  HeytingAlgebra a;
  a.n = n;
  a.bot = 0;
  a.top = n - 1;
  a.meet_t.resize((size_t)n * n);
  a.join_t.resize((size_t)n * n);
  a.imp_t.resize((size_t)n * n);
  for (int i = 0; i < n; ++i)
    for (int j = 0; j < n; ++j) {
      a.meet_t[(size_t)i * n + j] = (uint16_t)std::min(i, j);
      a.join_t[(size_t)i * n + j] = (uint16_t)std::max(i, j);
      a.imp_t[(size_t)i * n + j] = (uint16_t)(i <= j ? n - 1 : j);
    }
  a.label = "chain(" + std::to_string(n) + ")";
  return a;
}

Poset ladder_prefix_poset(int k) {
  if (k < 1 || k > 32) throw std::invalid_argument("ladder depth out of range");
  Poset p;
  p.n = k;
  p.up.assign(k, 0);
  p.names.resize(k);
  // Point i is rung f_{i+1}; f_i < f_j iff i >= j+2.
  for (int i = 0; i < k; ++i) {
    p.up[i] = bit(i);
    for (int j = 0; j + 2 <= i; ++j) p.up[i] |= bit(j);
    p.names[i] = "f" + std::to_string(i + 1);
  }
  return p;
}

UpsetAlgebra ladder_prefix_algebra(int k) {
  UpsetAlgebra u = upset_algebra(ladder_prefix_poset(k));
  u.alg.label = "rnprefix(" + std::to_string(k) + ")";
  return u;
}

namespace {

// Candidate one-generated n-element algebras: principal-filter quotients of
// one-generated subalgebras of ladder prefix algebras, in canonical search
// order (depth, generator element, filter element).
std::vector<HeytingAlgebra> cyclic_search(int n, bool first_only) {
  std::vector<HeytingAlgebra> found;
  int kmax = (n + 3) / 2;
  for (int k = 1; k <= kmax; ++k) {
    UpsetAlgebra prefix = ladder_prefix_algebra(k);
    for (int x = 0; x < prefix.alg.n; ++x) {
      Subalgebra sub = subalgebra_generated(prefix.alg, {x});
      if (sub.alg.n < n) continue;
      for (int g = 0; g < sub.alg.n; ++g) {
        IntervalQuotient q = interval_quotient(sub.alg, g);
        if (q.alg.n != n) continue;
        auto mg = min_generators(q.alg, 1);
        if (!mg) continue;
        bool dup = false;
        for (const auto& prev : found)
          if (isomorphic(prev, q.alg)) dup = true;
        if (dup) continue;
        found.push_back(q.alg);
        if (first_only) return found;
      }
    }
  }
  return found;
}

UpsetAlgebra as_upset_form(const HeytingAlgebra& a, const std::string& label) {
  DualFrame d = dual_frame(a);
  UpsetAlgebra u = upset_algebra(d.frame);
  if (u.alg.n != a.n || !isomorphic(u.alg, a))
    throw std::logic_error("up-set reconstruction mismatch for " + label);
  u.alg.label = label;
  return u;
}

}  // namespace

UpsetAlgebra cyclic_algebra(int n) {
  if (n < 2 || n > 40) throw std::invalid_argument("cyclic size out of range");
  auto found = cyclic_search(n, true);
  if (found.empty())
    throw std::runtime_error("no one-generated algebra of size " +
                             std::to_string(n) + " within prefix depth");
  return as_upset_form(found[0], "C" + std::to_string(n));
}

std::vector<UpsetAlgebra> cyclic_candidates(int n) {
  if (n < 2 || n > 40) throw std::invalid_argument("cyclic size out of range");
  std::vector<UpsetAlgebra> out;
  int i = 0;
  for (const auto& a : cyclic_search(n, false))
    out.push_back(as_upset_form(a, "C" + std::to_string(n) + "#" + std::to_string(i++)));
  return out;
}

std::string data_directory() {
  namespace fs = std::filesystem;
  if (const char* env = std::getenv("HEYTING_DATA_DIR")) return env;
  if (fs::exists("data/catalog")) return "data";
  return std::string(HEY_SOURCE_DIR) + "/data";
}

namespace {

struct Catalog {
  std::map<std::string, UpsetAlgebra> algebras;

  const UpsetAlgebra& get(const std::string& name) const {
    auto it = algebras.find(name);
    if (it == algebras.end()) throw std::invalid_argument("unknown catalog name " + name);
    return it->second;
  }

  Catalog() {
    std::string dir = data_directory() + "/catalog/";
    for (const char* name : {"C5p", "C7p", "C10p", "C12p", "C16"}) {
      std::string file = name;
      for (auto& c : file) c = (char)tolower(c);
      Poset p = poset_from_json(load_json_file(dir + file + ".json"));
      UpsetAlgebra u = upset_algebra(p);
      u.alg.label = name;
      algebras.emplace(name, std::move(u));
    }
    verify();
  }

  void verify() const {
    const HeytingAlgebra& c5 = get("C5p").alg;
    const HeytingAlgebra& c7 = get("C7p").alg;
    const HeytingAlgebra& c10 = get("C10p").alg;
    const HeytingAlgebra& c12 = get("C12p").alg;
    const HeytingAlgebra& c16 = get("C16").alg;
    auto require = [](bool ok, const char* what) {
      if (!ok) throw std::runtime_error(std::string("catalog consistency: ") + what);
    };
    require(!find_homs(c5, c7, HomMode::Injective, 1).homs.empty(),
            "C5p embeds into C7p");
    require(subdirect_embedding_check(c10, {&c5, &c7}).found,
            "C10p subdirectly embeds into C5p x C7p");
    require(!find_homs(c10, c7, HomMode::Surjective, 1).homs.empty(),
            "C7p is an image of C10p");
    require(find_homs(c7, c10, HomMode::Injective, 1).homs.empty(),
            "no embedding C7p -> C10p");
    require(!find_homs(c10, c16, HomMode::Injective, 1).homs.empty(),
            "C10p embeds into C16");
    require(!find_homs(c12, c16, HomMode::Injective, 1).homs.empty(),
            "C12p embeds into C16");
    require(!find_homs(c12, c10, HomMode::Surjective, 1).homs.empty(),
            "C10p is an image of C12p");
    require(!find_homs(c10, c12, HomMode::Injective, 1).homs.empty(),
            "C10p embeds into C12p");
  }
};

const Catalog& the_catalog() {
  static Catalog c;
  return c;
}

}  // namespace

const UpsetAlgebra& catalog_algebra(const std::string& name) {
  return the_catalog().get(name);
}

std::vector<std::string> catalog_names() {
  return {"C5p", "C7p", "C10p", "C12p", "C16"};
}

namespace {

int parse_int(const std::string& s, const char* what) {
  try {
    size_t used = 0;
    int v = std::stoi(s, &used);
    if (used != s.size()) throw std::invalid_argument(s);
    return v;
  } catch (...) {
    throw std::invalid_argument(std::string("bad ") + what + ": " + s);
  }
}

AlgebraHandle with_frame(UpsetAlgebra u, std::string desc) {
  AlgebraHandle h;
  h.alg = std::move(u.alg);
  h.frame = std::move(u.frame);
  h.elems = std::move(u.elems);
  h.has_frame = true;
  h.description = std::move(desc);
  return h;
}

}  // namespace

AlgebraHandle resolve_algebra(const std::string& spec) {
  if (spec == "trivial") {
    AlgebraHandle h;
    h.alg = trivial_algebra();
    h.description = "trivial";
    return h;
  }
  size_t colon = spec.find(':');
  if (colon == std::string::npos)
    throw std::invalid_argument("bad algebra spec: " + spec);
  std::string kind = spec.substr(0, colon), rest = spec.substr(colon + 1);
  if (kind == "chain") {
    int n = parse_int(rest, "chain size");
    AlgebraHandle h;
    h.alg = chain_algebra(n);
    h.description = h.alg.label;
    if (n >= 2) {
      // Frame view: a chain of n-1 points.
      std::vector<std::pair<int, int>> covers;
      for (int i = 0; i + 1 < n - 1; ++i) covers.push_back({i, i + 1});
      Poset p = poset_from_covers(n - 1, covers);
      UpsetAlgebra u = upset_algebra(p);
      h.frame = std::move(u.frame);
      h.elems = std::move(u.elems);
      h.has_frame = true;
    }
    return h;
  }
  if (kind == "cyclic") {
    int n = parse_int(rest, "cyclic size");
    return with_frame(cyclic_algebra(n), "cyclic(" + std::to_string(n) + ")");
  }
  if (kind == "rnprefix") {
    int k = parse_int(rest, "prefix depth");
    return with_frame(ladder_prefix_algebra(k),
                      "rnprefix(" + std::to_string(k) + ")");
  }
  if (kind == "catalog") {
    if (rest.size() > 1 && rest[0] == 'C' &&
        rest.find_first_not_of("0123456789", 1) == std::string::npos)
      return with_frame(cyclic_algebra(parse_int(rest.substr(1), "cyclic size")),
                        "catalog:" + rest);
    return with_frame(catalog_algebra(rest), "catalog:" + rest);
  }
  if (kind == "file") {
    Json j = load_json_file(rest);
    // Accepts a bare poset, a bare algebra, or the {"algebra", "frame"}
    // wrapper that `alg export --format json` writes.
    const Json* frame_json = nullptr;
    if (j.contains("elements"))
      frame_json = &j;
    else if (j.contains("frame"))
      frame_json = &j.at("frame");
    if (frame_json) {
      Poset p = poset_from_json(*frame_json);
      UpsetAlgebra u = upset_algebra(p);
      u.alg.label = rest;
      return with_frame(std::move(u), "file:" + rest);
    }
    AlgebraHandle h;
    h.alg = algebra_from_json(j.contains("algebra") ? j.at("algebra") : j);
    h.alg.label = rest;
    h.description = "file:" + rest;
    return h;
  }
  if (kind == "product") {
    std::vector<AlgebraHandle> parts;
    size_t start = 0;
    auto flush = [&](size_t end) {
      std::string part = rest.substr(start, end - start);
      if (part.find("product:") != std::string::npos ||
          part.find("free:") != std::string::npos)
        throw std::invalid_argument("nested product/free specs not supported");
      parts.push_back(resolve_algebra(part));
    };
    for (size_t i = 0; i < rest.size(); ++i)
      if (rest[i] == ',') {
        flush(i);
        start = i + 1;
      }
    flush(rest.size());
    if (parts.empty()) throw std::invalid_argument("empty product");
    std::vector<const HeytingAlgebra*> fs;
    std::string desc = "product:";
    for (size_t i = 0; i < parts.size(); ++i) {
      fs.push_back(&parts[i].alg);
      if (i) desc += ",";
      desc += parts[i].description;
    }
    AlgebraHandle h;
    h.alg = product_algebra(fs);
    h.alg.label = desc;
    h.description = desc;
    return h;
  }
  if (kind == "free") {
    size_t comma = rest.rfind(',');
    if (comma == std::string::npos)
      throw std::invalid_argument("free spec needs free:B,k");
    AlgebraHandle base = resolve_algebra(rest.substr(0, comma));
    int k = parse_int(rest.substr(comma + 1), "generator count");
    QvarHandle q = make_qvar(base.alg);
    FreeAlgebraResult f = free_algebra(q, k);
    AlgebraHandle h;
    h.alg = std::move(f.alg);
    h.description = "free:" + base.description + "," + std::to_string(k);
    h.alg.label = h.description;
    return h;
  }
  throw std::invalid_argument("unknown algebra spec kind: " + kind);
}

}  // namespace hey
