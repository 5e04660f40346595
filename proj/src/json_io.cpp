#include "hey/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

namespace hey {

Json poset_to_json(const Poset& p) {
  Json j;
  j["elements"] = Json::array();
  for (int i = 0; i < p.n; ++i) j["elements"].push_back(p.name_of(i));
  j["covers"] = Json::array();
  for (auto [lo, hi] : p.covers())
    j["covers"].push_back(Json::array({p.name_of(lo), p.name_of(hi)}));
  return j;
}

Poset poset_from_json(const Json& j) {
  std::vector<std::string> names = j.at("elements").get<std::vector<std::string>>();
  std::map<std::string, int> idx;
  for (size_t i = 0; i < names.size(); ++i) {
    if (idx.count(names[i]))
      throw std::invalid_argument("duplicate element name " + names[i]);
    idx[names[i]] = (int)i;
  }
  std::vector<std::pair<int, int>> covers;
  for (const auto& c : j.at("covers")) {
    std::string lo = c.at(0).get<std::string>(), hi = c.at(1).get<std::string>();
    if (!idx.count(lo) || !idx.count(hi))
      throw std::invalid_argument("cover references unknown element");
    covers.push_back({idx[lo], idx[hi]});
  }
  return poset_from_covers((int)names.size(), covers, names);
}

Json algebra_to_json(const HeytingAlgebra& a) {
  Json j;
  j["n"] = a.n;
  j["bot"] = a.bot;
  j["top"] = a.top;
  auto table = [&](const std::vector<uint16_t>& t) {
    Json rows = Json::array();
    for (int i = 0; i < a.n; ++i) {
      Json row = Json::array();
      for (int k = 0; k < a.n; ++k) row.push_back((int)t[(size_t)i * a.n + k]);
      rows.push_back(std::move(row));
    }
    return rows;
  };
  j["meet"] = table(a.meet_t);
  j["join"] = table(a.join_t);
  j["imp"] = table(a.imp_t);
  return j;
}

HeytingAlgebra algebra_from_json(const Json& j) {
  HeytingAlgebra a;
  a.n = j.at("n").get<int>();
  if (a.n <= 0 || a.n > 65535) throw std::invalid_argument("bad algebra size");
  a.bot = j.at("bot").get<int>();
  a.top = j.at("top").get<int>();
  auto table = [&](const char* key) {
    std::vector<uint16_t> t;
    t.reserve((size_t)a.n * a.n);
    const Json& rows = j.at(key);
    if ((int)rows.size() != a.n) throw std::invalid_argument("bad table shape");
    for (const auto& row : rows) {
      if ((int)row.size() != a.n) throw std::invalid_argument("bad table shape");
      for (const auto& v : row) {
        int x = v.get<int>();
        if (x < 0 || x >= a.n) throw std::invalid_argument("table entry out of range");
        t.push_back((uint16_t)x);
      }
    }
    return t;
  };
  a.meet_t = table("meet");
  a.join_t = table("join");
  a.imp_t = table("imp");
  return a;
}

Json load_json_file(const std::string& path) {
  std::ifstream in(path);
  if (!in) throw std::runtime_error("cannot open " + path);
  Json j;
  in >> j;
  return j;
}

void save_json_file(const std::string& path, const Json& j) {
  std::ofstream out(path);
  if (!out) throw std::runtime_error("cannot write " + path);
  out << j.dump(2) << "\n";
}

std::string algebra_to_dot(const HeytingAlgebra& a) {
  std::ostringstream os;
  os << "digraph algebra {\n  rankdir=BT;\n  node [shape=circle];\n";
  for (int i = 0; i < a.n; ++i) {
    std::string label = std::to_string(i);
    if (i == a.bot) label = "0";
    if (i == a.top) label = "1";
    os << "  e" << i << " [label=\"" << label << "\"];\n";
  }
  for (int x = 0; x < a.n; ++x)
    for (int y = 0; y < a.n; ++y) {
      if (x == y || !a.le(x, y)) continue;
      bool cover = true;
      for (int z = 0; z < a.n && cover; ++z)
        if (z != x && z != y && a.le(x, z) && a.le(z, y)) cover = false;
      if (cover) os << "  e" << x << " -> e" << y << ";\n";
    }
  os << "}\n";
  return os.str();
}

}  // namespace hey
