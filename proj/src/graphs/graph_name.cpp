#include "adespec/graphs/graph_name.hpp"

#include <algorithm>
#include <cctype>
#include <map>
#include <tuple>
#include <vector>

#include "adespec/error.hpp"

namespace adespec::graphs {

namespace {

struct TagSpelling {
  const char* name;
  GraphTag tag;
  int params;
};

// Longest names first so that prefix matching is unambiguous.
const std::vector<TagSpelling>& spellings() {
  static const std::vector<TagSpelling> s = {
      {"a1ext", GraphTag::A1ext, 1}, {"d1ext", GraphTag::D1ext, 1},
      {"e6ext", GraphTag::E6ext, 0}, {"e7ext", GraphTag::E7ext, 0},
      {"e8ext", GraphTag::E8ext, 0}, {"ainf", GraphTag::AInf, 0},
      {"dinf", GraphTag::DInf, 0},   {"azz", GraphTag::AZZ, 0},
      {"e6", GraphTag::E6, 0},       {"e7", GraphTag::E7, 0},
      {"e8", GraphTag::E8, 0},       {"a", GraphTag::A, 1},
      {"d", GraphTag::D, 1},         {"f", GraphTag::F, 3},
  };
  return s;
}

long parse_long(const std::string& s, std::string_view whole) {
  if (s.empty() || s.size() > 9 ||
      !std::all_of(s.begin(), s.end(), [](char ch) { return std::isdigit(static_cast<unsigned char>(ch)); }))
    fail(ErrorKind::parse, "bad parameter '" + s + "' in graph name '" +
                               std::string(whole) + "'");
  return std::stol(s);
}

}  // namespace

std::string GraphName::str() const {
  auto p1 = [](const char* n, long v) {
    return std::string(n) + "(" + std::to_string(v) + ")";
  };
  switch (tag) {
    case GraphTag::A: return p1("A", a);
    case GraphTag::D: return p1("D", a);
    case GraphTag::E6: return "E6";
    case GraphTag::E7: return "E7";
    case GraphTag::E8: return "E8";
    case GraphTag::A1ext: return p1("A1ext", a);
    case GraphTag::D1ext: return p1("D1ext", a);
    case GraphTag::E6ext: return "E6ext";
    case GraphTag::E7ext: return "E7ext";
    case GraphTag::E8ext: return "E8ext";
    case GraphTag::F:
      return "F(" + std::to_string(a) + "," + std::to_string(b) + "," +
             std::to_string(c) + ")";
    case GraphTag::AInf: return "AInf";
    case GraphTag::DInf: return "DInf";
    case GraphTag::AZZ: return "AZZ";
  }
  return "?";
}

GraphName GraphName::parse(std::string_view text) {
  std::string lower(text);
  std::transform(lower.begin(), lower.end(), lower.begin(),
                 [](unsigned char ch) { return static_cast<char>(std::tolower(ch)); });
  for (const auto& sp : spellings()) {
    std::string_view key = sp.name;
    if (lower.compare(0, key.size(), key) != 0) continue;
    std::string rest = lower.substr(key.size());
    std::vector<long> params;
    if (sp.params == 0) {
      if (!rest.empty()) continue;
    } else {
      if (rest.size() < 2 || rest.front() != '(' || rest.back() != ')') continue;
      std::string inner = rest.substr(1, rest.size() - 2);
      std::size_t start = 0;
      while (true) {
        auto comma = inner.find(',', start);
        params.push_back(parse_long(inner.substr(start, comma - start), text));
        if (comma == std::string::npos) break;
        start = comma + 1;
      }
      if (static_cast<int>(params.size()) != sp.params)
        fail(ErrorKind::parse, "graph name '" + std::string(text) + "' expects " +
                                   std::to_string(sp.params) + " parameter(s)");
    }
    GraphName g{sp.tag};
    if (!params.empty()) g.a = params[0];
    if (params.size() > 1) g.b = params[1];
    if (params.size() > 2) g.c = params[2];
    g.validate();
    return g;
  }
  fail(ErrorKind::parse, "unknown graph name '" + std::string(text) + "'");
}

void GraphName::validate() const {
  auto need = [&](bool ok, const std::string& rule) {
    if (!ok) fail(ErrorKind::range, str() + ": " + rule);
  };
  switch (tag) {
    case GraphTag::A: need(a >= 1, "A(n) needs n >= 1"); break;
    case GraphTag::D: need(a >= 3, "D(n) needs n >= 3"); break;
    case GraphTag::A1ext:
      need(a >= 4 && a % 2 == 0, "A1ext(2n) needs an even vertex count >= 4");
      break;
    case GraphTag::D1ext: need(a >= 4, "D1ext(n) needs n >= 4"); break;
    case GraphTag::F:
      need(a >= 1 && b >= 1 && c >= 0, "F(a,b,c) needs a, b >= 1 and c >= 0");
      break;
    default: break;
  }
}

GraphName GraphName::canonical() const {
  if (tag != GraphTag::F) return *this;
  const long lo = std::min(a, b), hi = std::max(a, b);
  if (lo == 1 && hi == 1) return D(c + 3);
  static const std::map<std::tuple<long, long, long>, GraphName> known = {
      {{1, 2, 2}, E6()},    {{1, 2, 3}, E7()},    {{1, 2, 4}, E8()},
      {{2, 2, 2}, E6ext()}, {{1, 3, 3}, E7ext()}, {{1, 2, 5}, E8ext()},
  };
  auto it = known.find({lo, hi, c});
  return it == known.end() ? *this : it->second;
}

}  // namespace adespec::graphs
