#include "hurwitz/textio.hpp"

#include <algorithm>
#include <cctype>

namespace hurwitz {

namespace {

struct Cursor {
  std::string_view text;
  std::size_t pos = 0;

  void skip_ws() {
    while (pos < text.size() && std::isspace(static_cast<unsigned char>(text[pos]))) ++pos;
  }
  bool done() {
    skip_ws();
    return pos >= text.size();
  }
  char peek() {
    skip_ws();
    if (pos >= text.size()) throw ParseError("unexpected end of input", pos);
    return text[pos];
  }
  void expect(char c) {
    if (peek() != c) throw ParseError(std::string("expected '") + c + "'", pos);
    ++pos;
  }
  bool accept(char c) {
    if (!done() && peek() == c) {
      ++pos;
      return true;
    }
    return false;
  }
  long long number() {
    skip_ws();
    std::size_t start = pos;
    while (pos < text.size() && std::isdigit(static_cast<unsigned char>(text[pos]))) ++pos;
    if (pos == start) throw ParseError("expected a number", pos);
    long long v = 0;
    for (std::size_t i = start; i < pos; ++i) v = v * 10 + (text[i] - '0');
    return v;
  }
};

std::vector<int> ascending(const Partition& p) {
  auto es = p.entries();
  std::sort(es.begin(), es.end());
  return es;
}

}  // namespace

RamData parse_ramdata(std::string_view text) {
  Cursor c{text};
  std::vector<Partition> parts;
  while (!c.done()) {
    c.expect('[');
    std::vector<int> entries;
    if (c.peek() != ']') {
      entries.push_back(static_cast<int>(c.number()));
      while (c.accept(',')) entries.push_back(static_cast<int>(c.number()));
    }
    c.expect(']');
    parts.emplace_back(std::move(entries));
  }
  if (parts.empty()) throw ParseError("empty ramification data", 0);
  try {
    return RamData(std::move(parts));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), text.size());
  }
}

std::string format_ramdata(const RamData& data) {
  std::string out;
  for (const auto& p : data.partitions()) {
    out += '[';
    auto es = ascending(p);
    for (std::size_t i = 0; i < es.size(); ++i) {
      if (i) out += ',';
      out += std::to_string(es[i]);
    }
    out += ']';
  }
  return out;
}

FamilySpec parse_family(std::string_view text) {
  Cursor c{text};
  std::vector<int> base;
  std::vector<Partition> irregular;
  while (!c.done()) {
    c.expect('[');
    std::vector<long long> nums;
    bool saw_star = false;
    if (c.peek() != ']') {
      nums.push_back(c.number());
      if (c.accept('*')) saw_star = true;
      while (!saw_star && (c.accept(',') || c.accept('|'))) {
        nums.push_back(c.number());
        if (c.accept('*')) saw_star = true;
      }
    }
    if (!saw_star) throw ParseError("family slot needs a regular filler like 2*", c.pos);
    c.expect(']');
    base.push_back(static_cast<int>(nums.back()));
    std::vector<int> irr(nums.begin(), nums.end() - 1);
    irregular.emplace_back(std::move(irr));
  }
  if (base.empty()) throw ParseError("empty family", 0);
  try {
    return FamilySpec(std::move(base), std::move(irregular));
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), text.size());
  }
}

std::string format_family(const FamilySpec& f) {
  std::string out;
  for (int j = 0; j < f.slots(); ++j) {
    out += '[';
    auto es = ascending(f.irregular()[j]);
    for (int e : es) {
      out += std::to_string(e);
      out += ',';
    }
    if (!es.empty()) out.back() = '|';
    out += std::to_string(f.base()[j]);
    out += "*]";
  }
  return out;
}

Perm parse_perm_cycles(std::string_view text, int degree) {
  Cursor c{text};
  std::vector<std::vector<int>> cycles;
  while (!c.done()) {
    c.expect('(');
    std::vector<int> cyc;
    while (c.peek() != ')') {
      cyc.push_back(static_cast<int>(c.number()));
      c.accept(',');
    }
    c.expect(')');
    cycles.push_back(std::move(cyc));
  }
  try {
    return Perm::from_cycles(degree, cycles);
  } catch (const std::invalid_argument& e) {
    throw ParseError(e.what(), text.size());
  }
}

Constellation parse_witness(std::string_view text, int degree) {
  std::vector<Perm> perms;
  std::size_t start = 0;
  while (start <= text.size()) {
    std::size_t bar = text.find('|', start);
    std::string_view piece =
        bar == std::string_view::npos ? text.substr(start) : text.substr(start, bar - start);
    perms.push_back(parse_perm_cycles(piece, degree));
    if (bar == std::string_view::npos) break;
    start = bar + 1;
  }
  return Constellation(std::move(perms));
}

std::string format_perm_cycles(const Perm& p) {
  std::string out;
  for (const auto& cyc : p.cycles()) {
    if (cyc.size() == 1) continue;
    out += '(';
    for (std::size_t i = 0; i < cyc.size(); ++i) {
      if (i) out += ' ';
      out += std::to_string(cyc[i]);
    }
    out += ')';
  }
  if (out.empty()) out = "()";
  return out;
}

std::string format_witness(const Constellation& c) {
  std::string out;
  for (int i = 0; i < c.size(); ++i) {
    if (i) out += " | ";
    out += format_perm_cycles(c[i]);
  }
  return out;
}

Json to_json(const Partition& p) { return Json(ascending(p)); }

Json to_json(const RamData& data) {
  Json j;
  j["degree"] = data.degree();
  Json parts = Json::array();
  for (const auto& p : data.partitions()) parts.push_back(to_json(p));
  j["partitions"] = parts;
  return j;
}

Json to_json(const FamilySpec& f) {
  Json j;
  j["base"] = f.base();
  Json irr = Json::array();
  for (const auto& a : f.irregular()) irr.push_back(to_json(a));
  j["irregular"] = irr;
  j["error"] = f.error();
  return j;
}

Json to_json(const Constellation& c) {
  Json j;
  j["degree"] = c.degree();
  Json perms = Json::array();
  for (const auto& p : c.perms()) perms.push_back(p.images());
  j["permutations"] = perms;
  return j;
}

RamData ramdata_from_json(const Json& j) {
  std::vector<Partition> parts;
  for (const auto& arr : j.at("partitions"))
    parts.emplace_back(arr.get<std::vector<int>>());
  return RamData(std::move(parts));
}

FamilySpec family_from_json(const Json& j) {
  std::vector<Partition> irr;
  for (const auto& arr : j.at("irregular")) irr.emplace_back(arr.get<std::vector<int>>());
  return FamilySpec(j.at("base").get<std::vector<int>>(), std::move(irr));
}

Constellation witness_from_json(const Json& j) {
  std::vector<Perm> perms;
  for (const auto& arr : j.at("permutations")) perms.emplace_back(arr.get<std::vector<int>>());
  return Constellation(std::move(perms));
}

}  // namespace hurwitz
