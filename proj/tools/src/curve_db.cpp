#include "selmer/cli/curve_db.hpp"

#include <cstdlib>
#include <fstream>
#include <sstream>
#include <vector>

#include "selmer/error.hpp"

#ifndef SELMER_DEFAULT_DB
#define SELMER_DEFAULT_DB "data/curves.csv"
#endif

namespace selmer::cli {

namespace {

std::string trim(const std::string& s) {
  const auto b = s.find_first_not_of(" \t\r");
  if (b == std::string::npos) return "";
  const auto e = s.find_last_not_of(" \t\r");
  return s.substr(b, e - b + 1);
}

std::vector<std::string> split(const std::string& s, char sep) {
  std::vector<std::string> out;
  std::string cur;
  std::istringstream in(s);
  while (std::getline(in, cur, sep)) out.push_back(trim(cur));
  if (!s.empty() && s.back() == sep) out.emplace_back();
  return out;
}

Int parse_int(const std::string& s) {
  std::size_t i = (!s.empty() && (s[0] == '-' || s[0] == '+')) ? 1 : 0;
  if (i == s.size()) throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  for (std::size_t k = i; k < s.size(); ++k)
    if (s[k] < '0' || s[k] > '9') throw Error(ErrorCode::InvalidArgument, "not an integer: '" + s + "'");
  Int v(s.substr(i));
  return s[0] == '-' ? Int(-v) : v;
}

}  // namespace

CurveDatabase CurveDatabase::parse(const std::string& text, const std::string& origin) {
  CurveDatabase db;
  std::istringstream in(text);
  std::string line;
  int lineno = 0;
  bool header_seen = false;
  while (std::getline(in, line)) {
    ++lineno;
    line = trim(line);
    if (line.empty() || line[0] == '#') continue;
    auto cells = split(line, ',');
    if (!header_seen) {
      header_seen = true;
      if (cells.size() == 6 && cells[0] == "label") continue;
    }
    const std::string where = origin + ":" + std::to_string(lineno);
    if (cells.size() != 6) throw Error(ErrorCode::InvalidArgument, where + ": expected 6 fields");
    CurveRecord rec{cells[0], {}};
    if (rec.label.empty()) throw Error(ErrorCode::InvalidArgument, where + ": empty label");
    for (int k = 0; k < 5; ++k) rec.a[k] = parse_int(cells[k + 1]);
    if (!db.records_.emplace(rec.label, rec).second)
      throw Error(ErrorCode::InvalidArgument, where + ": duplicate label " + rec.label);
  }
  return db;
}

CurveDatabase CurveDatabase::load(const std::string& path) {
  std::ifstream f(path);
  if (!f) throw Error(ErrorCode::InvalidArgument, "cannot open curve database " + path);
  std::stringstream ss;
  ss << f.rdbuf();
  return parse(ss.str(), path);
}

const CurveRecord* CurveDatabase::find(const std::string& label) const {
  auto it = records_.find(label);
  return it == records_.end() ? nullptr : &it->second;
}

std::string resolve_db_path(const std::string& flag) {
  if (!flag.empty()) return flag;
  if (const char* env = std::getenv("SELMER_DB"); env && *env) return env;
  return SELMER_DEFAULT_DB;
}

std::array<Int, 5> parse_a_invariants(const std::string& text) {
  std::string t = trim(text);
  if (!t.empty() && t.front() == '[') t.erase(0, 1);
  if (!t.empty() && t.back() == ']') t.pop_back();
  auto cells = split(t, ',');
  if (cells.size() != 5) throw Error(ErrorCode::InvalidArgument, "expected five a-invariants, got '" + text + "'");
  std::array<Int, 5> a;
  for (int k = 0; k < 5; ++k) a[k] = parse_int(cells[k]);
  return a;
}

}  // namespace selmer::cli
