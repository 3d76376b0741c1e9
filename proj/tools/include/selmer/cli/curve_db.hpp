#pragma once

#include <array>
#include <map>
#include <string>

#include "selmer/arith.hpp"

namespace selmer::cli {

struct CurveRecord {
  std::string label;
  std::array<Int, 5> a;
};

class CurveDatabase {
 public:
  /// Parses `label,a1,a2,a3,a4,a6` rows; blank lines and lines starting with '#' are skipped.
  static CurveDatabase load(const std::string& path);
  static CurveDatabase parse(const std::string& text, const std::string& origin = "<memory>");

  const CurveRecord* find(const std::string& label) const;
  std::size_t size() const { return records_.size(); }
  const std::map<std::string, CurveRecord>& records() const { return records_; }

 private:
  std::map<std::string, CurveRecord> records_;
};

/// --db beats SELMER_DB beats the compiled-in default.
std::string resolve_db_path(const std::string& flag);

/// "a1,a2,a3,a4,a6" with optional surrounding brackets.
std::array<Int, 5> parse_a_invariants(const std::string& text);

}  // namespace selmer::cli
