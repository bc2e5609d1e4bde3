#pragma once
#include <map>
#include <string>
#include <vector>

#include "toric/fan.hpp"

namespace toric {

struct CorpusEntry {
  std::string name;
  std::string description;
  Fan fan;
  // named Picard generators for the divisor mini-language ("5H-2E")
  std::vector<std::pair<std::string, DivisorClass>> divisors;
  // named curve classes ("e", "h-e", "h")
  std::vector<std::pair<std::string, CurveClass>> curves;
};

Fan projective_space(int n);
Fan product_fan(const Fan& a, const Fan& b);

const std::vector<CorpusEntry>& corpus();
const CorpusEntry* corpus_lookup(const std::string& name);

/// Parse "5H-2E" / "-H" / "3" style divisor expressions against an entry's
/// named generators; bare integers require a unique generator.
DivisorClass parse_divisor_expr(const CorpusEntry& entry, const std::string& expr);

}  // namespace toric
