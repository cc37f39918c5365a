#pragma once

#include <cstdint>
#include <map>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

#include "chow/derivation.hpp"
#include "chow/limits.hpp"

namespace chow {

struct StratumSpec {
  std::string name;
  std::map<std::string, std::string> sub;
  std::vector<std::string> candidates;
};

struct ChartSpec {
  std::string name;
  std::map<std::string, std::string> sub;
  std::string exceptional;
  std::optional<std::map<std::string, std::string>> divisor;
};

// A derivation spec file. Polynomials stay as text until a table exists.
struct SpecFile {
  std::string name;
  unsigned n = 0;
  std::vector<std::string> delta;
  std::vector<std::string> content_candidates;
  std::vector<StratumSpec> strata;
  std::vector<ChartSpec> charts;
  std::optional<std::uint64_t> seed;
  std::size_t bound = Derivation::kDefaultBound;
  unsigned chart_vars = 2;
};

// Throws ParseError on malformed JSON or polynomial text and SpecError on
// schema violations. Every polynomial string is parsed once as a check.
SpecFile parse_spec(std::string_view text);
SpecFile load_spec(const std::string& path);

VarTable::Ptr make_table(const SpecFile& spec);
// Throws NotNilpotentError past the spec's bound.
Derivation build_derivation(const SpecFile& spec, const VarTable::Ptr& table);
AnalysisInput build_analysis_input(const SpecFile& spec, const VarTable::Ptr& table);
// Keys must be coordinates, or chart variables when allow_chart is set.
Substitution build_substitution(const std::map<std::string, std::string>& entries, const VarTable::Ptr& table,
                                bool allow_chart = false);

}  // namespace chow
