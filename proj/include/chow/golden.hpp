#pragma once

#include <json.hpp>
#include <string>
#include <vector>

#include "chow/spec_file.hpp"

namespace chow {

struct GoldenCheck {
  std::string what;
  bool pass = false;
};

// Compares a spec's computed forms with a golden file:
//   { "chow": str, "restrictions": [{"stratum", "form"}], "divisors": [{"chart", "form"}],
//     "verdict": "proper" | "Hausdorff" | "non-Hausdorff" | null, "witness_pairs": [[a, b]] }
// Displayed forms are moved onto the stratum or chart center, stripped of
// content and compared up to a scalar after gamma_expand.
std::vector<GoldenCheck> check_golden(const SpecFile& spec, const nlohmann::json& golden);

}  // namespace chow
