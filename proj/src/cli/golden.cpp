#include "chow/golden.hpp"

#include "chow/error.hpp"
#include "chow/parser.hpp"

namespace chow {

namespace {

bool matches(const GammaForm& actual, const std::string& displayed, const Substitution& locus,
             const std::vector<MultiPoly>& candidates) {
  GammaForm expected(substitute(parse_poly(displayed, actual.table()), locus));
  return proportional_forms(remove_content(actual, candidates).first, remove_content(expected, candidates).first);
}

const StratumReport* find_report(const Analysis& a, const std::string& name) {
  for (const auto& r : a.reports)
    if (r.name == name) return &r;
  return nullptr;
}

}  // namespace

std::vector<GoldenCheck> check_golden(const SpecFile& spec, const nlohmann::json& golden) {
  auto table = make_table(spec);
  Derivation d = build_derivation(spec, table);
  AnalysisInput input = build_analysis_input(spec, table);
  auto candidates = default_candidates(table, input.content_candidates);
  std::vector<GoldenCheck> out;

  GammaForm p = chow_form(d);
  out.push_back({"chow form", matches(p, golden.at("chow").get<std::string>(), {}, candidates)});
  if (input.strata.empty() && input.charts.empty()) return out;

  Analysis a = analyze(d, input);
  for (const auto& entry : golden.value("restrictions", nlohmann::json::array())) {
    std::string name = entry.at("stratum").get<std::string>();
    const StratumReport* r = find_report(a, name);
    bool pass = r != nullptr && !r->is_chart && matches(r->limit, entry.at("form").get<std::string>(), r->locus, {});
    out.push_back({"restriction to " + name, pass});
  }
  for (const auto& entry : golden.value("divisors", nlohmann::json::array())) {
    std::string name = entry.at("chart").get<std::string>();
    const StratumReport* r = find_report(a, name);
    bool pass = r != nullptr && r->is_chart && matches(r->limit, entry.at("form").get<std::string>(), r->locus, {});
    out.push_back({"exceptional divisor of " + name, pass});
  }

  if (auto it = golden.find("verdict"); it != golden.end() && !it->is_null()) {
    std::string expected = it->get<std::string>();
    bool pass = false;
    if (expected == "proper") pass = a.verdict.proper;
    if (expected == "Hausdorff") pass = a.verdict.hausdorff && !a.verdict.proper;
    if (expected == "non-Hausdorff") pass = !a.verdict.hausdorff;
    out.push_back({"verdict " + expected, pass});
  }
  if (auto it = golden.find("witness_pairs"); it != golden.end()) {
    std::vector<std::pair<std::string, std::string>> expected;
    for (const auto& pair : *it) expected.emplace_back(pair.at(0).get<std::string>(), pair.at(1).get<std::string>());
    out.push_back({"witness pairs", expected == a.verdict.witness_pairs});
  }
  return out;
}

}  // namespace chow
