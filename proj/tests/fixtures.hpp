#pragma once

#include <string>
#include <vector>

#include "chow/derivation.hpp"
#include "chow/limits.hpp"
#include "chow/parser.hpp"

namespace chow::testing {

inline Derivation make_derivation(unsigned n, const std::vector<std::string>& delta, unsigned chart_vars = 2) {
  auto table = VarTable::create(n, chart_vars);
  std::vector<MultiPoly> gens;
  for (const auto& text : delta) gens.push_back(parse_poly(text, table));
  return Derivation(table, std::move(gens));
}

// δ = -x1^2 ∂/∂x2 + (1 - x1 x2) ∂/∂x3 on C^3
inline Derivation example1() { return make_derivation(3, {"0", "-x1^2", "1 - x1*x2"}); }

// δ = (x1 - x2 x5) ∂/∂x3 + x2 ∂/∂x4 + (x1 + 1) ∂/∂x5 on C^5
inline Derivation example2() { return make_derivation(5, {"0", "0", "x1 - x2*x5", "x2", "x1 + 1"}); }

// δ = x1 ∂/∂x2 + x2 ∂/∂x3 + (x2^2 - 2 x1 x3 - 1) ∂/∂x4 on C^4
inline Derivation example3() { return make_derivation(4, {"0", "x1", "x2", "x2^2 - 2*x1*x3 - 1"}); }

// δ = ∂/∂x1 on C^2
inline Derivation translation() { return make_derivation(2, {"1", "0"}); }

inline std::vector<Derivation> bundled_derivations() { return {example1(), example2(), example3()}; }

inline Substitution sub_of(const VarTable::Ptr& table, const std::vector<std::pair<std::string, std::string>>& entries) {
  Substitution sub;
  for (const auto& [name, image] : entries) sub.emplace(*table->find(name), parse_poly(image, table));
  return sub;
}

inline ChartMap chart_of(const VarTable::Ptr& table, std::string name, const std::string& var, const std::string& image,
                         const std::string& exceptional) {
  return make_chart(std::move(name), sub_of(table, {{var, image}}), parse_poly(exceptional, table));
}

inline AnalysisInput example1_input(const VarTable::Ptr& t) {
  return AnalysisInput{{}, {Stratum{"x1 = 0", sub_of(t, {{"x1", "0"}}), {parse_poly("x1", t)}}}, {}};
}

inline AnalysisInput example2_input(const VarTable::Ptr& t) {
  return AnalysisInput{{parse_poly("x1 + 1", t)},
                       {Stratum{"x1 + 1 = 0", sub_of(t, {{"x1", "-1"}}), {}},
                        Stratum{"x2 = 0", sub_of(t, {{"x2", "0"}}), {}}},
                       {chart_of(t, "U_1", "x1", "x2*xi1 - 1", "x2"), chart_of(t, "U_2", "x2", "(x1 + 1)*xi1", "x1 + 1")}};
}

inline AnalysisInput example3_input(const VarTable::Ptr& t) {
  return AnalysisInput{{parse_poly("x2 - 1", t), parse_poly("x2 + 1", t)},
                       {Stratum{"x1 = 0", sub_of(t, {{"x1", "0"}}), {}}},
                       {chart_of(t, "U_1^+", "x2", "x1*xi1 - 1", "x1"), chart_of(t, "U_2^+", "x1", "(x2 + 1)*xi1", "x2 + 1"),
                        chart_of(t, "U_1^-", "x2", "x1*xi1 + 1", "x1"), chart_of(t, "U_2^-", "x1", "(x2 - 1)*xi1", "x2 - 1")}};
}

}  // namespace chow::testing
