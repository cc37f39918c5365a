#include <doctest.h>

#include <fstream>
#include <json.hpp>

#include "chow/error.hpp"
#include "chow/limits.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace chow;
using namespace chow::testing;

namespace {

nlohmann::json golden(const std::string& name) {
  std::ifstream in(std::string(CHOW_DATA_DIR) + "/golden/" + name + ".json");
  REQUIRE(in.good());
  return nlohmann::json::parse(in);
}

// Compare after moving the displayed form onto the locus and removing content on both sides.
bool matches(const GammaForm& actual, const std::string& displayed, const Substitution& locus,
             const std::vector<MultiPoly>& candidates) {
  GammaForm expected(substitute(parse_poly(displayed, actual.table()), locus));
  return proportional_forms(remove_content(actual, candidates).first, remove_content(expected, candidates).first);
}

const StratumReport& report_named(const Analysis& a, const std::string& name) {
  for (const auto& r : a.reports)
    if (r.name == name) return r;
  FAIL("no report named " << name);
  return a.reports.front();
}

AffinePoint random_point(Rng& rng, unsigned n) {
  AffinePoint p;
  for (unsigned j = 0; j < n; ++j) p.coordinates.push_back(rng.small_rational());
  return p;
}

}  // namespace

TEST_CASE("make_chart solves the exceptional generator") {
  auto t = VarTable::create(3);
  ChartMap a = chart_of(t, "A", "x1", "x2*xi1 - 1", "x2");
  CHECK(a.divisor == sub_of(t, {{"x2", "0"}}));
  CHECK(a.stratum_vars == std::vector<VarId>{t->coordinate(2), t->coordinate(3)});
  CHECK(chart_center(a) == sub_of(t, {{"x1", "-1"}, {"x2", "0"}}));

  ChartMap b = chart_of(t, "B", "x1", "(x2 + 1)*xi1", "2*x2 + 2");
  CHECK(b.divisor == sub_of(t, {{"x2", "-1"}}));
  CHECK(chart_center(b) == sub_of(t, {{"x1", "0"}, {"x2", "-1"}}));

  CHECK_THROWS_AS(chart_of(t, "C", "x1", "x2", "3"), DomainError);
  CHECK_THROWS_AS(chart_of(t, "D", "x1", "x2", "x2^2 + x3^2"), DomainError);
  CHECK_THROWS_AS(chart_of(t, "E", "xi1", "x2", "x2"), DomainError);
  CHECK_THROWS_AS(chart_center(chart_of(t, "F", "x1", "xi1 + x2", "x2")), DecompositionError);
  CHECK_THROWS_AS(make_chart("G", sub_of(t, {{"x1", "x2"}}), P(t, "x2"), sub_of(t, {{"x2", "1"}})), DomainError);
}

TEST_CASE("at_infinity examples") {
  auto t = VarTable::create(5);
  CHECK(at_infinity(G(t, "g{3,2}")));
  CHECK_FALSE(at_infinity(G(t, "g{3,0}*x0 + g{3,2}*x2")));
  CHECK(at_infinity(G(t, "g{3,4}*g{3,5}")));
  CHECK(at_infinity(G(t, "1")));
}

TEST_CASE("property: at_infinity stable under tau and products") {
  auto t = VarTable::create(3);
  Rng rng = Rng(31).split("infinity");
  std::vector<VarId> far{t->gamma(1, 2), t->gamma(1, 3), t->gamma(2, 3), t->coordinate(1)};
  for (int trial = 0; trial < 100; ++trial) {
    GammaForm a(random_poly(t, rng, far, 3, 2));
    GammaForm b(random_poly(t, rng, far, 3, 2));
    CHECK(at_infinity(a));
    CHECK(at_infinity(tau_apply(a)));
    CHECK(at_infinity(a * b));
  }
}

TEST_CASE("restrict_form examples") {
  Derivation d1 = example1();
  auto t1 = d1.table();
  GammaForm r1 = restrict_form(chow_form(d1), sub_of(t1, {{"x1", "0"}}), {P(t1, "x1")});
  CHECK(proportional_forms(r1, G(t1, "g{3,2}*(g{3,0} + g{3,2}*x2)")));

  Derivation d2 = example2();
  auto t2 = d2.table();
  auto c2 = default_candidates(t2, {P(t2, "x1 + 1")});
  auto gold2 = golden("example2");
  for (const auto& entry : gold2["restrictions"]) {
    auto sub = entry["stratum"] == "x2 = 0" ? sub_of(t2, {{"x2", "0"}}) : sub_of(t2, {{"x1", "-1"}});
    GammaForm r = restrict_form(chow_form(d2), sub, c2);
    CHECK(matches(r, entry["form"], sub, {}));
  }
  // without the extra candidate the x1 + 1 content kills the restriction
  CHECK_THROWS_AS(restrict_form(chow_form(d2), sub_of(t2, {{"x1", "-1"}}), default_candidates(t2)),
                  DecompositionError);

  Derivation d3 = example3();
  auto t3 = d3.table();
  GammaForm r3 = restrict_form(chow_form(d3), sub_of(t3, {{"x1", "0"}}), default_candidates(t3));
  CHECK(matches(r3, golden("example3")["restrictions"][0]["form"], sub_of(t3, {{"x1", "0"}}), {}));
  CHECK_THROWS_WITH_AS(restrict_form(chow_form(d3), sub_of(t3, {{"x1", "0"}, {"x2", "1"}}), default_candidates(t3)),
                       "content removal insufficient; supply more candidates", DecompositionError);
}

TEST_CASE("chart lifts on the exceptional divisor") {
  for (std::string name : {"example2", "example3"}) {
    Derivation d = name == "example2" ? example2() : example3();
    auto t = d.table();
    AnalysisInput input = name == "example2" ? example2_input(t) : example3_input(t);
    auto candidates = default_candidates(t, input.content_candidates);
    GammaForm reduced = remove_content(chow_form(d), candidates).first;
    auto gold = golden(name);
    REQUIRE(gold["divisors"].size() == input.charts.size());
    for (std::size_t i = 0; i < input.charts.size(); ++i) {
      const ChartMap& chart = input.charts[i];
      CHECK(gold["divisors"][i]["chart"] == chart.name);
      ChartLift lift = chart_lift(reduced, chart);
      CHECK(lift.power >= 1);
      GammaForm on_divisor = exceptional_restriction(lift, chart);
      CHECK(matches(on_divisor, gold["divisors"][i]["form"], chart_center(chart), {}));
    }
  }
}

TEST_CASE("example2 full lift on U_1") {
  Derivation d = example2();
  auto t = d.table();
  AnalysisInput input = example2_input(t);
  GammaForm reduced = remove_content(chow_form(d), default_candidates(t, input.content_candidates)).first;
  ChartLift lift = chart_lift(reduced, input.charts[0]);
  CHECK(lift.power == 1);
  std::string L = sum_x(5, [](unsigned j) {
    return "(x1 - x2*x5)*" + g(3, j) + " + x2*" + g(4, j) + " + (x1 + 1)*" + g(5, j);
  });
  std::string r = "(" + sum_x(5, [](unsigned j) { return g(3, j); }) + ")^2";
  Substitution chart = input.charts[0].substitution;
  GammaForm derived(substitute(P(t, "2*(g{3,4} + xi1*g{3,5})*(" + L + ") + x2*xi1*" + r), chart));
  GammaForm displayed(substitute(P(t, "2*(g{3,4} + xi1*g{3,5})*(" + L + ") + x2*" + r), chart));
  CHECK(proportional_forms(lift.lift, derived));
  CHECK_FALSE(proportional_forms(lift.lift, displayed));
  // both agree on the divisor
  CHECK(proportional_forms(exceptional_restriction(lift, input.charts[0]),
                           GammaForm(substitute(displayed.poly(), input.charts[0].divisor))));
}

TEST_CASE("chart lift errors") {
  Derivation d = example1();
  auto t = d.table();
  ChartMap chart = chart_of(t, "Z", "x1", "0", "x2");
  CHECK_THROWS_AS(chart_lift(G(t, "x1*g{0,1}"), chart), DecompositionError);
  ChartMap flat = chart_of(t, "F", "x1", "x2*xi1", "x2");
  ChartLift lift = chart_lift(G(t, "x1*g{0,1} + g{1,2}"), flat);
  CHECK(lift.power == 0);
  CHECK(exceptional_restriction(lift, flat) == G(t, "g{1,2}"));
}

TEST_CASE("property: chart lifts reproduce the pulled-back form") {
  for (std::string name : {"example2", "example3"}) {
    Derivation d = name == "example2" ? example2() : example3();
    auto t = d.table();
    AnalysisInput input = name == "example2" ? example2_input(t) : example3_input(t);
    GammaForm reduced = remove_content(chow_form(d), default_candidates(t, input.content_candidates)).first;
    Rng rng = Rng(5150).split("lift-" + name);
    for (const auto& chart : input.charts) {
      ChartLift lift = chart_lift(reduced, chart);
      for (int trial = 0; trial < 50; ++trial) {
        AffinePoint x = random_point(rng, d.dimension());
        Point chart_point = x.as_point(*t);
        chart_point[t->chart(1)] = rng.small_rational();
        Point base;
        for (unsigned j = 1; j <= d.dimension(); ++j) {
          VarId v = t->coordinate(j);
          auto it = chart.substitution.find(v);
          base[v] = it == chart.substitution.end() ? chart_point[v] : evaluate(it->second, chart_point);
        }
        Rational e = evaluate(chart.exceptional, chart_point);
        // compare every γ-coefficient at once by evaluating only the x and ξ block
        MultiPoly lhs = partial_evaluate(lift.lift.poly(), chart_point) * pow(e, lift.power);
        MultiPoly rhs = partial_evaluate(reduced.poly(), base);
        CHECK(lhs == rhs);
      }
    }
  }
}

TEST_CASE("decompose_limit_cycle examples") {
  Derivation d1 = example1();
  auto t1 = d1.table();
  Substitution s1 = sub_of(t1, {{"x1", "0"}});
  CycleDecomposition c1 = decompose_limit_cycle(restrict_form(chow_form(d1), s1, {P(t1, "x1")}),
                                                restrict_derivation(d1, s1), default_candidates(t1));
  CHECK(c1.n == 1);
  CHECK(proportional_forms(c1.C, G(t1, "g{3,0}*x0 + g{3,2}*x2")));
  CHECK(proportional_forms(c1.Z, G(t1, "g{3,2}")));
  CHECK(c1.at_infinity_Z);
  CHECK(c1.degree_ok);

  Derivation d3 = example3();
  auto t3 = d3.table();
  auto c3 = default_candidates(t3, {P(t3, "x2 - 1"), P(t3, "x2 + 1")});
  Substitution s3 = sub_of(t3, {{"x1", "0"}});
  CycleDecomposition dec3 =
      decompose_limit_cycle(restrict_form(chow_form(d3), s3, c3), restrict_derivation(d3, s3), c3);
  CHECK(dec3.n == 1);
  CHECK(dec3.Z == G(t3, "g{3,4}"));
  CHECK(dec3.at_infinity_Z);
  REQUIRE(dec3.Z_content.size() == 2);
  CHECK(dec3.Z_content[0] == std::pair<MultiPoly, unsigned>{P(t3, "x2 - 1"), 1});
  CHECK(dec3.Z_content[1] == std::pair<MultiPoly, unsigned>{P(t3, "x2 + 1"), 1});

  ChartMap plus = example3_input(t3).charts[0];
  GammaForm reduced = remove_content(chow_form(d3), c3).first;
  GammaForm on_divisor = exceptional_restriction(chart_lift(reduced, plus), plus);
  CycleDecomposition w = decompose_limit_cycle(on_divisor, restrict_derivation(d3, chart_center(plus)), c3);
  CHECK(w.n == 1);
  CHECK(w.Z.gamma_degree() == 1);
  CHECK_FALSE(w.at_infinity_Z);
  CHECK(line_in_locus(w.Z, sub_of(t3, {{"x1", "0"}, {"x2", "1"}})));
  CHECK_FALSE(line_in_locus(w.Z, sub_of(t3, {{"x1", "0"}, {"x2", "-1"}})));
  CHECK(line_in_locus(w.C, sub_of(t3, {{"x1", "0"}, {"x2", "-1"}})));

  // wrong stratum derivation
  Derivation other = restrict_derivation(d3, sub_of(t3, {{"x1", "0"}, {"x2", "1"}}));
  CHECK_THROWS_WITH_AS(decompose_limit_cycle(on_divisor, other, c3), "decomposition failed", DecompositionError);
  auto trivial = make_derivation(4, {"0", "0", "0", "0"});
  CHECK_THROWS_AS(decompose_limit_cycle(on_divisor, trivial, c3), DecompositionError);
}

TEST_CASE("line_in_locus") {
  auto t = VarTable::create(2);
  // the line X_2 = 3 X_0, X_1 free
  CHECK(line_in_locus(G(t, "3*g{1,2} - g{0,1}"), sub_of(t, {{"x2", "3"}})));
  CHECK_FALSE(line_in_locus(G(t, "3*g{1,2} - g{0,1}"), sub_of(t, {{"x2", "2"}})));
  // the line through (1,0,0) and (0,1,1)
  CHECK(line_in_locus(G(t, "g{0,1} + g{0,2}"), sub_of(t, {{"x2", "x1"}})));
  CHECK_FALSE(line_in_locus(G(t, "g{0,1} - g{0,2}"), sub_of(t, {{"x2", "x1"}})));
  CHECK_FALSE(line_in_locus(G(t, "g{0,1}") * G(t, "g{0,2}"), sub_of(t, {{"x2", "x1"}})));
  CHECK_FALSE(line_in_locus(GammaForm::zero(t), sub_of(t, {{"x2", "x1"}})));
  CHECK_FALSE(line_in_locus(G(t, "g{0,1}"), sub_of(t, {{"x2", "x1^2"}})));
}

TEST_CASE("verify_factorization examples") {
  auto t = VarTable::create(3);
  GammaForm restricted = G(t, "2*g{3,2}*(g{3,0} + g{3,2}*x2)");
  CHECK(verify_factorization(restricted, {{G(t, "g{3,2}"), 1}, {G(t, "g{3,0} + g{3,2}*x2"), 1}}));
  CHECK_FALSE(verify_factorization(restricted, {{G(t, "g{3,2}"), 2}, {G(t, "g{3,0} + g{3,2}*x2"), 1}}));
  Derivation d = example1();
  GammaForm p = chow_form(d);
  CHECK(verify_factorization(p, {{f_lk(d, 1, 0) * f_lk(d, 2, 1) * Rational(2) - f_lk(d, 2, 0) * f_lk(d, 2, 0), 1}}));
}

TEST_CASE("analysis verdicts") {
  Derivation d1 = example1();
  Analysis a1 = analyze(d1, example1_input(d1.table()));
  CHECK(a1.verdict.proper);
  CHECK(a1.verdict.text == "proper (relative to supplied strata)");
  REQUIRE(a1.content.size() == 1);
  CHECK(a1.content[0].second == 5);

  Derivation d2 = example2();
  Analysis a2 = analyze(d2, example2_input(d2.table()));
  CHECK(a2.verdict.proper);
  CHECK(a2.reports.size() == 4);
  for (const auto& r : a2.reports) {
    CHECK(r.decomposition.n == 1);
    CHECK(r.decomposition.at_infinity_Z);
  }
  CHECK(proportional_forms(report_named(a2, "U_1").decomposition.Z, G(d2.table(), "xi1*g{3,5} + g{3,4}")));

  Derivation d3 = example3();
  Analysis a3 = analyze(d3, example3_input(d3.table()));
  CHECK_FALSE(a3.verdict.hausdorff);
  CHECK_FALSE(a3.verdict.proper);
  CHECK(a3.verdict.text == "non-Hausdorff (relative to supplied strata)");
  CHECK(report_named(a3, "x1 = 0").hausdorff_ok);
  for (std::string chart : {"U_1^+", "U_2^+", "U_1^-", "U_2^-"}) {
    const StratumReport& r = report_named(a3, chart);
    CHECK_FALSE(r.hausdorff_ok);
    REQUIRE(r.witness.has_value());
  }
  CHECK(report_named(a3, "U_1^+").witness->locus == "{x1 = 0, x2 = 1}");
  CHECK(report_named(a3, "U_2^-").witness->locus == "{x1 = 0, x2 = -1}");
  REQUIRE(a3.verdict.witness_pairs.size() == 1);
  CHECK(a3.verdict.witness_pairs[0] == std::pair<std::string, std::string>{"{x1 = 0, x2 = -1}", "{x1 = 0, x2 = 1}"});
}

TEST_CASE("property: decompositions reconstruct the limit form") {
  for (const auto& d : bundled_derivations()) {
    auto t = d.table();
    AnalysisInput input = d.dimension() == 3 ? example1_input(t)
                          : d.dimension() == 5 ? example2_input(t)
                                               : example3_input(t);
    Analysis a = analyze(d, input);
    for (const auto& r : a.reports) {
      const auto& dec = r.decomposition;
      CHECK(dec.n >= 1);
      CHECK(dec.degree_ok);
      CHECK(d.degree() == dec.n * dec.C.gamma_degree() + dec.Z.gamma_degree());
      CHECK(verify_factorization(r.limit, {{dec.C, dec.n}, {dec.Z, 1}}) ==
            dec.Z_content.empty());
      GammaForm content = GammaForm(MultiPoly::constant(t, Rational(1)));
      for (const auto& [c, m] : dec.Z_content) content = content * pow(c, m);
      CHECK(verify_factorization(r.limit, {{dec.C, dec.n}, {dec.Z, 1}, {content, 1}}));
    }
  }
}

TEST_CASE("stratum_verdict labels") {
  auto t = VarTable::create(1);
  auto make = [&](bool infinity, unsigned n) {
    CycleDecomposition dec{n, G(t, "g{0,1}"), G(t, "1"), {}, infinity, true};
    bool h = infinity;
    return StratumReport{"s", false, {}, G(t, "g{0,1}"), 0, dec, h, h && n == 1, std::nullopt};
  };
  CHECK(stratum_verdict({make(true, 1), make(true, 1)}).text == "proper (relative to supplied strata)");
  CHECK(stratum_verdict({make(true, 1), make(true, 2)}).text == "Hausdorff, not proper (relative to supplied strata)");
  CHECK(stratum_verdict({make(false, 1), make(true, 1)}).text == "non-Hausdorff (relative to supplied strata)");
  CHECK(stratum_verdict({}).proper);
}
