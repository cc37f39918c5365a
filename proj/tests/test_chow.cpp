#include <doctest.h>

#include <algorithm>
#include <numeric>

#include "chow/chow_form.hpp"
#include "chow/error.hpp"
#include "fixtures.hpp"
#include "support.hpp"

using namespace chow;
using namespace chow::testing;

namespace {

// Both sides agree up to a nonzero scalar once written in α, β.
bool same_cycle(const GammaForm& a, const GammaForm& b) { return proportional_forms(a, b); }

MultiPoly leibniz(const std::vector<std::vector<MultiPoly>>& m) {
  const auto& table = m[0][0].table();
  std::vector<std::size_t> perm(m.size());
  std::iota(perm.begin(), perm.end(), 0);
  MultiPoly out(table);
  do {
    MultiPoly term = MultiPoly::constant(table, Rational(1));
    for (std::size_t i = 0; i < m.size(); ++i) term *= m[i][perm[i]];
    std::size_t inversions = 0;
    for (std::size_t i = 0; i < perm.size(); ++i)
      for (std::size_t j = i + 1; j < perm.size(); ++j)
        if (perm[i] > perm[j]) ++inversions;
    if (inversions % 2 == 1) {
      out -= term;
    } else {
      out += term;
    }
  } while (std::next_permutation(perm.begin(), perm.end()));
  return out;
}

std::vector<Rational> random_vector(Rng& rng, std::size_t size) {
  std::vector<Rational> v;
  for (std::size_t i = 0; i < size; ++i) v.push_back(rng.small_rational());
  return v;
}

std::vector<Derivation> all_examples() {
  auto ds = bundled_derivations();
  ds.push_back(translation());
  return ds;
}

}  // namespace

TEST_CASE("f_lk antisymmetry and range") {
  for (const auto& d : all_examples()) {
    for (unsigned l = 0; l <= d.degree(); ++l) {
      CHECK(f_lk(d, l, l).is_zero());
      for (unsigned k = 0; k <= d.degree(); ++k) CHECK((f_lk(d, l, k) + f_lk(d, k, l)).is_zero());
    }
    CHECK_THROWS_AS(f_lk(d, d.degree() + 1, 0), DomainError);
    CHECK_THROWS_AS(F_lk(d, 0, d.degree() + 1), DomainError);
  }
}

TEST_CASE("f_lk example values") {
  Derivation d = example1();
  auto t = d.table();
  CHECK(f_lk(d, 2, 1) == G(t, "-x1^5*g{3,2}"));
  CHECK(f_lk(d, 2, 0) == G(t, "x1^3*(g{3,0} + x1*g{3,1} + x2*g{3,2})"));
  std::string f10 = sum_x(3, [](unsigned j) { return "(1 - x1*x2)*" + g(3, j) + " - " + g(2, j) + "*x1^2"; });
  CHECK(f_lk(d, 1, 0) == G(t, f10));
  CHECK(gamma_expand(G(t, "g{0,1}")) == P(t, "b0*a1 - b1*a0"));
}

TEST_CASE("gamma_expand of f_lk is B_l A_k - A_l B_k") {
  for (const auto& d : all_examples()) {
    for (unsigned l = 0; l <= d.degree(); ++l) {
      for (unsigned k = 0; k <= d.degree(); ++k) {
        MultiPoly expected = beta_form(d, l) * alpha_form(d, k) - alpha_form(d, l) * beta_form(d, k);
        CHECK(gamma_expand(f_lk(d, l, k)) == expected);
      }
    }
  }
}

TEST_CASE("F_lk boundary rows and columns vanish") {
  for (const auto& d : all_examples()) {
    for (unsigned k = 0; k <= d.degree(); ++k) CHECK(F_lk(d, 0, k).is_zero());
    for (unsigned l = 0; l <= d.degree(); ++l) CHECK(F_lk(d, l, d.degree()).is_zero());
  }
}

TEST_CASE("F_lk for degree two") {
  for (const auto& d : bundled_derivations()) {
    REQUIRE(d.degree() == 2);
    CHECK(F_lk(d, 1, 0) == f_lk(d, 1, 0) * Rational(2));
    CHECK(F_lk(d, 1, 1) == f_lk(d, 2, 0));
    CHECK(F_lk(d, 2, 0) == f_lk(d, 2, 0));
    CHECK(F_lk(d, 2, 1) == f_lk(d, 2, 1));
    GammaForm shortcut = f_lk(d, 1, 0) * f_lk(d, 2, 1) * Rational(2) - f_lk(d, 2, 0) * f_lk(d, 2, 0);
    CHECK(chow_form(d) == shortcut);
  }
}

TEST_CASE("F_lk_recursive agrees with F_lk") {
  Derivation d1 = example1();
  CHECK(F_lk_recursive(d1, 2, 1) == G(d1.table(), "-x1^5*g{3,2}"));
  CHECK(F_lk_recursive(d1, 2, 2).is_zero());
  auto degree3 = make_derivation(3, {"0", "x1", "x2"});
  auto degree4 = make_derivation(4, {"1", "x1", "x2", "x3"});
  auto ds = all_examples();
  ds.push_back(degree3);
  ds.push_back(degree4);
  for (const auto& d : ds)
    for (unsigned l = 0; l <= d.degree(); ++l)
      for (unsigned k = 0; k <= d.degree(); ++k) CHECK(F_lk_recursive(d, l, k) == F_lk(d, l, k));
}

TEST_CASE("chow_form example1") {
  Derivation d = example1();
  auto t = d.table();
  std::string f10 = sum_x(3, [](unsigned j) { return "(1 - x1*x2)*" + g(3, j) + " - " + g(2, j) + "*x1^2"; });
  std::string f20 = sum_x(2, [](unsigned j) { return g(3, j); });
  GammaForm displayed = G(t, "-x1^5*(2*g{3,2}*(" + f10 + ") + x1*(" + f20 + ")^2)");
  GammaForm p = chow_form(d);
  CHECK(same_cycle(p, displayed));
  CHECK(gamma_expand(p) == gamma_expand(displayed));
  CHECK(p.gamma_degree() == 2);
  CHECK(p.is_gamma_homogeneous());
  CHECK(chow_form(d, AffinePoint{{Rational(2), Rational(0), Rational(0)}}) ==
        GammaForm(partial_evaluate(p.poly(), {{t->coordinate(1), Rational(2)},
                                               {t->coordinate(2), Rational(0)},
                                               {t->coordinate(3), Rational(0)}})));
}

TEST_CASE("chow_form example2") {
  Derivation d = example2();
  auto t = d.table();
  std::string sum = sum_x(5, [](unsigned j) {
    return "(x1 - x2*x5)*" + g(3, j) + " + x2*" + g(4, j) + " + (x1 + 1)*" + g(5, j);
  });
  // r sums over all j = 0..5; without the x5 term the expansions differ
  std::string r = "(" + sum_x(5, [](unsigned j) { return g(3, j); }) + ")^2";
  GammaForm displayed = G(t, "2*((x1 + 1)*g{3,5} + x2*g{3,4})*(" + sum + ") + x2*(x1 + 1)*" + r);
  GammaForm p = chow_form(d);
  CHECK(same_cycle(p, displayed * P(t, "x2*(x1 + 1)")));
  CHECK(gamma_expand(p) == gamma_expand(displayed * P(t, "-x2*(x1 + 1)")));
}

TEST_CASE("chow_form example3") {
  Derivation d = example3();
  auto t = d.table();
  std::string sum = sum_x(4, [](unsigned j) {
    return "x1*" + g(2, j) + " + x2*" + g(3, j) + " + (x2^2 - 2*x1*x3 - 1)*" + g(4, j);
  });
  std::string r = "(" + sum_x(4, [](unsigned j) { return g(3, j); }) + ")^2";
  GammaForm displayed = G(t, "2*(x1*g{3,2} + (x2^2 - 2*x1*x3 - 1)*g{3,4})*(" + sum + ") - x1*" + r);
  CHECK(same_cycle(chow_form(d), displayed * P(t, "x1")));
}

TEST_CASE("chow_form of a translation matches the line's incidence determinant") {
  Derivation d = translation();
  auto t = d.table();
  // rows (-x2, 0, 1), α, β; cofactor expansion along the first row
  MultiPoly a0 = P(t, "a0"), a1 = P(t, "a1"), a2 = P(t, "a2");
  MultiPoly b0 = P(t, "b0"), b1 = P(t, "b1"), b2 = P(t, "b2");
  MultiPoly line = P(t, "-x2") * (a1 * b2 - a2 * b1) + P(t, "1") * (a0 * b1 - a1 * b0);
  GammaForm oracle = gamma_collapse(line);
  CHECK(oracle == G(t, "x2*g{1,2} - g{0,1}"));
  CHECK(same_cycle(chow_form(d), oracle));
  CHECK(same_cycle(chow_form(d), G(t, "x2*g{1,2} - g{0,1}")));
}

TEST_CASE("chow_form rejects degree zero") {
  auto d = make_derivation(2, {"0", "0"});
  CHECK_THROWS_AS(chow_form(d), DomainError);
}

TEST_CASE("tau and bidegree") {
  auto t = VarTable::create(2);
  CHECK(tau_apply(G(t, "g{0,1}")) == G(t, "-g{0,1}"));
  for (const auto& d : all_examples()) {
    for (unsigned l = 0; l <= d.degree(); ++l)
      for (unsigned k = 0; k <= d.degree(); ++k) CHECK(tau_apply(f_lk(d, l, k)) == -f_lk(d, l, k));
    GammaForm p = chow_form(d);
    Rational sign = d.degree() % 2 == 0 ? Rational(1) : Rational(-1);
    CHECK(tau_apply(p) == p * sign);

    // swap α and β in the expansion directly
    Substitution swap;
    for (unsigned j = 0; j <= d.dimension(); ++j) {
      swap.emplace(d.table()->alpha(j), MultiPoly::variable(d.table(), d.table()->beta(j)));
      swap.emplace(d.table()->beta(j), MultiPoly::variable(d.table(), d.table()->alpha(j)));
    }
    CHECK(substitute(gamma_expand(p), swap) == gamma_expand(p) * sign);

    auto bidegree = alpha_beta_bidegree(gamma_expand(p));
    REQUIRE(bidegree.has_value());
    CHECK(bidegree->first == d.degree());
    CHECK(bidegree->second == d.degree());
  }
}

TEST_CASE("leading gamma coefficients share one sign") {
  Derivation d1 = example1();
  GammaForm p1 = chow_form(d1);
  CHECK(leading_gamma_coefficient(p1, 3, 2) == P(d1.table(), "-x1^6"));
  CHECK(leading_gamma_coefficient(p1, 1, 2).is_zero());
  Derivation d3 = example3();
  CHECK(proportional(leading_gamma_coefficient(chow_form(d3), 3, 2), P(d3.table(), "x1^2")));

  for (const auto& d : all_examples()) {
    GammaForm p = chow_form(d);
    std::optional<Rational> epsilon;
    for (unsigned j = 1; j <= d.dimension(); ++j) {
      MultiPoly top = pow(d.power(d.degree(), j), d.degree());
      MultiPoly c = leading_gamma_coefficient(p, j, d.degree());
      if (top.is_zero()) {
        CHECK(c.is_zero());
        continue;
      }
      REQUIRE(proportional(c, top));
      Rational ratio = c.leading_term().coefficient / top.leading_term().coefficient;
      CHECK((ratio == 1 || ratio == -1));
      if (epsilon) CHECK(ratio == *epsilon);
      epsilon = ratio;
    }
    CHECK(epsilon.has_value());
  }
}

TEST_CASE("to_string of gamma forms round-trips") {
  Derivation d = example2();
  GammaForm p = chow_form(d);
  CHECK(G(d.table(), to_string(p)) == p);
  CHECK(to_string(GammaForm::zero(d.table())) == "0");
  CHECK(to_string(G(d.table(), "x1*g{0,1} + g{1,2}^2")) == "g{1,2}^2 + x1*g{0,1}");
  CHECK_THROWS_AS(GammaForm(P(d.table(), "a0*g{0,1}")), DomainError);
  CHECK(normalize(G(d.table(), "-2/3*g{0,1} + 4/3*g{1,2}")) == G(d.table(), "g{0,1} - 2*g{1,2}"));
}

TEST_CASE("gamma_collapse") {
  auto t = VarTable::create(3);
  CHECK(gamma_collapse(P(t, "b0*a1 - b1*a0")) == G(t, "g{0,1}"));
  // Plücker relation: g01 g23 - g02 g13 + g03 g12 expands to 0
  CHECK(gamma_expand(G(t, "g{0,1}*g{2,3} - g{0,2}*g{1,3} + g{0,3}*g{1,2}")).is_zero());
  CHECK_THROWS_AS(gamma_collapse(P(t, "a0*b0")), DomainError);
  CHECK_THROWS_AS(gamma_collapse(P(t, "a0")), DomainError);
  CHECK_THROWS_AS(gamma_collapse(P(t, "g{0,1}")), DomainError);

  Rng rng = Rng(7).split("collapse");
  std::vector<VarId> vars;
  for (unsigned j1 = 0; j1 <= 3; ++j1)
    for (unsigned j2 = j1 + 1; j2 <= 3; ++j2) vars.push_back(t->gamma(j1, j2));
  vars.push_back(t->coordinate(1));
  for (int trial = 0; trial < 200; ++trial) {
    GammaForm form(random_poly(t, rng, vars, 5, 2));
    MultiPoly expanded = gamma_expand(form);
    CHECK(gamma_expand(gamma_collapse(expanded)) == expanded);
  }
}

TEST_CASE("determinant methods agree with Leibniz") {
  auto t = VarTable::create(2);
  Rng rng = Rng(11).split("determinant");
  std::vector<VarId> vars{t->coordinate(1), t->coordinate(2)};
  for (unsigned size = 1; size <= 5; ++size) {
    for (int trial = 0; trial < 12; ++trial) {
      std::vector<std::vector<MultiPoly>> m(size);
      for (auto& row : m)
        for (unsigned c = 0; c < size; ++c) row.push_back(random_poly(t, rng, vars, 3, 2));
      MultiPoly expected = leibniz(m);
      CHECK(determinant(m, DeterminantMethod::Laplace) == expected);
      CHECK(determinant(m, DeterminantMethod::Bareiss) == expected);
      CHECK(determinant(m) == expected);
    }
  }
  std::vector<std::vector<MultiPoly>> singular{{P(t, "0"), P(t, "x1")}, {P(t, "0"), P(t, "x2")}};
  CHECK(determinant(singular, DeterminantMethod::Bareiss).is_zero());
  CHECK_THROWS_AS(determinant({}), DomainError);
}

TEST_CASE("chow_form agrees across determinant methods") {
  auto degree4 = make_derivation(4, {"1", "x1", "x2", "x3"});
  CHECK(chow_form(degree4, std::nullopt, DeterminantMethod::Laplace) ==
        chow_form(degree4, std::nullopt, DeterminantMethod::Bareiss));
  for (const auto& d : bundled_derivations())
    CHECK(chow_form(d, std::nullopt, DeterminantMethod::Laplace) ==
          chow_form(d, std::nullopt, DeterminantMethod::Bareiss));
}

TEST_CASE("property: the reduced system vanishes on incidence witnesses") {
  Rng base(2024);
  for (const auto& d : all_examples()) {
    Rng rng = base.split("system-" + std::to_string(d.dimension()));
    for (int trial = 0; trial < 100; ++trial) {
      IncidenceWitness w = random_incidence_witness(d, rng);
      for (unsigned l = 0; l <= d.degree(); ++l) {
        Rational f_total = 0;
        Rational F_total = 0;
        Rational weight = 1;  // t^k / k!
        for (unsigned k = 0; k <= d.degree(); ++k) {
          if (k > 0) weight = weight * w.t / k;
          f_total += weight * evaluate_form(f_lk(d, l, k), w.x, w.alpha, w.beta);
          if (k < d.degree()) F_total += weight * evaluate_form(F_lk(d, l, k), w.x, w.alpha, w.beta);
        }
        CHECK(f_total == 0);
        CHECK(F_total == 0);
      }
    }
  }
}

TEST_CASE("property: incidence vanishing and non-vanishing") {
  Rng base(99);
  for (const auto& d : all_examples()) {
    Rng rng = base.split("incidence-" + std::to_string(d.dimension()));
    GammaForm p = chow_form(d);
    for (int trial = 0; trial < 100; ++trial) {
      IncidenceWitness w = random_incidence_witness(d, rng);
      CHECK(evaluate_form(p, w.x, w.alpha, w.beta) == 0);
      CHECK(chow_form(d, w.x).is_zero() == false);
      CHECK(evaluate_form(chow_form(d, w.x), w.x, w.alpha, w.beta) == 0);

      int strikes = 0;
      while (strikes < 3) {
        auto alpha = random_vector(rng, d.dimension() + 1);
        auto beta = random_vector(rng, d.dimension() + 1);
        if (evaluate_form(p, w.x, alpha, beta) != 0) break;
        ++strikes;
      }
      CHECK(strikes < 3);
    }
  }
}
