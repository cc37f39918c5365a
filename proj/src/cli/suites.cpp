#include "chow/suites.hpp"

#include <functional>
#include <optional>

#include "chow/chow_form.hpp"
#include "chow/random.hpp"

namespace chow {

namespace {

std::string point_text(const AffinePoint& x) {
  std::string out = "(";
  for (std::size_t k = 0; k < x.coordinates.size(); ++k) {
    if (k > 0) out += ", ";
    out += to_string(x.coordinates[k]);
  }
  return out + ")";
}

std::string vector_text(const std::vector<Rational>& v) {
  AffinePoint p{v};
  return point_text(p);
}

AffinePoint random_point(Rng& rng, unsigned n) {
  AffinePoint x;
  for (unsigned k = 0; k < n; ++k) x.coordinates.push_back(rng.small_rational());
  return x;
}

AffinePoint generic_point(const Derivation& d, Rng& rng) {
  for (;;) {
    AffinePoint x = random_point(rng, d.dimension());
    if (generic_locus_member(d, x)) return x;
  }
}

std::vector<Rational> random_vector(Rng& rng, unsigned size) {
  std::vector<Rational> v;
  for (unsigned k = 0; k < size; ++k) v.push_back(rng.small_rational());
  return v;
}

using Check = std::function<void(SuiteResult&)>;

void fail(SuiteResult& r, std::string witness) {
  if (!r.pass) return;
  r.pass = false;
  r.witness = std::move(witness);
}

std::string index_text(unsigned l, unsigned k) { return "l = " + std::to_string(l) + ", k = " + std::to_string(k); }

}  // namespace

std::vector<SuiteResult> run_property_suites(const Derivation& d, unsigned trials, std::uint64_t seed) {
  const unsigned deg = d.degree();
  const unsigned n = d.dimension();
  const Rng base(seed);
  const GammaForm p = chow_form(d);

  std::vector<std::pair<std::string, Check>> suites;

  suites.emplace_back("antisymmetry", [&](SuiteResult& r) {
    for (unsigned l = 0; l <= deg; ++l) {
      for (unsigned k = 0; k <= deg; ++k) {
        ++r.checks;
        if (!(f_lk(d, l, k) + f_lk(d, k, l)).is_zero()) fail(r, index_text(l, k));
      }
    }
  });

  suites.emplace_back("F-boundary", [&](SuiteResult& r) {
    for (unsigned k = 0; k <= deg; ++k) {
      r.checks += 2;
      if (!F_lk(d, 0, k).is_zero()) fail(r, "F_0k with k = " + std::to_string(k));
      if (!F_lk(d, k, deg).is_zero()) fail(r, "F_ld with l = " + std::to_string(k));
    }
  });

  suites.emplace_back("recursion-oracle", [&](SuiteResult& r) {
    for (unsigned l = 0; l <= deg; ++l) {
      for (unsigned k = 0; k <= deg; ++k) {
        ++r.checks;
        if (!(F_lk(d, l, k) == F_lk_recursive(d, l, k))) fail(r, index_text(l, k));
      }
    }
  });

  suites.emplace_back("tau", [&](SuiteResult& r) {
    ++r.checks;
    GammaForm expected = deg % 2 == 0 ? p : p * Rational(-1);
    if (!(tau_apply(p) == expected)) fail(r, "tau(P) != (-1)^d P");
  });

  suites.emplace_back("bidegree", [&](SuiteResult& r) {
    ++r.checks;
    auto bidegree = alpha_beta_bidegree(gamma_expand(p));
    if (!bidegree || bidegree->first != deg || bidegree->second != deg) fail(r, "gamma_expand(P) is not of bidegree (d, d)");
    std::optional<Rational> epsilon;
    for (unsigned j = 1; j <= n; ++j) {
      ++r.checks;
      MultiPoly top = pow(d.power(deg, j), deg);
      MultiPoly c = leading_gamma_coefficient(p, j, deg);
      if (top.is_zero()) {
        if (!c.is_zero()) fail(r, "leading coefficient for j = " + std::to_string(j) + " should vanish");
        continue;
      }
      if (!proportional(c, top)) {
        fail(r, "leading coefficient for j = " + std::to_string(j) + " is not a multiple of (δ^d x_j)^d");
        continue;
      }
      Rational ratio = c.leading_term().coefficient / top.leading_term().coefficient;
      if (ratio != 1 && ratio != -1) fail(r, "leading sign for j = " + std::to_string(j) + " is " + to_string(ratio));
      if (epsilon && *epsilon != ratio) fail(r, "leading signs differ at j = " + std::to_string(j));
      epsilon = ratio;
    }
  });

  suites.emplace_back("incidence-vanishing", [&](SuiteResult& r) {
    Rng rng = base.split("incidence");
    for (unsigned trial = 0; trial < trials && r.pass; ++trial) {
      ++r.checks;
      IncidenceWitness w = random_incidence_witness(d, rng);
      if (evaluate_form(p, w.x, w.alpha, w.beta) != 0) {
        fail(r, "x = " + point_text(w.x) + ", t = " + to_string(w.t) + ", alpha = " + vector_text(w.alpha) +
                    ", beta = " + vector_text(w.beta));
        break;
      }
      int strikes = 0;
      while (strikes < 3) {
        auto alpha = random_vector(rng, n + 1);
        auto beta = random_vector(rng, n + 1);
        if (evaluate_form(p, w.x, alpha, beta) != 0) break;
        ++strikes;
      }
      if (strikes == 3) fail(r, "P vanishes on three random pairs at x = " + point_text(w.x));
    }
  });

  suites.emplace_back("flow-additivity", [&](SuiteResult& r) {
    Rng rng = base.split("flow");
    for (unsigned trial = 0; trial < trials && r.pass; ++trial) {
      ++r.checks;
      AffinePoint x = random_point(rng, n);
      Rational s = rng.small_rational();
      Rational t = rng.small_rational();
      Rational sum = s + t;
      if (flow(d, flow(d, x, s), t).coordinates != flow(d, x, sum).coordinates)
        fail(r, "x = " + point_text(x) + ", s = " + to_string(s) + ", t = " + to_string(t));
    }
  });

  suites.emplace_back("slice-identity", [&](SuiteResult& r) {
    Rng rng = base.split("slice");
    for (unsigned trial = 0; trial < trials && r.pass; ++trial) {
      ++r.checks;
      AffinePoint x = generic_point(d, rng);
      Point pt = x.as_point(*d.table());
      unsigned j = 1;
      while (evaluate(d.power(deg, j), pt) == 0) ++j;
      AffinePoint y = slice_normalize(d, x, j);
      if (evaluate(d.power(deg - 1, j), y.as_point(*d.table())) != 0)
        fail(r, "x = " + point_text(x) + ", j = " + std::to_string(j));
    }
  });

  if (deg == 2) {
    suites.emplace_back("d2-identity", [&](SuiteResult& r) {
      ++r.checks;
      GammaForm shortcut = f_lk(d, 1, 0) * f_lk(d, 2, 1) * Rational(2) - f_lk(d, 2, 0) * f_lk(d, 2, 0);
      if (!(p == shortcut)) fail(r, "det(F) != 2 f_10 f_21 - f_20^2");
    });
  }

  std::vector<SuiteResult> results;
  for (auto& [name, check] : suites) {
    SuiteResult r;
    r.name = name;
    check(r);
    results.push_back(r);
    if (!r.pass) break;
  }
  return results;
}

}  // namespace chow
