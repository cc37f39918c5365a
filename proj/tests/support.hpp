#pragma once

#include <string>
#include <vector>

#include "chow/gamma_form.hpp"
#include "chow/multipoly.hpp"
#include "chow/parser.hpp"
#include "chow/random.hpp"

namespace chow::testing {

inline MultiPoly P(const VarTable::Ptr& table, std::string_view text) { return parse_poly(text, table); }
inline GammaForm G(const VarTable::Ptr& table, std::string_view text) { return GammaForm(parse_poly(text, table)); }

inline std::string g(unsigned i, unsigned j) { return "g{" + std::to_string(i) + "," + std::to_string(j) + "}"; }

// "(term(0))*x0 + ... + (term(last))*x_last" in parser syntax
template <class F>
std::string sum_x(unsigned last, F term) {
  std::string out;
  for (unsigned j = 0; j <= last; ++j) {
    if (j > 0) out += " + ";
    out += "(" + term(j) + ")*x" + std::to_string(j);
  }
  return out;
}

// Random polynomial over the given variables: up to max_terms terms with
// per-variable degree <= max_degree and small rational coefficients.
inline MultiPoly random_poly(const VarTable::Ptr& table, Rng& rng, const std::vector<VarId>& vars,
                             int max_terms = 4, unsigned max_degree = 2) {
  std::vector<Term> terms;
  long count = rng.uniform_int(0, max_terms);
  for (long i = 0; i < count; ++i) {
    Monomial m(table->size());
    std::vector<Exponent> e(table->size(), 0);
    for (VarId v : vars) e[v] = static_cast<Exponent>(rng.uniform_int(0, max_degree));
    terms.push_back(Term{Monomial(std::move(e)), rng.small_rational()});
  }
  return MultiPoly::from_terms(table, std::move(terms));
}

inline MultiPoly random_nonzero_poly(const VarTable::Ptr& table, Rng& rng, const std::vector<VarId>& vars,
                                     int max_terms = 4, unsigned max_degree = 2) {
  for (;;) {
    MultiPoly p = random_poly(table, rng, vars, max_terms, max_degree);
    if (!p.is_zero()) return p;
  }
}

}  // namespace chow::testing
