#pragma once

#include <optional>
#include <ostream>
#include <string>
#include <utility>

#include "chow/multipoly.hpp"

namespace chow {

// Polynomial in the Plücker-type symbols g{j1,j2} (j1 < j2) whose
// coefficients are polynomials in the coordinate and chart variables.
//
// g{j1,j2} stands for γ_{j1 j2} = β_{j1} α_{j2} - β_{j2} α_{j1}; the
// partner γ_{j2 j1} is -g{j1,j2}. Distinct γ-representations can denote the
// same (α, β)-form because of the Plücker relations, so comparisons against
// outside formulas must go through gamma_expand.
class GammaForm {
 public:
  // Throws DomainError if poly involves α, β or t.
  explicit GammaForm(MultiPoly poly);
  static GammaForm zero(VarTable::Ptr table) { return GammaForm(MultiPoly(std::move(table))); }

  const MultiPoly& poly() const noexcept { return poly_; }
  const VarTable::Ptr& table() const noexcept { return poly_.table(); }
  bool is_zero() const noexcept { return poly_.is_zero(); }

  // Maximal total degree in the g variables over all terms.
  unsigned gamma_degree() const noexcept;
  bool is_gamma_homogeneous() const noexcept;

  GammaForm operator-() const { return GammaForm(-poly_); }
  friend GammaForm operator+(const GammaForm& a, const GammaForm& b) { return GammaForm(a.poly_ + b.poly_); }
  friend GammaForm operator-(const GammaForm& a, const GammaForm& b) { return GammaForm(a.poly_ - b.poly_); }
  friend GammaForm operator*(const GammaForm& a, const GammaForm& b) { return GammaForm(a.poly_ * b.poly_); }
  friend GammaForm operator*(const GammaForm& a, const Rational& s) { return GammaForm(a.poly_ * s); }
  friend GammaForm operator*(const GammaForm& a, const MultiPoly& s) { return GammaForm(a.poly_ * s); }
  friend bool operator==(const GammaForm& a, const GammaForm& b) { return a.poly_ == b.poly_; }

 private:
  MultiPoly poly_;
};

unsigned gamma_degree(const VarTable& table, const Monomial& mono);

// Canonical text: terms by descending γ-degree, then the γ block, then the
// x block, each in grevlex. The text parses back to the same form.
std::string to_string(const GammaForm& g);
std::ostream& operator<<(std::ostream& os, const GammaForm& g);

// Replace every g{j1,j2} by b_{j1} a_{j2} - b_{j2} a_{j1}.
MultiPoly gamma_expand(const GammaForm& g);

// Inverse of gamma_expand on the Plücker algebra: rewrites an (α, β)-form
// with coordinate coefficients as a γ-form by subduction against the
// diagonal leading terms b_i a_j (i < j). Throws DomainError if the form is
// not a polynomial in the γ symbols.
GammaForm gamma_collapse(const MultiPoly& expanded);

// Image under α <-> β, which sends each γ to -γ.
GammaForm tau_apply(const GammaForm& g);

// x-coefficient of γ_{j0}^power, with γ_{j0} = -g{0,j}.
MultiPoly leading_gamma_coefficient(const GammaForm& g, unsigned j, unsigned power);

// True iff no g{0,j} occurs, i.e. the cycle lies in {X_0 = 0}.
bool at_infinity(const GammaForm& g);

// Coefficient of the γ-monomial written as a g-only polynomial term.
MultiPoly gamma_coefficient(const GammaForm& g, const Monomial& gamma_part);

// (deg in α, deg in β) if p is bihomogeneous in those blocks.
std::optional<std::pair<unsigned, unsigned>> alpha_beta_bidegree(const MultiPoly& p);

// Proportionality after gamma_expand.
bool proportional_forms(const GammaForm& a, const GammaForm& b);

// Scales to integer content with positive leading coefficient in the
// canonical γ-form order.
GammaForm normalize(const GammaForm& g);

}  // namespace chow
