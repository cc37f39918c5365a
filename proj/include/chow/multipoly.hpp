#pragma once

#include <map>
#include <optional>
#include <ostream>
#include <span>
#include <string>
#include <utility>
#include <vector>

#include "chow/monomial.hpp"
#include "chow/rational.hpp"
#include "chow/var_table.hpp"

namespace chow {

struct Term {
  Monomial monomial;
  Rational coefficient;
};

// Sparse multivariate polynomial with rational coefficients.
//
// Terms are kept sorted in descending grevlex order with no zero
// coefficients, so two polynomials are equal iff their term lists are.
class MultiPoly {
 public:
  using TablePtr = VarTable::Ptr;

  explicit MultiPoly(TablePtr table);  // zero polynomial

  static MultiPoly constant(TablePtr table, const Rational& value);
  static MultiPoly variable(TablePtr table, VarId var, Exponent power = 1);
  static MultiPoly monomial(TablePtr table, Monomial mono, const Rational& coefficient);
  // Accepts terms in any order, possibly repeated or zero.
  static MultiPoly from_terms(TablePtr table, std::vector<Term> terms);

  const TablePtr& table() const noexcept { return table_; }
  std::span<const Term> terms() const noexcept { return terms_; }
  std::size_t size() const noexcept { return terms_.size(); }
  bool is_zero() const noexcept { return terms_.empty(); }
  bool is_constant() const noexcept;
  // Value of the constant term (zero if absent).
  Rational constant_term() const;

  // Precondition: nonzero.
  const Term& leading_term() const;

  std::uint64_t total_degree() const noexcept;
  Exponent degree_in(VarId var) const noexcept;
  bool involves(VarId var) const noexcept;
  std::vector<VarId> variables() const;

  MultiPoly operator-() const;
  MultiPoly& operator+=(const MultiPoly& other);
  MultiPoly& operator-=(const MultiPoly& other);
  MultiPoly& operator*=(const MultiPoly& other);
  MultiPoly& operator*=(const Rational& scalar);

  friend MultiPoly operator+(MultiPoly a, const MultiPoly& b) { return a += b; }
  friend MultiPoly operator-(MultiPoly a, const MultiPoly& b) { return a -= b; }
  friend MultiPoly operator*(const MultiPoly& a, const MultiPoly& b);
  friend MultiPoly operator*(MultiPoly a, const Rational& s) { return a *= s; }
  friend MultiPoly operator*(const Rational& s, MultiPoly a) { return a *= s; }

  friend bool operator==(const MultiPoly& a, const MultiPoly& b);

 private:
  void check_table(const MultiPoly& other) const;

  TablePtr table_;
  std::vector<Term> terms_;
};

MultiPoly pow(const MultiPoly& base, unsigned exponent);

MultiPoly differentiate(const MultiPoly& p, VarId var);

using Substitution = std::map<VarId, MultiPoly>;
using Point = std::map<VarId, Rational>;

// Simultaneous substitution: every occurrence of a key is replaced by its image.
MultiPoly substitute(const MultiPoly& p, const Substitution& assignment);

// Replaces only the assigned variables by values; the rest stay symbolic.
MultiPoly partial_evaluate(const MultiPoly& p, const Point& point);

// Throws DomainError if a variable occurring in p is unassigned.
Rational evaluate(const MultiPoly& p, const Point& point);

// r with r * q == p, or nullopt if q does not divide p.
// Throws DomainError when q is zero.
std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q);

// True iff p == c * q for some nonzero rational c (also true for 0, 0).
bool proportional(const MultiPoly& p, const MultiPoly& q);

struct ContentSplit {
  MultiPoly reduced;
  std::vector<std::pair<MultiPoly, unsigned>> removed;  // only candidates with power > 0
};

// Strips each candidate from p as many times as it divides.
ContentSplit content_trial_division(const MultiPoly& p, std::span<const MultiPoly> candidates);

// Scales p to integer coefficients with gcd 1 and a positive leading coefficient.
MultiPoly normalize_content(const MultiPoly& p);

// Scales p to a monic leading coefficient.
MultiPoly make_monic(const MultiPoly& p);

// Canonical text form: terms in descending grevlex order, re-parseable.
std::string to_string(const MultiPoly& p);
std::ostream& operator<<(std::ostream& os, const MultiPoly& p);

// Text of a single monomial times a coefficient, used by the printers.
std::string format_term(const VarTable& table, const Monomial& mono, const Rational& coefficient,
                        bool first);

}  // namespace chow
