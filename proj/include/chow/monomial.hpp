#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "chow/var_table.hpp"

namespace chow {

using Exponent = std::uint32_t;

// Dense exponent vector over a VarTable, with cached total degree.
class Monomial {
 public:
  Monomial() = default;
  explicit Monomial(std::size_t nvars) : exps_(nvars, 0) {}
  explicit Monomial(std::vector<Exponent> exps);

  static Monomial unit(std::size_t nvars, VarId var, Exponent power = 1);

  std::size_t size() const noexcept { return exps_.size(); }
  Exponent operator[](VarId var) const { return exps_[var]; }
  std::uint64_t degree() const noexcept { return degree_; }
  bool is_one() const noexcept { return degree_ == 0; }
  const std::vector<Exponent>& exponents() const noexcept { return exps_; }

  bool divides(const Monomial& other) const;

  // Throws DomainError on exponent overflow.
  friend Monomial operator*(const Monomial& a, const Monomial& b);
  // Precondition: b divides a.
  friend Monomial operator/(const Monomial& a, const Monomial& b);

  friend bool operator==(const Monomial& a, const Monomial& b) {
    return a.degree_ == b.degree_ && a.exps_ == b.exps_;
  }

  std::size_t hash() const noexcept;

 private:
  std::vector<Exponent> exps_;
  std::uint64_t degree_ = 0;
};

// Graded reverse lexicographic order over the table's variable order:
// negative if a < b, zero if equal, positive if a > b.
int grevlex_compare(const Monomial& a, const Monomial& b);

struct GrevlexGreater {
  bool operator()(const Monomial& a, const Monomial& b) const { return grevlex_compare(a, b) > 0; }
};

struct MonomialHash {
  std::size_t operator()(const Monomial& m) const noexcept { return m.hash(); }
};

}  // namespace chow
