#pragma once

#include <cstddef>
#include <map>
#include <memory>
#include <optional>
#include <string>
#include <string_view>
#include <vector>

namespace chow {

using VarId = std::size_t;

enum class VarKind { Coordinate, Chart, Parameter, Alpha, Beta, Gamma };

struct Variable {
  VarKind kind;
  unsigned first = 0;   // coordinate/chart/alpha/beta index, or j1 of g{j1,j2}
  unsigned second = 0;  // j2 of g{j1,j2}
  std::string name;
};

// Fixed, ordered variable set for ambient dimension n:
//
//   x1..xn, xi1..xim, t, a0..an, b0..bn, g{0,1}, g{0,2}, ..., g{n-1,n}
//
// The order never changes and drives the canonical monomial order. The affine
// chart constant x0 is not a variable; the parser reads it as 1.
class VarTable {
 public:
  using Ptr = std::shared_ptr<const VarTable>;

  static Ptr create(unsigned dimension, unsigned chart_vars = 2);

  unsigned dimension() const noexcept { return dimension_; }
  unsigned chart_count() const noexcept { return chart_count_; }
  std::size_t size() const noexcept { return vars_.size(); }
  const Variable& operator[](VarId id) const { return vars_.at(id); }
  const std::string& name(VarId id) const { return vars_.at(id).name; }
  VarKind kind(VarId id) const { return vars_.at(id).kind; }

  // Index accessors; throw DomainError when out of range.
  VarId coordinate(unsigned j) const;  // 1 <= j <= n
  VarId chart(unsigned k) const;       // 1 <= k <= m
  VarId parameter() const noexcept { return parameter_; }
  VarId alpha(unsigned j) const;       // 0 <= j <= n
  VarId beta(unsigned j) const;        // 0 <= j <= n
  VarId gamma(unsigned j1, unsigned j2) const;  // 0 <= j1 < j2 <= n

  std::optional<VarId> find(std::string_view name) const;

  bool same_as(const VarTable& other) const noexcept {
    return dimension_ == other.dimension_ && chart_count_ == other.chart_count_;
  }

 private:
  VarTable(unsigned dimension, unsigned chart_vars);

  unsigned dimension_;
  unsigned chart_count_;
  std::vector<Variable> vars_;
  std::map<std::string, VarId, std::less<>> by_name_;
  VarId chart_begin_ = 0;
  VarId parameter_ = 0;
  VarId alpha_begin_ = 0;
  VarId beta_begin_ = 0;
  VarId gamma_begin_ = 0;
};

}  // namespace chow
