#include "chow/var_table.hpp"

#include "chow/error.hpp"

namespace chow {

VarTable::VarTable(unsigned dimension, unsigned chart_vars)
    : dimension_(dimension), chart_count_(chart_vars) {
  if (dimension == 0) throw DomainError("dimension must be positive");
  auto add = [this](VarKind kind, unsigned first, unsigned second, std::string name) {
    by_name_.emplace(name, vars_.size());
    vars_.push_back(Variable{kind, first, second, std::move(name)});
  };
  for (unsigned j = 1; j <= dimension; ++j) add(VarKind::Coordinate, j, 0, "x" + std::to_string(j));
  chart_begin_ = vars_.size();
  for (unsigned k = 1; k <= chart_vars; ++k) add(VarKind::Chart, k, 0, "xi" + std::to_string(k));
  parameter_ = vars_.size();
  add(VarKind::Parameter, 0, 0, "t");
  alpha_begin_ = vars_.size();
  for (unsigned j = 0; j <= dimension; ++j) add(VarKind::Alpha, j, 0, "a" + std::to_string(j));
  beta_begin_ = vars_.size();
  for (unsigned j = 0; j <= dimension; ++j) add(VarKind::Beta, j, 0, "b" + std::to_string(j));
  gamma_begin_ = vars_.size();
  for (unsigned j1 = 0; j1 <= dimension; ++j1)
    for (unsigned j2 = j1 + 1; j2 <= dimension; ++j2)
      add(VarKind::Gamma, j1, j2, "g{" + std::to_string(j1) + "," + std::to_string(j2) + "}");
}

VarTable::Ptr VarTable::create(unsigned dimension, unsigned chart_vars) {
  return Ptr(new VarTable(dimension, chart_vars));
}

VarId VarTable::coordinate(unsigned j) const {
  if (j < 1 || j > dimension_) throw DomainError("coordinate index out of range: " + std::to_string(j));
  return j - 1;
}

VarId VarTable::chart(unsigned k) const {
  if (k < 1 || k > chart_count_) throw DomainError("chart variable index out of range: " + std::to_string(k));
  return chart_begin_ + k - 1;
}

VarId VarTable::alpha(unsigned j) const {
  if (j > dimension_) throw DomainError("alpha index out of range: " + std::to_string(j));
  return alpha_begin_ + j;
}

VarId VarTable::beta(unsigned j) const {
  if (j > dimension_) throw DomainError("beta index out of range: " + std::to_string(j));
  return beta_begin_ + j;
}

VarId VarTable::gamma(unsigned j1, unsigned j2) const {
  if (j1 >= j2 || j2 > dimension_)
    throw DomainError("gamma index out of range: {" + std::to_string(j1) + "," + std::to_string(j2) + "}");
  // pairs (j1, j2) enumerated row by row
  std::size_t row_offset = 0;
  for (unsigned r = 0; r < j1; ++r) row_offset += dimension_ - r;
  return gamma_begin_ + row_offset + (j2 - j1 - 1);
}

std::optional<VarId> VarTable::find(std::string_view name) const {
  auto it = by_name_.find(name);
  if (it == by_name_.end()) return std::nullopt;
  return it->second;
}

}  // namespace chow
