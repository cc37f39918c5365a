#include "chow/derivation.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

void require_coordinate_only(const MultiPoly& p, const char* what) {
  for (VarId v : p.variables())
    if (p.table()->kind(v) != VarKind::Coordinate)
      throw DomainError(std::string(what) + " involves non-coordinate variable " + p.table()->name(v));
}

}  // namespace

Point AffinePoint::as_point(const VarTable& table) const {
  if (coordinates.size() != table.dimension())
    throw DomainError("point has " + std::to_string(coordinates.size()) + " coordinates, expected " +
                      std::to_string(table.dimension()));
  Point pt;
  for (unsigned j = 1; j <= table.dimension(); ++j) pt.emplace(table.coordinate(j), coordinates[j - 1]);
  return pt;
}

Derivation::Derivation(VarTable::Ptr table, std::vector<MultiPoly> generators, std::size_t bound)
    : table_(std::move(table)), generators_(std::move(generators)) {
  if (!table_) throw DomainError("derivation requires a variable table");
  if (generators_.size() != table_->dimension())
    throw DomainError("derivation needs " + std::to_string(table_->dimension()) + " generators, got " +
                      std::to_string(generators_.size()));
  for (const auto& g : generators_) {
    if (g.table() != table_ && !g.table()->same_as(*table_)) throw DomainError("generator over a different table");
    require_coordinate_only(g, "generator");
  }
  coordinates_.push_back(MultiPoly::constant(table_, Rational(1)));
  for (unsigned j = 1; j <= table_->dimension(); ++j) {
    coordinates_.push_back(MultiPoly::variable(table_, table_->coordinate(j)));
    free_.push_back(j);
  }
  build(bound);
}

Derivation::Derivation(VarTable::Ptr table, std::vector<MultiPoly> generators, std::vector<MultiPoly> coordinates,
                       std::vector<unsigned> free, Substitution stratum, std::size_t bound)
    : table_(std::move(table)),
      generators_(std::move(generators)),
      coordinates_(std::move(coordinates)),
      free_(std::move(free)),
      stratum_(std::move(stratum)) {
  build(bound);
}

void Derivation::build(std::size_t bound) {
  if (bound < 1) throw DomainError("nilpotency bound must be positive");
  const unsigned n = table_->dimension();
  powers_.clear();
  powers_.push_back(coordinates_);
  for (std::size_t k = 1;; ++k) {
    std::vector<MultiPoly> row;
    row.reserve(n + 1);
    row.push_back(MultiPoly(table_));
    bool all_zero = true;
    for (unsigned j = 1; j <= n; ++j) {
      row.push_back(apply(powers_.back()[j]));
      all_zero = all_zero && row.back().is_zero();
    }
    powers_.push_back(std::move(row));
    if (all_zero) {
      degree_ = static_cast<unsigned>(k - 1);
      return;
    }
    if (k > bound) throw NotNilpotentError();
  }
}

const MultiPoly& Derivation::generator(unsigned j) const {
  if (j < 1 || j > dimension()) throw DomainError("generator index out of range");
  return generators_[j - 1];
}

const MultiPoly& Derivation::coordinate(unsigned j) const {
  if (j > dimension()) throw DomainError("coordinate index out of range");
  return coordinates_[j];
}

const MultiPoly& Derivation::power(unsigned k, unsigned j) const {
  if (k >= powers_.size() || j > dimension()) throw DomainError("power table index out of range");
  return powers_[k][j];
}

MultiPoly Derivation::apply(const MultiPoly& p) const {
  require_coordinate_only(p, "argument of the derivation");
  MultiPoly out(table_);
  for (unsigned j = 1; j <= dimension(); ++j) {
    const MultiPoly& g = generators_[j - 1];
    if (g.is_zero()) continue;
    VarId v = table_->coordinate(j);
    if (!p.involves(v)) continue;
    out += g * differentiate(p, v);
  }
  return out;
}

MultiPoly apply_delta(const Derivation& d, const MultiPoly& p) { return d.apply(p); }

unsigned nilpotency_degree(const VarTable::Ptr& table, std::span<const MultiPoly> generators, std::size_t bound) {
  return Derivation(table, std::vector<MultiPoly>(generators.begin(), generators.end()), bound).degree();
}

namespace {

std::vector<std::vector<Rational>> evaluate_powers(const Derivation& d, const AffinePoint& x) {
  Point pt = x.as_point(*d.table());
  std::vector<std::vector<Rational>> values;
  for (unsigned k = 0; k <= d.degree(); ++k) {
    std::vector<Rational> row;
    for (unsigned j = 0; j <= d.dimension(); ++j) row.push_back(evaluate(d.power(k, j), pt));
    values.push_back(std::move(row));
  }
  return values;
}

}  // namespace

AffinePoint flow(const Derivation& d, const AffinePoint& x, const Rational& t) {
  auto values = evaluate_powers(d, x);
  AffinePoint out;
  out.coordinates.assign(d.dimension(), Rational(0));
  Rational weight = 1;  // t^k / k!
  for (unsigned k = 0; k <= d.degree(); ++k) {
    if (k > 0) weight = weight * t / k;
    for (unsigned j = 1; j <= d.dimension(); ++j) out.coordinates[j - 1] += weight * values[k][j];
  }
  return out;
}

bool generic_locus_member(const Derivation& d, const AffinePoint& x) {
  Point pt = x.as_point(*d.table());
  for (unsigned j = 1; j <= d.dimension(); ++j)
    if (evaluate(d.power(d.degree(), j), pt) != 0) return true;
  return false;
}

Rational slice_time(const Derivation& d, const AffinePoint& x, unsigned j) {
  if (j < 1 || j > d.dimension()) throw DomainError("slice coordinate index out of range");
  if (d.degree() == 0) throw DomainError("slice requires a derivation of positive degree");
  Point pt = x.as_point(*d.table());
  Rational top = evaluate(d.power(d.degree(), j), pt);
  if (top == 0)
    throw DomainError("point not in chart {delta^" + std::to_string(d.degree()) + " x" + std::to_string(j) +
                      " != 0}");
  return evaluate(d.power(d.degree() - 1, j), pt) / top;
}

AffinePoint slice_normalize(const Derivation& d, const AffinePoint& x, unsigned j) {
  Rational t = slice_time(d, x, j);
  return flow(d, x, -t);
}

bool fixed_point_check(const Derivation& d, const AffinePoint& x) {
  Point pt = x.as_point(*d.table());
  for (unsigned j = 1; j <= d.dimension(); ++j)
    if (evaluate(d.generator(j), pt) != 0) return false;
  return true;
}

Derivation restrict_derivation(const Derivation& d, const Substitution& sub, std::size_t bound) {
  const auto& table = d.table();
  for (const auto& [var, image] : sub) {
    if (var >= table->size() || table->kind(var) != VarKind::Coordinate)
      throw DomainError("stratum substitution must replace coordinate variables");
    unsigned j = (*table)[var].first;
    if (std::find(d.free_coordinates().begin(), d.free_coordinates().end(), j) == d.free_coordinates().end())
      throw DomainError("substitution not well-formed: " + table->name(var) + " is already fixed");
    require_coordinate_only(image, "stratum substitution");
    for (const auto& [other, unused] : sub)
      if (image.involves(other)) throw DomainError("substitution not well-formed: image involves a replaced variable");
  }

  for (const auto& [var, image] : sub) {
    unsigned j = (*table)[var].first;
    MultiPoly defect = substitute(d.generator(j) - d.apply(image), sub);
    if (!defect.is_zero()) throw DomainError("substitution not invariant: " + table->name(var));
  }

  std::vector<unsigned> free;
  for (unsigned j : d.free_coordinates())
    if (!sub.contains(table->coordinate(j))) free.push_back(j);

  std::vector<MultiPoly> coordinates;
  for (unsigned j = 0; j <= d.dimension(); ++j) coordinates.push_back(substitute(d.coordinate(j), sub));

  std::vector<MultiPoly> generators(d.dimension(), MultiPoly(table));
  for (unsigned j : free) generators[j - 1] = substitute(d.generator(j), sub);

  // fixed coordinates move along the stratum as their coordinate functions do
  for (unsigned j = 1; j <= d.dimension(); ++j) {
    if (std::find(free.begin(), free.end(), j) != free.end()) continue;
    MultiPoly value(table);
    for (unsigned f : free) {
      VarId v = table->coordinate(f);
      if (coordinates[j].involves(v)) value += generators[f - 1] * differentiate(coordinates[j], v);
    }
    generators[j - 1] = std::move(value);
  }

  Substitution stratum;
  for (const auto& [var, image] : d.stratum()) stratum.emplace(var, substitute(image, sub));
  for (const auto& [var, image] : sub) stratum.emplace(var, image);

  return Derivation(table, std::move(generators), std::move(coordinates), std::move(free), std::move(stratum), bound);
}

}  // namespace chow
