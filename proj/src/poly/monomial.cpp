#include "chow/monomial.hpp"

#include <limits>

#include "chow/error.hpp"

namespace chow {

Monomial::Monomial(std::vector<Exponent> exps) : exps_(std::move(exps)) {
  for (Exponent e : exps_) degree_ += e;
}

Monomial Monomial::unit(std::size_t nvars, VarId var, Exponent power) {
  Monomial m(nvars);
  m.exps_.at(var) = power;
  m.degree_ = power;
  return m;
}

bool Monomial::divides(const Monomial& other) const {
  if (degree_ > other.degree_) return false;
  for (std::size_t i = 0; i < exps_.size(); ++i)
    if (exps_[i] > other.exps_[i]) return false;
  return true;
}

Monomial operator*(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) {
    std::uint64_t e = std::uint64_t{a.exps_[i]} + b.exps_[i];
    if (e > std::numeric_limits<Exponent>::max()) throw DomainError("exponent overflow");
    r.exps_[i] = static_cast<Exponent>(e);
  }
  r.degree_ = a.degree_ + b.degree_;
  return r;
}

Monomial operator/(const Monomial& a, const Monomial& b) {
  Monomial r;
  r.exps_.resize(a.exps_.size());
  for (std::size_t i = 0; i < a.exps_.size(); ++i) r.exps_[i] = a.exps_[i] - b.exps_[i];
  r.degree_ = a.degree_ - b.degree_;
  return r;
}

std::size_t Monomial::hash() const noexcept {
  std::size_t h = 1469598103934665603ull;
  for (Exponent e : exps_) {
    h ^= e;
    h *= 1099511628211ull;
  }
  return h;
}

int grevlex_compare(const Monomial& a, const Monomial& b) {
  if (a.degree() != b.degree()) return a.degree() > b.degree() ? 1 : -1;
  for (std::size_t i = a.size(); i-- > 0;) {
    if (a[i] != b[i]) return a[i] < b[i] ? 1 : -1;
  }
  return 0;
}

}  // namespace chow
