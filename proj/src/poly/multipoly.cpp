#include "chow/multipoly.hpp"

#include <algorithm>
#include <sstream>
#include <unordered_map>

#include "chow/error.hpp"

namespace chow {

namespace {

void sort_and_merge(std::vector<Term>& terms) {
  std::sort(terms.begin(), terms.end(), [](const Term& a, const Term& b) {
    return grevlex_compare(a.monomial, b.monomial) > 0;
  });
  std::vector<Term> merged;
  merged.reserve(terms.size());
  for (auto& t : terms) {
    if (!merged.empty() && merged.back().monomial == t.monomial) {
      merged.back().coefficient += t.coefficient;
    } else {
      if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
      merged.push_back(std::move(t));
    }
  }
  if (!merged.empty() && merged.back().coefficient == 0) merged.pop_back();
  terms = std::move(merged);
}

// Merge two descending term lists; sign = +1 or -1 applied to b.
std::vector<Term> merge_terms(std::span<const Term> a, std::span<const Term> b, int sign) {
  std::vector<Term> out;
  out.reserve(a.size() + b.size());
  std::size_t i = 0;
  std::size_t j = 0;
  while (i < a.size() && j < b.size()) {
    int c = grevlex_compare(a[i].monomial, b[j].monomial);
    if (c > 0) {
      out.push_back(a[i++]);
    } else if (c < 0) {
      out.push_back(b[j++]);
      if (sign < 0) out.back().coefficient = -out.back().coefficient;
    } else {
      Rational s = a[i].coefficient;
      if (sign > 0) {
        s += b[j].coefficient;
      } else {
        s -= b[j].coefficient;
      }
      if (s != 0) out.push_back(Term{a[i].monomial, std::move(s)});
      ++i;
      ++j;
    }
  }
  for (; i < a.size(); ++i) out.push_back(a[i]);
  for (; j < b.size(); ++j) {
    out.push_back(b[j]);
    if (sign < 0) out.back().coefficient = -out.back().coefficient;
  }
  return out;
}

std::vector<Exponent> max_exponents(const MultiPoly& p) {
  std::vector<Exponent> m(p.table()->size(), 0);
  for (const auto& t : p.terms())
    for (std::size_t v = 0; v < m.size(); ++v) m[v] = std::max(m[v], t.monomial[v]);
  return m;
}

}  // namespace

MultiPoly::MultiPoly(TablePtr table) : table_(std::move(table)) {
  if (!table_) throw DomainError("polynomial requires a variable table");
}

MultiPoly MultiPoly::constant(TablePtr table, const Rational& value) {
  MultiPoly p(std::move(table));
  if (value != 0) p.terms_.push_back(Term{Monomial(p.table_->size()), value});
  return p;
}

MultiPoly MultiPoly::variable(TablePtr table, VarId var, Exponent power) {
  MultiPoly p(std::move(table));
  if (var >= p.table_->size()) throw DomainError("unknown variable id");
  p.terms_.push_back(Term{Monomial::unit(p.table_->size(), var, power), Rational(1)});
  return p;
}

MultiPoly MultiPoly::monomial(TablePtr table, Monomial mono, const Rational& coefficient) {
  MultiPoly p(std::move(table));
  if (mono.size() != p.table_->size()) throw DomainError("monomial size does not match table");
  if (coefficient != 0) p.terms_.push_back(Term{std::move(mono), coefficient});
  return p;
}

MultiPoly MultiPoly::from_terms(TablePtr table, std::vector<Term> terms) {
  MultiPoly p(std::move(table));
  for (const auto& t : terms)
    if (t.monomial.size() != p.table_->size()) throw DomainError("monomial size does not match table");
  sort_and_merge(terms);
  p.terms_ = std::move(terms);
  return p;
}

bool MultiPoly::is_constant() const noexcept {
  return terms_.empty() || (terms_.size() == 1 && terms_.front().monomial.is_one());
}

Rational MultiPoly::constant_term() const {
  if (!terms_.empty() && terms_.back().monomial.is_one()) return terms_.back().coefficient;
  return Rational(0);
}

const Term& MultiPoly::leading_term() const {
  if (terms_.empty()) throw DomainError("leading term of zero polynomial");
  return terms_.front();
}

std::uint64_t MultiPoly::total_degree() const noexcept {
  // grevlex is degree-first, so the leading term has maximal degree
  return terms_.empty() ? 0 : terms_.front().monomial.degree();
}

Exponent MultiPoly::degree_in(VarId var) const noexcept {
  Exponent d = 0;
  for (const auto& t : terms_) d = std::max(d, t.monomial[var]);
  return d;
}

bool MultiPoly::involves(VarId var) const noexcept {
  return std::any_of(terms_.begin(), terms_.end(), [var](const Term& t) { return t.monomial[var] > 0; });
}

std::vector<VarId> MultiPoly::variables() const {
  std::vector<VarId> out;
  std::vector<Exponent> m = max_exponents(*this);
  for (VarId v = 0; v < m.size(); ++v)
    if (m[v] > 0) out.push_back(v);
  return out;
}

void MultiPoly::check_table(const MultiPoly& other) const {
  if (table_ != other.table_ && !table_->same_as(*other.table_))
    throw DomainError("polynomials over different variable tables");
}

MultiPoly MultiPoly::operator-() const {
  MultiPoly r = *this;
  for (auto& t : r.terms_) t.coefficient = -t.coefficient;
  return r;
}

MultiPoly& MultiPoly::operator+=(const MultiPoly& other) {
  check_table(other);
  terms_ = merge_terms(terms_, other.terms_, +1);
  return *this;
}

MultiPoly& MultiPoly::operator-=(const MultiPoly& other) {
  check_table(other);
  terms_ = merge_terms(terms_, other.terms_, -1);
  return *this;
}

MultiPoly& MultiPoly::operator*=(const MultiPoly& other) {
  *this = *this * other;
  return *this;
}

MultiPoly& MultiPoly::operator*=(const Rational& scalar) {
  if (scalar == 0) {
    terms_.clear();
  } else {
    for (auto& t : terms_) t.coefficient *= scalar;
  }
  return *this;
}

MultiPoly operator*(const MultiPoly& a, const MultiPoly& b) {
  a.check_table(b);
  MultiPoly r(a.table_);
  if (a.is_zero() || b.is_zero()) return r;
  // multiplying by a single term preserves the order
  if (a.terms_.size() == 1 || b.terms_.size() == 1) {
    const Term& s = a.terms_.size() == 1 ? a.terms_.front() : b.terms_.front();
    const MultiPoly& other = a.terms_.size() == 1 ? b : a;
    r.terms_.reserve(other.terms_.size());
    for (const auto& t : other.terms_)
      r.terms_.push_back(Term{t.monomial * s.monomial, t.coefficient * s.coefficient});
    return r;
  }
  std::unordered_map<Monomial, Rational, MonomialHash> acc;
  acc.reserve(a.terms_.size() * b.terms_.size());
  for (const auto& ta : a.terms_) {
    for (const auto& tb : b.terms_) {
      auto [it, inserted] = acc.try_emplace(ta.monomial * tb.monomial);
      it->second += ta.coefficient * tb.coefficient;
    }
  }
  std::vector<Term> terms;
  terms.reserve(acc.size());
  for (auto& [mono, coef] : acc)
    if (coef != 0) terms.push_back(Term{mono, std::move(coef)});
  std::sort(terms.begin(), terms.end(), [](const Term& x, const Term& y) {
    return grevlex_compare(x.monomial, y.monomial) > 0;
  });
  r.terms_ = std::move(terms);
  return r;
}

bool operator==(const MultiPoly& a, const MultiPoly& b) {
  if (a.table_ != b.table_ && !a.table_->same_as(*b.table_)) return false;
  if (a.terms_.size() != b.terms_.size()) return false;
  for (std::size_t i = 0; i < a.terms_.size(); ++i) {
    if (!(a.terms_[i].monomial == b.terms_[i].monomial)) return false;
    if (a.terms_[i].coefficient != b.terms_[i].coefficient) return false;
  }
  return true;
}

MultiPoly pow(const MultiPoly& base, unsigned exponent) {
  MultiPoly result = MultiPoly::constant(base.table(), Rational(1));
  MultiPoly square = base;
  while (exponent > 0) {
    if (exponent & 1u) result *= square;
    exponent >>= 1u;
    if (exponent > 0) square = square * square;
  }
  return result;
}

MultiPoly differentiate(const MultiPoly& p, VarId var) {
  if (var >= p.table()->size()) throw DomainError("unknown variable id");
  std::vector<Term> out;
  for (const auto& t : p.terms()) {
    Exponent e = t.monomial[var];
    if (e == 0) continue;
    std::vector<Exponent> exps = t.monomial.exponents();
    exps[var] -= 1;
    out.push_back(Term{Monomial(std::move(exps)), t.coefficient * e});
  }
  return MultiPoly::from_terms(p.table(), std::move(out));
}

MultiPoly substitute(const MultiPoly& p, const Substitution& assignment) {
  const auto& table = p.table();
  std::vector<VarId> replaced;
  for (const auto& [var, image] : assignment) {
    if (var >= table->size()) throw DomainError("unknown variable id in substitution");
    if (image.table() != table && !image.table()->same_as(*table))
      throw DomainError("substitution image over a different table");
    if (p.involves(var)) replaced.push_back(var);
  }
  if (replaced.empty()) return p;

  // group terms by the exponents of the replaced variables
  std::map<std::vector<Exponent>, std::vector<Term>> groups;
  for (const auto& t : p.terms()) {
    std::vector<Exponent> key;
    key.reserve(replaced.size());
    std::vector<Exponent> rest = t.monomial.exponents();
    for (VarId v : replaced) {
      key.push_back(rest[v]);
      rest[v] = 0;
    }
    groups[key].push_back(Term{Monomial(std::move(rest)), t.coefficient});
  }

  std::map<std::pair<VarId, Exponent>, MultiPoly> power_cache;
  auto power_of = [&](VarId v, Exponent e) -> const MultiPoly& {
    auto key = std::make_pair(v, e);
    auto it = power_cache.find(key);
    if (it == power_cache.end()) it = power_cache.emplace(key, pow(assignment.at(v), e)).first;
    return it->second;
  };

  MultiPoly result(table);
  for (auto& [key, terms] : groups) {
    MultiPoly factor = MultiPoly::constant(table, Rational(1));
    for (std::size_t i = 0; i < replaced.size(); ++i)
      if (key[i] > 0) factor *= power_of(replaced[i], key[i]);
    result += factor * MultiPoly::from_terms(table, std::move(terms));
  }
  return result;
}

MultiPoly partial_evaluate(const MultiPoly& p, const Point& point) {
  std::vector<Term> out;
  out.reserve(p.size());
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    std::vector<Exponent> rest = t.monomial.exponents();
    for (const auto& [var, value] : point) {
      if (var >= rest.size()) throw DomainError("unknown variable id in point");
      if (rest[var] > 0) {
        c *= pow(value, rest[var]);
        rest[var] = 0;
      }
    }
    if (c != 0) out.push_back(Term{Monomial(std::move(rest)), std::move(c)});
  }
  return MultiPoly::from_terms(p.table(), std::move(out));
}

Rational evaluate(const MultiPoly& p, const Point& point) {
  std::vector<const Rational*> values(p.table()->size(), nullptr);
  for (const auto& [var, value] : point) {
    if (var >= values.size()) throw DomainError("unknown variable id in point");
    values[var] = &value;
  }
  Rational sum = 0;
  for (const auto& t : p.terms()) {
    Rational c = t.coefficient;
    for (VarId v = 0; v < values.size(); ++v) {
      Exponent e = t.monomial[v];
      if (e == 0) continue;
      if (values[v] == nullptr) throw DomainError("unassigned variable " + p.table()->name(v));
      c *= pow(*values[v], e);
    }
    sum += c;
  }
  return sum;
}

std::optional<MultiPoly> exact_divide(const MultiPoly& p, const MultiPoly& q) {
  if (q.is_zero()) throw DomainError("division by zero polynomial");
  if (p.table() != q.table() && !p.table()->same_as(*q.table()))
    throw DomainError("polynomials over different variable tables");
  if (p.is_zero()) return MultiPoly(p.table());
  const Term& lq = q.leading_term();

  if (q.size() == 1) {
    std::vector<Term> out;
    out.reserve(p.size());
    for (const auto& t : p.terms()) {
      if (!lq.monomial.divides(t.monomial)) return std::nullopt;
      out.push_back(Term{t.monomial / lq.monomial, t.coefficient / lq.coefficient});
    }
    // order is preserved under division by a monomial
    return MultiPoly::from_terms(p.table(), std::move(out));
  }

  std::vector<Exponent> pmax = max_exponents(p);
  std::vector<Exponent> qmax = max_exponents(q);
  for (std::size_t v = 0; v < pmax.size(); ++v)
    if (qmax[v] > pmax[v]) return std::nullopt;
  if (q.total_degree() > p.total_degree()) return std::nullopt;

  std::map<Monomial, Rational, GrevlexGreater> rem;
  for (const auto& t : p.terms()) rem.emplace_hint(rem.end(), t.monomial, t.coefficient);

  std::vector<Term> quotient;
  while (!rem.empty()) {
    auto lead = rem.begin();
    if (!lq.monomial.divides(lead->first)) return std::nullopt;
    Monomial m = lead->first / lq.monomial;
    Rational c = lead->second / lq.coefficient;
    for (const auto& tq : q.terms()) {
      Monomial prod = m * tq.monomial;
      auto [it, inserted] = rem.try_emplace(std::move(prod));
      it->second -= c * tq.coefficient;
      if (it->second == 0) rem.erase(it);
    }
    quotient.push_back(Term{std::move(m), std::move(c)});
  }
  return MultiPoly::from_terms(p.table(), std::move(quotient));
}

bool proportional(const MultiPoly& p, const MultiPoly& q) {
  if (p.is_zero() || q.is_zero()) return p.is_zero() && q.is_zero();
  if (p.size() != q.size()) return false;
  if (!(p.leading_term().monomial == q.leading_term().monomial)) return false;
  return q * p.leading_term().coefficient == p * q.leading_term().coefficient;
}

ContentSplit content_trial_division(const MultiPoly& p, std::span<const MultiPoly> candidates) {
  ContentSplit split{p, {}};
  if (p.is_zero()) return split;
  for (const auto& c : candidates) {
    if (c.is_zero() || c.is_constant()) throw DomainError("content candidate must be non-constant");
    unsigned power = 0;
    while (auto q = exact_divide(split.reduced, c)) {
      split.reduced = std::move(*q);
      ++power;
    }
    if (power > 0) split.removed.emplace_back(c, power);
  }
  return split;
}

MultiPoly normalize_content(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Integer den_lcm = 1;
  Integer num_gcd = 0;
  for (const auto& t : p.terms()) {
    mpz_lcm(den_lcm.get_mpz_t(), den_lcm.get_mpz_t(), t.coefficient.get_den_mpz_t());
    mpz_gcd(num_gcd.get_mpz_t(), num_gcd.get_mpz_t(), t.coefficient.get_num_mpz_t());
  }
  Rational scale(den_lcm, num_gcd);
  scale.canonicalize();
  if (p.leading_term().coefficient < 0) scale = -scale;
  return p * scale;
}

MultiPoly make_monic(const MultiPoly& p) {
  if (p.is_zero()) return p;
  Rational inv = 1 / p.leading_term().coefficient;
  return p * inv;
}

std::string format_term(const VarTable& table, const Monomial& mono, const Rational& coefficient,
                        bool first) {
  std::string out;
  bool negative = coefficient < 0;
  if (first) {
    if (negative) out += "-";
  } else {
    out += negative ? " - " : " + ";
  }
  Rational magnitude = abs(coefficient);
  bool need_star = false;
  if (mono.is_one() || magnitude != 1) {
    out += magnitude.get_str();
    need_star = true;
  }
  for (VarId v = 0; v < mono.size(); ++v) {
    Exponent e = mono[v];
    if (e == 0) continue;
    if (need_star) out += "*";
    out += table.name(v);
    if (e > 1) out += "^" + std::to_string(e);
    need_star = true;
  }
  return out;
}

std::string to_string(const MultiPoly& p) {
  if (p.is_zero()) return "0";
  std::string out;
  bool first = true;
  for (const auto& t : p.terms()) {
    out += format_term(*p.table(), t.monomial, t.coefficient, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const MultiPoly& p) { return os << to_string(p); }

}  // namespace chow
