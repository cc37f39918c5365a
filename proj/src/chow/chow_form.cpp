#include "chow/chow_form.hpp"

#include <algorithm>
#include <unordered_map>

#include "chow/error.hpp"

namespace chow {

namespace {

void check_indices(const Derivation& d, unsigned l, unsigned k) {
  if (l > d.degree() || k > d.degree()) throw DomainError("incidence form index out of range");
}

GammaForm f_from_table(const VarTable::Ptr& table, const PowerTable& powers, unsigned l, unsigned k) {
  const unsigned n = table->dimension();
  MultiPoly out(table);
  for (unsigned j1 = 0; j1 <= n; ++j1) {
    for (unsigned j2 = j1 + 1; j2 <= n; ++j2) {
      MultiPoly c = powers[l][j1] * powers[k][j2] - powers[l][j2] * powers[k][j1];
      if (c.is_zero()) continue;
      out += c * MultiPoly::variable(table, table->gamma(j1, j2));
    }
  }
  return GammaForm(std::move(out));
}

GammaForm F_from_table(const VarTable::Ptr& table, const PowerTable& powers, unsigned d, unsigned l, unsigned k) {
  GammaForm out = GammaForm::zero(table);
  for (unsigned r = 0; r <= std::min(d - l, k); ++r) {
    Rational weight(falling_product(d, d - l - r) * falling_product(k, r));
    out = out + f_from_table(table, powers, l + r, k - r) * weight;
  }
  return out;
}

std::vector<std::vector<MultiPoly>> F_entries(const VarTable::Ptr& table, const PowerTable& powers, unsigned d) {
  std::vector<std::vector<MultiPoly>> m(d, std::vector<MultiPoly>(d, MultiPoly(table)));
  for (unsigned l = 1; l <= d; ++l)
    for (unsigned k = 0; k < d; ++k) m[l - 1][k] = F_from_table(table, powers, d, l, k).poly();
  return m;
}

// Laplace expansion along the first remaining row; minors keyed by their column set.
class LaplaceExpander {
 public:
  explicit LaplaceExpander(const std::vector<std::vector<MultiPoly>>& m) : m_(m) {}

  MultiPoly run() { return minor(0, (std::uint64_t{1} << m_.size()) - 1); }

 private:
  MultiPoly minor(std::size_t row, std::uint64_t columns) {
    const auto& table = m_[0][0].table();
    if (row == m_.size()) return MultiPoly::constant(table, Rational(1));
    if (auto it = memo_.find(columns); it != memo_.end()) return it->second;
    MultiPoly out(table);
    bool negative = false;
    for (std::size_t c = 0; c < m_.size(); ++c) {
      if ((columns & (std::uint64_t{1} << c)) == 0) continue;
      const MultiPoly& entry = m_[row][c];
      if (!entry.is_zero()) {
        MultiPoly term = entry * minor(row + 1, columns & ~(std::uint64_t{1} << c));
        if (negative) {
          out -= term;
        } else {
          out += term;
        }
      }
      negative = !negative;
    }
    memo_.emplace(columns, out);
    return out;
  }

  const std::vector<std::vector<MultiPoly>>& m_;
  std::unordered_map<std::uint64_t, MultiPoly> memo_;
};

MultiPoly bareiss(std::vector<std::vector<MultiPoly>> m) {
  const std::size_t n = m.size();
  const auto& table = m[0][0].table();
  bool negative = false;
  MultiPoly previous = MultiPoly::constant(table, Rational(1));
  for (std::size_t k = 0; k + 1 < n; ++k) {
    if (m[k][k].is_zero()) {
      std::size_t swap = k + 1;
      while (swap < n && m[swap][k].is_zero()) ++swap;
      if (swap == n) return MultiPoly(table);
      std::swap(m[k], m[swap]);
      negative = !negative;
    }
    for (std::size_t i = k + 1; i < n; ++i) {
      for (std::size_t j = k + 1; j < n; ++j) {
        MultiPoly num = m[i][j] * m[k][k] - m[i][k] * m[k][j];
        auto q = exact_divide(num, previous);
        if (!q) throw DomainError("Bareiss step is not exact");
        m[i][j] = std::move(*q);
      }
      m[i][k] = MultiPoly(table);
    }
    previous = m[k][k];
  }
  MultiPoly det = m[n - 1][n - 1];
  return negative ? -det : det;
}

}  // namespace

GammaForm f_lk(const Derivation& d, unsigned l, unsigned k) {
  check_indices(d, l, k);
  return f_from_table(d.table(), d.power_table(), l, k);
}

GammaForm F_lk(const Derivation& d, unsigned l, unsigned k) {
  check_indices(d, l, k);
  return F_from_table(d.table(), d.power_table(), d.degree(), l, k);
}

GammaForm F_lk_recursive(const Derivation& d, unsigned l, unsigned k) {
  check_indices(d, l, k);
  const unsigned deg = d.degree();
  // row[k] holds the current stage of row L, starting from L = d
  std::vector<GammaForm> row;
  for (unsigned c = 0; c <= deg; ++c) row.push_back(f_lk(d, deg, c));
  for (unsigned s = 0; deg - s > l; ++s) {
    const unsigned L = deg - s - 1;
    Rational weight(falling_product(deg, s + 1));
    std::vector<GammaForm> next;
    for (unsigned c = 0; c <= deg; ++c) {
      GammaForm entry = f_lk(d, L, c) * weight;
      if (c > 0) entry = entry + row[c - 1] * Rational(c);
      next.push_back(std::move(entry));
    }
    row = std::move(next);
  }
  return row[k];
}

FMatrix f_matrix(const Derivation& d) {
  FMatrix m;
  for (unsigned l = 0; l <= d.degree(); ++l) {
    std::vector<GammaForm> row;
    for (unsigned k = 0; k <= d.degree(); ++k) row.push_back(f_lk(d, l, k));
    m.push_back(std::move(row));
  }
  return m;
}

namespace {

MultiPoly linear_form(const Derivation& d, unsigned k, bool alpha) {
  if (k >= d.power_table().size()) throw DomainError("linear form index out of range");
  const auto& table = d.table();
  MultiPoly out(table);
  for (unsigned j = 0; j <= d.dimension(); ++j) {
    VarId v = alpha ? table->alpha(j) : table->beta(j);
    out += d.power(k, j) * MultiPoly::variable(table, v);
  }
  return out;
}

}  // namespace

MultiPoly alpha_form(const Derivation& d, unsigned k) { return linear_form(d, k, true); }
MultiPoly beta_form(const Derivation& d, unsigned k) { return linear_form(d, k, false); }

MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m, DeterminantMethod method) {
  if (m.empty()) throw DomainError("determinant of an empty matrix");
  for (const auto& row : m)
    if (row.size() != m.size()) throw DomainError("determinant of a non-square matrix");
  if (m.size() > 62) throw DomainError("matrix too large");
  if (method == DeterminantMethod::Automatic)
    method = m.size() <= 4 ? DeterminantMethod::Laplace : DeterminantMethod::Bareiss;
  if (method == DeterminantMethod::Laplace) return LaplaceExpander(m).run();
  return bareiss(m);
}

GammaForm chow_form(const Derivation& d, const std::optional<AffinePoint>& x, DeterminantMethod method) {
  if (d.degree() == 0) throw DomainError("Chow form needs a derivation of positive degree");
  PowerTable powers = d.power_table();
  if (x) {
    Point pt = x->as_point(*d.table());
    for (auto& row : powers)
      for (auto& entry : row) entry = partial_evaluate(entry, pt);
  }
  return GammaForm(determinant(F_entries(d.table(), powers, d.degree()), method));
}

std::vector<Rational> random_hyperplane_through(Rng& rng, const std::vector<Rational>& y) {
  std::vector<Rational> h;
  for (std::size_t j = 0; j < y.size(); ++j) h.push_back(rng.small_rational());
  std::size_t pivot = y.size();
  while (pivot > 0 && y[pivot - 1] == 0) --pivot;
  if (pivot == 0) throw DomainError("hyperplane through the zero vector");
  --pivot;
  Rational rest = 0;
  for (std::size_t j = 0; j < y.size(); ++j)
    if (j != pivot) rest += h[j] * y[j];
  h[pivot] = -rest / y[pivot];
  return h;
}

IncidenceWitness random_incidence_witness(const Derivation& d, Rng& rng) {
  IncidenceWitness w;
  for (;;) {
    w.x.coordinates.clear();
    for (unsigned j = 0; j < d.dimension(); ++j) w.x.coordinates.push_back(rng.small_rational());
    if (generic_locus_member(d, w.x)) break;
  }
  w.t = rng.small_rational();
  AffinePoint moved = flow(d, w.x, w.t);
  std::vector<Rational> y{Rational(1)};
  y.insert(y.end(), moved.coordinates.begin(), moved.coordinates.end());
  w.alpha = random_hyperplane_through(rng, y);
  w.beta = random_hyperplane_through(rng, y);
  return w;
}

Rational evaluate_form(const GammaForm& g, const AffinePoint& x, const std::vector<Rational>& alpha,
                       const std::vector<Rational>& beta) {
  const auto& table = g.table();
  const unsigned n = table->dimension();
  if (alpha.size() != n + 1 || beta.size() != n + 1) throw DomainError("hyperplane has the wrong length");
  Point pt = x.as_point(*table);
  for (unsigned j = 0; j <= n; ++j) {
    for (unsigned k = j + 1; k <= n; ++k) {
      Rational value = beta[j] * alpha[k] - beta[k] * alpha[j];
      pt.emplace(table->gamma(j, k), value);
    }
  }
  return evaluate(g.poly(), pt);
}

}  // namespace chow
