#include "chow/gamma_form.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

bool is_ab(VarKind k) { return k == VarKind::Alpha || k == VarKind::Beta; }

// Split a monomial into its γ block and its remaining block.
std::pair<Monomial, Monomial> split_gamma(const VarTable& table, const Monomial& m) {
  std::vector<Exponent> g(m.size(), 0);
  std::vector<Exponent> rest(m.size(), 0);
  for (VarId v = 0; v < m.size(); ++v) {
    if (table.kind(v) == VarKind::Gamma) {
      g[v] = m[v];
    } else {
      rest[v] = m[v];
    }
  }
  return {Monomial(std::move(g)), Monomial(std::move(rest))};
}

std::pair<Monomial, Monomial> split_ab(const VarTable& table, const Monomial& m) {
  std::vector<Exponent> ab(m.size(), 0);
  std::vector<Exponent> rest(m.size(), 0);
  for (VarId v = 0; v < m.size(); ++v) {
    if (is_ab(table.kind(v))) {
      ab[v] = m[v];
    } else {
      rest[v] = m[v];
    }
  }
  return {Monomial(std::move(ab)), Monomial(std::move(rest))};
}

// Lex order with b0 > b1 > ... > bn > a0 > ... > an on the (α, β) block.
int ab_lex_compare(const VarTable& table, const Monomial& a, const Monomial& b) {
  const unsigned n = table.dimension();
  for (unsigned j = 0; j <= n; ++j) {
    VarId v = table.beta(j);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  for (unsigned j = 0; j <= n; ++j) {
    VarId v = table.alpha(j);
    if (a[v] != b[v]) return a[v] > b[v] ? 1 : -1;
  }
  return 0;
}

}  // namespace

GammaForm::GammaForm(MultiPoly poly) : poly_(std::move(poly)) {
  const VarTable& t = *poly_.table();
  for (VarId v : poly_.variables()) {
    VarKind k = t.kind(v);
    if (is_ab(k) || k == VarKind::Parameter)
      throw DomainError("gamma form may not involve " + t.name(v));
  }
}

unsigned gamma_degree(const VarTable& table, const Monomial& mono) {
  unsigned d = 0;
  for (VarId v = 0; v < mono.size(); ++v)
    if (table.kind(v) == VarKind::Gamma) d += mono[v];
  return d;
}

unsigned GammaForm::gamma_degree() const noexcept {
  unsigned d = 0;
  for (const auto& t : poly_.terms()) d = std::max(d, chow::gamma_degree(*table(), t.monomial));
  return d;
}

bool GammaForm::is_gamma_homogeneous() const noexcept {
  if (poly_.is_zero()) return true;
  unsigned d = chow::gamma_degree(*table(), poly_.terms().front().monomial);
  for (const auto& t : poly_.terms())
    if (chow::gamma_degree(*table(), t.monomial) != d) return false;
  return true;
}

std::string to_string(const GammaForm& g) {
  const VarTable& table = *g.table();
  if (g.is_zero()) return "0";
  struct Keyed {
    unsigned degree;
    Monomial gamma;
    Monomial rest;
    const Term* term;
  };
  std::vector<Keyed> keyed;
  for (const auto& t : g.poly().terms()) {
    auto [gm, rest] = split_gamma(table, t.monomial);
    keyed.push_back(Keyed{gamma_degree(table, t.monomial), std::move(gm), std::move(rest), &t});
  }
  std::sort(keyed.begin(), keyed.end(), [](const Keyed& a, const Keyed& b) {
    if (a.degree != b.degree) return a.degree > b.degree;
    int c = grevlex_compare(a.gamma, b.gamma);
    if (c != 0) return c > 0;
    return grevlex_compare(a.rest, b.rest) > 0;
  });
  std::string out;
  bool first = true;
  for (const auto& k : keyed) {
    out += format_term(table, k.term->monomial, k.term->coefficient, first);
    first = false;
  }
  return out;
}

std::ostream& operator<<(std::ostream& os, const GammaForm& g) { return os << to_string(g); }

MultiPoly gamma_expand(const GammaForm& g) {
  const auto& table = g.table();
  const unsigned n = table->dimension();
  Substitution sub;
  for (unsigned j1 = 0; j1 <= n; ++j1) {
    for (unsigned j2 = j1 + 1; j2 <= n; ++j2) {
      VarId v = table->gamma(j1, j2);
      if (!g.poly().involves(v)) continue;
      MultiPoly image = MultiPoly::variable(table, table->beta(j1)) * MultiPoly::variable(table, table->alpha(j2)) -
                        MultiPoly::variable(table, table->beta(j2)) * MultiPoly::variable(table, table->alpha(j1));
      sub.emplace(v, std::move(image));
    }
  }
  return substitute(g.poly(), sub);
}

GammaForm gamma_collapse(const MultiPoly& expanded) {
  const auto& table = expanded.table();
  for (VarId v : expanded.variables()) {
    VarKind k = table->kind(v);
    if (k == VarKind::Gamma || k == VarKind::Parameter)
      throw DomainError("gamma_collapse expects an (alpha, beta) form, found " + table->name(v));
  }
  MultiPoly remainder = expanded;
  MultiPoly result(table);
  while (!remainder.is_zero()) {
    // leading (α, β) block in the diagonal lex order
    const Monomial* lead = nullptr;
    Monomial lead_ab;
    for (const auto& t : remainder.terms()) {
      auto ab = split_ab(*table, t.monomial).first;
      if (lead == nullptr || ab_lex_compare(*table, ab, lead_ab) > 0) {
        lead = &t.monomial;
        lead_ab = std::move(ab);
      }
    }
    std::vector<Term> coeff_terms;
    for (const auto& t : remainder.terms()) {
      auto [ab, rest] = split_ab(*table, t.monomial);
      if (ab == lead_ab) coeff_terms.push_back(Term{std::move(rest), t.coefficient});
    }
    MultiPoly coefficient = MultiPoly::from_terms(table, std::move(coeff_terms));

    // pair sorted β indices with sorted α indices; each pair must satisfy i < j
    std::vector<unsigned> betas;
    std::vector<unsigned> alphas;
    for (unsigned j = 0; j <= table->dimension(); ++j) {
      for (Exponent e = 0; e < lead_ab[table->beta(j)]; ++e) betas.push_back(j);
      for (Exponent e = 0; e < lead_ab[table->alpha(j)]; ++e) alphas.push_back(j);
    }
    if (betas.size() != alphas.size()) throw DomainError("form is not in the gamma algebra (unbalanced bidegree)");
    MultiPoly gamma_mono = MultiPoly::constant(table, Rational(1));
    for (std::size_t i = 0; i < betas.size(); ++i) {
      if (betas[i] >= alphas[i]) throw DomainError("form is not in the gamma algebra");
      gamma_mono *= MultiPoly::variable(table, table->gamma(betas[i], alphas[i]));
    }
    MultiPoly piece = coefficient * gamma_mono;
    result += piece;
    remainder -= gamma_expand(GammaForm(piece));
  }
  return GammaForm(std::move(result));
}

GammaForm tau_apply(const GammaForm& g) {
  std::vector<Term> terms(g.poly().terms().begin(), g.poly().terms().end());
  for (auto& t : terms)
    if (gamma_degree(*g.table(), t.monomial) % 2 == 1) t.coefficient = -t.coefficient;
  return GammaForm(MultiPoly::from_terms(g.table(), std::move(terms)));
}

MultiPoly gamma_coefficient(const GammaForm& g, const Monomial& gamma_part) {
  std::vector<Term> out;
  for (const auto& t : g.poly().terms()) {
    auto [gm, rest] = split_gamma(*g.table(), t.monomial);
    if (gm == gamma_part) out.push_back(Term{std::move(rest), t.coefficient});
  }
  return MultiPoly::from_terms(g.table(), std::move(out));
}

MultiPoly leading_gamma_coefficient(const GammaForm& g, unsigned j, unsigned power) {
  const auto& table = g.table();
  if (j < 1 || j > table->dimension()) throw DomainError("leading coefficient index out of range");
  Monomial target = Monomial::unit(table->size(), table->gamma(0, j), power);
  MultiPoly c = gamma_coefficient(g, target);
  return power % 2 == 1 ? -c : c;
}

bool at_infinity(const GammaForm& g) {
  const auto& table = g.table();
  for (unsigned j = 1; j <= table->dimension(); ++j)
    if (g.poly().involves(table->gamma(0, j))) return false;
  return true;
}

std::optional<std::pair<unsigned, unsigned>> alpha_beta_bidegree(const MultiPoly& p) {
  const VarTable& table = *p.table();
  std::optional<std::pair<unsigned, unsigned>> degree;
  for (const auto& t : p.terms()) {
    unsigned da = 0;
    unsigned db = 0;
    for (unsigned j = 0; j <= table.dimension(); ++j) {
      da += t.monomial[table.alpha(j)];
      db += t.monomial[table.beta(j)];
    }
    if (!degree) {
      degree.emplace(da, db);
    } else if (degree->first != da || degree->second != db) {
      return std::nullopt;
    }
  }
  if (!degree) degree.emplace(0, 0);
  return degree;
}

bool proportional_forms(const GammaForm& a, const GammaForm& b) {
  return proportional(gamma_expand(a), gamma_expand(b));
}

GammaForm normalize(const GammaForm& g) {
  if (g.is_zero()) return g;
  MultiPoly p = normalize_content(g.poly());
  // sign follows the first term of the canonical γ ordering
  GammaForm out(p);
  std::string text = to_string(out);
  if (!text.empty() && text.front() == '-') out = -out;
  return out;
}

}  // namespace chow
