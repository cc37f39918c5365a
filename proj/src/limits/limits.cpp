#include "chow/limits.hpp"

#include <algorithm>

#include "chow/error.hpp"

namespace chow {

namespace {

bool is_coordinate(const VarTable& table, VarId v) { return table.kind(v) == VarKind::Coordinate; }

bool involves_chart(const MultiPoly& p) {
  for (VarId v : p.variables())
    if (p.table()->kind(v) == VarKind::Chart) return true;
  return false;
}

Substitution substitute_all(const Substitution& sub, const Substitution& by) {
  Substitution out;
  for (const auto& [v, image] : sub) out.emplace(v, substitute(image, by));
  return out;
}

std::vector<MultiPoly> merged(std::vector<MultiPoly> base, const std::vector<MultiPoly>& extra) {
  for (const auto& c : extra)
    if (std::find(base.begin(), base.end(), c) == base.end()) base.push_back(c);
  return base;
}

}  // namespace

ChartMap make_chart(std::string name, Substitution substitution, MultiPoly exceptional,
                    std::optional<Substitution> divisor) {
  const auto& table = exceptional.table();
  if (exceptional.is_zero() || exceptional.is_constant())
    throw DomainError("chart " + name + ": exceptional generator must be non-constant");
  for (const auto& [v, image] : substitution) {
    if (!is_coordinate(*table, v)) throw DomainError("chart " + name + " must replace coordinate variables");
    for (const auto& [other, unused] : substitution)
      if (image.involves(other)) throw DomainError("chart " + name + ": image involves a replaced variable");
  }

  ChartMap chart{std::move(name), std::move(substitution), exceptional, {}, {}};
  for (unsigned j = 1; j <= table->dimension(); ++j)
    if (!chart.substitution.contains(table->coordinate(j))) chart.stratum_vars.push_back(table->coordinate(j));

  if (divisor) {
    chart.divisor = std::move(*divisor);
    if (!substitute(exceptional, chart.divisor).is_zero())
      throw DomainError("chart " + chart.name + ": divisor substitution does not kill the exceptional generator");
    return chart;
  }
  // coordinates first, then chart variables, each in table order
  std::vector<VarId> order = exceptional.variables();
  std::stable_partition(order.begin(), order.end(), [&](VarId v) { return is_coordinate(*table, v); });
  for (VarId v : order) {
    if (exceptional.degree_in(v) != 1) continue;
    MultiPoly slope = differentiate(exceptional, v);
    if (!slope.is_constant()) continue;
    MultiPoly rest = exceptional - slope * MultiPoly::variable(table, v);
    Rational c = slope.constant_term();
    chart.divisor.emplace(v, rest * Rational(-1 / c));
    return chart;
  }
  throw DomainError("chart " + chart.name + ": cannot solve the exceptional generator for a variable");
}

Substitution chart_center(const ChartMap& chart) {
  Substitution center = substitute_all(chart.substitution, chart.divisor);
  for (const auto& [v, image] : chart.divisor)
    if (is_coordinate(*chart.exceptional.table(), v) && !center.contains(v)) center.emplace(v, image);
  for (std::size_t pass = 0; pass <= center.size(); ++pass) center = substitute_all(center, center);
  for (const auto& [v, image] : center) {
    if (involves_chart(image))
      throw DecompositionError("chart " + chart.name + ": center depends on chart variables");
    for (const auto& [other, unused] : center)
      if (image.involves(other)) throw DecompositionError("chart " + chart.name + ": center is not solved");
  }
  return center;
}

std::vector<MultiPoly> default_candidates(const VarTable::Ptr& table, const std::vector<MultiPoly>& extra) {
  std::vector<MultiPoly> out;
  for (unsigned j = 1; j <= table->dimension(); ++j) out.push_back(MultiPoly::variable(table, table->coordinate(j)));
  return merged(std::move(out), extra);
}

std::pair<GammaForm, ContentRecord> remove_content(const GammaForm& g, const std::vector<MultiPoly>& candidates) {
  ContentSplit split = content_trial_division(g.poly(), candidates);
  return {GammaForm(std::move(split.reduced)), std::move(split.removed)};
}

GammaForm restrict_form(const GammaForm& p, const Substitution& sub, const std::vector<MultiPoly>& candidates) {
  GammaForm out(substitute(remove_content(p, candidates).first.poly(), sub));
  if (out.is_zero()) throw DecompositionError("content removal insufficient; supply more candidates");
  return out;
}

ChartLift chart_lift(const GammaForm& p, const ChartMap& chart) {
  MultiPoly pulled = substitute(p.poly(), chart.substitution);
  if (pulled.is_zero()) throw DecompositionError("chart " + chart.name + ": lift vanishes identically");
  ContentSplit split = content_trial_division(pulled, std::vector<MultiPoly>{chart.exceptional});
  unsigned power = split.removed.empty() ? 0 : split.removed.front().second;
  return ChartLift{GammaForm(std::move(split.reduced)), power};
}

GammaForm exceptional_restriction(const ChartLift& lift, const ChartMap& chart) {
  GammaForm out(substitute(lift.lift.poly(), chart.divisor));
  if (out.is_zero()) throw DecompositionError("chart " + chart.name + ": lift vanishes on the exceptional divisor");
  return out;
}

CycleDecomposition decompose_limit_cycle(const GammaForm& limit, const Derivation& stratum,
                                         const std::vector<MultiPoly>& candidates) {
  if (stratum.degree() == 0) throw DecompositionError("decomposition failed: stratum action is trivial");
  GammaForm C = normalize(remove_content(chow_form(stratum), candidates).first);
  MultiPoly orbit = gamma_expand(C);
  MultiPoly rest = gamma_expand(limit);
  unsigned n = 0;
  for (;;) {
    auto q = exact_divide(rest, orbit);
    if (!q) break;
    rest = std::move(*q);
    ++n;
  }
  if (n == 0) throw DecompositionError("decomposition failed");

  GammaForm Z = GammaForm::zero(limit.table());
  try {
    Z = gamma_collapse(rest);
  } catch (const DomainError&) {
    throw DecompositionError("decomposition failed: residual is not a gamma form");
  }
  auto [reduced, record] = remove_content(Z, candidates);
  Z = normalize(reduced);
  bool degree_ok = limit.is_gamma_homogeneous() && Z.is_gamma_homogeneous() &&
                   limit.gamma_degree() == n * C.gamma_degree() + Z.gamma_degree();
  bool infinity = at_infinity(Z);
  return CycleDecomposition{n, std::move(C), std::move(Z), std::move(record), infinity, degree_ok};
}

bool verify_factorization(const GammaForm& p, const std::vector<std::pair<GammaForm, unsigned>>& factors) {
  MultiPoly product = MultiPoly::constant(p.table(), Rational(1));
  for (const auto& [f, m] : factors) product *= pow(gamma_expand(f), m);
  MultiPoly target = gamma_expand(p);
  if (target.is_zero() || product.is_zero()) return false;
  return proportional(product, target);
}

std::string locus_text(const VarTable& table, const Substitution& sub) {
  std::string out = "{";
  bool first = true;
  for (const auto& [v, image] : sub) {
    if (!first) out += ", ";
    out += table.name(v) + " = " + to_string(image);
    first = false;
  }
  return out + "}";
}

bool line_in_locus(const GammaForm& line, const Substitution& locus) {
  const auto& table = line.table();
  const unsigned n = table->dimension();
  if (line.is_zero() || !line.is_gamma_homogeneous() || line.gamma_degree() != 1) return false;

  std::vector<std::vector<MultiPoly>> L(n + 1, std::vector<MultiPoly>(n + 1, MultiPoly(table)));
  for (unsigned i = 0; i <= n; ++i) {
    for (unsigned j = i + 1; j <= n; ++j) {
      L[i][j] = gamma_coefficient(line, Monomial::unit(table->size(), table->gamma(i, j)));
      L[j][i] = -L[i][j];
    }
  }

  for (const auto& [v, image] : locus) {
    if (image.total_degree() > 1) return false;
    // hyperplane X_v - s_0 X_0 - Σ s_k X_k
    std::vector<Rational> ell(n + 1, Rational(0));
    ell[(*table)[v].first] += 1;
    for (const auto& t : image.terms()) {
      if (t.monomial.is_one()) {
        ell[0] -= t.coefficient;
        continue;
      }
      VarId w = 0;
      for (VarId u = 0; u < t.monomial.size(); ++u)
        if (t.monomial[u] == 1) w = u;
      ell[(*table)[w].first] -= t.coefficient;
    }
    for (unsigned k = 0; k <= n; ++k) {
      MultiPoly row(table);
      for (unsigned j = 0; j <= n; ++j)
        if (ell[j] != 0) row += L[j][k] * ell[j];
      if (!row.is_zero()) return false;
    }
  }
  return true;
}

Verdict stratum_verdict(const std::vector<StratumReport>& reports) {
  Verdict v;
  v.hausdorff = std::all_of(reports.begin(), reports.end(), [](const StratumReport& r) { return r.hausdorff_ok; });
  v.proper = v.hausdorff &&
             std::all_of(reports.begin(), reports.end(), [](const StratumReport& r) { return r.proper_ok; });
  if (v.proper) {
    v.text = "proper (relative to supplied strata)";
  } else if (v.hausdorff) {
    v.text = "Hausdorff, not proper (relative to supplied strata)";
  } else {
    v.text = "non-Hausdorff (relative to supplied strata)";
  }
  for (const auto& r : reports) {
    if (!r.witness) continue;
    std::pair<std::string, std::string> pair{locus_text(*r.limit.table(), r.locus), r.witness->locus};
    std::pair<std::string, std::string> flipped{pair.second, pair.first};
    if (std::find(v.witness_pairs.begin(), v.witness_pairs.end(), pair) == v.witness_pairs.end() &&
        std::find(v.witness_pairs.begin(), v.witness_pairs.end(), flipped) == v.witness_pairs.end())
      v.witness_pairs.push_back(std::move(pair));
  }
  return v;
}

namespace {

StratumReport make_report(std::string name, bool is_chart, Substitution locus, GammaForm limit, unsigned power,
                          CycleDecomposition decomposition) {
  bool hausdorff = decomposition.at_infinity_Z;
  bool proper = hausdorff && decomposition.n == 1;
  return StratumReport{std::move(name), is_chart, std::move(locus), std::move(limit), power,
                       std::move(decomposition), hausdorff, proper, std::nullopt};
}

}  // namespace

Analysis analyze(const Derivation& d, const AnalysisInput& input) {
  const auto& table = d.table();
  GammaForm P = chow_form(d);
  std::vector<MultiPoly> candidates = default_candidates(table, input.content_candidates);
  auto [reduced, content] = remove_content(P, candidates);

  std::vector<StratumReport> reports;
  std::vector<std::pair<std::string, Substitution>> loci;
  auto add_locus = [&](const Substitution& sub) {
    for (const auto& [name, known] : loci)
      if (known == sub) return;
    loci.emplace_back(locus_text(*table, sub), sub);
  };

  for (const auto& stratum : input.strata) {
    std::vector<MultiPoly> local = merged(candidates, stratum.candidates);
    GammaForm limit = restrict_form(reduced, stratum.sub, local);
    Derivation restricted = restrict_derivation(d, stratum.sub);
    CycleDecomposition dec = decompose_limit_cycle(limit, restricted, local);
    reports.push_back(make_report(stratum.name, false, stratum.sub, std::move(limit), 0, std::move(dec)));
    add_locus(stratum.sub);
  }

  for (const auto& chart : input.charts) {
    ChartLift lift = chart_lift(reduced, chart);
    GammaForm limit = exceptional_restriction(lift, chart);
    Substitution center = chart_center(chart);
    Derivation restricted = restrict_derivation(d, center);
    CycleDecomposition dec = decompose_limit_cycle(limit, restricted, candidates);
    reports.push_back(make_report(chart.name, true, center, std::move(limit), lift.power, std::move(dec)));
    add_locus(center);
  }

  // locate cycles that fail to go to infinity; the most specific locus wins
  for (auto& r : reports) {
    if (r.decomposition.at_infinity_Z) continue;
    const std::pair<std::string, Substitution>* best = nullptr;
    for (const auto& locus : loci) {
      if (locus.second == r.locus || !line_in_locus(r.decomposition.Z, locus.second)) continue;
      if (best == nullptr || locus.second.size() > best->second.size()) best = &locus;
    }
    if (best != nullptr) r.witness = Witness{best->first, best->second};
  }

  Verdict verdict = stratum_verdict(reports);
  return Analysis{std::move(P), std::move(reduced), std::move(content), std::move(reports), std::move(verdict)};
}

}  // namespace chow
