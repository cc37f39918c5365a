#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "chow/chow_form.hpp"

namespace chow {

using ContentRecord = std::vector<std::pair<MultiPoly, unsigned>>;

// A locus {x_v = s_v} named for reports.
struct Stratum {
  std::string name;
  Substitution sub;
  std::vector<MultiPoly> candidates;
};

// Affine chart of a blow-up: one or more coordinates replaced by polynomials
// in the rest and the chart variables; the exceptional divisor is
// {exceptional = 0}. The divisor substitution realizes that equation by
// solving for one variable.
struct ChartMap {
  std::string name;
  Substitution substitution;
  MultiPoly exceptional;
  Substitution divisor;
  std::vector<VarId> stratum_vars;  // coordinates not replaced by the chart
};

// Solves exceptional = 0 for a variable that occurs linearly with constant
// coefficient unless an explicit divisor substitution is given. Throws
// DomainError when the exceptional generator is zero or cannot be solved.
ChartMap make_chart(std::string name, Substitution substitution, MultiPoly exceptional,
                    std::optional<Substitution> divisor = std::nullopt);

// The locus of the base the exceptional divisor maps onto.
// Throws DecompositionError if it depends on chart variables.
Substitution chart_center(const ChartMap& chart);

struct CycleDecomposition {
  unsigned n = 0;
  GammaForm C;
  GammaForm Z;
  ContentRecord Z_content;
  bool at_infinity_Z = false;
  bool degree_ok = false;
};

// The cycle lies in the closure of this locus.
struct Witness {
  std::string locus;
  Substitution sub;
};

struct StratumReport {
  std::string name;
  bool is_chart = false;
  Substitution locus;         // the stratum, or the chart center
  GammaForm limit;            // limit form on the stratum or divisor
  unsigned power = 0;         // exceptional power extracted by a chart lift
  CycleDecomposition decomposition;
  bool hausdorff_ok = false;  // Z at infinity
  bool proper_ok = false;     // additionally n = 1
  std::optional<Witness> witness;
};

struct Verdict {
  bool hausdorff = false;
  bool proper = false;
  std::string text;
  std::vector<std::pair<std::string, std::string>> witness_pairs;
};

// Coordinate variables x1..xn followed by the extra candidates, without repeats.
std::vector<MultiPoly> default_candidates(const VarTable::Ptr& table, const std::vector<MultiPoly>& extra = {});

// Strips every candidate that divides all coefficients simultaneously.
std::pair<GammaForm, ContentRecord> remove_content(const GammaForm& g, const std::vector<MultiPoly>& candidates);

// Content removal followed by the substitution. Throws DecompositionError
// "content removal insufficient; supply more candidates" on a zero result.
GammaForm restrict_form(const GammaForm& p, const Substitution& sub, const std::vector<MultiPoly>& candidates);

struct ChartLift {
  GammaForm lift;
  unsigned power = 0;
};

// p∘π divided by the exceptional generator as often as it divides.
// Throws DecompositionError when p∘π vanishes.
ChartLift chart_lift(const GammaForm& p, const ChartMap& chart);

// The lift restricted to the exceptional divisor.
GammaForm exceptional_restriction(const ChartLift& lift, const ChartMap& chart);

// limit = C^n Z with C the Chow form of the stratum's derivation; division
// runs in the expanded (α, β) ring. Throws DecompositionError "decomposition
// failed" when C does not divide the limit form.
CycleDecomposition decompose_limit_cycle(const GammaForm& limit, const Derivation& stratum,
                                         const std::vector<MultiPoly>& candidates);

// True iff gamma_expand(Π f^m) is proportional to gamma_expand(p).
bool verify_factorization(const GammaForm& p, const std::vector<std::pair<GammaForm, unsigned>>& factors);

// Loci written as "{x1 = 0, x2 = -1}".
std::string locus_text(const VarTable& table, const Substitution& sub);

// For a γ-linear g, true iff the line with Plücker coordinates given by the
// g{i,j} coefficients lies in the closure of the affine-linear locus.
// Nonlinear loci return false.
bool line_in_locus(const GammaForm& line, const Substitution& locus);

// Hausdorff iff every Z is at infinity, proper iff also every n = 1;
// conditional on the supplied strata and charts.
Verdict stratum_verdict(const std::vector<StratumReport>& reports);

struct AnalysisInput {
  std::vector<MultiPoly> content_candidates;
  std::vector<Stratum> strata;
  std::vector<ChartMap> charts;
};

struct Analysis {
  GammaForm P;
  GammaForm reduced;  // P without content
  ContentRecord content;
  std::vector<StratumReport> reports;
  Verdict verdict;
};

Analysis analyze(const Derivation& d, const AnalysisInput& input);

}  // namespace chow
