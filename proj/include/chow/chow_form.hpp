#pragma once

#include <optional>
#include <vector>

#include "chow/derivation.hpp"
#include "chow/gamma_form.hpp"
#include "chow/random.hpp"

namespace chow {

// Rows l = 1..d, columns k = 0..d-1 of the reduced incidence forms F_lk.
using FMatrix = std::vector<std::vector<GammaForm>>;

// f_lk = B_l A_k - A_l B_k = Σ_{j1<j2} γ_{j1 j2} (δ^l x_{j1} δ^k x_{j2} - δ^l x_{j2} δ^k x_{j1}).
// 0 <= l, k <= d; throws DomainError otherwise.
GammaForm f_lk(const Derivation& d, unsigned l, unsigned k);

// F_lk = Σ_{r=0}^{min(d-l, k)} f_{l+r, k-r} Π_{j=0}^{d-l-r-1} (d-j) Π_{j=0}^{r-1} (k-j).
GammaForm F_lk(const Derivation& d, unsigned l, unsigned k);

// The same entry computed by the row-by-row elimination that turns the
// system Σ_k f_lk t^k/k! = 0 into Σ_k F_lk t^k/k! = 0. Used as an
// independent check on F_lk.
GammaForm F_lk_recursive(const Derivation& d, unsigned l, unsigned k);

FMatrix f_matrix(const Derivation& d);

// Linear forms A_k = Σ_j α_j δ^k x_j and B_k = Σ_j β_j δ^k x_j (x_0 = 1).
MultiPoly alpha_form(const Derivation& d, unsigned k);
MultiPoly beta_form(const Derivation& d, unsigned k);

enum class DeterminantMethod { Automatic, Laplace, Bareiss };

// Determinant over the polynomial ring. Automatic uses Laplace expansion
// with memoized minors up to 4x4 and fraction-free Bareiss elimination above.
MultiPoly determinant(const std::vector<std::vector<MultiPoly>>& m,
                      DeterminantMethod method = DeterminantMethod::Automatic);

// P = det(F_lk), symbolic in x, or with the power table evaluated at x.
// Throws DomainError when the degree is 0.
GammaForm chow_form(const Derivation& d, const std::optional<AffinePoint>& x = std::nullopt,
                    DeterminantMethod method = DeterminantMethod::Automatic);

// Point x in U_0, time t and hyperplanes α, β through y = (1, flow(x, t)).
struct IncidenceWitness {
  AffinePoint x;
  Rational t;
  std::vector<Rational> alpha;  // α_0..α_n
  std::vector<Rational> beta;
};

// Random rational α (or β) with Σ α_j y_j = 0, solved for the last
// coordinate whose y-entry is nonzero.
std::vector<Rational> random_hyperplane_through(Rng& rng, const std::vector<Rational>& y);

// Draws x until it lands in U_0, then t, α and β.
IncidenceWitness random_incidence_witness(const Derivation& d, Rng& rng);

// Value of g at the given x, α and β.
Rational evaluate_form(const GammaForm& g, const AffinePoint& x, const std::vector<Rational>& alpha,
                       const std::vector<Rational>& beta);

}  // namespace chow
