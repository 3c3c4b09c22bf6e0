// Both sides of the explicit formula
//   f^(0) + f^(1) - sum_gamma [f^(1/2+i gamma) + f^(1/2-i gamma)] = sum_p W_p(f) + W_inf(f)
// with f^(s) = int f(x) x^s dx/x, and a residual that must sit inside the
// certified error budget.
#pragma once

#include <string>

#include "weil/characters.hpp"
#include "weil/quadrature.hpp"
#include "weil/test_function.hpp"
#include "weil/zeros.hpp"
#include "weil/zeta_operators.hpp"

namespace weil {

Certified W_p(const TestFunction& f, std::size_t p, const TruncationSpec& tr);
Certified W_prime_total(const TestFunction& f, const TruncationSpec& tr);

struct WInfinity {
  double duality;        // -<F ln|x|, y -> f(|1-y|)>, the value used downstream
  double duality_error;
  double gamma_route;    // -(1/2pi) int Re f^(1/2+it) (Re digamma(1/4+it/2) - ln pi) dt
  double gamma_route_error;
  double pv_raw;         // (1/2) Pf int_0^inf f(x)/|1-x| + f(x)/(1+x) dx
  double pv_error;
  double c_infty;        // fitted once on loggauss(1,0,1)
  double f_at_1;
  double pv_calibrated;  // pv_raw + c_infty f(1)
};

struct WInfinityOptions {
  double tolerance = 1e-9;           // pairing/quadrature tolerance
  double agreement_tolerance = 1e-6; // duality vs calibrated pv
  bool check_agreement = true;
};

WInfinity W_infty(const TestFunction& f, const WInfinityOptions& opt = {});
// the constant c_infty and its error, measured on loggauss(1,0,1)
std::pair<double, double> pv_calibration_constant();

// -(1/2pi) int Re f^(1/2+it) (ln(d/pi) + Re digamma((1/2+a+it)/2)) dt; d = 1, a = 0 gives W_inf
struct ArchimedeanValue {
  double value;
  double est_error;
};
ArchimedeanValue archimedean_term(const TestFunction& f, double d, int a, double tolerance = 1e-10);

struct SpectralSide {
  double value;
  double pole_contribution;
  double zero_contribution;  // sum over the table of f^(1/2+ig) + f^(1/2-ig)
  double zero_tail_bound;    // zeros above the table height
  double precision_error;    // ordinate uncertainty
  double quadrature_error;
  double max_imag_residue;
};

struct SpectralOptions {
  double zero_tail_tol = 1e-4;
};

SpectralSide spectral_side(const TestFunction& f, const ZeroTable& zt, const SpectralOptions& opt = {});
// bound on sum over zeros with T < gamma <= T2 (T2 = inf for the full tail)
double zero_band_bound(const TestFunction& f, double T, double T2, double modulus = 1.0);

struct ExplicitFormulaBudgets {
  double tail_tol;
  std::size_t p_max;
  int e_max;
  double zero_height;
  std::size_t zero_count;
  double zero_precision;
  double zero_tail_bound;
  double zero_precision_error;
  double spectral_quadrature_error;
  double prime_tail_bound;
  double w_infty_error;
  double rounding;
  double total;
};

struct ExplicitFormulaReport {
  std::string function;
  double spectral_side;
  double pole_contribution;
  double zero_contribution;
  double prime_side;
  double W_p_total;
  double W_infty;
  double residual;
  ExplicitFormulaBudgets budgets;
  bool within_budget;
  WInfinity w_infty_detail;
  double max_imag_residue;
  std::string status = "ok";
};

struct ExplicitFormulaOptions {
  SpectralOptions spectral;
  WInfinityOptions w_infty;
};

ExplicitFormulaReport verify_explicit_formula(const TestFunction& f, const ZeroTable& zt, const TruncationSpec& tr,
                                              const ExplicitFormulaOptions& opt = {});
// throws budget-exceeded when the residual is not covered by the budget
void require_within_budget(const ExplicitFormulaReport& r);

// Twisted version for a real primitive chi with an ingested table of L(s, chi) zeros:
//   -sum_gamma [f^(1/2+ig) + f^(1/2-ig)] = sum_p W_p^chi(f) + W_inf^chi(f)
Certified W_p_chi(const TestFunction& f, const DirichletCharacter& chi, std::size_t p, const TruncationSpec& tr);
ExplicitFormulaReport verify_dirichlet_explicit_formula(const TestFunction& f, const DirichletCharacter& chi,
                                                        const ZeroTable& zt, const TruncationSpec& tr,
                                                        const ExplicitFormulaOptions& opt = {});

}  // namespace weil
