// The summation operator Z f(x) = sum_n f(nx), its Moebius inverse, truncated
// Euler products, the twisted sums L_chi, and the Poisson-type identities.
// Every infinite sum is cut where an integral-test bound drops below tail_tol.
#pragma once

#include <complex>
#include <cstddef>

#include "weil/characters.hpp"
#include "weil/parity_function.hpp"
#include "weil/quadrature.hpp"
#include "weil/test_function.hpp"

namespace weil {

struct TruncationSpec {
  std::size_t n_max = 1000000;
  std::size_t p_max = 10000;
  int e_max = 60;
  double tail_tol = 1e-13;

  void validate() const;
};

struct Certified {
  double value;
  double tail_bound;
  std::size_t terms;
};

struct CertifiedComplex {
  cplx value;
  double tail_bound;
  std::size_t terms;
};

// smallest N <= n_max with sum_{n>N} |f(n x)| certified below tol
std::size_t comb_cutoff(const TestFunction& f, double x, double tol, std::size_t n_max);

Certified apply_Z(const TestFunction& f, double x, const TruncationSpec& tr);
Certified apply_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr);
// compositions, each factor truncated and certified separately
Certified apply_Z_inverse_Z(const TestFunction& f, double x, const TruncationSpec& tr);
Certified apply_Z_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr);

// prod_{p <= p_max} sum_{e <= e_max} lambda_{p^{-e}} f, expanded over smooth integers
Certified euler_product_Z(const TestFunction& f, double x, const TruncationSpec& tr);
// prod_{p <= p_max} (1 - lambda_{p^{-1}}) f, i.e. signs on smooth squarefree integers
Certified euler_product_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr);

// Z on the restriction of a parity function to x > 0
CertifiedComplex apply_Z(const ParityFunction& f, double x, const TruncationSpec& tr);

struct IdentityCheck {
  cplx lhs;
  cplx rhs;
  double residual;
  double budget;  // certified tails and quadrature errors entering lhs and rhs
};

// f(0)/2 + Zf(x)  vs  x^{-1} (Z F f)(1/x) + x^{-1} F f(0)/2
IdentityCheck poisson_check(const ParityFunction& f, double x, const TruncationSpec& tr);

// (Zf)^(s) vs zeta(s) f^(s), Re s > 1. The left side is integrated termwise:
// n <= N by quadrature of f(n.), the rest through an Euler-Maclaurin tail.
IdentityCheck zspectral_check(const TestFunction& f, cplx s, const TruncationSpec& tr, const QuadratureSpec& q);

CertifiedComplex apply_L_chi(const DirichletCharacter& chi, const ParityFunction& f, double x, const TruncationSpec& tr);
CertifiedComplex euler_product_L_chi(const DirichletCharacter& chi, const ParityFunction& f, double x,
                                     const TruncationSpec& tr);

// L_chi f(x)  vs  kappa d^{-1/2} x^{-1} (L_{conj chi} F f)(1/(d x)),  kappa = chi(-1) tau(chi)/sqrt(d)
IdentityCheck twisted_poisson_check(const DirichletCharacter& chi, const ParityFunction& f, double x,
                                    const TruncationSpec& tr);

}  // namespace weil
