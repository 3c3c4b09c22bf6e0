// Gamma, digamma, zeta, Hurwitz zeta, xi, Dirichlet L and the Hardy Z-function.
// Everything is double precision and self-contained.
#pragma once

#include <complex>

#include "weil/characters.hpp"

namespace weil {

using cplx = std::complex<double>;

cplx gamma(cplx s);
// continuous branch off the negative real axis (matches the usual loggamma)
cplx lgamma(cplx s);
cplx digamma(cplx s);
cplx expm1(cplx z);

cplx zeta(cplx s);
cplx hurwitz_zeta(cplx s, double a);

struct CompletedZetaValue {
  cplx s;
  cplx xi;
  cplx zeta;
  cplx gamma_factor;  // pi^{-s/2} Gamma(s/2)
};
CompletedZetaValue xi(cplx s);

// L(s, chi) for a primitive non-trivial chi; entire, so s = 1 is fine.
cplx l_chi(const DirichletCharacter& chi, cplx s);
// (d/pi)^{(s+a)/2} Gamma((s+a)/2) L(s, chi)
cplx completed_l_chi(const DirichletCharacter& chi, cplx s);

// Riemann-Siegel theta and Hardy's Z(t) = e^{i theta(t)} zeta(1/2 + i t).
double theta(double t);
double hardy_Z(double t);

}  // namespace weil
