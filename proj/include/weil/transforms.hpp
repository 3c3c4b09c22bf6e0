// Fourier transform on the Gaussian family, Mellin transforms, and the
// pairing <F(ln|x|), psi> that underlies the archimedean term.
//
// Conventions: F f(y) = int f(x) e^{2 pi i x y} dx,  f^(s) = int_0^inf f(x) x^s dx/x.
#pragma once

#include <complex>

#include "weil/parity_function.hpp"
#include "weil/quadrature.hpp"
#include "weil/test_function.hpp"

namespace weil {

struct MellinValue {
  cplx s;
  cplx value;
  double est_error;
};

// exact, via the Hermite closure of x^k exp(-alpha pi x^2)
ParityFunction fourier(const ParityFunction& f);
// independent check: trapezoid in x on [-X, X]
cplx fourier_quadrature(const ParityFunction& f, double y, std::size_t n = 4001);

// A window for mellin(f, s) sized to the decay of f x^{Re s}.
QuadratureSpec mellin_window(const TestFunction& f, double re_s, double tolerance = 1e-12,
                             std::size_t n_points = 0);

MellinValue mellin(const TestFunction& f, cplx s, const QuadratureSpec& q);
MellinValue mellin(const TestFunction& f, cplx s);  // auto window
MellinValue mellin_parity(const ParityFunction& f, cplx s, const QuadratureSpec& q);
// closed form sum c/2 (alpha pi)^{-(k+s)/2} Gamma((k+s)/2), for cross-checks
cplx mellin_parity_closed_form(const ParityFunction& f, cplx s);

// Profile psi_t(y) = f(|1 - y/t|) built from a test function. The even
// extension keeps psi smooth, so its Fourier transform is Schwartz.
struct ShiftedTestProfile {
  TestFunction f;
  double t = 1.0;
};

struct PairingValue {
  double value;
  double est_error;
};

PairingValue pair_log_fourier(const ParityFunction& psi, double tolerance = 1e-12);
PairingValue pair_log_fourier(const ShiftedTestProfile& psi, double tolerance = 1e-12);

// f^(s) for real-valued f, choosing the closed form when there is one
MellinValue mellin_auto(const TestFunction& f, cplx s);

}  // namespace weil
