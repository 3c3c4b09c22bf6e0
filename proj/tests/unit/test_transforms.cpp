#include <doctest.h>

#include <cmath>
#include <numbers>
#include <random>

#include "weil/error.hpp"
#include "weil/expression.hpp"
#include "weil/special_functions.hpp"
#include "weil/transforms.hpp"

using namespace weil;

namespace {
const double pi = std::numbers::pi;

std::vector<ParityFunction> family() {
  return {ParityFunction::gauss2(),
          ParityFunction::gaussian(1.0, 2, 0.7),
          ParityFunction::gaussian(1.0, 0, 2.5) + ParityFunction::gaussian(-0.5, 4, 1.2),
          ParityFunction::odd_gauss2(),
          ParityFunction::gaussian(1.0, 3, 0.8),
          ParityFunction::gaussian(cplx(0, 1), 5, 1.5)};
}
}  // namespace

TEST_CASE("the special Gaussian is its own Fourier transform") {
  auto g = ParityFunction::gauss2();
  auto fg = fourier(g);
  for (double y = -3; y <= 3; y += 0.125) CHECK(std::abs(fg(y) - g(y)) < 1e-12);
}

TEST_CASE("F^2 = id on even and -id on odd members") {
  for (const auto& f : family()) {
    auto ff = fourier(fourier(f));
    double sgn = f.sign();
    for (double y = -2.5; y <= 2.5; y += 0.25) CHECK(std::abs(ff(y) - sgn * f(y)) < 1e-12);
  }
}

TEST_CASE("symbolic Fourier agrees with quadrature") {
  for (const auto& f : family()) {
    auto F = fourier(f);
    for (double y : {0.0, 0.3, 1.1, 2.0}) CHECK(std::abs(F(y) - fourier_quadrature(f, y)) < 1e-12);
  }
}

TEST_CASE("Plancherel on the family") {
  for (const auto& f : family()) {
    auto F = fourier(f);
    double a = 0, b = 0, h = 1e-3;
    for (double x = -12; x <= 12; x += h) {
      a += h * std::norm(f(x));
      b += h * std::norm(F(x));
    }
    CHECK(std::abs(a - b) < 1e-10 * std::max(1.0, a));
  }
}

TEST_CASE("Mellin transform of the special functions") {
  QuadratureSpec q{-40, 5, 8193, 1e-11};
  auto m = mellin_parity(ParityFunction::gauss2(), 2.0, q);
  CHECK(std::abs(m.value - 1.0 / pi) < 1e-12);
  m = mellin_parity(ParityFunction::gauss2(), 1.0, q);
  CHECK(std::abs(m.value - 1.0) < 1e-12);
  cplx s(0.7, 3.0);
  m = mellin_parity(ParityFunction::gauss2(), s, q);
  CHECK(std::abs(m.value - std::exp(-s / 2.0 * std::log(pi)) * gamma(s / 2.0)) < 1e-12);
  m = mellin_parity(ParityFunction::odd_gauss2(), 1.0, q);
  CHECK(std::abs(m.value - 1.0 / pi) < 1e-12);
  CHECK_THROWS_AS(mellin_parity(ParityFunction::gauss2(), -0.5, q), NumericError);
  // odd members converge further left
  m = mellin_parity(ParityFunction::odd_gauss2(), -0.5, QuadratureSpec{-80, 5, 16385, 1e-11});
  CHECK(std::abs(m.value - mellin_parity_closed_form(ParityFunction::odd_gauss2(), -0.5)) < 1e-10);
}

TEST_CASE("Mellin of log-Gaussians: quadrature vs closed form, J-reflection") {
  auto f = parse_test_function("loggauss(1,0.3,0.6) + 2*loggauss(1,-0.5,1.1)");
  std::mt19937_64 rng(11);
  std::uniform_real_distribution<double> re(-3, 3), im(-20, 20);
  for (int k = 0; k < 20; ++k) {
    cplx s(re(rng), im(rng));
    auto m = mellin(f, s);
    cplx c = f.mellin_closed_form(s);
    CHECK(std::abs(m.value - c) <= m.est_error + 1e-12 * std::abs(c));
    auto mj = mellin(f.reflected(), 1.0 - s);
    CHECK(std::abs(mj.value - m.value) <= mj.est_error + m.est_error + 1e-12 * std::abs(c));
  }
}

TEST_CASE("Mellin error estimate is honest") {
  auto f = TestFunction::log_bump(1.0, 0.5, 2.0);
  for (cplx s : {cplx(0.5, 0), cplx(0.5, 30), cplx(2, -7)}) {
    auto q = mellin_window(f, s.real(), 1e-6, 257);
    auto a = mellin(f, s, q);
    auto b = mellin(f, s, q.refined());
    CHECK(std::abs(a.value - b.value) <= a.est_error);
  }
  auto g = TestFunction::log_gaussian(1, 0, 1);
  QuadratureSpec narrow{-3, 3, 257, 1e-10};
  CHECK_THROWS_AS(mellin(g, 0.5, narrow), NumericError);
}

TEST_CASE("log-Fourier pairing: c = -1 against the integral over x > 0") {
  // psi(0) = 0, so <F ln|x|, psi> = -int_0^inf psi dx/x; the right side in closed form
  for (const char* e : {"gauss(1,0,1)+gauss(-1,0,2)", "gauss(1,2,1)", "gauss(1,2,0.5)+gauss(-1,2,1)"}) {
    auto psi = parse_parity_function(e);
    auto p = pair_log_fourier(psi, 1e-10);
    double rhs = -mellin_parity(psi, 0.0, QuadratureSpec{-40, 10, 20001, 1e-12}).value.real();
    CHECK(std::abs(p.value - rhs) < 1e-9);
  }
  // e^{-pi x^2} - e^{-2 pi x^2}: -int_0^inf = -ln 2 / 2
  auto p = pair_log_fourier(parse_parity_function("gauss(1,0,1)+gauss(-1,0,2)"));
  CHECK(std::abs(p.value + std::log(2.0) / 2) < 1e-10);
}

TEST_CASE("log-Fourier pairing of a Gaussian and its covariance") {
  // int ln|xi| e^{-b xi^2} d xi = -(1/2) sqrt(pi/b) (gamma + ln 4b), here for F(e^{-pi x^2}) = e^{-pi xi^2}
  const double euler = 0.57721566490153286061;
  auto psi = ParityFunction::gaussian(1.0, 0, 1.0);
  auto p = pair_log_fourier(psi, 1e-10);
  CHECK(std::abs(p.value + 0.5 * (euler + std::log(4 * pi))) < 1e-10);
  for (double t : {0.5, 2.0, 3.0}) {
    auto pt = pair_log_fourier(psi.scaled(t), 1e-10);
    CHECK(std::abs(pt.value - p.value + std::log(t) * psi(0.0).real()) < 1e-9);
  }
}

TEST_CASE("profile pairing: Mellin-Parseval route") {
  auto f = TestFunction::log_gaussian(1, 0, 1);
  auto a = pair_log_fourier(ShiftedTestProfile{f, 1.0});
  CHECK(std::abs(a.value + 3.18050242812684670831887) < 1e-11);
  // covariance: scaling psi by t subtracts ln(t) psi(0) = ln(t) f(1)
  auto b = pair_log_fourier(ShiftedTestProfile{f, 2.0});
  CHECK(std::abs(b.value - a.value + std::log(2.0) * f(1.0)) < 1e-10);
  CHECK_THROWS_AS(pair_log_fourier(ShiftedTestProfile{f, -1.0}), NumericError);
}
