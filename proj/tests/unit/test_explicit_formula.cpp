#include <doctest.h>

#include <cmath>
#include <numbers>

#include "weil/characters.hpp"
#include "weil/error.hpp"
#include "weil/explicit_formula.hpp"
#include "weil/expression.hpp"
#include "weil/zeros.hpp"

using namespace weil;

namespace {
std::string data(const char* name) { return std::string(WEIL_TEST_DATA) + "/" + name; }

bool throws_kind(auto&& fn, ErrorKind k) {
  try {
    fn();
  } catch (const NumericError& e) {
    return e.kind() == k;
  }
  return false;
}

TruncationSpec primes_to(std::size_t p) {
  TruncationSpec tr;
  tr.p_max = p;
  return tr;
}
}  // namespace

TEST_CASE("W_p") {
  TruncationSpec tr;
  auto f = TestFunction::log_gaussian(1, 0, 1);
  auto w = W_p(f, 2, tr);
  double brute = 0;
  for (int e = 1; e <= 60; ++e) brute += std::log(2.0) * (f(std::pow(2.0, e)) + f(std::pow(2.0, -e)) * std::pow(2.0, -e));
  CHECK(w.value == doctest::Approx(brute).epsilon(1e-14));
  CHECK(throws_kind([&] { W_p(f, 4, tr); }, ErrorKind::domain));
  // support locality: a bump on [1/2, 2] vanishes at 2 and 1/2
  CHECK(W_p(TestFunction::log_bump(1, 0.5, 2), 2, tr).value == 0.0);
  auto g = TestFunction::log_bump(1, 1.5, 2.5);
  CHECK(W_p(g, 2, tr).value == doctest::Approx(std::log(2.0) * g(2.0)));
  CHECK(W_p(g, 3, tr).value == 0.0);
}

TEST_CASE("W_inf: duality, Gamma-factor route and the calibrated principal value agree") {
  auto f = TestFunction::log_gaussian(1, 0, 1);
  auto w = W_infty(f);
  CHECK(std::abs(w.duality - 3.18050242812684670831887) < 1e-11);
  CHECK(std::abs(w.gamma_route - w.duality) < 1e-10);
  CHECK(std::abs(w.pv_calibrated - w.duality) < 1e-6);
  for (const char* e : {"shift(2, loggauss(1,0,1))", "loggauss(1,0.3,0.4)", "loggauss(1,0,1) + 0.5*loggauss(1,-1,0.5)"}) {
    auto v = W_infty(parse_test_function(e));
    CHECK(std::abs(v.gamma_route - v.duality) < 1e-9);
    CHECK(std::abs(v.pv_calibrated - v.duality) < 1e-6);
  }
}

TEST_CASE("the fitted principal-value constant is gamma + ln 2 pi") {
  auto [c, err] = pv_calibration_constant();
  const double euler = 0.57721566490153286061;
  CHECK(std::abs(c - (euler + std::log(2 * std::numbers::pi))) < 1e-7);
  CHECK(err < 1e-6);
}

TEST_CASE("W_inf is linear") {
  auto f = TestFunction::log_gaussian(1, 0.2, 0.6), g = TestFunction::log_gaussian(-0.5, -0.4, 0.9);
  CHECK(W_infty(f + g * 2.0).duality == doctest::Approx(W_infty(f).duality + 2 * W_infty(g).duality).epsilon(1e-11));
}

TEST_CASE("explicit formula for log-Gaussians") {
  auto zt = load_zeros(data("zeta_zeros_120.txt")).below(60);
  for (const char* e : {"loggauss(1,0,1)", "shift(2, loggauss(1,0,1))", "shift(0.5, loggauss(1,0,1))"}) {
    auto r = verify_explicit_formula(parse_test_function(e), zt, primes_to(10000));
    CHECK(r.residual < 1e-4);
    CHECK(r.residual < r.budgets.total);
    CHECK(r.within_budget);
    CHECK(r.status == "ok");
    CHECK_NOTHROW(require_within_budget(r));
  }
}

TEST_CASE("explicit formula where the zeros matter") {
  auto zt = load_zeros(data("zeta_zeros_120.txt"));
  auto f = TestFunction::log_gaussian(1, 0, 0.25);
  auto r = verify_explicit_formula(f, zt, primes_to(10000));
  CHECK(std::abs(r.zero_contribution) > 1e-3);
  CHECK(r.residual < 1e-10);
  CHECK(r.within_budget);
  // ord convention: +1 at the poles, -1 per zero
  CHECK(r.spectral_side == doctest::Approx(r.pole_contribution - r.zero_contribution).epsilon(1e-15));
  // dropping the zeros breaks the balance far beyond the budget
  ZeroTable none = zt.below(10);
  none.height_bound = 120;
  auto broken = verify_explicit_formula(f, none, primes_to(10000));
  CHECK_FALSE(broken.within_budget);
  CHECK(throws_kind([&] { require_within_budget(broken); }, ErrorKind::budget_exceeded));
}

TEST_CASE("explicit formula for a bump") {
  auto zt = load_zeros(data("zeta_zeros_120.txt"));
  ExplicitFormulaOptions opt;
  opt.spectral.zero_tail_tol = 1e-3;
  auto r = verify_explicit_formula(TestFunction::log_bump(1, 0.5, 2), zt, primes_to(1000), opt);
  CHECK(r.W_p_total == 0.0);
  CHECK(r.residual < r.budgets.total);
  CHECK(r.residual < 1e-4);
}

TEST_CASE("zero tail certification") {
  auto zt = load_zeros(data("zeta_zeros_120.txt")).below(60);
  CHECK(throws_kind([&] { spectral_side(TestFunction::log_gaussian(1, 0, 0.05), zt); },
                    ErrorKind::tail_bound_violation));
  CHECK(zero_band_bound(TestFunction::log_gaussian(1, 0, 1), 60, 1e300) < 1e-300);
}

TEST_CASE("Dirichlet explicit formula for chi mod 4 with an ingested zero table") {
  auto chi = primitive_character(4, 0);
  auto zt = load_zeros(data("l_chi4_zeros_60.txt"));
  for (const char* e : {"loggauss(1,0,0.3)", "loggauss(1,0.2,0.5)"}) {
    auto r = verify_dirichlet_explicit_formula(parse_test_function(e), chi, zt, primes_to(10000));
    CHECK(r.status == "derived-formula");
    CHECK(r.residual < 1e-8);
    CHECK(r.within_budget);
  }
  // support locality of the twisted prime terms
  auto g = TestFunction::log_bump(1, 2.5, 3.5);
  CHECK(W_p_chi(g, chi, 3, TruncationSpec{}).value == doctest::Approx(-std::log(3.0) * g(3.0)));
  CHECK(W_p_chi(g, chi, 2, TruncationSpec{}).value == 0.0);
  CHECK(throws_kind([&] { W_p_chi(g, primitive_character(5, 0), 2, TruncationSpec{}); }, ErrorKind::domain));
}
