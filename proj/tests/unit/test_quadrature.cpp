#include <doctest.h>

#include <cmath>
#include <numbers>

#include "weil/error.hpp"
#include "weil/quadrature.hpp"

using namespace weil;

TEST_CASE("trapezoid integrates a Gaussian to roundoff and reports an honest error") {
  QuadratureSpec q{-10, 10, 401, 1e-12};
  auto r = trapezoid([](double u) { return cplx(std::exp(-u * u)); }, q);
  CHECK(std::abs(r.value.real() - std::sqrt(std::numbers::pi)) < 1e-14);
  CHECK(r.est_error < 1e-13);
}

TEST_CASE("trapezoid error estimate covers the true error on an under-resolved grid") {
  auto g = [](double u) { return cplx(std::exp(-u * u / (2 * 0.05 * 0.05))); };
  const double exact = 0.05 * std::sqrt(2 * std::numbers::pi);
  for (std::size_t n : {33, 64, 65, 129}) {
    QuadratureSpec q{-1, 1, n, 1e-12};
    auto r = trapezoid(g, q);
    CHECK(std::abs(r.value.real() - exact) <= r.est_error);
  }
}

TEST_CASE("QuadratureSpec invariants") {
  CHECK_THROWS_AS((QuadratureSpec{1, 0, 100, 1e-10}.validate()), NumericError);
  CHECK_THROWS_AS((QuadratureSpec{0, 1, 15, 1e-10}.validate()), NumericError);
  CHECK_THROWS_AS((QuadratureSpec{0, 1, 100, 0}.validate()), NumericError);
  QuadratureSpec q{0, 1, 17, 1e-10};
  CHECK(q.refined().n_points == 33);
  CHECK(q.refined().step() == doctest::Approx(q.step() / 2));
}

TEST_CASE("double-exponential rules") {
  auto a = tanh_sinh([](double x) { return std::log(x); }, 0.0, 1.0, 1e-13);
  CHECK(std::abs(a.value + 1.0) < 1e-12);
  auto b = exp_sinh([](double x) { return std::exp(-x) * x; }, 0.0, 1e-13);
  CHECK(std::abs(b.value - 1.0) < 1e-12);
}

TEST_CASE("pairwise summation is exact for many equal terms") {
  std::vector<double> v(1 << 20, 0.1);
  CHECK(std::abs(pairwise_sum(v) - 0.1 * double(v.size())) < 1e-9);
}
