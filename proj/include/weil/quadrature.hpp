// Grids, compensated sums and the two quadrature rules used throughout:
// trapezoid on a uniform log grid, and tanh-sinh (boost) for endpoint work.
#pragma once

#include <cmath>
#include <complex>
#include <cstddef>
#include <functional>
#include <vector>

namespace weil {

using cplx = std::complex<double>;

struct QuadratureSpec {
  double u_min = -40.0;
  double u_max = 40.0;
  std::size_t n_points = 8193;
  double tolerance = 1e-10;

  void validate() const;
  double step() const { return (u_max - u_min) / double(n_points - 1); }
  QuadratureSpec refined() const;  // same window, half the spacing
};

// Pairwise summation keeps reductions deterministic and accurate.
template <class T>
T pairwise_sum(const T* x, std::size_t n) {
  if (n <= 16) {
    T s{};
    for (std::size_t i = 0; i < n; ++i) s += x[i];
    return s;
  }
  std::size_t m = n / 2;
  return pairwise_sum(x, m) + pairwise_sum(x + m, n - m);
}
template <class T>
T pairwise_sum(const std::vector<T>& v) {
  return pairwise_sum(v.data(), v.size());
}

struct TrapezoidResult {
  cplx value;
  double est_error;   // |T_h - T_2h| plus a rounding allowance
  double abs_sum;     // h * sum |g|, for rounding estimates
};

// Trapezoid of g over [u_min,u_max] with n_points nodes.
TrapezoidResult trapezoid(const std::function<cplx(double)>& g, const QuadratureSpec& q);
double trapezoid_real(const std::function<double(double)>& g, double a, double b, std::size_t n);

// Tanh-sinh on a finite interval and exp-sinh on [a, inf).
struct DEResult {
  double value;
  double est_error;
};
DEResult tanh_sinh(const std::function<double(double)>& g, double a, double b, double tol = 1e-14);
DEResult exp_sinh(const std::function<double(double)>& g, double a, double tol = 1e-14);

}  // namespace weil
