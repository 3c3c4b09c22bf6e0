#include "weil/quadrature.hpp"

#include <boost/math/quadrature/exp_sinh.hpp>
#include <boost/math/quadrature/tanh_sinh.hpp>
#include <limits>

#include "weil/error.hpp"

namespace weil {

const char* to_string(ErrorKind k) {
  switch (k) {
    case ErrorKind::domain: return "domain-error";
    case ErrorKind::pole: return "pole";
    case ErrorKind::tolerance_not_met: return "tolerance-not-met";
    case ErrorKind::window_too_small: return "window-too-small";
    case ErrorKind::divergent_integral: return "divergent-integral";
    case ErrorKind::tail_bound_violation: return "tail-bound-violation";
    case ErrorKind::parse_error: return "parse-error";
    case ErrorKind::order_violation: return "order-violation";
    case ErrorKind::count_mismatch: return "count-mismatch";
    case ErrorKind::parity_mismatch: return "parity-mismatch";
    case ErrorKind::non_primitive_character: return "non-primitive-character";
    case ErrorKind::imaginary_residue: return "imaginary-residue-too-large";
    case ErrorKind::disagreement: return "disagreement-beyond-tolerance";
    case ErrorKind::budget_exceeded: return "budget-exceeded";
    case ErrorKind::config: return "config-error";
  }
  return "error";
}

void QuadratureSpec::validate() const {
  if (!(u_min < u_max)) fail(ErrorKind::config, "quadrature window needs u_min < u_max");
  if (n_points < 16) fail(ErrorKind::config, "quadrature needs at least 16 points");
  if (!(tolerance > 0)) fail(ErrorKind::config, "quadrature tolerance must be positive");
}

QuadratureSpec QuadratureSpec::refined() const {
  QuadratureSpec r = *this;
  r.n_points = 2 * n_points - 1;
  return r;
}

TrapezoidResult trapezoid(const std::function<cplx(double)>& g, const QuadratureSpec& q) {
  q.validate();
  const std::size_t n = q.n_points;
  const double h = q.step();
  std::vector<cplx> v(n);
  double abs_sum = 0;
  for (std::size_t i = 0; i < n; ++i) {
    double u = (i == n - 1) ? q.u_max : q.u_min + h * double(i);
    v[i] = g(u);
    abs_sum += std::abs(v[i]) * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
  }
  std::vector<cplx> fine_terms(n), coarse_terms;
  for (std::size_t i = 0; i < n; ++i) fine_terms[i] = v[i] * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
  // coarse rule (step 2h) on the even nodes; for even n the last interval of length h
  // is closed with a plain trapezoid panel
  const std::size_t last_even = (n % 2 == 1) ? n - 1 : n - 2;
  for (std::size_t i = 0; i <= last_even; i += 2)
    coarse_terms.push_back(2.0 * v[i] * ((i == 0 || i == last_even) ? 0.5 : 1.0));
  if (n % 2 == 0) coarse_terms.push_back(0.5 * (v[n - 2] + v[n - 1]));
  cplx fine = h * pairwise_sum(fine_terms);
  cplx coarse = h * pairwise_sum(coarse_terms);
  double round = 64 * std::numeric_limits<double>::epsilon() * abs_sum * h;
  return {fine, std::abs(fine - coarse) + round, abs_sum * h};
}

double trapezoid_real(const std::function<double(double)>& g, double a, double b, std::size_t n) {
  const double h = (b - a) / double(n - 1);
  std::vector<double> v(n);
  for (std::size_t i = 0; i < n; ++i) v[i] = g(a + h * double(i)) * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
  return h * pairwise_sum(v);
}

DEResult tanh_sinh(const std::function<double(double)>& g, double a, double b, double tol) {
  boost::math::quadrature::tanh_sinh<double> ts;
  double err = 0, l1 = 0;
  double v = ts.integrate(g, a, b, tol, &err, &l1);
  return {v, err + 1e-15 * l1};
}

DEResult exp_sinh(const std::function<double(double)>& g, double a, double tol) {
  boost::math::quadrature::exp_sinh<double> es;
  double err = 0, l1 = 0;
  double v = es.integrate(g, a, std::numeric_limits<double>::infinity(), tol, &err, &l1);
  return {v, err + 1e-15 * l1};
}

}  // namespace weil
