#include "weil/trace_checks.hpp"

#include <algorithm>
#include <cmath>
#include <limits>

#include "weil/arithmetic.hpp"
#include "weil/error.hpp"

namespace weil {

namespace {

// sup over |v| >= r of |f0(e^v) f1(e^{-v})| (|v| + 1), sampled
double reach(const TestFunction& f0, const TestFunction& f1, double r, double vmax) {
  double m = 0;
  for (double v = r; v <= vmax; v += 0.01)
    for (double s : {v, -v}) m = std::max(m, std::abs(f0.eval_log(s) * f1.eval_log(-s)) * (std::abs(s) + 1));
  return m;
}

void check_window(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi, const LogGrid& grid,
                  double tol) {
  if (grid.N < 64) fail(ErrorKind::config, "kernel grids need N >= 64");
  double r = grid.U - phi.w;
  if (r <= 0) fail(ErrorKind::window_too_small, "window does not contain the transition of phi");
  double peak = std::max(1.0, reach(f0, f1, 0.0, 2 * grid.U));
  double m = reach(f0, f1, r, 2 * grid.U);
  if (m > tol * peak)
    fail(ErrorKind::window_too_small, "kernel mass " + std::to_string(m) + " reaches the window edge");
}

std::vector<double> toeplitz_row(const TestFunction& f, const LogGrid& g) {
  // t[d + N - 1] = f(e^{d h}), d = -(N-1)..N-1
  const std::size_t N = g.N;
  std::vector<double> t(2 * N - 1);
  for (std::size_t i = 0; i < t.size(); ++i) t[i] = f.eval_log((double(i) - double(N - 1)) * g.h());
  return t;
}

}  // namespace

double AuxiliaryPhi::of_log(double u) const {
  double v = u / w;
  if (v <= -1) return 0.0;
  if (v >= 1) return 1.0;
  return 1.0 / (1.0 + std::exp(2.0 / (1.0 + v) - 2.0 / (1.0 - v)));
}

AuxiliaryPhi build_phi(double w) {
  if (!(w > 0)) fail(ErrorKind::domain, "phi transition width must be positive");
  return AuxiliaryPhi{w};
}

double phi_log_identity(const AuxiliaryPhi& phi, double x, const QuadratureSpec& q) {
  if (!(x > 0)) fail(ErrorKind::domain, "x must be positive");
  q.validate();
  const double c = std::log(x);
  if (q.u_min > -phi.w - std::abs(c) || q.u_max < phi.w + std::abs(c))
    fail(ErrorKind::window_too_small, "window must cover the transition of phi widened by |ln x|");
  auto r = trapezoid([&](double u) { return cplx(phi.of_log(u) - phi.of_log(u + c)); }, q);
  double residual = std::abs(r.value.real() + c);
  if (r.est_error > q.tolerance) fail(ErrorKind::tolerance_not_met, "phi identity quadrature did not converge");
  return residual;
}

LogGrid LogGrid::symmetric(double U, std::size_t N) {
  if (!(U > 0) || N < 2) fail(ErrorKind::config, "grid needs U > 0 and N >= 2");
  return LogGrid{U, N};
}

KernelOperator convolution_operator(const TestFunction& f, const LogGrid& grid) {
  auto t = toeplitz_row(f, grid);
  const std::size_t N = grid.N;
  KernelOperator K{grid, Eigen::MatrixXd(N, N)};
  for (std::size_t j = 0; j < N; ++j)
    for (std::size_t i = 0; i < N; ++i) K.k(Eigen::Index(i), Eigen::Index(j)) = t[i + N - 1 - j];
  return K;
}

KernelOperator multiplication_operator(const AuxiliaryPhi& phi, const LogGrid& grid) {
  const std::size_t N = grid.N;
  KernelOperator K{grid, Eigen::MatrixXd::Zero(Eigen::Index(N), Eigen::Index(N))};
  for (std::size_t i = 0; i < N; ++i) K.k(Eigen::Index(i), Eigen::Index(i)) = phi.of_log(grid.u(i)) / grid.h();
  return K;
}

KernelOperator compose(const KernelOperator& a, const KernelOperator& b) {
  return KernelOperator{a.grid, a.weight() * (a.k * b.k)};
}

KernelOperator commutator_kernel(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                 const LogGrid& grid, double window_tol) {
  check_window(f0, f1, phi, grid, window_tol);
  const std::size_t N = grid.N;
  auto A = convolution_operator(f0, grid).k;
  auto B = convolution_operator(f1, grid).k;
  Eigen::VectorXd p(Eigen::Index(N), 1);
  for (std::size_t i = 0; i < N; ++i) p(Eigen::Index(i)) = phi.of_log(grid.u(i));
  Eigen::MatrixXd K = A * p.asDiagonal() * B - (A * B) * p.asDiagonal();
  return KernelOperator{grid, grid.h() * K};
}

Eigen::VectorXd commutator_diagonal(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                    const LogGrid& grid, double window_tol) {
  check_window(f0, f1, phi, grid, window_tol);
  const std::size_t N = grid.N;
  auto a = toeplitz_row(f0, grid), b = toeplitz_row(f1, grid);
  std::vector<double> p(N);
  for (std::size_t i = 0; i < N; ++i) p[i] = phi.of_log(grid.u(i));
  Eigen::VectorXd d(Eigen::Index(N), 1);
  std::vector<double> t(N);
  for (std::size_t i = 0; i < N; ++i) {
    // sum_z f0(x_i/x_z) f1(x_z/x_i) (phi_z - phi_i)
    for (std::size_t z = 0; z < N; ++z) t[z] = a[i + N - 1 - z] * b[z + N - 1 - i] * (p[z] - p[i]);
    d(Eigen::Index(i)) = grid.h() * pairwise_sum(t);
  }
  return d;
}

double trace_diagonal(const KernelOperator& K) {
  std::vector<double> d(std::size_t(K.k.rows()));
  for (Eigen::Index i = 0; i < K.k.rows(); ++i) d[std::size_t(i)] = K.k(i, i);
  return K.weight() * pairwise_sum(d);
}

double trace_of_diagonal(const Eigen::VectorXd& diag, const LogGrid& grid) {
  std::vector<double> d(diag.data(), diag.data() + diag.size());
  return grid.h() * pairwise_sum(d);
}

TraceCheck toeplitz_trace_check(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                const LogGrid& grid, const QuadratureSpec& q) {
  TraceCheck r{};
  r.trace = trace_of_diagonal(commutator_diagonal(f0, f1, phi, grid), grid);
  auto g = [&](double u) { return cplx(f0.eval_log(u) * f1.eval_log(-u) * -u); };
  auto a = trapezoid(g, q), b = trapezoid(g, q.refined());
  r.target = b.value.real();
  r.target_error = std::abs(a.value - b.value) + b.est_error;
  r.residual = std::abs(r.trace - r.target);
  return r;
}

DerivationCheck weil_derivation_check(const TestFunction& f, const TruncationSpec& tr) {
  tr.validate();
  // comb length: sum_{n > N} ln n |f(n)| below tail_tol
  std::size_t N = 2;
  auto bound = [&](double n) {
    double U = std::log(n);
    return U < f.monotone_threshold(1) ? std::numeric_limits<double>::infinity() : f.tail_integral(1, 1.0, U);
  };
  while (!(bound(double(N)) < tr.tail_tol)) {
    if (N >= tr.n_max) fail(ErrorKind::tail_bound_violation, "derivation comb tail not certified within n_max");
    N = std::min(tr.n_max, 2 * N);
  }
  auto one = DirichletComb::one(N), mu = DirichletComb::mobius(N);
  DirichletComb dzinv = mu.derivation();
  DirichletComb comb = one * dzinv;  // Z * d(Z^{-1})
  DerivationCheck r{};
  r.lhs = comb.apply([&](double x) { return f(x); }, 1.0);
  // d(Z^{-1}) = -Z^{-2} dZ on the truncated combs
  DirichletComb rule = (mu * mu * one.derivation()) * -1.0;
  r.rule_residual = dzinv.max_abs_diff(rule);
  std::vector<double> t;
  auto sieve = Sieve::up_to(tr.p_max);
  for (auto p : sieve->primes()) {
    if (p > tr.p_max) break;
    double lp = std::log(double(p));
    int E = std::min(tr.e_max, int(700.0 / lp));
    for (int e = 1; e <= E; ++e) t.push_back(lp * f(std::pow(double(p), e)));
  }
  r.rhs = pairwise_sum(t);
  r.residual = std::abs(r.lhs - r.rhs);
  double U = std::log(double(tr.p_max));
  double rhs_tail = U < f.monotone_threshold(1) ? std::numeric_limits<double>::infinity() : f.tail_integral(1, 1.0, U);
  r.tail_bound = bound(double(N)) + rhs_tail;
  return r;
}

double phi_reflection_deviation(const AuxiliaryPhi& phi, const LogGrid& grid) {
  const Eigen::Index N = Eigen::Index(grid.N);
  Eigen::VectorXd p(N), e(N);
  for (Eigen::Index i = 0; i < N; ++i) {
    p(i) = phi.of_log(grid.u(std::size_t(i)));
    e(i) = std::exp(-grid.u(std::size_t(i)));
  }
  // (J g)(x_i) = x_i^{-1} g(1/x_i): weight e^{-u_i} times the index reversal
  Eigen::MatrixXd J = Eigen::MatrixXd::Zero(N, N);
  for (Eigen::Index i = 0; i < N; ++i) J(i, N - 1 - i) = e(i);
  Eigen::MatrixXd M = p.asDiagonal();
  Eigen::MatrixXd D = M + J * M * J - Eigen::MatrixXd::Identity(N, N);
  return D.cwiseAbs().maxCoeff();
}

}  // namespace weil
