// Finite log-grid discretisations of the convolution/commutator operators and
// the trace identities behind the prime terms.
#pragma once

#include <Eigen/Dense>
#include <cstddef>
#include <vector>

#include "weil/quadrature.hpp"
#include "weil/test_function.hpp"
#include "weil/zeta_operators.hpp"

namespace weil {

// phi(t) = S(ln t / w) with S a C-infinity step on [-1, 1] satisfying S(v) + S(-v) = 1
struct AuxiliaryPhi {
  double w = 1.0;
  double of_log(double u) const;
  double operator()(double t) const { return of_log(std::log(t)); }
};

AuxiliaryPhi build_phi(double w);

// residual |int_0^inf (phi(z) - phi(x z)) d^x z - ln(1/x)|
double phi_log_identity(const AuxiliaryPhi& phi, double x, const QuadratureSpec& q);

// u_i = U (2i - (N-1)) / (N-1): symmetric, so x -> 1/x maps the grid onto itself
struct LogGrid {
  double U = 8.0;
  std::size_t N = 2048;
  double h() const { return 2 * U / double(N - 1); }
  double u(std::size_t i) const { return U * (2.0 * double(i) - double(N - 1)) / double(N - 1); }
  static LogGrid symmetric(double U, std::size_t N);
};

struct KernelOperator {
  LogGrid grid;
  Eigen::MatrixXd k;  // k(x_i, x_j); the operator is g -> sum_j h k(x_i, x_j) g(x_j)
  double weight() const { return grid.h(); }
};

// kernel f(x/y) of g -> int f(x/y) g(y) d^x y
KernelOperator convolution_operator(const TestFunction& f, const LogGrid& grid);
KernelOperator multiplication_operator(const AuxiliaryPhi& phi, const LogGrid& grid);  // as a diagonal kernel / h
KernelOperator compose(const KernelOperator& a, const KernelOperator& b);

// (x, y) -> int f0(x/z) f1(z/y) (phi(z) - phi(y)) d^x z, the kernel of conv(f0) [M_phi, conv(f1)]
KernelOperator commutator_kernel(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                 const LogGrid& grid, double window_tol = 1e-12);
// just the diagonal of the same kernel, O(N^2)
Eigen::VectorXd commutator_diagonal(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                    const LogGrid& grid, double window_tol = 1e-12);

double trace_diagonal(const KernelOperator& K);
double trace_of_diagonal(const Eigen::VectorXd& diag, const LogGrid& grid);

struct TraceCheck {
  double trace;
  double target;  // int f0(x) f1(1/x) ln(1/x) d^x x
  double target_error;
  double residual;
};
TraceCheck toeplitz_trace_check(const TestFunction& f0, const TestFunction& f1, const AuxiliaryPhi& phi,
                                const LogGrid& grid, const QuadratureSpec& q);

struct DerivationCheck {
  double lhs;           // tau(f * Z d(Z^{-1})) with the comb built by Dirichlet convolution
  double rhs;           // sum_{p <= p_max} sum_{e <= e_max} ln p f(p^e)
  double residual;
  double tail_bound;
  double rule_residual; // |d(Z^{-1}) + Z^{-2} dZ| on the truncated combs
};
DerivationCheck weil_derivation_check(const TestFunction& f, const TruncationSpec& tr);

// max entry of |M_phi + J M_phi J - id| on the grid
double phi_reflection_deviation(const AuxiliaryPhi& phi, const LogGrid& grid);

}  // namespace weil
