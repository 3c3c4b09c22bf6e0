// Even/odd Schwartz functions on the real line: sum of c x^k exp(-alpha pi x^2).
// Coefficients are complex because the Fourier transform of a real odd member
// is purely imaginary.
#pragma once

#include <complex>
#include <string>
#include <vector>

namespace weil {

using cplx = std::complex<double>;

struct ParityTerm {
  cplx coef;
  int degree;
  double alpha;
};

class ParityFunction {
 public:
  enum class Parity { even, odd };

  ParityFunction() = default;
  explicit ParityFunction(std::vector<ParityTerm> terms);  // validates parity

  static ParityFunction gaussian(cplx c, int k, double alpha);
  static ParityFunction gauss2();      // 2 exp(-pi x^2), self-dual
  static ParityFunction odd_gauss2();  // 2 x exp(-pi x^2)

  Parity parity() const { return parity_; }
  int sign() const { return parity_ == Parity::even ? 1 : -1; }
  const std::vector<ParityTerm>& terms() const { return terms_; }
  bool is_real() const;
  int min_degree() const;

  cplx operator()(double x) const;
  double real_at(double x) const { return (*this)(x).real(); }

  ParityFunction operator+(const ParityFunction& g) const;
  ParityFunction operator*(cplx c) const;
  ParityFunction scaled(double t) const;  // x -> f(x/t)
  ParityFunction simplified() const;      // merge like terms, drop zeros

  // sum_{n > N} |f(n x)| via the Gaussian integral test; +inf if not yet monotone
  double comb_tail(double x, double N) const;
  // |f(x)| <= C x^p near 0: returns (C, p) using cancellation of constant terms
  std::pair<double, int> small_x_bound() const;

  std::string expr() const;

 private:
  std::vector<ParityTerm> terms_;
  Parity parity_ = Parity::even;
};

}  // namespace weil
