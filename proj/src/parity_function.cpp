#include "weil/parity_function.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <map>
#include <numbers>
#include <sstream>

#include "weil/error.hpp"

namespace weil {

ParityFunction::ParityFunction(std::vector<ParityTerm> terms) : terms_(std::move(terms)) {
  bool any_even = false, any_odd = false;
  for (const auto& t : terms_) {
    if (t.degree < 0) fail(ErrorKind::domain, "monomial degree must be non-negative");
    if (!(t.alpha > 0)) fail(ErrorKind::domain, "Gaussian scale alpha must be positive");
    (t.degree % 2 == 0 ? any_even : any_odd) = true;
  }
  if (any_even && any_odd) fail(ErrorKind::parity_mismatch, "mixed even and odd degrees");
  parity_ = any_odd ? Parity::odd : Parity::even;
}

ParityFunction ParityFunction::gaussian(cplx c, int k, double alpha) { return ParityFunction({{c, k, alpha}}); }
ParityFunction ParityFunction::gauss2() { return gaussian(2.0, 0, 1.0); }
ParityFunction ParityFunction::odd_gauss2() { return gaussian(2.0, 1, 1.0); }

bool ParityFunction::is_real() const {
  return std::all_of(terms_.begin(), terms_.end(), [](const ParityTerm& t) { return t.coef.imag() == 0.0; });
}

int ParityFunction::min_degree() const {
  int m = std::numeric_limits<int>::max();
  for (const auto& t : terms_) m = std::min(m, t.degree);
  return m;
}

cplx ParityFunction::operator()(double x) const {
  cplx acc = 0;
  for (const auto& t : terms_) acc += t.coef * std::pow(x, t.degree) * std::exp(-t.alpha * std::numbers::pi * x * x);
  return acc;
}

ParityFunction ParityFunction::operator+(const ParityFunction& g) const {
  auto t = terms_;
  t.insert(t.end(), g.terms_.begin(), g.terms_.end());
  return ParityFunction(std::move(t));
}

ParityFunction ParityFunction::operator*(cplx c) const {
  auto t = terms_;
  for (auto& x : t) x.coef *= c;
  return ParityFunction(std::move(t));
}

ParityFunction ParityFunction::scaled(double s) const {
  auto t = terms_;
  for (auto& x : t) {
    x.coef *= std::pow(s, -x.degree);
    x.alpha /= s * s;
  }
  return ParityFunction(std::move(t));
}

ParityFunction ParityFunction::simplified() const {
  std::map<std::pair<int, double>, cplx> acc;
  for (const auto& t : terms_) acc[{t.degree, t.alpha}] += t.coef;
  std::vector<ParityTerm> out;
  for (auto& [key, c] : acc)
    if (c != cplx(0)) out.push_back({c, key.first, key.second});
  ParityFunction f(std::move(out));
  if (f.terms_.empty()) f.parity_ = parity_;
  return f;
}

double ParityFunction::comb_tail(double x, double N) const {
  // sum_{n>N} |f(nx)| <= (1/x) int_{Nx}^inf |f(y)| dy, valid once every term decreases
  const double X = N * x;
  double acc = 0;
  for (const auto& t : terms_) {
    double a = t.alpha * std::numbers::pi;
    if (2 * a * X * X <= t.degree + 1e-12) return std::numeric_limits<double>::infinity();
    double denom = 2 * a * X - double(t.degree) / X;
    acc += std::abs(t.coef) * std::pow(X, t.degree) * std::exp(-a * X * X) / denom;
  }
  return acc / x;
}

std::pair<double, int> ParityFunction::small_x_bound() const {
  // constant terms: sum c e^{-a x^2} = sum c + sum c (e^{-a x^2} - 1), |e^{-a x^2}-1| <= a x^2
  cplx c0 = 0;
  double abs0 = 0, quad = 0, rest = 0;
  int kmin_rest = std::numeric_limits<int>::max();
  for (const auto& t : terms_) {
    if (t.degree == 0) {
      c0 += t.coef;
      abs0 += std::abs(t.coef);
      quad += std::abs(t.coef) * t.alpha * std::numbers::pi;
    } else {
      rest += std::abs(t.coef);
      kmin_rest = std::min(kmin_rest, t.degree);
    }
  }
  if (abs0 > 0 && std::abs(c0) > 1e-14 * abs0) return {std::abs(c0) + quad, 0};
  int p = kmin_rest;
  if (abs0 > 0) p = std::min(p, 2);
  if (p == std::numeric_limits<int>::max()) return {0.0, 0};
  return {quad + rest, p};  // valid for x <= 1
}

std::string ParityFunction::expr() const {
  std::ostringstream os;
  os.precision(17);
  bool first = true;
  for (const auto& t : terms_) {
    if (!first) os << "+";
    first = false;
    os << "gauss(c=";
    if (t.coef.imag() == 0.0)
      os << t.coef.real();
    else
      os << t.coef.real() << (t.coef.imag() < 0 ? "" : "+") << t.coef.imag() << "i";
    os << ",k=" << t.degree << ",alpha=" << t.alpha << ")";
  }
  if (first) os << "0";
  return os.str();
}

}  // namespace weil
