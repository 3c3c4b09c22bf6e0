#include "weil/special_functions.hpp"

#include <array>
#include <cmath>
#include <numbers>

#include "weil/error.hpp"

namespace weil {

namespace {

constexpr double pi = std::numbers::pi;
const cplx I{0, 1};

// Godfrey's Lanczos coefficients, g = 607/128
constexpr double lanczos_g = 607.0 / 128.0;
constexpr std::array<double, 15> lanczos_c = {
    0.99999999999999709182,     57.156235665862923517,     -59.597960355475491248,
    14.136097974741747174,      -0.49191381609762019978,   .33994649984811888699e-4,
    .46523628927048575665e-4,   -.98374475304879564677e-4, .15808870322491248884e-3,
    -.21026444172410488319e-3,  .21743961811521264320e-3,  -.16431810653676389022e-3,
    .84418223983852743293e-4,   -.26190838401581408670e-4, .36899182659531622704e-5};

// B_{2k} / (2k)!, k = 1..12
constexpr std::array<double, 12> bern_over_fact = {
    0.083333333333333333333,  -0.0013888888888888888889, 0.000033068783068783068783,
    -8.2671957671957671958e-7, 2.0876756987868098979e-8,  -5.2841901386874931848e-10,
    1.3382536530684678833e-11, -3.3896802963225828668e-13, 8.5860620562778445641e-15,
    -2.174868698558061873e-16, 5.5090028283602295152e-18,  -1.3954464685812523341e-19};

// B_{2k} for the digamma series
constexpr std::array<double, 7> bern = {1.0 / 6, -1.0 / 30, 1.0 / 42, -1.0 / 30, 5.0 / 66, -691.0 / 2730, 7.0 / 6};

bool is_nonpositive_integer(cplx s) {
  if (std::abs(s.imag()) > 1e-14) return false;
  double r = std::round(s.real());
  return r <= 0 && std::abs(s.real() - r) < 1e-14;
}

// ln Gamma(z) for Re z >= 1/2
cplx lgamma_lanczos(cplx z) {
  z -= 1.0;
  cplx x = lanczos_c[0];
  for (std::size_t k = 1; k < lanczos_c.size(); ++k) x += lanczos_c[k] / (z + double(k));
  cplx t = z + lanczos_g + 0.5;
  return 0.5 * std::log(2 * pi) + (z + 0.5) * std::log(t) - t + std::log(x);
}

// Euler-Maclaurin remainder sum_k B_{2k}/(2k)! (s)_{2k-1} X^{-s-2k+1}
cplx em_corrections(cplx s, cplx x_pow_minus_s, double X) {
  cplx acc = 0;
  cplx poch = s;  // (s)_{2k-1}
  cplx pw = x_pow_minus_s / X;
  double inv2 = 1.0 / (X * X);
  for (std::size_t k = 0; k < bern_over_fact.size(); ++k) {
    acc += bern_over_fact[k] * poch * pw;
    poch *= (s + double(2 * k + 1)) * (s + double(2 * k + 2));
    pw *= inv2;
  }
  return acc;
}

// Hurwitz zeta without the 1/(s-1) piece:
//   sum_{n<N} (n+a)^{-s} + [(N+a)^{1-s} - 1]/(s-1) + (N+a)^{-s}/2 + corrections
cplx hurwitz_regular(cplx s, double a) {
  int N = std::max(20, int(std::ceil(std::abs(s.imag()))) + int(std::ceil(std::max(0.0, -s.real()))));
  cplx sum = 0;
  for (int n = N - 1; n >= 0; --n) sum += std::exp(-s * std::log(double(n) + a));
  double X = double(N) + a;
  double L = std::log(X);
  cplx xs = std::exp(-s * L);
  cplx z = (1.0 - s) * L;
  cplx reg = (std::abs(z) < 1e-300) ? cplx(-L) : -L * expm1(z) / z;  // [X^{1-s}-1]/(s-1)
  return sum + reg + 0.5 * xs + em_corrections(s, xs, X);
}

}  // namespace

cplx expm1(cplx z) {
  if (std::abs(z) < 0.1) {
    cplx term = z, acc = z;
    for (int k = 2; k < 18; ++k) {
      term *= z / double(k);
      acc += term;
    }
    return acc;
  }
  return std::exp(z) - 1.0;
}

cplx lgamma(cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorKind::pole, "Gamma has a pole at a non-positive integer");
  if (s.real() >= 0.5) return lgamma_lanczos(s);
  int n = int(std::ceil(0.5 - s.real()));
  cplx shift = 0;
  for (int k = 0; k < n; ++k) shift += std::log(s + double(k));
  return lgamma_lanczos(s + double(n)) - shift;
}

cplx gamma(cplx s) {
  if (is_nonpositive_integer(s)) fail(ErrorKind::pole, "Gamma has a pole at a non-positive integer");
  if (s.real() >= 0.5) return std::exp(lgamma_lanczos(s));
  return pi / (std::sin(pi * s) * std::exp(lgamma_lanczos(1.0 - s)));
}

cplx digamma(cplx z) {
  if (is_nonpositive_integer(z)) fail(ErrorKind::pole, "digamma has a pole at a non-positive integer");
  if (z.real() < 0.5) return digamma(1.0 - z) - pi / std::tan(pi * z);
  cplx acc = 0;
  while (std::abs(z) < 12.0) {
    acc -= 1.0 / z;
    z += 1.0;
  }
  cplx inv2 = 1.0 / (z * z);
  cplx pw = inv2;
  cplx series = 0;
  for (std::size_t k = 0; k < bern.size(); ++k) {
    series += bern[k] / double(2 * (k + 1)) * pw;
    pw *= inv2;
  }
  return acc + std::log(z) - 0.5 / z - series;
}

cplx zeta(cplx s) {
  if (std::abs(s - 1.0) < 1e-12) fail(ErrorKind::pole, "zeta has a pole at s = 1");
  if (s.real() < 0) {
    // functional equation; Euler-Maclaurin cancels badly for Re s < 0
    return std::pow(cplx(2), s) * std::pow(cplx(pi), s - 1.0) * std::sin(pi * s / 2.0) * gamma(1.0 - s) *
           zeta(1.0 - s);
  }
  return hurwitz_regular(s, 1.0) + 1.0 / (s - 1.0);
}

cplx hurwitz_zeta(cplx s, double a) {
  if (std::abs(s - 1.0) < 1e-12) fail(ErrorKind::pole, "Hurwitz zeta has a pole at s = 1");
  if (!(a > 0)) fail(ErrorKind::domain, "Hurwitz zeta needs a > 0");
  return hurwitz_regular(s, a) + 1.0 / (s - 1.0);
}

CompletedZetaValue xi(cplx s) {
  if (std::abs(s) < 1e-12 || std::abs(s - 1.0) < 1e-12) fail(ErrorKind::pole, "xi has poles at 0 and 1");
  CompletedZetaValue r;
  r.s = s;
  r.gamma_factor = std::exp(-s / 2.0 * std::log(pi) + lgamma(s / 2.0));
  r.zeta = zeta(s);
  r.xi = r.gamma_factor * r.zeta;
  return r;
}

cplx l_chi(const DirichletCharacter& chi, cplx s) {
  if (!chi.primitive || chi.is_trivial())
    fail(ErrorKind::non_primitive_character, "L_chi needs a primitive non-trivial character");
  const int d = chi.modulus;
  cplx acc = 0;
  for (int a = 1; a < d; ++a) {
    cplx c = chi(a);
    if (c == cplx(0)) continue;
    acc += c * hurwitz_regular(s, double(a) / d);  // the 1/(s-1) parts cancel: sum chi(a) = 0
  }
  return std::exp(-s * std::log(double(d))) * acc;
}

cplx completed_l_chi(const DirichletCharacter& chi, cplx s) {
  double a = chi.a();
  cplx h = (s + a) / 2.0;
  return std::exp(h * std::log(double(chi.modulus) / pi) + lgamma(h)) * l_chi(chi, s);
}

double theta(double t) { return lgamma(cplx(0.25, t / 2)).imag() - t / 2 * std::log(pi); }

double hardy_Z(double t) {
  cplx z = std::exp(I * theta(t)) * zeta(cplx(0.5, t));
  if (std::abs(z.imag()) > 1e-10 * std::max(1.0, std::abs(z)))
    fail(ErrorKind::imaginary_residue, "Hardy Z has a non-negligible imaginary part");
  return z.real();
}

}  // namespace weil
