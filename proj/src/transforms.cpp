#include "weil/transforms.hpp"

#include <algorithm>
#include <cmath>
#include <numbers>

#include "weil/error.hpp"
#include "weil/special_functions.hpp"

namespace weil {

namespace {

constexpr double pi = std::numbers::pi;

// physicists' Hermite polynomial coefficients, lowest degree first
std::vector<double> hermite(int k) {
  std::vector<double> h0{1}, h1{0, 2};
  if (k == 0) return h0;
  for (int n = 1; n < k; ++n) {
    std::vector<double> h2(std::size_t(n + 2), 0.0);
    for (std::size_t j = 0; j < h1.size(); ++j) h2[j + 1] += 2 * h1[j];
    for (std::size_t j = 0; j < h0.size(); ++j) h2[j] -= 2.0 * n * h0[j];
    h0 = std::move(h1);
    h1 = std::move(h2);
  }
  return h1;
}

double gauss_sup(int k, double a) {  // sup_x |x|^k e^{-a x^2}
  if (k == 0) return 1.0;
  return std::pow(k / (2 * a), 0.5 * k) * std::exp(-0.5 * k);
}

}  // namespace

ParityFunction fourier(const ParityFunction& f) {
  // F[x^k e^{-alpha pi x^2}](y) = alpha^{-1/2} (2 pi i)^{-k} (-1)^k beta^{k/2} H_k(sqrt(beta) y) e^{-beta y^2},
  // beta = pi/alpha, i.e. Gaussian scale 1/alpha.
  std::vector<ParityTerm> out;
  for (const auto& t : f.terms()) {
    const double beta = pi / t.alpha;
    cplx pre = t.coef / std::sqrt(t.alpha) * std::pow(cplx(0, -2 * pi), -t.degree) * std::pow(beta, 0.5 * t.degree);
    auto h = hermite(t.degree);
    for (std::size_t j = 0; j < h.size(); ++j) {
      if (h[j] == 0.0) continue;
      out.push_back({pre * h[j] * std::pow(beta, 0.5 * double(j)), int(j), 1.0 / t.alpha});
    }
  }
  return ParityFunction(std::move(out)).simplified();
}

cplx fourier_quadrature(const ParityFunction& f, double y, std::size_t n) {
  double amin = 1e300;
  for (const auto& t : f.terms()) amin = std::min(amin, t.alpha);
  double X = std::sqrt(40.0 / (amin * pi)) + 1.0;
  const double h = 2 * X / double(n - 1);
  std::vector<cplx> v(n);
  for (std::size_t i = 0; i < n; ++i) {
    double x = -X + h * double(i);
    v[i] = f(x) * std::exp(cplx(0, 2 * pi * x * y)) * ((i == 0 || i == n - 1) ? 0.5 : 1.0);
  }
  return h * pairwise_sum(v);
}

QuadratureSpec mellin_window(const TestFunction& f, double re_s, double tolerance, std::size_t n_points) {
  auto [lo, hi] = f.effective_support(re_s, std::min(1e-17, tolerance * 1e-6));
  QuadratureSpec q;
  double pad = f.compactly_supported() ? 0.0 : 0.5;
  q.u_min = lo - pad;
  q.u_max = hi + pad;
  if (!(q.u_min < q.u_max)) q.u_max = q.u_min + 1.0;
  if (n_points == 0) {
    // spacing well below the narrowest feature
    double feat = 1e300;
    for (const auto& g : f.gaussians()) feat = std::min(feat, g.sigma);
    for (const auto& b : f.bumps()) feat = std::min(feat, (b.hi_u - b.lo_u) / std::sqrt(1.0 + b.shape));
    std::size_t n = std::size_t((q.u_max - q.u_min) / (feat / 24.0)) + 1;
    n_points = std::max<std::size_t>(n, 1025);
    if (n_points % 2 == 0) ++n_points;
  }
  q.n_points = n_points;
  q.tolerance = tolerance;
  return q;
}

MellinValue mellin(const TestFunction& f, cplx s, const QuadratureSpec& q) {
  q.validate();
  auto integrand = [&](double u) { return f.eval_log(u) * std::exp(s * u); };
  auto r = trapezoid(integrand, q);
  double tails = f.tail_integral(0, s.real(), q.u_max) + f.lower_tail_integral(s.real(), q.u_min);
  if (tails > q.tolerance) fail(ErrorKind::window_too_small, "Mellin window leaves tail mass " + std::to_string(tails));
  double err = r.est_error + tails;
  if (err > q.tolerance)
    fail(ErrorKind::tolerance_not_met, "Mellin error estimate " + std::to_string(err) + " exceeds tolerance");
  return {s, r.value, err};
}

MellinValue mellin(const TestFunction& f, cplx s) {
  // oscillation e^{i Im s u} needs enough points per period as well
  QuadratureSpec q = mellin_window(f, s.real(), 1e-12);
  double per = 2 * pi / std::max(1.0, std::abs(s.imag()));
  std::size_t need = std::size_t((q.u_max - q.u_min) / (per / 16.0)) + 1;
  if (need > q.n_points) q.n_points = need | 1;
  // tolerance scaled to the integrand size
  double scale = f.tail_integral(0, s.real(), -1e300);
  q.tolerance = std::max(1e-12, 1e-11 * scale);
  return mellin(f, s, q);
}

MellinValue mellin_auto(const TestFunction& f, cplx s) {
  if (f.has_closed_mellin()) {
    cplx v = f.mellin_closed_form(s);
    return {s, v, 1e-15 * std::abs(v)};
  }
  return mellin(f, s);
}

cplx mellin_parity_closed_form(const ParityFunction& f, cplx s) {
  cplx acc = 0;
  for (const auto& t : f.terms()) {
    cplx h = (double(t.degree) + s) / 2.0;
    acc += 0.5 * t.coef * std::exp(-h * std::log(t.alpha * pi) + lgamma(h));
  }
  return acc;
}

MellinValue mellin_parity(const ParityFunction& f, cplx s, const QuadratureSpec& q) {
  q.validate();
  auto [C, p] = f.small_x_bound();
  const double sig = s.real();
  if (C > 0 && sig + p <= 0)
    fail(ErrorKind::divergent_integral, "Mellin integral of this parity function diverges at 0 for Re s = " +
                                            std::to_string(sig));
  auto integrand = [&](double u) {
    double x = std::exp(u);
    return f(x) * std::exp(s * u);
  };
  auto r = trapezoid(integrand, q);
  // lower tail: |f| <= C x^p for x <= 1; upper tail: Gaussian bound
  double lower = (C > 0) ? C * std::exp((sig + p) * q.u_min) / (sig + p) : 0.0;
  if (q.u_min > 0) lower = std::numeric_limits<double>::infinity();
  double upper = 0;
  const double X = std::exp(q.u_max);
  for (const auto& t : f.terms()) {
    double a = t.alpha * pi;
    double kk = t.degree + sig - 1;  // integrand |c| x^{k+sig-1} e^{-a x^2}
    double denom = 2 * a * X - std::max(0.0, kk) / X;
    if (denom <= 0) {
      upper = std::numeric_limits<double>::infinity();
      break;
    }
    upper += std::abs(t.coef) * std::pow(X, kk) * std::exp(-a * X * X) / denom;
  }
  double tails = lower + upper;
  if (tails > q.tolerance) fail(ErrorKind::window_too_small, "parity Mellin window leaves tail mass " + std::to_string(tails));
  double err = r.est_error + tails;
  if (err > q.tolerance)
    fail(ErrorKind::tolerance_not_met, "parity Mellin error estimate " + std::to_string(err) + " exceeds tolerance");
  return {s, r.value, err};
}

PairingValue pair_log_fourier(const ParityFunction& psi, double tolerance) {
  // <F ln|x|, psi> = int ln|xi| (F psi)(xi) d xi = int v e^v [g(e^v) + g(-e^v)] dv, g = F psi
  const ParityFunction g = fourier(psi);
  if (g.terms().empty()) return {0.0, 0.0};
  double M = 0, amin = 1e300;
  int kmax = 0;
  for (const auto& t : g.terms()) {
    M += std::abs(t.coef) * gauss_sup(t.degree, t.alpha * pi);
    amin = std::min(amin, t.alpha * pi);
    kmax = std::max(kmax, t.degree);
  }
  // lower cut: int_{-inf}^{L} |v| e^v 2M dv = 2M e^L (1 - L)
  double L = -10;
  while (2 * M * std::exp(L) * (1 - L) > 1e-3 * tolerance) L -= 1.0;
  double X = 1.0;
  while (M * std::pow(X, kmax + 2) * std::exp(-amin * X * X) > 1e-3 * tolerance) X *= 1.25;
  QuadratureSpec q{L, std::log(X) + 0.5, 0, tolerance};
  q.n_points = std::size_t((q.u_max - q.u_min) / 0.01) | 1;
  auto integrand = [&](double v) {
    double xi = std::exp(v);
    return v * xi * (g(xi) + g(-xi));
  };
  auto r = trapezoid(integrand, q);
  auto r2 = trapezoid(integrand, q.refined());
  if (std::abs(r2.value.imag()) > 1e-10 * std::max(1.0, std::abs(r2.value)))
    fail(ErrorKind::imaginary_residue, "log-Fourier pairing of a real function came out complex");
  double err = std::abs(r2.value - r.value) + r2.est_error + 2e-3 * tolerance;
  if (err > tolerance)
    fail(ErrorKind::tolerance_not_met, "log-Fourier pairing error " + std::to_string(err) + " exceeds tolerance");
  return {r2.value.real(), err};
}

PairingValue pair_log_fourier(const ShiftedTestProfile& p, double tolerance) {
  // Mellin-Parseval on the line s = 1/2 + i tau:
  //   <F ln|x|, psi_t> = (1/2pi) int F(1-s) [digamma(1-s) - ln(2 pi t) - (pi/2) cot(pi s/2)] d tau
  // with F the Mellin transform of f. The integrand at -tau is the conjugate of the one at tau.
  if (!(p.t > 0)) fail(ErrorKind::domain, "profile scale must be positive");
  const TestFunction& f = p.f;
  const double log2pit = std::log(2 * pi * p.t);
  double ferr_acc = 0;  // sum of |F error| * |bracket| over the nodes
  double ferr = 0;
  auto F = [&](cplx z) {
    auto m = mellin_auto(f, z);
    ferr = m.est_error;
    return m.value;
  };
  auto bracket = [&](cplx s) { return digamma(1.0 - s) - log2pit - (pi / 2) / std::tan(pi * s / 2.0); };
  const double h = 0.05;
  const int stretch = int(4.0 / h);
  std::vector<double> vals;  // Re integrand at tau = j h
  std::vector<double> envelope;
  double scale = 0;
  for (int j = 0;; ++j) {
    cplx s(0.5, h * j);
    cplx Fz = F(1.0 - s);
    cplx b = bracket(s);
    double v = (Fz * b).real();
    vals.push_back(v);
    envelope.push_back(std::abs(Fz) * std::abs(b));
    ferr_acc += ferr * std::abs(b);
    scale = std::max(scale, std::abs(v));
    // stop once the envelope has stayed below 1e-3 tolerance for 4 units of tau
    if (j > stretch) {
      bool small = true;
      for (int i = j - stretch; i <= j && small; ++i) small = envelope[std::size_t(i)] < 1e-3 * tolerance;
      if (small) break;
    }
    if (h * j > 4000) fail(ErrorKind::tolerance_not_met, "Mellin transform decays too slowly on the critical line");
  }
  auto sum_with_step = [&](std::size_t stride) {
    std::vector<double> w;
    for (std::size_t i = 0; i < vals.size(); i += stride) w.push_back(vals[i] * (i == 0 ? 0.5 : 1.0));
    return 2 * h * double(stride) * pairwise_sum(w) / (2 * pi);
  };
  double fine = sum_with_step(1), coarse = sum_with_step(2);
  double tau_max = h * double(vals.size() - 1);
  // truncated tail: the running maximum of the envelope over the last 4 units decays at
  // some observed rate lambda; the tail is then about envelope / lambda
  std::vector<double> upper(envelope.size());
  double m = 0;
  for (std::size_t i = envelope.size(); i-- > 0;) upper[i] = m = std::max(m, envelope[i]);
  const double first = upper[upper.size() - 1 - std::size_t(stretch)], last = upper.back();
  double tail = 4.0 * first;
  if (last > 0 && first > last) tail = std::min(tail, last * 4.0 / std::log(first / last));
  if (last == 0) tail = 0;
  double err = std::abs(fine - coarse) + 2.0 * tail / pi + 2 * h * ferr_acc / (2 * pi) + 1e-15 * scale * tau_max;
  if (err > tolerance)
    fail(ErrorKind::tolerance_not_met, "profile pairing error " + std::to_string(err) + " exceeds tolerance");
  return {fine, err};
}

}  // namespace weil
