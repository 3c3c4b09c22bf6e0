#include "weil/explicit_formula.hpp"

#include <algorithm>
#include <cmath>
#include <future>
#include <limits>
#include <numbers>

#include "weil/arithmetic.hpp"
#include "weil/error.hpp"
#include "weil/special_functions.hpp"
#include "weil/transforms.hpp"

namespace weil {

namespace {

constexpr double pi = std::numbers::pi;
constexpr double inf = std::numeric_limits<double>::infinity();

bool is_prime(std::size_t p) {
  if (p < 2) return false;
  for (std::size_t d = 2; d * d <= p; ++d)
    if (p % d == 0) return false;
  return true;
}

// sup of |f^(1/2 + i tau)| over tau in [t, t+1]
double mellin_envelope(const TestFunction& f, double t) {
  if (f.has_closed_mellin()) {
    double acc = 0;
    for (const auto& g : f.gaussians()) {
      double s2 = g.sigma * g.sigma;
      double tt = std::max(t, 0.0);
      acc += std::abs(g.coef) * std::sqrt(2 * pi) * g.sigma * std::exp(0.5 * g.mu + s2 / 8 - 0.5 * s2 * tt * tt);
    }
    return acc;
  }
  // sampled; the factor 3 covers oscillation between samples
  double m = 0;
  for (double tau : {t, t + 0.5, t + 1.0}) m = std::max(m, std::abs(mellin(f, cplx(0.5, tau)).value));
  return 3.0 * m;
}

// main term of the zero counting function for L(s, chi) mod d (d = 1 for zeta)
double n0(double t, double d) {
  double x = d * t / (2 * pi);
  if (x <= 1) return 0.0;
  return t / (2 * pi) * (std::log(x) - 1.0);
}

// int_T^inf of an envelope sampled at spacing dt, extrapolated from its decay over the
// last samples: exp-type decay e^{-lambda t} gives env(T)/lambda
double extrapolated_tail(const std::vector<double>& env, double dt, std::size_t span) {
  if (env.size() < span + 1) return std::numeric_limits<double>::infinity();
  double last = env.back(), first = env[env.size() - 1 - span];
  if (last <= 0) return 0.0;
  if (!(first > last)) return std::numeric_limits<double>::infinity();
  double lambda = std::log(first / last) / (dt * double(span));
  return last / lambda;
}

template <class G>
double line_integral(G g, double tolerance, double& err) {
  // 2 int_0^inf g(t) dt for even g, trapezoid with step h and 2h; stops once the
  // envelope stays below 1e-3 tolerance for 4 units
  const double h = 0.05;
  const int stretch = int(4.0 / h);
  std::vector<double> vals, env;
  for (int j = 0;; ++j) {
    auto [v, e] = g(h * j);
    vals.push_back(v);
    env.push_back(e);
    if (j > stretch) {
      bool small = true;
      for (int i = j - stretch; i <= j && small; ++i) small = env[std::size_t(i)] < 1e-3 * tolerance;
      if (small) break;
    }
    if (h * j > 4000) fail(ErrorKind::tolerance_not_met, "integrand decays too slowly on the critical line");
  }
  auto sum = [&](std::size_t stride) {
    std::vector<double> w;
    for (std::size_t i = 0; i < vals.size(); i += stride) w.push_back(vals[i] * (i == 0 ? 0.5 : 1.0));
    return 2 * h * double(stride) * pairwise_sum(w);
  };
  double fine = sum(1), coarse = sum(2);
  // envelopes can dip at zeros of the integrand; use the running maximum from the end
  std::vector<double> upper(env.size());
  double m = 0;
  for (std::size_t i = env.size(); i-- > 0;) upper[i] = m = std::max(m, env[i]);
  double tail = extrapolated_tail(upper, h, std::size_t(stretch));
  if (!std::isfinite(tail)) tail = 4.0 * upper[std::size_t(vals.size() - std::size_t(stretch) - 1)];
  err = std::abs(fine - coarse) + 2.0 * tail;
  return fine;
}

}  // namespace

Certified W_p(const TestFunction& f, std::size_t p, const TruncationSpec& tr) {
  if (!is_prime(p)) fail(ErrorKind::domain, std::to_string(p) + " is not prime");
  tr.validate();
  const double lp = std::log(double(p));
  const int E = std::min(tr.e_max, int(700.0 / lp));
  std::vector<double> t;
  for (int e = 1; e <= E; ++e) {
    double x = std::pow(double(p), e), xi = std::pow(double(p), -e);
    t.push_back(lp * (f(x) + f(xi) * xi));
  }
  const double U = E * lp;
  TestFunction Jf = f.reflected();
  if (U < f.monotone_threshold(0) || U < Jf.monotone_threshold(0))
    fail(ErrorKind::tail_bound_violation, "W_p tail past e_max not certified for p = " + std::to_string(p));
  double tail = f.tail_integral(0, 0.0, U) + Jf.tail_integral(0, 0.0, U);
  return {pairwise_sum(t), tail, std::size_t(E)};
}

Certified W_p_chi(const TestFunction& f, const DirichletCharacter& chi, std::size_t p, const TruncationSpec& tr) {
  if (!chi.is_real()) fail(ErrorKind::domain, "the twisted prime terms are implemented for real characters");
  if (!is_prime(p)) fail(ErrorKind::domain, std::to_string(p) + " is not prime");
  tr.validate();
  const double c = chi((long long)p).real();
  const double lp = std::log(double(p));
  const int E = std::min(tr.e_max, int(700.0 / lp));
  if (c == 0.0) return {0.0, 0.0, 0};
  std::vector<double> t;
  double ce = 1;
  for (int e = 1; e <= E; ++e) {
    ce *= c;
    double x = std::pow(double(p), e), xi = std::pow(double(p), -e);
    t.push_back(lp * ce * (f(x) + f(xi) * xi));
  }
  const double U = E * lp;
  TestFunction Jf = f.reflected();
  if (U < f.monotone_threshold(0) || U < Jf.monotone_threshold(0))
    fail(ErrorKind::tail_bound_violation, "W_p tail past e_max not certified for p = " + std::to_string(p));
  return {pairwise_sum(t), f.tail_integral(0, 0.0, U) + Jf.tail_integral(0, 0.0, U), std::size_t(E)};
}

namespace {

template <class Wp>
Certified prime_total(const TestFunction& f, const TruncationSpec& tr, Wp wp) {
  tr.validate();
  auto sieve = Sieve::up_to(tr.p_max);
  std::vector<double> t;
  double tails = 0;
  std::size_t terms = 0;
  for (auto p : sieve->primes()) {
    if (p > tr.p_max) break;
    Certified w = wp(p);
    t.push_back(w.value);
    tails += w.tail_bound;
    terms += w.terms;
  }
  // primes above p_max: sum_{n > P} ln n (|f(n)| + |Jf(n)|) <= int_{ln P}^inf u e^u (m_f + m_Jf) du
  const double U = std::log(double(tr.p_max));
  TestFunction Jf = f.reflected();
  if (U < f.monotone_threshold(1) || U < Jf.monotone_threshold(1))
    fail(ErrorKind::tail_bound_violation, "prime tail above p_max not certified");
  tails += f.tail_integral(1, 1.0, U) + Jf.tail_integral(1, 1.0, U);
  return {pairwise_sum(t), tails, terms};
}

}  // namespace

Certified W_prime_total(const TestFunction& f, const TruncationSpec& tr) {
  return prime_total(f, tr, [&](std::size_t p) { return W_p(f, p, tr); });
}

ArchimedeanValue archimedean_term(const TestFunction& f, double d, int a, double tolerance) {
  const double logdpi = std::log(d / pi);
  double qerr = 0;
  auto g = [&](double t) {
    auto F = mellin_auto(f, cplx(0.5, t));
    double w = logdpi + digamma(cplx(0.5 + a, t) / 2.0).real();
    qerr += F.est_error * std::abs(w);
    return std::pair<double, double>{F.value.real() * w, std::abs(F.value) * (std::abs(w) + 1.0)};
  };
  double err = 0;
  double v = line_integral(g, tolerance, err);
  return {-v / (2 * pi), (err + 2 * 0.05 * qerr) / (2 * pi)};
}

namespace {

// (1/2) Pf int_0^inf [f(x)/|1-x| + f(x)/(1+x)] dx and its error
std::pair<double, double> pv_half(const TestFunction& f) {
  auto fx = [&](double x) { return x > 1e-300 ? f(x) : 0.0; };
  const double f1 = f(1.0);
  // int_eps^1 [f(1-y) + f(1+y) - 2 f(1)] / y dy, Richardson in eps^2
  auto I1 = [&](double eps) {
    return tanh_sinh([&](double y) { return (fx(1 - y) + fx(1 + y) - 2 * f1) / y; }, eps, 1.0, 1e-13);
  };
  const double eps = 2e-3;
  auto a = I1(eps), b = I1(eps / 2);
  double i1 = (4 * b.value - a.value) / 3;
  double e1 = std::abs(b.value - a.value) / 3 * 0.25 + a.est_error + b.est_error;
  // x >= 2 and the full 1/(1+x) piece in u = ln x
  auto [lo, hi] = f.effective_support(1.0, 1e-20);
  hi = std::max(hi, std::log(2.0) + 1.0);
  auto i2 = tanh_sinh(
      [&](double u) {
        double x = std::exp(u);
        return f.eval_log(u) * x / std::expm1(u);
      },
      std::log(2.0), hi, 1e-13);
  double tail2 = f.tail_integral(0, 1.0, hi) * 2.0;  // x/(x-1) <= 2 there
  QuadratureSpec q{std::min(lo, -1.0), std::max(hi, 1.0), 0, 1.0};
  q.n_points = std::size_t((q.u_max - q.u_min) / 2e-3) | 1;
  auto i3 = trapezoid([&](double u) { return cplx(f.eval_log(u) / (1.0 + std::exp(-u))); }, q);
  double tail3 = f.tail_integral(0, 1.0, q.u_max) + f.lower_tail_integral(1.0, q.u_min);
  double v = 0.5 * (i1 + i2.value + i3.value.real());
  double e = 0.5 * (e1 + i2.est_error + tail2 + i3.est_error + tail3);
  return {v, e};
}

}  // namespace

std::pair<double, double> pv_calibration_constant() {
  static const std::pair<double, double> c = [] {
    TestFunction g = TestFunction::log_gaussian(1, 0, 1);
    auto d = pair_log_fourier(ShiftedTestProfile{g, 1.0}, 1e-12);
    auto [pv, pv_err] = pv_half(g);
    return std::pair<double, double>{-d.value - pv, d.est_error + pv_err};
  }();
  return c;
}

WInfinity W_infty(const TestFunction& f, const WInfinityOptions& opt) {
  WInfinity w{};
  auto d = pair_log_fourier(ShiftedTestProfile{f, 1.0}, opt.tolerance);
  w.duality = -d.value;
  w.duality_error = d.est_error;
  auto g = archimedean_term(f, 1.0, 0, opt.tolerance);
  w.gamma_route = g.value;
  w.gamma_route_error = g.est_error;
  auto [pv, pv_err] = pv_half(f);
  auto [c, c_err] = pv_calibration_constant();
  w.pv_raw = pv;
  w.f_at_1 = f(1.0);
  w.c_infty = c;
  w.pv_calibrated = pv + c * w.f_at_1;
  w.pv_error = pv_err + c_err * std::abs(w.f_at_1);
  if (opt.check_agreement) {
    double diff = std::abs(w.pv_calibrated - w.duality);
    if (diff > w.pv_error + w.duality_error + opt.agreement_tolerance)
      fail(ErrorKind::disagreement, "W_inf duality " + std::to_string(w.duality) + " vs calibrated pv " +
                                        std::to_string(w.pv_calibrated));
  }
  return w;
}

double zero_band_bound(const TestFunction& f, double T, double T2, double modulus) {
  // zeros in [t, t+1]: at most 2 (N0(t+1) - N0(t)) + 2, each contributing two values of
  // f^ bounded by the envelope. Closed-form envelopes run until the terms vanish; sampled
  // ones until they reach the quadrature floor, then the tail follows the observed decay.
  const bool closed = f.has_closed_mellin();
  double acc = 0;
  std::vector<double> terms;
  for (double t = T; t < T2; t += 1.0) {
    double hi = std::min(t + 1.0, T2);
    double count = 2.0 * std::max(0.0, n0(hi, modulus) - n0(t, modulus)) + 2.0;
    double env = mellin_envelope(f, t);
    double term = count * 2.0 * env;
    acc += term;
    terms.push_back(term);
    if (closed && term < 1e-30) break;  // the closed-form envelope decreases in t
    if (!closed && env < 1e-13) {
      acc += 2.0 * extrapolated_tail(terms, 1.0, std::min<std::size_t>(10, terms.size() - 1));
      break;
    }
    if (t > T + 20000) return inf;
  }
  return acc;
}

SpectralSide spectral_side(const TestFunction& f, const ZeroTable& zt, const SpectralOptions& opt) {
  SpectralSide r{};
  auto F0 = mellin_auto(f, 0.0), F1 = mellin_auto(f, 1.0);
  r.pole_contribution = (F0.value + F1.value).real();
  r.quadrature_error = F0.est_error + F1.est_error;
  std::vector<double> terms;
  const double delta = 1e-3;
  for (double g : zt.ordinates) {
    auto a = mellin_auto(f, cplx(0.5, g)), b = mellin_auto(f, cplx(0.5, -g));
    cplx pair = a.value + b.value;
    double resid = std::abs(pair.imag());
    r.max_imag_residue = std::max(r.max_imag_residue, resid);
    if (resid > 1e-10 * std::max(1.0, std::abs(pair)))
      fail(ErrorKind::imaginary_residue, "zero term at gamma = " + std::to_string(g) + " is not real");
    terms.push_back(pair.real());
    r.quadrature_error += a.est_error + b.est_error;
    auto up = mellin_auto(f, cplx(0.5, g + delta)), dn = mellin_auto(f, cplx(0.5, g - delta));
    double deriv = std::abs(up.value - dn.value) / (2 * delta);
    r.precision_error += 2.0 * deriv * zt.precision;
  }
  r.zero_contribution = pairwise_sum(terms);
  r.zero_tail_bound = zero_band_bound(f, zt.height_bound, inf);
  if (r.zero_tail_bound > opt.zero_tail_tol)
    fail(ErrorKind::tail_bound_violation, "zeros above " + std::to_string(zt.height_bound) + " contribute up to " +
                                              std::to_string(r.zero_tail_bound));
  r.value = r.pole_contribution - r.zero_contribution;
  return r;
}

namespace {

ExplicitFormulaReport assemble(const TestFunction& f, const ZeroTable& zt, const TruncationSpec& tr,
                               const SpectralSide& sp, const Certified& wp, const WInfinity& wi) {
  ExplicitFormulaReport r{};
  r.function = f.expr();
  r.spectral_side = sp.value;
  r.pole_contribution = sp.pole_contribution;
  r.zero_contribution = sp.zero_contribution;
  r.W_p_total = wp.value;
  r.W_infty = wi.duality;
  r.prime_side = wp.value + wi.duality;
  r.residual = std::abs(r.spectral_side - r.prime_side);
  r.w_infty_detail = wi;
  r.max_imag_residue = sp.max_imag_residue;
  auto& b = r.budgets;
  b.tail_tol = tr.tail_tol;
  b.p_max = tr.p_max;
  b.e_max = tr.e_max;
  b.zero_height = zt.height_bound;
  b.zero_count = zt.size();
  b.zero_precision = zt.precision;
  b.zero_tail_bound = sp.zero_tail_bound;
  b.zero_precision_error = sp.precision_error;
  b.spectral_quadrature_error = sp.quadrature_error;
  b.prime_tail_bound = wp.tail_bound;
  b.w_infty_error = wi.duality_error;
  double mag = std::abs(sp.pole_contribution) + std::abs(sp.zero_contribution) + std::abs(wp.value) +
               std::abs(wi.duality);
  b.rounding = 1e-14 * mag + 1e-15;
  b.total = b.zero_tail_bound + b.zero_precision_error + b.spectral_quadrature_error + b.prime_tail_bound +
            b.w_infty_error + b.rounding;
  r.within_budget = r.residual <= b.total;
  return r;
}

}  // namespace

ExplicitFormulaReport verify_explicit_formula(const TestFunction& f, const ZeroTable& zt, const TruncationSpec& tr,
                                              const ExplicitFormulaOptions& opt) {
  // the two sides share nothing but f
  auto spectral = std::async(std::launch::async, [&] { return spectral_side(f, zt, opt.spectral); });
  auto primes = std::async(std::launch::async, [&] { return W_prime_total(f, tr); });
  WInfinity wi = W_infty(f, opt.w_infty);
  return assemble(f, zt, tr, spectral.get(), primes.get(), wi);
}

void require_within_budget(const ExplicitFormulaReport& r) {
  if (!r.within_budget)
    fail(ErrorKind::budget_exceeded, "residual " + std::to_string(r.residual) + " exceeds certified budget " +
                                         std::to_string(r.budgets.total));
}

ExplicitFormulaReport verify_dirichlet_explicit_formula(const TestFunction& f, const DirichletCharacter& chi,
                                                        const ZeroTable& zt, const TruncationSpec& tr,
                                                        const ExplicitFormulaOptions& opt) {
  if (!chi.primitive || chi.is_trivial() || !chi.is_real())
    fail(ErrorKind::non_primitive_character, "needs a real primitive character");
  const double d = chi.modulus;
  auto spectral = std::async(std::launch::async, [&] {
    SpectralSide r{};
    std::vector<double> terms;
    for (double g : zt.ordinates) {
      auto a = mellin_auto(f, cplx(0.5, g)), b = mellin_auto(f, cplx(0.5, -g));
      terms.push_back((a.value + b.value).real());
      r.max_imag_residue = std::max(r.max_imag_residue, std::abs((a.value + b.value).imag()));
      r.quadrature_error += a.est_error + b.est_error;
    }
    // ordinate uncertainty through the derivative of f^ on the line
    for (double g : zt.ordinates) {
      auto up = mellin_auto(f, cplx(0.5, g + 1e-3)), dn = mellin_auto(f, cplx(0.5, g - 1e-3));
      r.precision_error += 2.0 * std::abs(up.value - dn.value) / 2e-3 * zt.precision;
    }
    r.zero_contribution = pairwise_sum(terms);
    r.zero_tail_bound = zero_band_bound(f, zt.height_bound, inf, d);
    if (r.zero_tail_bound > opt.spectral.zero_tail_tol)
      fail(ErrorKind::tail_bound_violation, "L-zeros above the table height are not negligible");
    r.value = -r.zero_contribution;
    return r;
  });
  Certified wp = prime_total(f, tr, [&](std::size_t p) { return W_p_chi(f, chi, p, tr); });
  auto arch = archimedean_term(f, d, chi.a(), opt.w_infty.tolerance);
  WInfinity wi{};
  wi.duality = arch.value;
  wi.duality_error = arch.est_error;
  wi.gamma_route = arch.value;
  wi.gamma_route_error = arch.est_error;
  wi.f_at_1 = f(1.0);
  auto r = assemble(f, zt, tr, spectral.get(), wp, wi);
  r.status = "derived-formula";
  return r;
}

}  // namespace weil
