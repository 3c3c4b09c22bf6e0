#include "weil/zeta_operators.hpp"

#include <algorithm>
#include <cmath>
#include <limits>
#include <numbers>

#include "weil/arithmetic.hpp"
#include "weil/error.hpp"
#include "weil/special_functions.hpp"
#include "weil/transforms.hpp"

namespace weil {

namespace {

constexpr double inf = std::numeric_limits<double>::infinity();

// smallest N in [1, n_max] with bound(N) < tol; bound must be non-increasing
// wherever it is finite
template <class Bound>
std::size_t cutoff(Bound bound, double tol, std::size_t n_max, const char* what) {
  std::size_t hi = 1;
  while (!(bound(double(hi)) < tol)) {
    if (hi >= n_max)
      fail(ErrorKind::tail_bound_violation, std::string(what) + ": tail not certified below " + std::to_string(tol) +
                                                " within n_max = " + std::to_string(n_max));
    hi = std::min(n_max, hi * 2);
  }
  std::size_t lo = hi / 2;  // bound(lo) >= tol or lo == 0
  if (lo == 0) return hi;
  while (hi - lo > 1) {
    std::size_t mid = lo + (hi - lo) / 2;
    if (bound(double(mid)) < tol)
      hi = mid;
    else
      lo = mid;
  }
  return hi;
}

// sum_{n>N} |f(n x)| <= (1/x) int_{ln(Nx)}^inf e^u m(u) du once m decreases
double z_tail(const TestFunction& f, double x, double N) {
  double U = std::log(N * x);
  if (U < f.monotone_threshold(0)) return inf;
  return f.tail_integral(0, 1.0, U) / x;
}

// sum_{m>M} Z|f|(m x) <= (1/x) int_{Mx}^inf Z|f|(y) dy
//                      <= (1/x) [ int_Y^inf |f| + (1/Y) int_Y^inf y |f| ],  Y = M x
double zz_tail(const TestFunction& f, double x, double M) {
  double Y = M * x, U = std::log(Y);
  if (U < f.monotone_threshold(0)) return inf;
  return (f.tail_integral(0, 1.0, U) + f.tail_integral(0, 2.0, U) / Y) / x;
}

template <class Coef>
Certified weighted_sum(const TestFunction& f, double x, std::size_t N, Coef coef) {
  std::vector<double> t;
  t.reserve(N);
  for (std::size_t n = 1; n <= N; ++n) {
    double c = coef(n);
    if (c != 0.0) t.push_back(c * f(double(n) * x));
  }
  return {pairwise_sum(t), 0.0, N};
}

// all n <= N whose prime factors are <= p_max with exponents <= e_max;
// squarefree_only restricts to e <= 1 and reports the Moebius sign
void smooth_numbers(const std::vector<std::uint32_t>& primes, std::size_t idx, std::size_t n, std::size_t N, int e_max,
                    bool squarefree_only, int sign, std::vector<std::pair<std::size_t, int>>& out) {
  out.push_back({n, sign});
  for (std::size_t i = idx; i < primes.size(); ++i) {
    std::size_t p = primes[i];
    if (n > N / p) break;
    std::size_t m = n;
    for (int e = 1; e <= (squarefree_only ? 1 : e_max); ++e) {
      if (m > N / p) break;
      m *= p;
      smooth_numbers(primes, i + 1, m, N, e_max, squarefree_only, -sign, out);
    }
  }
}

std::vector<std::pair<std::size_t, int>> smooth_up_to(std::size_t N, const TruncationSpec& tr, bool squarefree) {
  auto s = Sieve::up_to(std::max(N, tr.p_max));
  std::vector<std::uint32_t> primes;
  for (auto p : s->primes()) {
    if (p > tr.p_max) break;
    primes.push_back(p);
  }
  std::vector<std::pair<std::size_t, int>> out;
  smooth_numbers(primes, 0, 1, N, tr.e_max, squarefree, 1, out);
  std::sort(out.begin(), out.end());
  return out;
}

std::size_t parity_cutoff(const ParityFunction& f, double x, double tol, std::size_t n_max) {
  return cutoff([&](double N) { return f.comb_tail(x, N); }, tol, n_max, "parity comb");
}

template <class Coef>
CertifiedComplex parity_sum(const ParityFunction& f, double x, const TruncationSpec& tr, Coef coef) {
  std::size_t N = parity_cutoff(f, x, tr.tail_tol, tr.n_max);
  std::vector<cplx> t;
  for (std::size_t n = 1; n <= N; ++n) {
    cplx c = coef(n);
    if (c != cplx(0)) t.push_back(c * f(double(n) * x));
  }
  return {pairwise_sum(t), f.comb_tail(x, double(N)), N};
}

void require_x(double x) {
  if (!(x > 0)) fail(ErrorKind::domain, "operators act at x > 0");
}

}  // namespace

void TruncationSpec::validate() const {
  if (n_max < 1) fail(ErrorKind::config, "n_max must be >= 1");
  if (p_max < 2) fail(ErrorKind::config, "p_max must be >= 2");
  if (e_max < 1) fail(ErrorKind::config, "e_max must be >= 1");
  if (!(tail_tol > 0)) fail(ErrorKind::config, "tail_tol must be positive");
}

std::size_t comb_cutoff(const TestFunction& f, double x, double tol, std::size_t n_max) {
  require_x(x);
  return cutoff([&](double N) { return z_tail(f, x, N); }, tol, n_max, "Z");
}

Certified apply_Z(const TestFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  std::size_t N = comb_cutoff(f, x, tr.tail_tol, tr.n_max);
  auto r = weighted_sum(f, x, N, [](std::size_t) { return 1.0; });
  r.tail_bound = z_tail(f, x, double(N));
  return r;
}

Certified apply_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  std::size_t N = comb_cutoff(f, x, tr.tail_tol, tr.n_max);
  auto s = Sieve::up_to(N);
  auto r = weighted_sum(f, x, N, [&](std::size_t n) { return double(s->mu(n)); });
  r.tail_bound = z_tail(f, x, double(N));
  return r;
}

namespace {

template <class Inner>
Certified compose(const TestFunction& f, double x, const TruncationSpec& tr, bool outer_mobius, Inner inner) {
  tr.validate();
  require_x(x);
  std::size_t M = cutoff([&](double m) { return zz_tail(f, x, m); }, tr.tail_tol / 2, tr.n_max, "composition");
  auto s = Sieve::up_to(M);
  TruncationSpec in = tr;
  in.tail_tol = tr.tail_tol / (2.0 * double(M));
  std::vector<double> t;
  double tails = zz_tail(f, x, double(M));
  std::size_t terms = 0;
  for (std::size_t m = 1; m <= M; ++m) {
    double c = outer_mobius ? double(s->mu(m)) : 1.0;
    if (c == 0.0) continue;
    Certified v = inner(f, double(m) * x, in);
    t.push_back(c * v.value);
    tails += v.tail_bound;
    terms += v.terms;
  }
  return {pairwise_sum(t), tails, terms};
}

}  // namespace

Certified apply_Z_inverse_Z(const TestFunction& f, double x, const TruncationSpec& tr) {
  return compose(f, x, tr, true, [](const TestFunction& g, double y, const TruncationSpec& t) { return apply_Z(g, y, t); });
}

Certified apply_Z_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr) {
  return compose(f, x, tr, false,
                 [](const TestFunction& g, double y, const TruncationSpec& t) { return apply_Z_inverse(g, y, t); });
}

Certified euler_product_Z(const TestFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  std::size_t N = comb_cutoff(f, x, tr.tail_tol, tr.n_max);
  std::vector<double> t;
  auto nums = smooth_up_to(N, tr, false);
  for (auto [n, sign] : nums) t.push_back(f(double(n) * x));
  return {pairwise_sum(t), z_tail(f, x, double(N)), nums.size()};
}

Certified euler_product_Z_inverse(const TestFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  std::size_t N = comb_cutoff(f, x, tr.tail_tol, tr.n_max);
  std::vector<double> t;
  auto nums = smooth_up_to(N, tr, true);
  for (auto [n, sign] : nums) t.push_back(sign * f(double(n) * x));
  return {pairwise_sum(t), z_tail(f, x, double(N)), nums.size()};
}

CertifiedComplex apply_Z(const ParityFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  require_x(x);
  return parity_sum(f, x, tr, [](std::size_t) { return cplx(1); });
}

IdentityCheck poisson_check(const ParityFunction& f, double x, const TruncationSpec& tr) {
  if (f.parity() != ParityFunction::Parity::even) fail(ErrorKind::parity_mismatch, "Poisson summation needs an even function");
  require_x(x);
  ParityFunction g = fourier(f);
  auto zf = apply_Z(f, x, tr);
  auto zg = apply_Z(g, 1.0 / x, tr);
  cplx lhs = f(0.0) / 2.0 + zf.value;
  cplx rhs = (zg.value + g(0.0) / 2.0) / x;
  return {lhs, rhs, std::abs(lhs - rhs), zf.tail_bound + zg.tail_bound / x};
}

IdentityCheck zspectral_check(const TestFunction& f, cplx s, const TruncationSpec& tr, const QuadratureSpec& q) {
  if (!(s.real() > 1)) fail(ErrorKind::domain, "(Zf)^(s) = zeta(s) f^(s) needs Re s > 1");
  q.validate();
  const std::size_t N = std::min<std::size_t>(tr.n_max, 100);
  // termwise Mellin transforms of f(n .) by quadrature on a window following the shift
  // q.tolerance is taken relative to the L1 mass of the integrand, which is e^8 ~ 3000
  // for loggauss(1,0,1) at Re s = 4
  const double mass = std::max(1.0, f.tail_integral(0, s.real(), -1e300));
  std::vector<cplx> terms;
  double qerr = 0;
  for (std::size_t n = 1; n <= N; ++n) {
    TestFunction fn = f.shifted(1.0 / double(n));
    QuadratureSpec qn = q;
    qn.u_min -= std::log(double(n));
    qn.u_max -= std::log(double(n));
    qn.tolerance = q.tolerance * mass;
    auto m = mellin(fn, s, qn);
    terms.push_back(m.value);
    qerr += m.est_error;
  }
  QuadratureSpec q1 = q;
  q1.tolerance = q.tolerance * mass;
  auto m1 = mellin(f, s, q1);
  // sum_{n>N} n^{-s} by Euler-Maclaurin
  const double X = double(N);
  cplx xs = std::exp(-s * std::log(X));
  cplx tail = X * xs / (s - 1.0) - 0.5 * xs;
  {
    static const double b[] = {1.0 / 12, -1.0 / 720, 1.0 / 30240, -1.0 / 1209600, 1.0 / 47900160,
                               -691.0 / 1307674368000.0};
    cplx poch = s, pw = xs / X;
    for (int k = 0; k < 6; ++k) {
      tail += b[k] * poch * pw;
      poch *= (s + double(2 * k + 1)) * (s + double(2 * k + 2));
      pw /= X * X;
    }
    // next term bounds the remainder
    qerr += std::abs(1.3382536530684679e-11 * poch * pw) * std::abs(m1.value);
  }
  cplx lhs = pairwise_sum(terms) + tail * m1.value;
  qerr += std::abs(tail) * m1.est_error;
  cplx rhs = zeta(s) * m1.value;
  double rhs_err = std::abs(zeta(s)) * m1.est_error;
  return {lhs, rhs, std::abs(lhs - rhs), qerr + rhs_err};
}

CertifiedComplex apply_L_chi(const DirichletCharacter& chi, const ParityFunction& f, double x, const TruncationSpec& tr) {
  tr.validate();
  require_x(x);
  if (f.sign() != chi.parity)
    fail(ErrorKind::parity_mismatch, "parity of f must equal chi(-1)");
  return parity_sum(f, x, tr, [&](std::size_t n) { return chi((long long)n); });
}

CertifiedComplex euler_product_L_chi(const DirichletCharacter& chi, const ParityFunction& f, double x,
                                     const TruncationSpec& tr) {
  tr.validate();
  require_x(x);
  if (f.sign() != chi.parity) fail(ErrorKind::parity_mismatch, "parity of f must equal chi(-1)");
  std::size_t N = parity_cutoff(f, x, tr.tail_tol, tr.n_max);
  std::vector<cplx> t;
  auto nums = smooth_up_to(N, tr, false);
  for (auto [n, sign] : nums) t.push_back(chi((long long)n) * f(double(n) * x));
  return {pairwise_sum(t), f.comb_tail(x, double(N)), nums.size()};
}

IdentityCheck twisted_poisson_check(const DirichletCharacter& chi, const ParityFunction& f, double x,
                                    const TruncationSpec& tr) {
  if (!chi.primitive || chi.is_trivial())
    fail(ErrorKind::non_primitive_character, "twisted Poisson summation needs a primitive character");
  const double d = chi.modulus;
  auto lhs = apply_L_chi(chi, f, x, tr);
  ParityFunction g = fourier(f);
  auto sum = apply_L_chi(chi.conj(), g, 1.0 / (d * x), tr);
  cplx pre = chi.kappa() / (std::sqrt(d) * x);
  cplx rhs = pre * sum.value;
  return {lhs.value, rhs, std::abs(lhs.value - rhs), lhs.tail_bound + std::abs(pre) * sum.tail_bound};
}

}  // namespace weil
