#include "weil/arithmetic.hpp"

#include <algorithm>
#include <cmath>
#include <mutex>

#include "weil/quadrature.hpp"

namespace weil {

Sieve::Sieve(std::size_t limit) : limit_(std::max<std::size_t>(limit, 2)) {
  mu_.assign(limit_ + 1, 0);
  lpf_.assign(limit_ + 1, 0);
  mu_[1] = 1;
  lpf_[1] = 1;
  for (std::size_t i = 2; i <= limit_; ++i) {
    if (lpf_[i] == 0) {
      lpf_[i] = std::uint32_t(i);
      mu_[i] = -1;
      primes_.push_back(std::uint32_t(i));
    }
    for (std::uint32_t p : primes_) {
      std::size_t ip = i * p;
      if (p > lpf_[i] || ip > limit_) break;
      lpf_[ip] = p;
      mu_[ip] = (p == lpf_[i]) ? 0 : std::int8_t(-mu_[i]);
    }
  }
}

std::shared_ptr<const Sieve> Sieve::up_to(std::size_t limit) {
  static std::mutex m;
  static std::shared_ptr<const Sieve> cached;
  std::lock_guard<std::mutex> lock(m);
  if (!cached || cached->limit() < limit) cached = std::make_shared<const Sieve>(std::max<std::size_t>(limit, 1 << 16));
  return cached;
}

double Sieve::von_mangoldt(std::size_t n) const {
  if (n < 2) return 0.0;
  std::size_t p = lpf_[n];
  while (n % p == 0) n /= p;
  return n == 1 ? std::log(double(p)) : 0.0;
}

std::uint32_t Sieve::largest_prime_factor(std::size_t n) const {
  std::uint32_t big = 1;
  while (n > 1) {
    big = lpf_[n];
    while (n % big == 0) n /= big;
  }
  return big;
}

DirichletComb DirichletComb::one(std::size_t N) {
  DirichletComb c(N);
  for (std::size_t n = 1; n <= N; ++n) c[n] = 1.0;
  return c;
}

DirichletComb DirichletComb::delta(std::size_t N) {
  DirichletComb c(N);
  c[1] = 1.0;
  return c;
}

DirichletComb DirichletComb::mobius(std::size_t N) {
  auto s = Sieve::up_to(N);
  DirichletComb c(N);
  for (std::size_t n = 1; n <= N; ++n) c[n] = s->mu(n);
  return c;
}

DirichletComb DirichletComb::von_mangoldt(std::size_t N) {
  auto s = Sieve::up_to(N);
  DirichletComb c(N);
  for (std::size_t n = 1; n <= N; ++n) c[n] = s->von_mangoldt(n);
  return c;
}

DirichletComb DirichletComb::operator*(const DirichletComb& b) const {
  std::size_t N = std::min(size(), b.size());
  DirichletComb r(N);
  for (std::size_t i = 1; i <= N; ++i) {
    if (c_[i] == 0.0) continue;
    for (std::size_t j = 1; i * j <= N; ++j) r.c_[i * j] += c_[i] * b.c_[j];
  }
  return r;
}

DirichletComb DirichletComb::operator+(const DirichletComb& b) const {
  std::size_t N = std::min(size(), b.size());
  DirichletComb r(N);
  for (std::size_t n = 1; n <= N; ++n) r.c_[n] = c_[n] + b.c_[n];
  return r;
}

DirichletComb DirichletComb::operator-(const DirichletComb& b) const { return *this + b * -1.0; }

DirichletComb DirichletComb::operator*(double s) const {
  DirichletComb r = *this;
  for (auto& v : r.c_) v *= s;
  return r;
}

DirichletComb DirichletComb::derivation() const {
  DirichletComb r = *this;
  for (std::size_t n = 1; n <= size(); ++n) r.c_[n] *= -std::log(double(n));
  return r;
}

double DirichletComb::apply(const std::function<double(double)>& f, double x) const {
  std::vector<double> t;
  t.reserve(size());
  for (std::size_t n = 1; n <= size(); ++n)
    if (c_[n] != 0.0) t.push_back(c_[n] * f(double(n) * x));
  return pairwise_sum(t);
}

double DirichletComb::max_abs_diff(const DirichletComb& b) const {
  std::size_t N = std::min(size(), b.size());
  double m = 0;
  for (std::size_t n = 1; n <= N; ++n) m = std::max(m, std::abs(c_[n] - b.c_[n]));
  return m;
}

}  // namespace weil
