// Linear sieve (Moebius, von Mangoldt, primes) and finite Dirichlet combs.
#pragma once

#include <cstddef>
#include <cstdint>
#include <functional>
#include <memory>
#include <vector>

namespace weil {

class Sieve {
 public:
  explicit Sieve(std::size_t limit);
  // shared, grown on demand; safe to call from several threads
  static std::shared_ptr<const Sieve> up_to(std::size_t limit);

  std::size_t limit() const { return limit_; }
  int mu(std::size_t n) const { return mu_[n]; }
  double von_mangoldt(std::size_t n) const;
  std::uint32_t least_prime_factor(std::size_t n) const { return lpf_[n]; }
  std::uint32_t largest_prime_factor(std::size_t n) const;
  bool is_prime(std::size_t n) const { return n >= 2 && lpf_[n] == n; }
  const std::vector<std::uint32_t>& primes() const { return primes_; }

 private:
  std::size_t limit_;
  std::vector<std::int8_t> mu_;
  std::vector<std::uint32_t> lpf_;
  std::vector<std::uint32_t> primes_;
};

// c(1..N) standing for sum_n c(n) delta_{1/n}; acting on f it gives
// sum_n c(n) f(n x). Products are Dirichlet convolutions.
class DirichletComb {
 public:
  explicit DirichletComb(std::size_t N) : c_(N + 1, 0.0) {}

  static DirichletComb one(std::size_t N);      // Z
  static DirichletComb delta(std::size_t N);    // identity
  static DirichletComb mobius(std::size_t N);   // Z^{-1}
  static DirichletComb von_mangoldt(std::size_t N);

  std::size_t size() const { return c_.size() - 1; }
  double operator[](std::size_t n) const { return c_[n]; }
  double& operator[](std::size_t n) { return c_[n]; }

  DirichletComb operator*(const DirichletComb& b) const;  // convolution, truncated
  DirichletComb operator+(const DirichletComb& b) const;
  DirichletComb operator-(const DirichletComb& b) const;
  DirichletComb operator*(double s) const;
  // the derivation d: delta_{1/n} sits at x = 1/n, so c(n) -> ln(1/n) c(n)
  DirichletComb derivation() const;

  double apply(const std::function<double(double)>& f, double x) const;
  double max_abs_diff(const DirichletComb& b) const;

 private:
  std::vector<double> c_;
};

}  // namespace weil
