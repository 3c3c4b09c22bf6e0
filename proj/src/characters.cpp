#include "weil/characters.hpp"

#include <cmath>
#include <numbers>
#include <numeric>

#include "weil/error.hpp"

namespace weil {

namespace {

constexpr double pi = std::numbers::pi;

long long powmod(long long b, long long e, long long m) {
  long long r = 1 % m;
  b %= m;
  while (e > 0) {
    if (e & 1) r = r * b % m;
    b = b * b % m;
    e >>= 1;
  }
  return r;
}

std::vector<std::pair<int, int>> factor(int n) {
  std::vector<std::pair<int, int>> out;
  for (int p = 2; p * p <= n; ++p) {
    int k = 0;
    while (n % p == 0) n /= p, ++k;
    if (k) out.push_back({p, k});
  }
  if (n > 1) out.push_back({n, 1});
  return out;
}

int ipow(int b, int e) {
  int r = 1;
  while (e--) r *= b;
  return r;
}

// multiplicative order of g mod m
int order_mod(long long g, int m) {
  long long x = g % m;
  int k = 1;
  while (x != 1) x = x * g % m, ++k;
  return k;
}

int primitive_root(int q, int phi) {
  for (int g = 2; g < q; ++g)
    if (std::gcd(g, q) == 1 && order_mod(g, q) == phi) return g;
  return 1;
}

// lift g mod q to G mod d with G = 1 mod d/q
long long crt_lift(long long g, int q, int d) {
  int r = d / q;
  for (long long G = g; G < d; G += q)
    if (G % r == 1 % r) return G;
  return g;
}

cplx root_of_unity(long long num, long long den) {
  long long j = ((num % den) + den) % den;
  if (4 * j == den) return {0, 1};
  if (2 * j == den) return {-1, 0};
  if (4 * j == 3 * den) return {0, -1};
  if (j == 0) return {1, 0};
  return std::polar(1.0, 2 * pi * double(j) / double(den));
}

struct Component {
  long long gen;
  int ord;
};

std::vector<Component> unit_group(int d) {
  std::vector<Component> comps;
  for (auto [p, k] : factor(d)) {
    int q = ipow(p, k);
    if (p == 2) {
      if (k >= 2) comps.push_back({crt_lift(q - 1, q, d), 2});
      if (k >= 3) comps.push_back({crt_lift(5, q, d), q / 4});
    } else {
      int phi = q / p * (p - 1);
      comps.push_back({crt_lift(primitive_root(q, phi), q, d), phi});
    }
  }
  return comps;
}

void finish(DirichletCharacter& c) {
  const int d = c.modulus;
  c.parity = (std::abs(c(d - 1) - cplx(1)) < 1e-12) ? 1 : -1;
  cplx g = 0;
  for (int a = 1; a < d; ++a) g += c(a) * root_of_unity(a, d);
  c.gauss_sum = g;
  // order: smallest m with chi^m trivial
  int ord = 1;
  for (;; ++ord) {
    bool triv = true;
    for (int a = 1; a < d && triv; ++a)
      if (std::gcd(a, d) == 1 && std::abs(std::pow(c(a), ord) - cplx(1)) > 1e-9) triv = false;
    if (triv) break;
  }
  c.order = ord;
  // primitive iff not induced from a proper divisor d/p
  c.primitive = true;
  for (auto [p, k] : factor(d)) {
    (void)k;
    int dp = d / p;
    bool induced = true;
    for (int a = 1; a < d && induced; ++a)
      if (std::gcd(a, d) == 1 && (a % dp) == (1 % dp) && std::abs(c(a) - cplx(1)) > 1e-9) induced = false;
    if (induced) {
      c.primitive = false;
      break;
    }
  }
}

}  // namespace

DirichletCharacter DirichletCharacter::conj() const {
  DirichletCharacter c = *this;
  for (auto& v : c.values) v = std::conj(v);
  c.gauss_sum = 0;
  for (int a = 1; a < modulus; ++a) c.gauss_sum += c(a) * root_of_unity(a, modulus);
  return c;
}

bool DirichletCharacter::is_real() const {
  for (auto v : values)
    if (std::abs(v.imag()) > 1e-12) return false;
  return true;
}

cplx DirichletCharacter::kappa() const { return double(parity) * gauss_sum / std::sqrt(double(modulus)); }

cplx DirichletCharacter::kappa_classical() const {
  cplx ia = (parity == 1) ? cplx(1) : cplx(0, 1);
  return gauss_sum / (ia * std::sqrt(double(modulus)));
}

std::vector<DirichletCharacter> characters_mod(int d) {
  if (d < 2) fail(ErrorKind::config, "character modulus must be >= 2");
  auto comps = unit_group(d);
  std::vector<DirichletCharacter> out;
  std::vector<int> j(comps.size(), 0);  // exponent choice per component
  for (;;) {
    DirichletCharacter c;
    c.modulus = d;
    c.values.assign(std::size_t(d), 0);
    // walk all exponent vectors e, n = prod gen^e
    std::vector<int> e(comps.size(), 0);
    for (;;) {
      long long n = 1 % d;
      cplx v = 1;
      for (std::size_t i = 0; i < comps.size(); ++i) {
        n = n * powmod(comps[i].gen, e[i], d) % d;
        v *= root_of_unity((long long)j[i] * e[i], comps[i].ord);
      }
      c.values[std::size_t(n)] = v;
      std::size_t i = 0;
      while (i < comps.size() && ++e[i] == comps[i].ord) e[i++] = 0;
      if (i == comps.size()) break;
    }
    finish(c);
    out.push_back(std::move(c));
    std::size_t i = 0;
    while (i < comps.size() && ++j[i] == comps[i].ord) j[i++] = 0;
    if (i == comps.size()) break;
  }
  return out;
}

std::vector<DirichletCharacter> primitive_characters(int d) {
  std::vector<DirichletCharacter> out;
  for (auto& c : characters_mod(d))
    if (c.primitive && !c.is_trivial()) out.push_back(c);
  return out;
}

DirichletCharacter primitive_character(int d, int index) {
  auto all = primitive_characters(d);
  if (index < 0 || std::size_t(index) >= all.size())
    fail(ErrorKind::non_primitive_character,
         "no primitive character with index " + std::to_string(index) + " mod " + std::to_string(d) + " (" +
             std::to_string(all.size()) + " available)");
  return all[std::size_t(index)];
}

DirichletCharacter character_from_values(int d, const std::vector<cplx>& values) {
  if (d < 2 || values.size() != std::size_t(d)) fail(ErrorKind::config, "character table must have length d >= 2");
  DirichletCharacter c;
  c.modulus = d;
  c.values = values;
  for (int a = 0; a < d; ++a) {
    bool unit = std::gcd(a, d) == 1;
    if (!unit && std::abs(values[std::size_t(a)]) > 0) fail(ErrorKind::config, "character must vanish off units");
    if (unit && std::abs(std::abs(values[std::size_t(a)]) - 1) > 1e-12)
      fail(ErrorKind::config, "character values on units must have modulus 1");
    for (int b = 0; b < d && unit; ++b)
      if (std::gcd(b, d) == 1 &&
          std::abs(c(a) * c(b) - c((long long)a * b)) > 1e-12)
        fail(ErrorKind::config, "character table is not multiplicative");
  }
  finish(c);
  return c;
}

}  // namespace weil
