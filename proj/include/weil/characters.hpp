// Dirichlet characters mod d, enumerated through the cyclic decomposition of
// the unit group. Values are tabulated once; the object is immutable.
#pragma once

#include <complex>
#include <vector>

namespace weil {

using cplx = std::complex<double>;

struct DirichletCharacter {
  int modulus = 1;
  std::vector<cplx> values;  // values[n mod d], 0 on non-units
  int parity = 1;            // chi(-1)
  cplx gauss_sum{0, 0};      // sum_a chi(a) e^{2 pi i a/d}
  bool primitive = false;
  int order = 1;

  cplx operator()(long long n) const {
    long long r = n % modulus;
    if (r < 0) r += modulus;
    return values[std::size_t(r)];
  }
  DirichletCharacter conj() const;
  bool is_real() const;
  bool is_trivial() const { return order == 1; }
  // a = 0 for even, 1 for odd characters
  int a() const { return parity == 1 ? 0 : 1; }
  // Root number of the twisted Poisson formula in the convention used by
  // twisted_poisson_check: chi(-1) tau(chi) / sqrt(d).
  cplx kappa() const;
  // tau(chi) / (i^a sqrt(d)), the usual root number of Lambda_chi.
  cplx kappa_classical() const;
};

// Every character mod d (d >= 2), trivial one first, in a fixed order.
std::vector<DirichletCharacter> characters_mod(int d);
// The non-trivial primitive characters mod d, in the same order.
std::vector<DirichletCharacter> primitive_characters(int d);
// index-th entry of primitive_characters(d); throws non-primitive-character
// if there is no such entry.
DirichletCharacter primitive_character(int d, int index);
// Build from an explicit value table (length d); validates multiplicativity.
DirichletCharacter character_from_values(int d, const std::vector<cplx>& values);

}  // namespace weil
