#pragma once

#include <gmpxx.h>
#include <vector>

namespace partitionlab {

// Coefficient vector of the b-th cyclotomic polynomial, monic, ascending.
// Computed once per b and cached; safe to call from several threads.
const std::vector<mpz_class>& cyclotomic_poly(unsigned b);

unsigned euler_phi(unsigned b);

// Element of Z[x]/Phi_b(x), i.e. the ring of integers of Q(zeta_b).
// a holds the reduced representative, degree < phi(b); trailing zeros allowed.
// b == 1 gives plain integers, which keeps generic series code uniform.
struct Cyclo {
  unsigned b = 1;
  std::vector<mpz_class> a;

  Cyclo() = default;
  explicit Cyclo(unsigned b_) : b(b_) {}
  Cyclo(unsigned b_, const mpz_class& c) : b(b_), a{c} {}

  static Cyclo zero(unsigned b) { return Cyclo(b); }
  static Cyclo one(unsigned b) { return Cyclo(b, 1); }
  // zeta_b^j, j taken mod b.
  static Cyclo root_power(unsigned b, long j);

  bool is_zero() const;
  // integer constant? (all coordinates above x^0 vanish after reduction)
  bool is_integer() const;
  mpz_class integer_value() const;  // requires is_integer()

  Cyclo& operator+=(const Cyclo& o);
  Cyclo& operator-=(const Cyclo& o);
  Cyclo operator-() const;
  Cyclo operator*(const Cyclo& o) const;
  Cyclo& operator*=(const Cyclo& o) { *this = *this * o; return *this; }
  bool operator==(const Cyclo& o) const;

  void mul_int(const mpz_class& c);
  // exact division by integer d; throws if any coordinate is not divisible
  void div_int_exact(const mpz_class& d);
};

Cyclo operator+(Cyclo a, const Cyclo& b);
Cyclo operator-(Cyclo a, const Cyclo& b);

// reduce an arbitrary-degree integer polynomial in zeta_b in place
void cyclo_reduce(unsigned b, std::vector<mpz_class>& a);

}  // namespace partitionlab
