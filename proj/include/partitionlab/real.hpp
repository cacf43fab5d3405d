#pragma once

#include <gmpxx.h>
#include <mpfr.h>

#include <string>
#include <utility>

namespace partitionlab {

// working bits for a decimal-digit request, with guard bits on top
long bits_for_digits(unsigned digits);

// Arbitrary-precision real, RAII over mpfr_t, round-to-nearest everywhere.
// Binary operations never mix precisions silently: the result carries the
// smaller of the two operand precisions.
class Real {
 public:
  Real() { mpfr_init2(v_, 53); }
  explicit Real(long prec) { mpfr_init2(v_, prec < 2 ? 2 : prec); }
  Real(long prec, double x) : Real(prec) { mpfr_set_d(v_, x, MPFR_RNDN); }
  Real(long prec, long x) : Real(prec) { mpfr_set_si(v_, x, MPFR_RNDN); }
  Real(long prec, const mpz_class& x) : Real(prec) {
    mpfr_set_z(v_, x.get_mpz_t(), MPFR_RNDN);
  }
  Real(long prec, const mpq_class& x) : Real(prec) {
    mpfr_set_q(v_, x.get_mpq_t(), MPFR_RNDN);
  }
  Real(const Real& o) {
    mpfr_init2(v_, mpfr_get_prec(o.v_));
    mpfr_set(v_, o.v_, MPFR_RNDN);
  }
  Real(Real&& o) noexcept {
    mpfr_init2(v_, 2);
    mpfr_swap(v_, o.v_);
  }
  Real& operator=(const Real& o) {
    if (this != &o) {
      mpfr_set_prec(v_, mpfr_get_prec(o.v_));
      mpfr_set(v_, o.v_, MPFR_RNDN);
    }
    return *this;
  }
  Real& operator=(Real&& o) noexcept {
    mpfr_swap(v_, o.v_);
    return *this;
  }
  ~Real() { mpfr_clear(v_); }

  mpfr_ptr raw() { return v_; }
  mpfr_srcptr raw() const { return v_; }
  long prec() const { return mpfr_get_prec(v_); }
  double to_double() const { return mpfr_get_d(v_, MPFR_RNDN); }
  bool is_nan() const { return mpfr_nan_p(v_) != 0; }
  int sign() const { return mpfr_sgn(v_); }

  static Real parse(const std::string& s, long prec);
  // scientific notation with the given number of significant digits
  std::string str(unsigned digits) const;

  friend Real operator+(const Real& a, const Real& b);
  friend Real operator-(const Real& a, const Real& b);
  friend Real operator*(const Real& a, const Real& b);
  friend Real operator/(const Real& a, const Real& b);
  Real operator-() const;
  Real& operator+=(const Real& o) { return *this = *this + o; }
  Real& operator-=(const Real& o) { return *this = *this - o; }
  Real& operator*=(const Real& o) { return *this = *this * o; }
  Real& operator/=(const Real& o) { return *this = *this / o; }

  friend Real operator*(const Real& a, long b);
  friend Real operator*(long b, const Real& a) { return a * b; }
  friend Real operator/(const Real& a, long b);
  friend Real operator+(const Real& a, long b);
  friend Real operator-(const Real& a, long b);

  friend bool operator<(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) < 0;
  }
  friend bool operator>(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) > 0;
  }
  friend bool operator<=(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) <= 0;
  }
  friend bool operator>=(const Real& a, const Real& b) {
    return mpfr_cmp(a.v_, b.v_) >= 0;
  }

 private:
  mpfr_t v_;
};

long min_prec(const Real& a, const Real& b);

Real pl_abs(const Real& a);
Real pl_sqrt(const Real& a);
Real pl_exp(const Real& a);
Real pl_log(const Real& a);
Real pl_sin(const Real& a);
Real pl_cos(const Real& a);
Real pl_atan2(const Real& y, const Real& x);
Real pl_cosh(const Real& a);
Real pl_sinh(const Real& a);
Real pl_pow(const Real& base, const Real& e);  // base > 0
Real pl_pow_si(const Real& base, long e);
Real pl_gamma(const Real& a);
Real pl_lngamma(const Real& a);  // a > 0
Real pl_digamma(const Real& a);
Real pl_zeta(const Real& s);
Real pl_floor(const Real& a);

Real const_pi(long prec);
Real const_euler(long prec);  // Euler-Mascheroni
Real const_log2(long prec);

// sin/cos of pi*x for exact rational x, argument reduced exactly mod 2
Real sin_pi_rational(const mpq_class& x, long prec);
Real cos_pi_rational(const mpq_class& x, long prec);

// nearest integer, plus the distance |x - round(x)| for honesty checks
struct Rounded {
  mpz_class value;
  double distance;
};
Rounded round_to_integer(const Real& x);

struct Complex {
  Real re, im;

  Complex() = default;
  Complex(Real r, Real i) : re(std::move(r)), im(std::move(i)) {}
  explicit Complex(const Real& r) : re(r), im(Real(r.prec(), 0L)) {}

  long prec() const { return std::min(re.prec(), im.prec()); }
};

Complex operator+(const Complex& a, const Complex& b);
Complex operator-(const Complex& a, const Complex& b);
Complex operator*(const Complex& a, const Complex& b);
Complex operator/(const Complex& a, const Complex& b);
Complex operator*(const Real& a, const Complex& b);
Complex operator-(const Complex& a);

Real pl_abs(const Complex& z);
Complex pl_exp(const Complex& z);
Complex pl_log(const Complex& z);  // principal branch
Complex pl_sqrt(const Complex& z);
Complex pl_pow_si(const Complex& z, long e);
Complex pl_inv(const Complex& z);

// e(x) = exp(2 pi i x) for exact rational x
Complex unit_phase(const mpq_class& x, long prec);

}  // namespace partitionlab
