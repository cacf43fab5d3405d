#include "partitionlab/real.hpp"

#include <cmath>
#include <stdexcept>
#include <vector>

namespace partitionlab {

long bits_for_digits(unsigned digits) {
  return (long)std::ceil(digits * 3.3219280948873623) + 32;
}

long min_prec(const Real& a, const Real& b) {
  return std::min(a.prec(), b.prec());
}

Real Real::parse(const std::string& s, long prec) {
  Real r(prec);
  if (mpfr_set_str(r.v_, s.c_str(), 10, MPFR_RNDN) != 0)
    throw std::invalid_argument("cannot parse real literal: " + s);
  return r;
}

std::string Real::str(unsigned digits) const {
  char* buf = nullptr;
  if (mpfr_asprintf(&buf, "%.*Re", (int)digits - 1, v_) < 0)
    throw std::runtime_error("mpfr formatting failed");
  std::string out(buf);
  mpfr_free_str(buf);
  return out;
}

#define PL_BINOP(op, fn)                                 \
  Real operator op(const Real& a, const Real& b) {       \
    Real r(min_prec(a, b));                              \
    fn(r.raw(), a.raw(), b.raw(), MPFR_RNDN);            \
    return r;                                            \
  }
PL_BINOP(+, mpfr_add)
PL_BINOP(-, mpfr_sub)
PL_BINOP(*, mpfr_mul)
PL_BINOP(/, mpfr_div)
#undef PL_BINOP

Real Real::operator-() const {
  Real r(prec());
  mpfr_neg(r.v_, v_, MPFR_RNDN);
  return r;
}

Real operator*(const Real& a, long b) {
  Real r(a.prec());
  mpfr_mul_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator/(const Real& a, long b) {
  Real r(a.prec());
  mpfr_div_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator+(const Real& a, long b) {
  Real r(a.prec());
  mpfr_add_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}
Real operator-(const Real& a, long b) {
  Real r(a.prec());
  mpfr_sub_si(r.raw(), a.raw(), b, MPFR_RNDN);
  return r;
}

#define PL_UNOP(name, fn)              \
  Real name(const Real& a) {           \
    Real r(a.prec());                  \
    fn(r.raw(), a.raw(), MPFR_RNDN);   \
    return r;                          \
  }
PL_UNOP(pl_abs, mpfr_abs)
PL_UNOP(pl_sqrt, mpfr_sqrt)
PL_UNOP(pl_exp, mpfr_exp)
PL_UNOP(pl_log, mpfr_log)
PL_UNOP(pl_sin, mpfr_sin)
PL_UNOP(pl_cos, mpfr_cos)
PL_UNOP(pl_cosh, mpfr_cosh)
PL_UNOP(pl_sinh, mpfr_sinh)
PL_UNOP(pl_gamma, mpfr_gamma)
PL_UNOP(pl_digamma, mpfr_digamma)
PL_UNOP(pl_zeta, mpfr_zeta)
PL_UNOP(pl_floor, mpfr_rint_floor)
#undef PL_UNOP

Real pl_lngamma(const Real& a) {
  Real r(a.prec());
  mpfr_lngamma(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Real pl_atan2(const Real& y, const Real& x) {
  Real r(min_prec(y, x));
  mpfr_atan2(r.raw(), y.raw(), x.raw(), MPFR_RNDN);
  return r;
}

Real pl_pow(const Real& base, const Real& e) {
  Real r(min_prec(base, e));
  mpfr_pow(r.raw(), base.raw(), e.raw(), MPFR_RNDN);
  return r;
}

Real pl_pow_si(const Real& base, long e) {
  Real r(base.prec());
  mpfr_pow_si(r.raw(), base.raw(), e, MPFR_RNDN);
  return r;
}

Real const_pi(long prec) {
  Real r(prec);
  mpfr_const_pi(r.raw(), MPFR_RNDN);
  return r;
}
Real const_euler(long prec) {
  Real r(prec);
  mpfr_const_euler(r.raw(), MPFR_RNDN);
  return r;
}
Real const_log2(long prec) {
  Real r(prec);
  mpfr_const_log2(r.raw(), MPFR_RNDN);
  return r;
}

namespace {

// x reduced into [0, 2) exactly
mpq_class reduce_mod_two(const mpq_class& x) {
  mpz_class twice_den = 2 * x.get_den();
  mpz_class num = x.get_num() % twice_den;
  if (num < 0) num += twice_den;
  mpq_class r(num, x.get_den());
  r.canonicalize();
  return r;
}

}  // namespace

Real sin_pi_rational(const mpq_class& x, long prec) {
  const mpq_class r = reduce_mod_two(x);
  Real theta = Real(prec + 16, r) * const_pi(prec + 16);
  Real out(prec);
  mpfr_sin(out.raw(), theta.raw(), MPFR_RNDN);
  return out;
}

Real cos_pi_rational(const mpq_class& x, long prec) {
  const mpq_class r = reduce_mod_two(x);
  Real theta = Real(prec + 16, r) * const_pi(prec + 16);
  Real out(prec);
  mpfr_cos(out.raw(), theta.raw(), MPFR_RNDN);
  return out;
}

Rounded round_to_integer(const Real& x) {
  Rounded out;
  Real nearest(x.prec());
  mpfr_rint(nearest.raw(), x.raw(), MPFR_RNDN);
  mpfr_get_z(out.value.get_mpz_t(), nearest.raw(), MPFR_RNDN);
  out.distance = std::fabs((x - nearest).to_double());
  return out;
}

Complex operator+(const Complex& a, const Complex& b) {
  return {a.re + b.re, a.im + b.im};
}
Complex operator-(const Complex& a, const Complex& b) {
  return {a.re - b.re, a.im - b.im};
}
Complex operator*(const Complex& a, const Complex& b) {
  return {a.re * b.re - a.im * b.im, a.re * b.im + a.im * b.re};
}
Complex operator*(const Real& a, const Complex& b) { return {a * b.re, a * b.im}; }
Complex operator-(const Complex& a) { return {-a.re, -a.im}; }

Complex pl_inv(const Complex& z) {
  const Real d = z.re * z.re + z.im * z.im;
  return {z.re / d, -(z.im / d)};
}

Complex operator/(const Complex& a, const Complex& b) { return a * pl_inv(b); }

Real pl_abs(const Complex& z) { return pl_sqrt(z.re * z.re + z.im * z.im); }

Complex pl_exp(const Complex& z) {
  const Real m = pl_exp(z.re);
  return {m * pl_cos(z.im), m * pl_sin(z.im)};
}

Complex pl_log(const Complex& z) { return {pl_log(pl_abs(z)), pl_atan2(z.im, z.re)}; }

Complex pl_sqrt(const Complex& z) {
  if (z.im.sign() == 0 && z.re.sign() >= 0) return {pl_sqrt(z.re), z.im};
  Complex h = pl_log(z);
  h.re = h.re / 2;
  h.im = h.im / 2;
  return pl_exp(h);
}

Complex pl_pow_si(const Complex& z, long e) {
  if (e < 0) return pl_inv(pl_pow_si(z, -e));
  Complex r{Real(z.prec(), 1L), Real(z.prec(), 0L)};
  Complex base = z;
  unsigned long u = (unsigned long)e;
  while (u) {
    if (u & 1) r = r * base;
    u >>= 1;
    if (u) base = base * base;
  }
  return r;
}

Complex unit_phase(const mpq_class& x, long prec) {
  const mpq_class two_x = reduce_mod_two(2 * x);
  return {cos_pi_rational(two_x, prec), sin_pi_rational(two_x, prec)};
}

}  // namespace partitionlab
