#pragma once

#include <gmpxx.h>

#include <stdexcept>
#include <utility>
#include <vector>

#include "partitionlab/cyclotomic.hpp"
#include "partitionlab/intpoly.hpp"

namespace partitionlab {

// Per-coefficient-ring glue. `like` carries ring shape (the cyclotomic order);
// for the other rings it is ignored.
template <class R>
struct RingOps;

template <>
struct RingOps<mpz_class> {
  static mpz_class zero(const mpz_class&) { return mpz_class(0); }
  static mpz_class one(const mpz_class&) { return mpz_class(1); }
  static bool is_zero(const mpz_class& x) { return x == 0; }
  static bool compatible(const mpz_class&, const mpz_class&) { return true; }
  static mpz_class invert_unit(const mpz_class& x) {
    if (x == 1 || x == -1) return x;
    throw std::domain_error("constant term is not a unit");
  }
};

template <>
struct RingOps<mpq_class> {
  static mpq_class zero(const mpq_class&) { return mpq_class(0); }
  static mpq_class one(const mpq_class&) { return mpq_class(1); }
  static bool is_zero(const mpq_class& x) { return x == 0; }
  static bool compatible(const mpq_class&, const mpq_class&) { return true; }
  static mpq_class invert_unit(const mpq_class& x) {
    if (x == 0) throw std::domain_error("constant term is zero");
    return 1 / x;
  }
};

template <>
struct RingOps<Cyclo> {
  static Cyclo zero(const Cyclo& like) { return Cyclo::zero(like.b); }
  static Cyclo one(const Cyclo& like) { return Cyclo::one(like.b); }
  static bool is_zero(const Cyclo& x) { return x.is_zero(); }
  static bool compatible(const Cyclo& x, const Cyclo& y) { return x.b == y.b; }
  // units we need are +-zeta^j; anything else is rejected
  static Cyclo invert_unit(const Cyclo& x) {
    long j = -1;
    int sign = 0;
    for (size_t i = 0; i < x.a.size(); ++i) {
      if (x.a[i] == 0) continue;
      if (j >= 0) throw std::domain_error("constant term is not a monomial unit");
      j = (long)i;
      if (x.a[i] == 1) sign = 1;
      else if (x.a[i] == -1) sign = -1;
      else throw std::domain_error("constant term is not a unit");
    }
    if (j < 0) throw std::domain_error("constant term is zero");
    Cyclo r = Cyclo::root_power(x.b, -j);
    if (sign < 0) r = -r;
    return r;
  }
};

template <>
struct RingOps<IntPoly> {
  static IntPoly zero(const IntPoly&) { return IntPoly(); }
  static IntPoly one(const IntPoly&) { return IntPoly(1); }
  static bool is_zero(const IntPoly& x) { return x.is_zero(); }
  static bool compatible(const IntPoly&, const IntPoly&) { return true; }
  static IntPoly invert_unit(const IntPoly& x) {
    IntPoly t = x;
    t.trim();
    if (t.c.size() == 1 && (t.c[0] == 1 || t.c[0] == -1)) return t;
    throw std::domain_error("constant term is not a unit");
  }
};

// Truncated formal power series, dense, exact coefficients.
// c[i] is the coefficient of q^i; order() is the truncation length N,
// i.e. the series is known modulo q^N.
template <class R>
struct Series {
  std::vector<R> c;
  R proto;

  Series() = default;
  Series(size_t n, R proto_) : c(n, RingOps<R>::zero(proto_)), proto(std::move(proto_)) {}

  static Series one(size_t n, const R& proto) {
    Series s(n, proto);
    if (n > 0) s.c[0] = RingOps<R>::one(proto);
    return s;
  }

  size_t order() const { return c.size(); }
  const R& operator[](size_t i) const { return c[i]; }
  R coeff_or_zero(size_t i) const {
    return i < c.size() ? c[i] : RingOps<R>::zero(proto);
  }

  void check_ring(const Series& o) const {
    if (!RingOps<R>::compatible(proto, o.proto))
      throw std::invalid_argument("series coefficient rings differ");
  }

  Series& operator+=(const Series& o) {
    check_ring(o);
    if (c.size() > o.c.size()) c.resize(o.c.size(), RingOps<R>::zero(proto));
    for (size_t i = 0; i < c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  Series& operator-=(const Series& o) {
    check_ring(o);
    if (c.size() > o.c.size()) c.resize(o.c.size(), RingOps<R>::zero(proto));
    for (size_t i = 0; i < c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }

  void scalar_mul(const R& g) {
    for (auto& x : c) x = x * g;
  }

  // multiply by q^k, truncating at the top
  void mul_qpow(size_t k) {
    if (k == 0) return;
    for (size_t i = c.size(); i-- > k;) c[i] = c[i - k];
    for (size_t i = 0; i < std::min(k, c.size()); ++i) c[i] = RingOps<R>::zero(proto);
  }

  // in-place product with (1 - g q^j), j >= 1
  void mul_one_minus(const R& g, size_t j) {
    if (j == 0) throw std::invalid_argument("geometric factor needs j >= 1");
    for (size_t i = c.size(); i-- > j;) c[i] -= g * c[i - j];
  }
  // in-place product with (1 - g q^j)^{-1}, j >= 1
  void div_one_minus(const R& g, size_t j) {
    if (j == 0) throw std::invalid_argument("geometric factor needs j >= 1");
    for (size_t i = j; i < c.size(); ++i) c[i] += g * c[i - j];
  }

  Series mul(const Series& o) const;         // OpenMP over output index
  Series mul_serial(const Series& o) const;  // reference implementation
  Series invert() const;
  Series pow(long e) const;  // negative e inverts first
};

template <class R>
Series<R> Series<R>::mul_serial(const Series& o) const {
  check_ring(o);
  const size_t n = std::min(c.size(), o.c.size());
  Series r(n, proto);
  for (size_t k = 0; k < n; ++k) {
    R s = RingOps<R>::zero(proto);
    for (size_t i = 0; i <= k; ++i) {
      if (RingOps<R>::is_zero(c[i])) continue;
      s += c[i] * o.c[k - i];
    }
    r.c[k] = std::move(s);
  }
  return r;
}

template <class R>
Series<R> Series<R>::mul(const Series& o) const {
  check_ring(o);
  const size_t n = std::min(c.size(), o.c.size());
  Series r(n, proto);
#pragma omp parallel for schedule(dynamic, 64)
  for (long long k = 0; k < (long long)n; ++k) {
    R s = RingOps<R>::zero(proto);
    for (size_t i = 0; i <= (size_t)k; ++i) {
      if (RingOps<R>::is_zero(c[i])) continue;
      s += c[i] * o.c[(size_t)k - i];
    }
    r.c[(size_t)k] = std::move(s);
  }
  return r;
}

template <class R>
Series<R> Series<R>::invert() const {
  if (c.empty()) throw std::invalid_argument("cannot invert empty series");
  const R inv0 = RingOps<R>::invert_unit(c[0]);
  Series r(c.size(), proto);
  r.c[0] = inv0;
  for (size_t n = 1; n < c.size(); ++n) {
    R s = RingOps<R>::zero(proto);
    for (size_t i = 1; i <= n; ++i) {
      if (RingOps<R>::is_zero(c[i])) continue;
      s += c[i] * r.c[n - i];
    }
    r.c[n] = -(inv0 * s);
  }
  return r;
}

template <class R>
Series<R> Series<R>::pow(long e) const {
  if (e < 0) return invert().pow(-e);
  Series base = *this;
  Series r = one(c.size(), proto);
  unsigned long u = (unsigned long)e;
  while (u) {
    if (u & 1) r = r.mul(base);
    u >>= 1;
    if (u) base = base.mul(base);
  }
  return r;
}

template <class R>
Series<R> operator+(Series<R> a, const Series<R>& b) { return a += b; }
template <class R>
Series<R> operator-(Series<R> a, const Series<R>& b) { return a -= b; }

// (a q^shift; q^scale)_infty = prod_{k>=0} (1 - a q^{shift+scale k}),
// truncated at order n. shift == 0 contributes the constant factor (1 - a).
template <class R>
Series<R> pochhammer(const R& a, size_t shift, size_t scale, size_t n) {
  if (scale == 0) throw std::invalid_argument("pochhammer scale must be >= 1");
  Series<R> s = Series<R>::one(n, a);
  for (size_t j = shift; j < n; j += scale) {
    if (j == 0) {
      R f = RingOps<R>::one(a);
      f -= a;
      s.scalar_mul(f);
    } else {
      s.mul_one_minus(a, j);
    }
  }
  return s;
}

// (a q^shift; q^scale)_infty^{-1} through inverse geometric passes
template <class R>
Series<R> pochhammer_inv(const R& a, size_t shift, size_t scale, size_t n) {
  if (scale == 0) throw std::invalid_argument("pochhammer scale must be >= 1");
  if (shift == 0) throw std::invalid_argument("inverse pochhammer needs shift >= 1");
  Series<R> s = Series<R>::one(n, a);
  for (size_t j = shift; j < n; j += scale) s.div_one_minus(a, j);
  return s;
}

// generalized pentagonal support of prod_k (1 - q^{mk}): pairs (exponent, sign)
std::vector<std::pair<size_t, int>> pentagonal_support(size_t m, size_t n);

// in-place product with prod_k (1 - q^{mk}) resp. its inverse (integer series)
void mul_eta_factor(Series<mpz_class>& s, size_t m);
void div_eta_factor(Series<mpz_class>& s, size_t m);

// same passes over an arbitrary coefficient ring
template <class R>
void mul_pentagonal(Series<R>& s, size_t m) {
  const size_t n = s.order();
  auto supp = pentagonal_support(m, n);
  std::vector<R> out(n, RingOps<R>::zero(s.proto));
  for (size_t i = 0; i < n; ++i) {
    R acc = RingOps<R>::zero(s.proto);
    for (const auto& [e, sg] : supp) {
      if (e > i) break;
      if (sg > 0) acc += s.c[i - e];
      else acc -= s.c[i - e];
    }
    out[i] = std::move(acc);
  }
  s.c = std::move(out);
}

template <class R>
void div_pentagonal(Series<R>& s, size_t m) {
  const size_t n = s.order();
  auto supp = pentagonal_support(m, n);
  for (size_t i = 0; i < n; ++i) {
    R acc = s.c[i];
    for (size_t t = 1; t < supp.size(); ++t) {
      const auto& [e, sg] = supp[t];
      if (e > i) break;
      if (sg > 0) acc -= s.c[i - e];
      else acc += s.c[i - e];
    }
    s.c[i] = std::move(acc);
  }
}

struct EtaQuotientSpec {
  struct Factor {
    size_t scale;   // m in (q^m; q^m)_infty
    long exponent;  // e, may be negative
  };
  std::vector<Factor> factors;
  // q-power prefactor sum(e*m)/24 of the corresponding eta quotient;
  // carried as metadata, not applied to the expansion
  mpq_class leading_power;
};

mpq_class eta_leading_power(const std::vector<EtaQuotientSpec::Factor>& factors);

// exact expansion of prod_i (q^{m_i}; q^{m_i})_infty^{e_i} to order n
Series<mpz_class> eta_quotient_expand(const EtaQuotientSpec& spec, size_t n);

// p_s(a, b; n) from the family {S(zeta_b^k; q)}_{k=0..b-1} by exact root-of-unity
// orthogonality carried out in Z[zeta_b]. Throws if the result is not integral.
Series<mpz_class> extract_residue_class(const std::vector<Series<Cyclo>>& family,
                                        long a, unsigned b);

// residue-class sum over the marker grading of a bivariate series
Series<mpz_class> extract_residue_class(const Series<IntPoly>& s, long a, unsigned b);

}  // namespace partitionlab
