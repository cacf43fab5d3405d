#pragma once

#include <gmpxx.h>
#include <vector>

namespace partitionlab {

// Dense integer polynomial in one marker variable, ascending coefficients.
// Used as a coefficient ring so that series can carry a second exact grading.
struct IntPoly {
  std::vector<mpz_class> c;

  IntPoly() = default;
  IntPoly(const mpz_class& v) {
    if (v != 0) c.assign(1, v);
  }
  IntPoly(long v) : IntPoly(mpz_class(v)) {}

  static IntPoly monomial(const mpz_class& v, size_t deg) {
    IntPoly p;
    if (v != 0) {
      p.c.assign(deg + 1, 0);
      p.c[deg] = v;
    }
    return p;
  }

  void trim() {
    while (!c.empty() && c.back() == 0) c.pop_back();
  }
  bool is_zero() const {
    for (const auto& x : c)
      if (x != 0) return false;
    return true;
  }
  mpz_class coeff(size_t d) const { return d < c.size() ? c[d] : mpz_class(0); }
  size_t degree_bound() const { return c.size(); }

  IntPoly& operator+=(const IntPoly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] += o.c[i];
    return *this;
  }
  IntPoly& operator-=(const IntPoly& o) {
    if (c.size() < o.c.size()) c.resize(o.c.size());
    for (size_t i = 0; i < o.c.size(); ++i) c[i] -= o.c[i];
    return *this;
  }
  IntPoly operator-() const {
    IntPoly r;
    r.c.resize(c.size());
    for (size_t i = 0; i < c.size(); ++i) r.c[i] = -c[i];
    return r;
  }
  IntPoly operator*(const IntPoly& o) const {
    IntPoly r;
    if (is_zero() || o.is_zero()) return r;
    r.c.assign(c.size() + o.c.size() - 1, 0);
    for (size_t i = 0; i < c.size(); ++i) {
      if (c[i] == 0) continue;
      for (size_t j = 0; j < o.c.size(); ++j) r.c[i + j] += c[i] * o.c[j];
    }
    return r;
  }
  IntPoly& operator*=(const IntPoly& o) { *this = *this * o; return *this; }
  bool operator==(const IntPoly& o) const {
    size_t n = std::max(c.size(), o.c.size());
    for (size_t i = 0; i < n; ++i)
      if (coeff(i) != o.coeff(i)) return false;
    return true;
  }
};

inline IntPoly operator+(IntPoly a, const IntPoly& b) { return a += b; }
inline IntPoly operator-(IntPoly a, const IntPoly& b) { return a -= b; }

}  // namespace partitionlab
