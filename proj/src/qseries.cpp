#include "partitionlab/qseries.hpp"

#include <mutex>
#include <stdexcept>

namespace partitionlab {

std::vector<mpz_class> partition_numbers(size_t nMax) {
  std::vector<mpz_class> p(nMax + 1);
  p[0] = 1;
  for (size_t n = 1; n <= nMax; ++n) {
    mpz_class acc = 0;
    for (long g = 1;; ++g) {
      const long e1 = g * (3 * g - 1) / 2;
      const long e2 = g * (3 * g + 1) / 2;
      if (e1 > (long)n) break;
      if (g % 2 == 1) {
        acc += p[n - (size_t)e1];
        if (e2 <= (long)n) acc += p[n - (size_t)e2];
      } else {
        acc -= p[n - (size_t)e1];
        if (e2 <= (long)n) acc -= p[n - (size_t)e2];
      }
    }
    p[n] = std::move(acc);
  }
  return p;
}

Series<mpz_class> partition_series(size_t n) {
  Series<mpz_class> s = Series<mpz_class>::one(n, mpz_class(0));
  div_eta_factor(s, 1);
  return s;
}

Series<mpz_class> distinct_series(size_t n) {
  return pochhammer(mpz_class(-1), 1, 1, n);
}

Series<mpz_class> regular_series(unsigned k, size_t n) {
  if (k < 2) throw std::invalid_argument("regularity parameter must be >= 2");
  return eta_quotient_expand({{{k, 1}, {1, -1}}, {}}, n);
}

Series<mpz_class> lambert_bias_series(int r, int t, size_t n) {
  if (t < 1 || r < 1 || r > t) throw std::invalid_argument("need 1 <= r <= t");
  Series<mpz_class> s(n, mpz_class(0));
  for (size_t j = (size_t)r; j < n; j += (size_t)t)
    for (size_t m = 1; j * m < n; ++m) {
      if (m % 2 == 1) s.c[j * m] += 1;
      else s.c[j * m] -= 1;
    }
  return s;
}

Series<mpz_class> distinct_bias_series(int r, int t, size_t n) {
  return distinct_series(n).mul(lambert_bias_series(r, t, n));
}

namespace {

std::vector<mpz_class> g_distinct_table;
std::mutex g_distinct_mutex;

// coefficients of (-q;q)_infty up to n inclusive, cached
std::vector<mpz_class> distinct_table(size_t n) {
  std::lock_guard<std::mutex> lk(g_distinct_mutex);
  if (g_distinct_table.size() < n + 1) {
    auto s = distinct_series(n + 1);
    g_distinct_table = std::move(s.c);
  }
  return {g_distinct_table.begin(), g_distinct_table.begin() + (long)(n + 1)};
}

}  // namespace

mpz_class distinct_bias_value(int r, int t, size_t n) {
  const auto dist = distinct_table(n);
  const auto L = lambert_bias_series(r, t, n + 1);
  mpz_class acc = 0;
  for (size_t i = 0; i <= n; ++i) {
    if (L.c[i] == 0) continue;
    acc += L.c[i] * dist[n - i];
  }
  return acc;
}

Series<mpz_class> seaweed_series(size_t n) {
  Series<mpz_class> s = Series<mpz_class>::one(n, mpz_class(0));
  for (size_t j = 1; j < n; j += 4) s.div_one_minus(mpz_class(1), j);
  for (size_t j = 3; j < n; j += 4) s.div_one_minus(mpz_class(-1), j);
  return s;
}

std::vector<Series<Cyclo>> seaweed_marked_family(size_t n) {
  std::vector<Series<Cyclo>> fam;
  for (long s = 0; s < 4; ++s) {
    const Cyclo z = Cyclo::root_power(4, s);
    Series<Cyclo> f = Series<Cyclo>::one(n, Cyclo(4));
    for (size_t j = 1; j < n; j += 4) f.div_one_minus(z, j);
    for (size_t j = 3; j < n; j += 4) f.div_one_minus(z, j);
    fam.push_back(std::move(f));
  }
  return fam;
}

std::vector<Series<mpz_class>> seaweed_residue_series(size_t n) {
  const auto fam = seaweed_marked_family(n);
  std::vector<Series<mpz_class>> out;
  for (long j = 0; j < 4; ++j) out.push_back(extract_residue_class(fam, j, 4));
  return out;
}

EvenOddCounts seaweed_even_odd(size_t n) {
  const auto d = seaweed_residue_series(n + 1);
  EvenOddCounts eo;
  // part-count residue mod 4 determines the arc-index parity, with the
  // dictionary depending on the parity of n; pinned against enumeration
  if (n % 2 == 0) {
    eo.odd = d[0].c[n];
    eo.even = d[2].c[n];
  } else {
    eo.odd = d[3].c[n];
    eo.even = d[1].c[n];
  }
  return eo;
}

Series<mpz_class> hook_parity_series(int t, size_t n) {
  if (t < 1) throw std::invalid_argument("hook divisor must be >= 1");
  const size_t tt = (size_t)t;
  return eta_quotient_expand(
      {{{4 * tt, t}, {tt, 2 * t}, {2 * tt, -3 * t}, {1, -1}}, {}}, n);
}

Series<Cyclo> thook_marked_series(int t, unsigned b, long r, size_t n) {
  if (t < 1) throw std::invalid_argument("hook divisor must be >= 1");
  const size_t tt = (size_t)t;
  Series<Cyclo> s = Series<Cyclo>::one(n, Cyclo(b));
  for (int e = 0; e < t; ++e) mul_pentagonal(s, tt);
  // (xi q^t; xi q^t)_infty^{-t} = prod_k (1 - xi^k q^{tk})^{-t}
  for (size_t k = 1; k * tt < n; ++k) {
    const Cyclo g = Cyclo::root_power(b, r * (long)k);
    for (int e = 0; e < t; ++e) s.div_one_minus(g, k * tt);
  }
  div_pentagonal(s, 1);
  return s;
}

Series<IntPoly> thook_bivariate_series(int t, size_t n) {
  if (t < 1) throw std::invalid_argument("hook divisor must be >= 1");
  const size_t tt = (size_t)t;
  Series<IntPoly> s = Series<IntPoly>::one(n, IntPoly());
  for (int e = 0; e < t; ++e) mul_pentagonal(s, tt);
  for (size_t k = 1; k * tt < n; ++k) {
    const IntPoly g = IntPoly::monomial(1, k);
    for (int e = 0; e < t; ++e) s.div_one_minus(g, k * tt);
  }
  div_pentagonal(s, 1);
  return s;
}

Series<mpz_class> thook_residue_series(int t, long a, unsigned b, size_t n) {
  std::vector<Series<Cyclo>> fam;
  for (unsigned r = 0; r < b; ++r) fam.push_back(thook_marked_series(t, b, r, n));
  return extract_residue_class(fam, a, b);
}

Series<IntPoly> hilbert_poincare_series(size_t n) {
  Series<IntPoly> s = Series<IntPoly>::one(n, IntPoly());
  for (size_t m = 1; m < n; ++m)
    s.div_one_minus(IntPoly::monomial(1, 2 * m - 2), m);
  return s;
}

Series<IntPoly> quasi_hilbert_poincare_series(unsigned alpha, unsigned beta, size_t n) {
  const size_t s0 = alpha + beta;
  if (mpz_class(gcd(mpz_class(alpha), mpz_class(beta))) != 1)
    throw std::invalid_argument("weights must be coprime");
  Series<IntPoly> s = Series<IntPoly>::one(n, IntPoly());
  for (size_t m = 1; m * s0 < n; ++m)
    s.div_one_minus(IntPoly::monomial(1, 2), m * s0);
  // times prod (1 - q^{(alpha+beta)m}) / (1 - q^m)
  for (size_t m = 1; m * s0 < n; ++m) s.mul_one_minus(IntPoly(1), m * s0);
  for (size_t m = 1; m < n; ++m) s.div_one_minus(IntPoly(1), m);
  return s;
}

std::vector<Series<Cyclo>> hilbert_family(unsigned b, size_t n) {
  std::vector<Series<Cyclo>> fam;
  for (unsigned r = 0; r < b; ++r) {
    Series<Cyclo> s = Series<Cyclo>::one(n, Cyclo(b));
    for (size_t m = 1; m < n; ++m)
      s.div_one_minus(Cyclo::root_power(b, (long)r * (long)(2 * m - 2)), m);
    fam.push_back(std::move(s));
  }
  return fam;
}

std::vector<Series<Cyclo>> quasi_hilbert_family(unsigned alpha, unsigned beta,
                                                unsigned b, size_t n) {
  const size_t s0 = alpha + beta;
  std::vector<Series<Cyclo>> fam;
  for (unsigned r = 0; r < b; ++r) {
    Series<Cyclo> s = Series<Cyclo>::one(n, Cyclo(b));
    for (size_t m = 1; m * s0 < n; ++m)
      s.div_one_minus(Cyclo::root_power(b, 2 * (long)r), m * s0);
    for (size_t m = 1; m * s0 < n; ++m) s.mul_one_minus(Cyclo::one(b), m * s0);
    for (size_t m = 1; m < n; ++m) s.div_one_minus(Cyclo::one(b), m);
    fam.push_back(std::move(s));
  }
  return fam;
}

std::vector<mpz_class> tau_values(size_t nMax) {
  auto s = eta_quotient_expand({{{1, 24}}, {}}, nMax);
  std::vector<mpz_class> tau(nMax + 1);
  // tau(n) is the coefficient of q^{n-1} in (q;q)_infty^{24}
  for (size_t n = 1; n <= nMax; ++n) tau[n] = std::move(s.c[n - 1]);
  return tau;
}

}  // namespace partitionlab
