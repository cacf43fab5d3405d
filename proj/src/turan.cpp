#include "partitionlab/turan.hpp"

#include <algorithm>
#include <cmath>
#include <memory>
#include <mutex>
#include <stdexcept>
#include <utility>

#include "partitionlab/qseries.hpp"
#include "partitionlab/special.hpp"

namespace partitionlab {

namespace {

// ascending coefficients, no trailing zeros, empty = zero polynomial
using QPoly = std::vector<mpq_class>;

QPoly trimmed(std::vector<mpq_class> c) {
  while (!c.empty() && c.back() == 0) c.pop_back();
  return c;
}

QPoly derivative(const QPoly& f) {
  QPoly d;
  for (size_t i = 1; i < f.size(); ++i) d.push_back(mpq_class(i) * f[i]);
  return trimmed(std::move(d));
}

// remainder of a by b, deg b >= 0
QPoly poly_rem(QPoly a, const QPoly& b) {
  while (a.size() >= b.size()) {
    mpq_class f = a.back() / b.back();
    size_t shift = a.size() - b.size();
    for (size_t i = 0; i + 1 < b.size(); ++i) a[shift + i] -= f * b[i];
    a.pop_back();
    while (!a.empty() && a.back() == 0) a.pop_back();
  }
  return a;
}

QPoly make_monic(QPoly f) {
  if (f.empty() || f.back() == 1) return f;
  mpq_class lead = f.back();
  for (auto& c : f) c /= lead;
  return f;
}

QPoly poly_gcd(QPoly a, QPoly b) {
  while (!b.empty()) {
    QPoly r = poly_rem(std::move(a), b);
    a = std::move(b);
    b = make_monic(std::move(r));
  }
  return make_monic(std::move(a));
}

// quotient of f by a known divisor g; the remainder must vanish
QPoly poly_div_exact(QPoly f, const QPoly& g) {
  QPoly q(f.size() >= g.size() ? f.size() - g.size() + 1 : 0, mpq_class(0));
  while (f.size() >= g.size()) {
    mpq_class c = f.back() / g.back();
    size_t shift = f.size() - g.size();
    q[shift] = c;
    for (size_t i = 0; i + 1 < g.size(); ++i) f[shift + i] -= c * g[i];
    f.pop_back();
    while (!f.empty() && f.back() == 0) f.pop_back();
  }
  if (!f.empty()) throw std::logic_error("inexact polynomial division");
  return trimmed(std::move(q));
}

int sign_changes(const std::vector<int>& s) {
  int v = 0, prev = 0;
  for (int x : s) {
    if (x == 0) continue;
    if (prev != 0 && x != prev) ++v;
    prev = x;
  }
  return v;
}

// exact count of distinct real roots equals the squarefree degree
bool sturm_hyperbolic(const QPoly& f) {
  if (f.size() <= 2) return true;  // constants and linear polynomials
  QPoly g = poly_div_exact(f, poly_gcd(f, derivative(f)));
  if (g.size() <= 2) return true;
  std::vector<QPoly> chain{g, derivative(g)};
  while (!chain.back().empty()) {
    QPoly r = poly_rem(chain[chain.size() - 2], chain.back());
    for (auto& c : r) c = -c;
    chain.push_back(std::move(r));
  }
  chain.pop_back();
  std::vector<int> atNeg, atPos;
  for (const QPoly& p : chain) {
    int lead = sgn(p.back());
    atPos.push_back(lead);
    atNeg.push_back(p.size() % 2 ? lead : -lead);
  }
  int realRoots = sign_changes(atNeg) - sign_changes(atPos);
  return realRoots == static_cast<int>(g.size()) - 1;
}

mpq_class det(std::vector<std::vector<mpq_class>> m) {
  mpq_class d(1);
  for (size_t col = 0; col < m.size(); ++col) {
    size_t piv = col;
    while (piv < m.size() && m[piv][col] == 0) ++piv;
    if (piv == m.size()) return mpq_class(0);
    if (piv != col) {
      std::swap(m[piv], m[col]);
      d = -d;
    }
    d *= m[col][col];
    for (size_t r = col + 1; r < m.size(); ++r) {
      if (m[r][col] == 0) continue;
      mpq_class f = m[r][col] / m[col][col];
      for (size_t c = col; c < m.size(); ++c) m[r][c] -= f * m[col][c];
    }
  }
  return d;
}

HankelReport hankel_impl(const QPoly& f) {
  HankelReport rep;
  size_t n = f.size() - 1;
  rep.newtonSums.assign(1, mpq_class(static_cast<long>(n)));
  if (n == 0) {
    rep.hyperbolic = true;
    return rep;
  }
  if (n > 16)
    throw std::invalid_argument(
        "moment-matrix verdict enumerates principal minors; degree > 16 "
        "is out of scope, use the root-count method");
  // signed elementary symmetric functions from the monic coefficients
  std::vector<mpq_class> e(n + 1);
  for (size_t i = 0; i <= n; ++i) {
    e[i] = f[n - i] / f[n];
    if (i % 2) e[i] = -e[i];
  }
  for (size_t m = 1; m <= 2 * n - 2; ++m) {
    mpq_class s(0);
    for (size_t i = 1; i < m && i <= n; ++i) {
      mpq_class t = e[i] * rep.newtonSums[m - i];
      s += (i % 2) ? t : -t;
    }
    if (m <= n) s += mpq_class(static_cast<long>(m)) * ((m % 2) ? e[m] : -e[m]);
    rep.newtonSums.push_back(s);
  }
  auto entry = [&](size_t i, size_t j) { return rep.newtonSums[i + j]; };
  for (size_t m = 1; m <= n; ++m) {
    std::vector<std::vector<mpq_class>> block(m, std::vector<mpq_class>(m));
    for (size_t i = 0; i < m; ++i)
      for (size_t j = 0; j < m; ++j) block[i][j] = entry(i, j);
    rep.minors.push_back(det(std::move(block)));
  }
  // positive semidefinite iff every principal minor is non-negative
  rep.hyperbolic = true;
  for (unsigned long mask = 1; mask < (1UL << n) && rep.hyperbolic; ++mask) {
    std::vector<size_t> idx;
    for (size_t i = 0; i < n; ++i)
      if (mask & (1UL << i)) idx.push_back(i);
    std::vector<std::vector<mpq_class>> sub(idx.size(),
                                            std::vector<mpq_class>(idx.size()));
    for (size_t i = 0; i < idx.size(); ++i)
      for (size_t j = 0; j < idx.size(); ++j) sub[i][j] = entry(idx[i], idx[j]);
    if (det(std::move(sub)) < 0) rep.hyperbolic = false;
  }
  return rep;
}

struct SeqCache {
  std::mutex m;
  std::vector<mpz_class> v;
};

mpz_class cached_value(const std::shared_ptr<SeqCache>& cache, long n,
                       const std::function<std::vector<mpz_class>(size_t)>& fill) {
  if (n < 0) throw std::invalid_argument("sequence index must be non-negative");
  std::lock_guard<std::mutex> lock(cache->m);
  if (static_cast<size_t>(n) >= cache->v.size())
    cache->v = fill(static_cast<size_t>(2 * n + 16));
  return cache->v[static_cast<size_t>(n)];
}

}  // namespace

AlphaSource alpha_partition() {
  auto cache = std::make_shared<SeqCache>();
  return {"p", [cache](long n) {
            return cached_value(cache, n, [](size_t m) {
              return partition_numbers(m);
            });
          }};
}

AlphaSource alpha_regular(unsigned k) {
  if (k < 2) throw std::invalid_argument("regular index k must be at least 2");
  auto cache = std::make_shared<SeqCache>();
  return {"p_" + std::to_string(k), [cache, k](long n) {
            return cached_value(cache, n, [k](size_t m) {
              return regular_series(k, m + 1).c;
            });
          }};
}

JensenPoly jensen(const AlphaSource& alpha, unsigned d, long n) {
  if (n < 0) throw std::invalid_argument("shift must be non-negative");
  JensenPoly p;
  p.d = d;
  p.n = n;
  p.source = alpha.id;
  for (unsigned j = 0; j <= d; ++j) {
    mpz_class c = binomial(d, j) * alpha.value(n + j);
    p.coeff.emplace_back(c);
  }
  return p;
}

bool is_hyperbolic(const std::vector<mpq_class>& poly, RootMethod method) {
  QPoly f = trimmed(poly);
  if (f.empty())
    throw std::invalid_argument("the zero polynomial has no root verdict");
  if (method == RootMethod::Sturm) return sturm_hyperbolic(f);
  return hankel_impl(f).hyperbolic;
}

bool is_hyperbolic(const JensenPoly& p, RootMethod method) {
  return is_hyperbolic(p.coeff, method);
}

HankelReport hankel_report(const std::vector<mpq_class>& poly) {
  QPoly f = trimmed(poly);
  if (f.empty())
    throw std::invalid_argument("the zero polynomial has no root verdict");
  return hankel_impl(f);
}

RenormalizationParams renormalization_params(unsigned k, unsigned d, long n,
                                             unsigned digits) {
  if (k < 2) throw std::invalid_argument("regular index k must be at least 2");
  if (n < 2)
    throw std::invalid_argument("width series needs shift n >= 2 to converge");
  long wp = bits_for_digits(digits + 12);
  RenormalizationParams out;
  out.mk = mpq_class(mpz_class(k - 1), mpz_class(24L * k));
  out.mk.canonicalize();
  out.note =
      "m_k = (k-1)/(24k) is a library convention: it makes 4*pi*sqrt(m_k*n) "
      "the growth exponent of the k-regular count and recovers the "
      "unrestricted rate pi*sqrt(2n/3) as k grows";

  Real pi = const_pi(wp);
  Real sqmk = pl_sqrt(Real(wp, out.mk));
  Real sqn = pl_sqrt(Real(wp, n));

  // growth rate: 2 pi sqrt(m_k/n) plus a finite alternating correction whose
  // length grows with the degree
  mpq_class corr(0);
  mpz_class npow(1);
  for (unsigned r = 1; r <= (3 * d) / 4; ++r) {
    npow *= n;
    mpz_class den = mpz_class(r) * npow;
    mpq_class term(mpz_class((r % 2) ? -1 : 1), den);
    term.canonicalize();
    corr += term;
  }
  corr *= mpq_class(3);
  corr /= mpq_class(4);
  out.A = (pi * sqmk * 2) / sqn + Real(wp, corr);

  // width squared 4 pi sqrt(m_k) sqrt(n) * sum_{r>=2} (-C(1/2,r)) / n^r,
  // cut when a term is below 10^{-digits-10} of the partial sum
  mpz_class p10;
  mpz_ui_pow_ui(p10.get_mpz_t(), 10, digits + 10);
  mpq_class half_binom(mpz_class(1), mpz_class(2));  // C(1/2, 1)
  mpq_class sum(0);
  npow = n;
  unsigned r = 1;
  while (true) {
    ++r;
    if (r > 40000)
      throw std::runtime_error("width series did not reach its cut");
    mpq_class step(mpz_class(3 - 2 * static_cast<long>(r)),
                   mpz_class(2 * static_cast<long>(r)));
    step.canonicalize();
    half_binom *= step;
    npow *= n;
    mpq_class term = -half_binom / mpq_class(npow);
    sum += term;
    if (abs(term) * mpq_class(p10) < abs(sum)) break;
  }
  out.truncation = r;
  Real d2 = (pi * sqmk * 4) * sqn * Real(wp, sum);
  if (!(d2 > Real(wp, 0L)))
    throw std::runtime_error("width series lost positivity");
  out.delta = pl_sqrt(d2);
  return out;
}

RenormalizedJensen renormalized_jensen(unsigned k, unsigned d, long n,
                                       unsigned digits) {
  // the shifted expansion cancels down to delta^d, delta ~ n^{-3/4}; pad the
  // working precision so the requested digits survive
  unsigned pad =
      static_cast<unsigned>(d * std::log10(static_cast<double>(n) + 2.0)) + 8;
  RenormalizedJensen out{{}, Real(), renormalization_params(k, d, n, digits + pad)};
  long wp = bits_for_digits(digits + pad + 12);

  std::vector<mpz_class> pk = regular_series(k, static_cast<size_t>(n) + d + 1).c;
  Real emA = pl_exp(-out.params.A);
  std::vector<Real> emAj{Real(wp, 1L)};
  for (unsigned j = 1; j <= d; ++j) emAj.push_back(emAj.back() * emA);

  Real pkn(wp, pk[static_cast<size_t>(n)]);
  for (unsigned i = 0; i <= d; ++i) {
    Real s(wp, 0L);
    for (unsigned j = i; j <= d; ++j) {
      mpz_class c = binomial(d, j) * binomial(j, i) * pk[static_cast<size_t>(n) + j];
      if ((j - i) % 2) c = -c;
      s += Real(wp, c) * emAj[j];
    }
    out.coeff.push_back(s * pl_pow_si(out.params.delta,
                                      static_cast<long>(i) - static_cast<long>(d)) /
                        pkn);
  }

  std::vector<mpz_class> h = hermite_poly(d);
  std::vector<Real> diff;
  for (unsigned i = 0; i <= d; ++i)
    diff.push_back(out.coeff[i] - Real(wp, h[i]));
  const long grid = 2000;
  Real dev(wp, 0L);
  Real ten(wp, 10L);
  for (long t = 0; t <= grid; ++t) {
    Real x = Real(wp, -5L) + (ten * t) / grid;
    Real v(wp, 0L);
    for (size_t i = diff.size(); i-- > 0;) v = v * x + diff[i];
    Real a = pl_abs(v);
    if (a > dev) dev = a;
  }
  out.deviation = dev;
  return out;
}

ThresholdScan hyperbolicity_threshold(unsigned k, unsigned d, long nMax) {
  if (k < 2) throw std::invalid_argument("regular index k must be at least 2");
  if (d < 1 || d > 4)
    throw std::invalid_argument("scan supports degrees 1 through 4");
  if (nMax < 1) throw std::invalid_argument("nMax must be positive");
  ThresholdScan scan;
  scan.k = k;
  scan.d = d;
  scan.nMax = nMax;

  const std::vector<mpz_class> pk =
      regular_series(k, static_cast<size_t>(nMax) + d + 1).c;
  std::vector<mpz_class> binom(d + 1);
  for (unsigned j = 0; j <= d; ++j) binom[j] = binomial(d, j);

  std::vector<char> bad(static_cast<size_t>(nMax) + 1, 0);
#pragma omp parallel for schedule(dynamic, 16)
  for (long n = 0; n <= nMax; ++n) {
    std::vector<mpq_class> poly;
    poly.reserve(d + 1);
    for (unsigned j = 0; j <= d; ++j) {
      mpz_class c = binom[j] * pk[static_cast<size_t>(n) + j];
      poly.emplace_back(c);
    }
    if (!sturm_hyperbolic(poly)) bad[static_cast<size_t>(n)] = 1;
  }
  for (long n = 0; n <= nMax; ++n)
    if (bad[static_cast<size_t>(n)]) scan.failures.push_back(n);
  scan.threshold = scan.failures.empty() ? 0 : scan.failures.back() + 1;
  return scan;
}

}  // namespace partitionlab
