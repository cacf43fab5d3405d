#include "partitionlab/exact.hpp"

#include <numeric>
#include <stdexcept>
#include <string>

#include "partitionlab/qseries.hpp"
#include "partitionlab/special.hpp"

namespace partitionlab {

namespace {

mpq_class frac(long num, long den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

mpq_class fracz(const mpz_class& num, const mpz_class& den) {
  mpq_class q(num, den);
  q.canonicalize();
  return q;
}

long floordiv(long a, long b) {
  long q = a / b, r = a % b;
  if (r != 0 && ((r < 0) != (b < 0))) --q;
  return q;
}

long inv_mod(long a, long m) {
  if (m <= 0) throw std::invalid_argument("modulus must be positive");
  if (m == 1) return 0;
  mpz_class am = mpz_class(a) % m;
  if (am < 0) am += m;
  mpz_class r, mm(m);
  if (mpz_invert(r.get_mpz_t(), am.get_mpz_t(), mm.get_mpz_t()) == 0)
    throw std::invalid_argument("value not invertible in residue ring");
  return r.get_si();
}

// dst += sign * x^rot * src in Z[x]/(x^k - 1)
void add_rotated(std::vector<mpz_class>& dst, const std::vector<mpz_class>& src,
                 long rot, long k, int sign) {
  for (long i = 0; i < k; ++i) {
    if (src[(size_t)i] == 0) continue;
    long j = i + rot;
    if (j >= k) j -= k;
    if (sign > 0)
      dst[(size_t)j] += src[(size_t)i];
    else
      dst[(size_t)j] -= src[(size_t)i];
  }
}

// One multiplicand of the level-k expansion: the partition generating
// function evaluated at zeta_k^(rot*m) * X^(stride*m), raised to `power`.
struct GeomFactor {
  long rot, stride, power;
};

std::vector<GeomFactor> base_factors(long t, long k, const ParityBranch& br) {
  std::vector<GeomFactor> f;
  if (br.branch == 1) {
    // k odd and coprime to t; all four arguments are powers of zeta_k
    f.push_back({1 % k, 4 * t, 1});
    f.push_back({inv_mod(2 * t, k), 2, 3 * t});
    f.push_back({inv_mod(t, k), 4, -2 * t});
    f.push_back({inv_mod(4 * t, k), 1, -t});
  } else if (br.branch == 2) {
    const long t0s = inv_mod(br.t0, br.k0);
    const long half = br.k0 / 2;
    const long tw = (half == 1) ? 0 : inv_mod(2, half);
    f.push_back({1 % k, 2 * br.t0, 1});
    f.push_back({(br.g * t0s) % k, 2 * br.g, -2 * t});
    f.push_back({(2 * br.g * t0s) % k, 4 * br.g, 3 * t});
    f.push_back({(2 * br.g * ((tw * (t0s % half)) % half)) % k, 4 * br.g, -t});
  } else {
    const long t0s = inv_mod(br.t0, br.k0);
    f.push_back({1 % k, br.t0, 1});
    f.push_back({(br.g * t0s) % k, br.g, -2 * t});
    f.push_back({(2 * br.g * t0s) % k, 2 * br.g, 3 * t});
    f.push_back({(4 * br.g * t0s) % k, 4 * br.g, -t});
  }
  return f;
}

Complex eval_at_power(const std::vector<mpz_class>& poly, long H,
                      const std::vector<Complex>& zeta, long k, long prec) {
  Complex acc(Real(prec, 0L), Real(prec, 0L));
  for (long i = 0; i < k; ++i) {
    if (poly[(size_t)i] == 0) continue;
    acc = acc + Real(prec, poly[(size_t)i]) * zeta[(size_t)((i * H) % k)];
  }
  return acc;
}

void require_small_imag(const Complex& z, const char* what) {
  const long prec = z.prec();
  const Real tol = pl_pow_si(Real(prec, 2L), -(prec / 3));
  if (!(pl_abs(z.im) <= tol * (Real(prec, 1L) + pl_abs(z.re))))
    throw std::runtime_error(std::string(what) + ": imaginary part failed to cancel");
}

mpz_class indicator_argument(long a, long b, long t, long n) {
  mpq_class v = fracz(mpz_class(1 - t * t) * mpz_class(1 - b * b), mpz_class(24));
  v += mpz_class(a) * t - n;
  v.canonicalize();
  if (v.get_den() != 1)
    throw std::invalid_argument("congruence argument is not integral");
  return v.get_num();
}

}  // namespace

mpq_class parity_phase_exponent(long t, long h, long k) {
  if (t < 1 || k < 1) throw std::invalid_argument("need t, k >= 1");
  const long g = std::gcd(k, t), k0 = k / g, t0 = t / g;
  mpq_class a = dedekind_sum_fast(h, k);
  a += 3 * t * dedekind_sum_fast(2 * t0 * h, k0);
  a -= 2 * t * dedekind_sum_fast(t0 * h, k0);
  a -= t * dedekind_sum_fast(4 * t0 * h, k0);
  a.canonicalize();
  return a;
}

ParityBranch parity_branch(long t, long k) {
  if (t < 1 || k < 1) throw std::invalid_argument("need t, k >= 1");
  ParityBranch br;
  br.g = std::gcd(k, t);
  br.k0 = k / br.g;
  br.t0 = t / br.g;
  if (br.k0 % 2 == 1) {
    br.branch = 1;
    br.mMax = floordiv(br.t0 * (4 - 3 * br.g * br.g), 24);
    br.besselA = frac(4 - 3 * br.g * br.g, 4);
    br.besselB = frac(6, br.t0);
    br.log2Scale = (int)t;
  } else if (br.k0 % 4 == 2) {
    br.branch = 2;
    br.mMax = floordiv(br.t0 * (1 + 3 * br.g * br.g), 12);
    br.besselA = 1 + 3 * br.g * br.g;
    br.besselB = frac(12, br.t0);
    br.log2Scale = -(int)t;
  } else {
    br.branch = 3;
    br.mMax = floordiv(br.t0, 24);
    br.besselA = 1;
    br.besselB = frac(24, br.t0);
    br.log2Scale = 0;
  }
  return br;
}

std::vector<std::vector<mpz_class>> parity_coeff_polys(long t, long k) {
  const ParityBranch br = parity_branch(t, k);
  if (br.mMax < 0) return {};
  const long M = br.mMax;
  std::vector<std::vector<mpz_class>> c((size_t)M + 1,
                                        std::vector<mpz_class>((size_t)k));
  c[0][0] = 1;
  for (const GeomFactor& f : base_factors(t, k, br)) {
    for (long mm = 1; mm * f.stride <= M; ++mm) {
      const long j = mm * f.stride;
      const long rot = (f.rot * mm) % k;
      const long reps = f.power > 0 ? f.power : -f.power;
      for (long rep = 0; rep < reps; ++rep) {
        if (f.power > 0) {
          // divide by (1 - zeta^rot X^j): ascending pass
          for (long m = j; m <= M; ++m)
            add_rotated(c[(size_t)m], c[(size_t)(m - j)], rot, k, +1);
        } else {
          // multiply by (1 - zeta^rot X^j): descending pass
          for (long m = M; m >= j; --m)
            add_rotated(c[(size_t)m], c[(size_t)(m - j)], rot, k, -1);
        }
      }
    }
  }
  return c;
}

std::vector<Complex> parity_coeffs(long t, long h, long k, int digits) {
  const long prec = bits_for_digits((unsigned)digits);
  if (std::gcd(h, k) != 1) throw std::invalid_argument("h must be coprime to k");
  const auto polys = parity_coeff_polys(t, k);
  std::vector<Complex> out;
  if (polys.empty()) return out;
  const long H = (k - inv_mod(h, k)) % k;
  std::vector<Complex> zeta((size_t)k);
  for (long j = 0; j < k; ++j) zeta[(size_t)j] = unit_phase(frac(j, k), prec);
  out.reserve(polys.size());
  for (const auto& p : polys) out.push_back(eval_at_power(p, H, zeta, k, prec));
  return out;
}

Real hook_parity_rademacher(long t, long n, long kMax, int digits) {
  if (t < 1 || n < 1 || kMax < 1) throw std::invalid_argument("need t, n, kMax >= 1");
  const long prec = bits_for_digits((unsigned)digits);
  const Real pi = const_pi(prec);
  const mpz_class n24 = 24 * mpz_class(n) - 1;
  const Real n24r(prec, n24);

  std::vector<Complex> kterm((size_t)kMax + 1, Complex(Real(prec, 0L), Real(prec, 0L)));
#pragma omp parallel for schedule(dynamic, 1)
  for (long k = 1; k <= kMax; ++k) {
    const ParityBranch br = parity_branch(t, k);
    if (br.mMax < 0) continue;
    const auto polys = parity_coeff_polys(t, k);
    const long M = br.mMax;

    // Bessel weights are independent of h
    std::vector<Real> wt((size_t)M + 1, Real(prec, 0L));
    std::vector<bool> live((size_t)M + 1, false);
    for (long m = 0; m <= M; ++m) {
      mpq_class amb = br.besselA - m * br.besselB;
      amb.canonicalize();
      if (sgn(amb) <= 0) continue;
      const Real ambr(prec, amb);
      const Real x = pi * pl_sqrt(ambr * n24r) / (6 * k);
      wt[(size_t)m] = pl_pow(ambr, Real(prec, mpq_class(3, 4))) *
                      bessel_i(mpq_class(3, 2), x);
      live[(size_t)m] = true;
    }

    std::vector<Complex> zeta((size_t)k);
    for (long j = 0; j < k; ++j) zeta[(size_t)j] = unit_phase(frac(j, k), prec);

    Complex sum(Real(prec, 0L), Real(prec, 0L));
    for (long h = 0; h < std::max(k, 1L); ++h) {
      if (k > 1 && h == 0) continue;
      if (std::gcd(h, k) != 1) continue;
      const long H = (k - inv_mod(h, k)) % k;
      mpq_class ang = parity_phase_exponent(t, h, k);
      ang -= fracz(mpz_class(2) * n * h, mpz_class(k));
      ang.canonicalize();
      const Complex phase(cos_pi_rational(ang, prec), sin_pi_rational(ang, prec));
      Complex msum(Real(prec, 0L), Real(prec, 0L));
      for (long m = 0; m <= M; ++m) {
        if (!live[(size_t)m]) continue;
        msum = msum + wt[(size_t)m] * eval_at_power(polys[(size_t)m], H, zeta, k, prec);
      }
      sum = sum + phase * msum;
    }
    const Real front =
        pl_pow(Real(prec, 2L), Real(prec, frac(br.log2Scale, 2))) * (2 * pi) / k;
    kterm[(size_t)k] = front * sum;
  }

  Complex total(Real(prec, 0L), Real(prec, 0L));
  for (long k = 1; k <= kMax; ++k) total = total + kterm[(size_t)k];
  require_small_imag(total, "signed t-hook expansion");
  return total.re / pl_pow(n24r, Real(prec, mpq_class(3, 4)));
}

mpz_class hook_parity_series_value(long t, long n) {
  if (t < 1 || n < 0) throw std::invalid_argument("need t >= 1, n >= 0");
  return hook_parity_series((int)t, (size_t)n + 1).coeff_or_zero((size_t)n);
}

Real hook_parity_main_term(long t, long n, int digits) {
  if (t < 1 || n < 1) throw std::invalid_argument("need t, n >= 1");
  const long prec = bits_for_digits((unsigned)digits);
  long s = 0, odd = t;
  while (odd % 2 == 0) {
    odd /= 2;
    ++s;
  }
  const long k = 1L << (s + 1);
  const ParityBranch br = parity_branch(t, k);
  const Real pi = const_pi(prec);
  const mpz_class n24 = 24 * mpz_class(n) - 1;
  const Real n24r(prec, n24);

  Complex hsum(Real(prec, 0L), Real(prec, 0L));
  for (long h = 1; h < k; h += 2) {
    mpq_class ang = parity_phase_exponent(t, h, k);
    ang -= fracz(mpz_class(2) * n * h, mpz_class(k));
    ang.canonicalize();
    hsum = hsum + Complex(cos_pi_rational(ang, prec), sin_pi_rational(ang, prec));
  }
  require_small_imag(hsum, "dominant-level phase sum");

  const Real ambr(prec, br.besselA);
  const Real x = pi * pl_sqrt(ambr * n24r) / (6 * k);
  const Real scale = pl_pow(Real(prec, 2L), Real(prec, frac(br.log2Scale, 2)));
  return scale * (2 * pi) / k * pl_pow(ambr / n24r, Real(prec, mpq_class(3, 4))) *
         bessel_i(mpq_class(3, 2), x) * hsum.re;
}

Real parity_split_even(long t, long n, int digits) {
  const long prec = bits_for_digits((unsigned)digits);
  const mpz_class p = partition_numbers((size_t)n)[(size_t)n];
  const mpz_class A = hook_parity_series_value(t, n);
  return Real(prec, mpz_class(p + A)) / Real(prec, mpz_class(2 * p));
}

Real rademacher_kloosterman(long k, long n, int digits) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  const long prec = bits_for_digits((unsigned)digits);
  Complex acc(Real(prec, 0L), Real(prec, 0L));
  for (long h = 0; h < std::max(k, 1L); ++h) {
    if (k > 1 && h == 0) continue;
    if (std::gcd(h, k) != 1) continue;
    mpq_class ang = dedekind_sum_fast(h, k);
    ang -= fracz(mpz_class(2) * n * h, mpz_class(k));
    ang.canonicalize();
    acc = acc + Complex(cos_pi_rational(ang, prec), sin_pi_rational(ang, prec));
  }
  require_small_imag(acc, "weight-1/2 Kloosterman sum");
  return acc.re;
}

Real quadratic_kloosterman(long k, long n, int digits) {
  if (k < 1) throw std::invalid_argument("need k >= 1");
  const long prec = bits_for_digits((unsigned)digits);
  const long m = 24 * k;
  long target = (1 - 24 * (n % m)) % m;
  if (target < 0) target += m;
  Complex acc(Real(prec, 0L), Real(prec, 0L));
  for (long x = 0; x < m; ++x) {
    if ((x * x) % m != target) continue;
    const int chi = kronecker(12, x);
    if (chi == 0) continue;
    acc = acc + Real(prec, (long)chi) * unit_phase(frac(x, 12 * k), prec);
  }
  acc = pl_sqrt(Real(prec, frac(k, 12))) * acc;
  require_small_imag(acc, "quadratic-congruence Kloosterman sum");
  return acc.re / 2;
}

Real partition_rademacher_raw(long n, long kMax, int digits) {
  if (n < 1 || kMax < 1) throw std::invalid_argument("need n, kMax >= 1");
  const long prec = bits_for_digits((unsigned)digits);
  const Real pi = const_pi(prec);
  const mpz_class n24 = 24 * mpz_class(n) - 1;
  const Real n24r(prec, n24);
  const Real sq = pl_sqrt(n24r);
  Real acc(prec, 0L);
  for (long k = 1; k <= kMax; ++k) {
    const Real Kk = rademacher_kloosterman(k, n, digits);
    const Real x = pi * sq / (6 * k);
    acc += (Kk / k) * bessel_i(mpq_class(3, 2), x);
  }
  return (2 * pi) * acc / pl_pow(n24r, Real(prec, mpq_class(3, 4)));
}

mpz_class partition_rademacher(long n, long kMax, int digits) {
  const Rounded r = round_to_integer(partition_rademacher_raw(n, kMax, digits));
  if (!(r.distance < 0.25))
    throw std::runtime_error("series value too far from an integer to round");
  return r.value;
}

long hook_congruence_indicator(long a, long b, long t, long n) {
  const mpz_class v = indicator_argument(a, b, t, n);
  return (v % b == 0) ? b - 1 : -1;
}

Complex hook_kloosterman(long a, long b, long t, long n, int digits) {
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("need odd b >= 3");
  const long prec = bits_for_digits((unsigned)digits);
  Complex acc(Real(prec, 0L), Real(prec, 0L));
  for (long h = 1; h < b; ++h) {
    mpq_class ang = dedekind_sum_fast(h, b);
    ang -= t * dedekind_sum_fast(t * h, b);
    ang += fracz(mpz_class(2) * ((mpz_class(a) * t - n) * h), mpz_class(b));
    ang.canonicalize();
    acc = acc + Complex(cos_pi_rational(ang, prec), sin_pi_rational(ang, prec));
  }
  return acc;
}

Complex hook_kloosterman_closed(long a, long b, long t, long n, int digits) {
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("need odd b >= 3");
  const long prec = bits_for_digits((unsigned)digits);
  const mpz_class v = indicator_argument(a, b, t, n);
  if (t % 2 != 0) {
    const long I = (v % b == 0) ? b - 1 : -1;
    const long e = ((1 - t) * (b - 1)) / 4;
    const int sign = (((e % 2) + 2) % 2 == 0) ? 1 : -1;
    const int kr = kronecker(t, b);
    return Complex(Real(prec, (long)(I * sign * kr)), Real(prec, 0L));
  }
  mpq_class ex((1 - t) * (b - 1), 4);
  ex.canonicalize();
  if (b % 4 == 3) ex += frac(1, 2);
  const int kr = kronecker(v, b);
  const Real amp = pl_sqrt(Real(prec, b)) * (long)kr;
  return amp * Complex(cos_pi_rational(ex, prec), sin_pi_rational(ex, prec));
}

Complex hook_residue_coefficient(long t, long a, long b, long n, int digits) {
  if (b < 3 || b % 2 == 0) throw std::invalid_argument("need odd b >= 3");
  const long prec = bits_for_digits((unsigned)digits);
  mpq_class c(1, b);
  c.canonicalize();
  if (t % b != 0) {
    const mpz_class v = indicator_argument(a, b, t, n);
    if (t % 2 != 0) {
      const long I = (v % b == 0) ? b - 1 : -1;
      const long e = ((1 - t) * (b - 1)) / 4;
      const int sign = (((e % 2) + 2) % 2 == 0) ? 1 : -1;
      const int kr = kronecker(t, b);
      mpz_class bp;
      mpz_ui_pow_ui(bp.get_mpz_t(), (unsigned long)b, (unsigned long)((t + 1) / 2));
      c += fracz(mpz_class((long)(sign * kr) * I), bp);
    } else {
      mpq_class ex((1 - t) * (b - 1), 4);
      ex.canonicalize();
      if (b % 4 == 3) ex += frac(1, 2);
      if (ex.get_den() != 1)
        throw std::logic_error("residue coefficient phase is not real");
      const int sign = (((ex.get_num() % 2) + 2) % 2 == 0) ? 1 : -1;
      const int kr = kronecker(v, b);
      mpz_class bp;
      mpz_ui_pow_ui(bp.get_mpz_t(), (unsigned long)b, (unsigned long)(t / 2));
      c += fracz(mpz_class((long)(sign * kr)), bp);
    }
    c.canonicalize();
  }
  return Complex(Real(prec, c), Real(prec, 0L));
}

Real hook_residue_main_term(long t, long a, long b, long n, int digits) {
  const long prec = bits_for_digits((unsigned)digits);
  const Complex c = hook_residue_coefficient(t, a, b, n, digits);
  const Real pi = const_pi(prec);
  const Real grow = pl_exp(pi * pl_sqrt(Real(prec, frac(2 * n, 3))));
  return c.re * grow / (pl_sqrt(Real(prec, 3L)) * (4 * n));
}

mpq_class betti_limit_density(long a, long b) {
  if (b < 1) throw std::invalid_argument("need b >= 1");
  if (b % 2 == 1) return frac(1, b);
  return (((a % 2) + 2) % 2 == 0) ? frac(2, b) : mpq_class(0);
}

}  // namespace partitionlab
