#include "partitionlab/effective.hpp"

#include <algorithm>
#include <cmath>
#include <map>
#include <mutex>
#include <set>
#include <stdexcept>

#include "partitionlab/qseries.hpp"
#include "partitionlab/special.hpp"

namespace partitionlab {

namespace {

Real at_prec(long prec, const Real& a) {
  Real r(prec);
  mpfr_set(r.raw(), a.raw(), MPFR_RNDN);
  return r;
}

Complex at_prec(long prec, const Complex& z) {
  return Complex(at_prec(prec, z.re), at_prec(prec, z.im));
}

long work_bits(long digits) { return bits_for_digits((unsigned)(digits + 12)); }

double arg_angle(const Complex& w) {
  return std::atan2(std::fabs(w.im.to_double()), w.re.to_double());
}

mpq_class abs_q(const mpq_class& q) { return q < 0 ? mpq_class(-q) : q; }

// full-line integral of (1+t^2)^(-m/2): sqrt(pi) Gamma((m-1)/2) / Gamma(m/2)
Real line_power_integral(unsigned m, long prec) {
  Real half(prec, mpq_class(1, 2));
  return pl_sqrt(const_pi(prec)) * pl_gamma(Real(prec, (long)m - 1) * half) /
         pl_gamma(Real(prec, (long)m) * half);
}

}  // namespace

Real bernoulli_poly_max(unsigned n, long prec) {
  if (n < 2) throw std::domain_error("order >= 2 required");
  Real num = pl_zeta(Real(prec, (long)n)) * Real(prec, factorial(n)) * 2;
  return num / pl_pow_si(const_pi(prec) * 2, (long)n);
}

// ---------------------------------------------------------------------------
// kernels
// ---------------------------------------------------------------------------

EmFunctionSpec fermi_kernel() {
  EmFunctionSpec s;
  s.decay = EmDecay::Rapid;
  s.lowestIndex = 0;
  s.decayRate = 1;
  s.coeff = [](long n) -> mpq_class {
    if (n < 0) return 0;
    return euler_half_coeff((unsigned)n) / mpq_class(factorial((unsigned)n));
  };
  s.integralConst = [](long prec) { return const_log2(prec); };
  s.eval = [](const Complex& w) {
    Complex e = pl_exp(-w);
    Real one(w.prec(), 1L);
    return e / (Complex(one) + e);
  };
  // Poles at i pi (2j+1) with residue -1; the expansion
  //   f^(m)(w) = -m! sum_j [(w - i(2j+1)pi)^{-m-1} + (w + i(2j+1)pi)^{-m-1}]
  // is exact, so the ray integral is at most
  //   m! I_{m+1} 2 (1 - 2^-m) zeta(m) / (pi cos theta)^m.
  s.rayIntegralBound = [](unsigned order, double theta, long prec) -> Real {
    if (order < 2) throw std::domain_error("order >= 2 required");
    if (!(theta < M_PI / 2 - 1e-9))
      throw std::domain_error("ray angle must stay below pi/2");
    Real I = line_power_integral(order + 1, prec);
    Real zt = pl_zeta(Real(prec, (long)order));
    Real twoPart = Real(prec, 1L) - pl_pow_si(Real(prec, 2L), -(long)order);
    Real denom = pl_pow_si(const_pi(prec) * pl_cos(Real(prec, theta)), (long)order);
    return Real(prec, factorial(order)) * I * zt * twoPart * 2 / denom;
  };
  s.defaultOrder = 6;
  s.maxAbsW = 1.5;
  s.name = "fermi";
  return s;
}

EmFunctionSpec bose_kernel(int r, int t) {
  const bool ok = (r == 1 && t == 4) || (r == 3 && t == 4) || (r == 1 && t == 1);
  if (!ok) throw std::domain_error("no pinned ray constants for this (r, t)");
  EmFunctionSpec s;
  s.decay = EmDecay::Sufficient;
  s.lowestIndex = -2;
  s.decayRate = mpq_class(r, t);
  mpq_class shifted(t - r, t);  // 1 - r/t
  s.coeff = [shifted](long n) -> mpq_class {
    if (n < -2) return 0;
    unsigned m = (unsigned)(n + 2);
    return bernoulli_poly(m, shifted) / mpq_class(factorial(m));
  };
  mpq_class rate = s.decayRate;
  s.integralConst = [rate](long prec) {
    Real a(prec, rate);
    Real halfMinus = Real(prec, mpq_class(1, 2) - rate);
    return pl_lngamma(a) - pl_log(const_pi(prec) * 2) / 2 + halfMinus * pl_log(a);
  };
  s.eval = [rate](const Complex& w) {
    long p = w.prec();
    Complex num = pl_exp(-(Real(p, rate) * w));
    Complex den = w * (Complex(Real(p, 1L)) - pl_exp(-w));
    return num / den;
  };
  const long pinOrder = (t == 1) ? 8 : 4;
  const double maxSlope = (t == 1) ? 10.0 : 15.0;
  const long pinJ = (t == 1) ? 2208140 : (r == 1 ? 20000 : 40000);
  s.rayIntegralBound = [pinOrder, maxSlope, pinJ](unsigned order, double theta,
                                                  long prec) -> Real {
    if ((long)order != pinOrder)
      throw std::domain_error("ray constant pinned at a single order");
    if (!(std::tan(theta) <= maxSlope * (1 + 1e-9)))
      throw std::domain_error("ray angle outside the validated cone");
    return Real(prec, pinJ);
  };
  s.defaultOrder = (unsigned)pinOrder;
  s.maxAbsW = 2.0;
  s.name = "bose(" + std::to_string(r) + "," + std::to_string(t) + ")";
  return s;
}

EmFunctionSpec poly_exp_kernel() {
  EmFunctionSpec s;
  s.decay = EmDecay::Sufficient;
  s.lowestIndex = -2;
  s.decayRate = 1;
  s.coeff = [](long n) -> mpq_class {
    if (n == -2) return 1;
    if (n == -1) return 0;
    if (n < -2) return 0;
    mpq_class c(n + 1);
    c /= mpq_class(factorial((unsigned)(n + 2)));
    return (n % 2 == 0) ? mpq_class(-c) : c;
  };
  s.integralConst = [](long prec) { return Real(prec, -1L); };
  s.eval = [](const Complex& w) {
    long p = w.prec();
    Complex one(Real(p, 1L));
    return (one + w) * pl_exp(-w) / (w * w);
  };
  // ((1+w)e^{-w} - 1)/w^2 is entire and ~ -w^{-2} at infinity; a generous
  // numeric cap for the order-4 ray integral inside the slope-15 cone.
  s.rayIntegralBound = [](unsigned order, double theta, long prec) -> Real {
    if (order != 4) throw std::domain_error("ray constant pinned at order 4");
    if (!(std::tan(theta) <= 15.0 * (1 + 1e-9)))
      throw std::domain_error("ray angle outside the validated cone");
    return Real(prec, 200L);
  };
  s.defaultOrder = 4;
  s.maxAbsW = 2.0;
  s.name = "poly-exp";
  return s;
}

// ---------------------------------------------------------------------------
// engine
// ---------------------------------------------------------------------------

EmApproximation em_approximate(const EmFunctionSpec& spec, const mpq_class& a,
                               const Complex& w, unsigned N, long digits) {
  if (!(a > 0) || a > 1) throw std::domain_error("need 0 < a <= 1");
  if (!(w.re.sign() > 0)) throw std::domain_error("need Re w > 0");
  if (N < 1) throw std::domain_error("need N >= 1");
  const long wp = work_bits(digits);
  const Complex W = at_prec(wp, w);
  const Real absW = pl_abs(W);
  if (!(absW.to_double() <= spec.maxAbsW))
    throw std::domain_error("|w| outside the tail convergence range");

  Complex value(Real(wp, 0L), Real(wp, 0L));
  const mpq_class cRes = spec.coeff(-1);

  if (spec.decay == EmDecay::Sufficient) {
    for (long n = spec.lowestIndex; n <= -2; ++n) {
      mpq_class cn = spec.coeff(n);
      if (cn == 0) continue;
      Real hz = hurwitz_zeta(Real(wp, -n), Real(wp, a));
      value = value + (Real(wp, cn) * hz) * pl_pow_si(W, n);
    }
    Complex invW = pl_inv(W);
    value = value + spec.integralConst(wp) * invW;
    if (cRes != 0) {
      Complex logAW = pl_log(Real(wp, spec.decayRate) * W);
      Real shift = const_euler(wp) + pl_digamma(Real(wp, a));
      Complex bracket = logAW + Complex(shift);
      value = value - (Real(wp, cRes) * invW) * bracket;
    }
  } else {
    if (spec.lowestIndex != 0)
      throw std::domain_error("rapid decay requires lowestIndex == 0");
    value = value + spec.integralConst(wp) * pl_inv(W);
  }

  // - sum_{n=0}^{N-1} c_n B_{n+1}(a)/(n+1) w^n
  Complex Wn(Real(wp, 1L));
  for (unsigned n = 0; n < N; ++n) {
    mpq_class cn = spec.coeff((long)n);
    if (cn != 0) {
      mpq_class coeff = cn * bernoulli_poly(n + 1, a);
      coeff /= (long)(n + 1);
      value = value - Real(wp, coeff) * Wn;
    }
    Wn = Wn * W;
  }

  // derivative-remainder part of the bound
  const double theta = arg_angle(W);
  Real J = spec.rayIntegralBound(N + 1, theta, wp);
  Real M = bernoulli_poly_max(N + 1, wp);
  Real bound = M * J / Real(wp, factorial(N + 1)) * pl_pow_si(absW, (long)N);

  // tail: sum_{k>=N} |b_k| (1 + k!/(10(k-N)!)) |w|^k.  Coefficient patterns
  // carry period-2 zeros, so convergence is certified on blocks of three
  // consecutive terms: two successive block halvings plus block smallness
  // admit a measured-ratio geometric remainder of twice the last block.
  Real tail(wp, 0L);
  Real powW = pl_pow_si(absW, (long)N);
  Real blockCur(wp, 0L), blockPrev(wp, 0L);
  int inBlock = 0, goodBlocks = 0;
  bool haveBlock = false, certified = false;
  const Real tiny = pl_pow_si(Real(wp, 10L), -(digits + 15));
  for (unsigned k = N; k < N + 900; ++k) {
    mpq_class bk = spec.coeff((long)k);
    if (spec.decay == EmDecay::Sufficient && cRes != 0) {
      mpq_class corr = cRes;
      mpq_class An(-spec.decayRate);
      for (unsigned j = 0; j <= k; ++j) corr *= An;
      corr /= mpq_class(factorial(k + 1));
      bk -= corr;
    }
    mpq_class over(1);
    {
      mpz_class fall = 1;
      for (unsigned j = k - N + 1; j <= k; ++j) fall *= j;
      over += mpq_class(fall, 10);
    }
    Real term = Real(wp, abs_q(bk) * over) * powW;
    tail = tail + term;
    blockCur = blockCur + term;
    if (++inBlock == 3) {
      if (haveBlock && blockPrev.sign() > 0 && blockCur < blockPrev / 2)
        ++goodBlocks;
      else
        goodBlocks = 0;
      if (goodBlocks >= 2 && blockCur < tiny * (Real(wp, 1L) + tail + bound)) {
        tail = tail + blockCur * 2;
        certified = true;
        break;
      }
      blockPrev = blockCur;
      blockCur = Real(wp, 0L);
      inBlock = 0;
      haveBlock = true;
    }
    powW = powW * absW;
  }
  if (!certified) throw std::runtime_error("em tail failed to converge");

  EmApproximation out;
  out.value = at_prec(bits_for_digits((unsigned)digits), value);
  out.bound = at_prec(bits_for_digits((unsigned)digits), bound + tail);
  return out;
}

Complex em_direct_sum(const EmFunctionSpec& spec, const mpq_class& a,
                      const Complex& w, long digits) {
  if (!(w.re.sign() > 0)) throw std::domain_error("need Re w > 0");
  const long wp = work_bits(digits);
  const Complex W = at_prec(wp, w);
  Complex sum(Real(wp, 0L), Real(wp, 0L));
  const Real eps = pl_pow_si(Real(wp, 10L), -(digits + 10));
  int settled = 0;
  for (long m = 0; m < 40000000; ++m) {
    Complex arg = (Real(wp, a + m)) * W;
    Complex term = spec.eval(arg);
    sum = sum + term;
    if (pl_abs(term) < eps * (Real(wp, 1L) + pl_abs(sum))) {
      if (++settled >= 3) return at_prec(bits_for_digits((unsigned)digits), sum);
    } else {
      settled = 0;
    }
  }
  throw std::runtime_error("direct sum failed to converge");
}

// ---------------------------------------------------------------------------
// generating-function logarithms
// ---------------------------------------------------------------------------

Complex bias_lambert_direct(int r, int t, const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  if (!(Z.re.sign() > 0)) throw std::domain_error("need Re z > 0");
  Complex base = pl_exp(-(Real(wp, (long)t) * Z));
  Complex cur = pl_exp(-(Real(wp, (long)r) * Z));  // e^{-(kt+r)z} at k=0
  Complex sum(Real(wp, 0L), Real(wp, 0L));
  const Real eps = pl_pow_si(Real(wp, 10L), -(digits + 10));
  Complex one(Real(wp, 1L));
  for (long k = 0; k < 40000000; ++k) {
    sum = sum + cur / (one + cur);
    if (pl_abs(cur) < eps) return at_prec(bits_for_digits((unsigned)digits), sum);
    cur = cur * base;
  }
  throw std::runtime_error("lambert sum failed to converge");
}

Complex bias_lambert_main(int r, int t, const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  mpq_class a(r, t);
  Complex out = const_log2(wp) * pl_inv(Real(wp, (long)t) * Z);
  out = out - Complex(Real(wp, bernoulli_poly(1, a) / 2));
  mpq_class c2 = mpq_class(t, 8) * bernoulli_poly(2, a);
  out = out + Real(wp, c2) * Z;
  mpq_class c4 = mpq_class(mpz_class(t) * t * t, 192) * bernoulli_poly(4, a);
  out = out - Real(wp, c4) * (Z * Z * Z);
  return at_prec(bits_for_digits((unsigned)digits), out);
}

Real bias_lambert_bound(int r, int t, const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex W = Real(wp, (long)t) * at_prec(wp, z);
  EmFunctionSpec spec = fermi_kernel();
  // bound-only evaluation: reuse the engine at the matching (a, N)
  EmApproximation ap = em_approximate(spec, mpq_class(r, t), W, 5, digits);
  return ap.bound;
}

Complex distinct_log_direct(const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  if (!(Z.re.sign() > 0)) throw std::domain_error("need Re z > 0");
  Complex base = pl_exp(-Z);
  Complex cur = base;
  Complex sum(Real(wp, 0L), Real(wp, 0L));
  Complex one(Real(wp, 1L));
  const Real eps = pl_pow_si(Real(wp, 10L), -(digits + 10));
  for (long k = 1; k < 40000000; ++k) {
    sum = sum + pl_log(one + cur);
    if (pl_abs(cur) < eps) return at_prec(bits_for_digits((unsigned)digits), sum);
    cur = cur * base;
  }
  throw std::runtime_error("product log failed to converge");
}

Complex distinct_log_main(const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  Real pi = const_pi(wp);
  Complex out = (pi * pi / 12) * pl_inv(Z);
  out = out - Complex(const_log2(wp) / 2);
  out = out + Real(wp, mpq_class(1, 24)) * Z;
  return at_prec(bits_for_digits((unsigned)digits), out);
}

Complex poch_log_direct(int r, int t, int eps, const Complex& z, long digits) {
  if (eps != 1 && eps != -1) throw std::domain_error("eps must be +-1");
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  if (!(Z.re.sign() > 0)) throw std::domain_error("need Re z > 0");
  Complex qr = pl_exp(-(Real(wp, (long)r) * Z));
  Complex qt = pl_exp(-(Real(wp, (long)t) * Z));
  Complex qrm = qr, qtm = qt;
  Complex sum(Real(wp, 0L), Real(wp, 0L));
  Complex one(Real(wp, 1L));
  const Real cut = pl_pow_si(Real(wp, 10L), -(digits + 10));
  int sign = 1;
  for (long m = 1; m < 40000000; ++m) {
    sign *= eps;
    Complex term = qrm / (Real(wp, (long)m) * (one - qtm));
    sum = (sign > 0) ? sum + term : sum - term;
    if (pl_abs(qrm) < cut) return at_prec(bits_for_digits((unsigned)digits), sum);
    qrm = qrm * qr;
    qtm = qtm * qt;
  }
  throw std::runtime_error("lambert series failed to converge");
}

Complex poch_log_main(int r, int t, int eps, const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  EmFunctionSpec spec = bose_kernel(r, t);
  const unsigned N = spec.defaultOrder - 1;
  Complex tz = Real(wp, (long)t) * Z;
  if (eps == 1) {
    EmApproximation ap = em_approximate(spec, 1, tz, N, digits);
    return at_prec(bits_for_digits((unsigned)digits), tz * ap.value);
  }
  Complex W2 = Real(wp, 2L) * tz;
  EmApproximation whole = em_approximate(spec, 1, W2, N, digits);
  EmApproximation halfs = em_approximate(spec, mpq_class(1, 2), W2, N, digits);
  return at_prec(bits_for_digits((unsigned)digits),
                 tz * (whole.value - halfs.value));
}

Real poch_log_bound(int r, int t, int eps, const Complex& z, long digits) {
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  EmFunctionSpec spec = bose_kernel(r, t);
  const unsigned N = spec.defaultOrder - 1;
  Complex tz = Real(wp, (long)t) * Z;
  if (eps == 1) {
    EmApproximation ap = em_approximate(spec, 1, tz, N, digits);
    return pl_abs(tz) * ap.bound;
  }
  Complex W2 = Real(wp, 2L) * tz;
  EmApproximation whole = em_approximate(spec, 1, W2, N, digits);
  EmApproximation halfs = em_approximate(spec, mpq_class(1, 2), W2, N, digits);
  return pl_abs(tz) * (whole.bound + halfs.bound);
}

Complex parity_log_direct(const Complex& z, int sign, long digits) {
  if (sign == 1)
    return poch_log_direct(1, 4, 1, z, digits) +
           poch_log_direct(3, 4, -1, z, digits);
  if (sign == -1)
    return poch_log_direct(1, 4, -1, z, digits) +
           poch_log_direct(3, 4, 1, z, digits);
  throw std::domain_error("sign must be +-1");
}

Complex parity_log_main(const Complex& z, int sign, long digits) {
  if (sign != 1 && sign != -1) throw std::domain_error("sign must be +-1");
  const long wp = work_bits(digits);
  const Complex Z = at_prec(wp, z);
  Real pi = const_pi(wp);
  Complex out = (pi * pi / 48) * pl_inv(Z);
  Complex logZ = pl_log(Z);
  Real quarter(wp, mpq_class(1, 4));
  Real beta = pl_lngamma(Real(wp, mpq_class(sign == 1 ? 1 : 3, 4))) -
              pl_log(pi * 2) / 2;
  Real c = beta + Real(wp, (long)(-sign)) * const_log2(wp) / 4;
  if (sign == 1)
    out = out - quarter * logZ;
  else
    out = out + quarter * logZ;
  out = out + Complex(c);
  out = out + Real(wp, mpq_class(1, 24)) * Z;
  return at_prec(bits_for_digits((unsigned)digits), out);
}

// ---------------------------------------------------------------------------
// arc reports
// ---------------------------------------------------------------------------

std::vector<std::string> arc_regions() {
  return {"bias-L-major",     "bias-L-major-pinned", "bias-L-minor",
          "bias-xi-major",    "bias-xi-minor",       "poch-major",
          "poch-major-alt",   "parity-major-plus",   "parity-major-minus",
          "parity-minor"};
}

namespace {

struct GridPoint {
  double x, y;
};

std::vector<double> log_spaced(double lo, double hi, unsigned n) {
  std::vector<double> v;
  if (n == 1) {
    v.push_back(lo);
    return v;
  }
  for (unsigned i = 0; i < n; ++i)
    v.push_back(lo * std::pow(hi / lo, (double)i / (n - 1)));
  return v;
}

std::vector<double> lin_spaced(double lo, double hi, unsigned n) {
  std::vector<double> v;
  if (n == 1) {
    v.push_back(lo);
    return v;
  }
  for (unsigned i = 0; i < n; ++i)
    v.push_back(lo + (hi - lo) * (double)i / (n - 1));
  return v;
}

}  // namespace

ArcBoundReport arc_bound_check(const std::string& region, int r, int t,
                               unsigned gridA, unsigned gridB, long digits) {
  if (gridA == 0) gridA = 8;
  if (gridB == 0) gridB = 16;
  if (digits <= 0) digits = 30;
  ArcBoundReport rep;
  rep.region = region;
  rep.r = r;
  rep.t = t;
  rep.gridA = gridA;
  rep.gridB = gridB;
  rep.digits = digits;

  const bool isL = region == "bias-L-major" || region == "bias-L-major-pinned" ||
                   region == "bias-L-minor";
  if (isL || region == "bias-xi-major" || region == "bias-xi-minor") {
    if (t < 2) throw std::domain_error("need t >= 2");
    if (isL && (r < 1 || r > t)) throw std::domain_error("need 1 <= r <= t");
  }

  std::vector<GridPoint> pts;
  const double etaCap = M_PI / (40.0 * t) * 0.9999;
  if (region == "bias-L-major" || region == "bias-xi-major") {
    for (double eta : log_spaced(M_PI / 800, etaCap, gridA))
      for (double k : lin_spaced(0.0, 9.99, gridB)) pts.push_back({eta, k * eta});
  } else if (region == "bias-L-major-pinned") {
    for (double eta : log_spaced(M_PI / 800, etaCap, gridA))
      for (double k : lin_spaced(0.0, 3.0, gridB)) pts.push_back({eta, k * eta});
  } else if (region == "bias-L-minor" || region == "bias-xi-minor") {
    for (double eta : log_spaced(M_PI / 300, etaCap, gridA))
      for (double y : lin_spaced(10 * eta * 1.0001, M_PI * 0.9999, gridB))
        pts.push_back({eta, y});
  } else if (region == "poch-major" || region == "poch-major-alt" ||
             region == "parity-major-plus" || region == "parity-major-minus") {
    for (double x : log_spaced(M_PI / 1000, M_PI / 481, gridA))
      for (double k : lin_spaced(0.0, 14.99, gridB)) pts.push_back({x, k * x});
  } else if (region == "parity-minor") {
    for (double x : log_spaced(M_PI / 1000, M_PI / 481, gridA))
      for (double y : lin_spaced(15 * x, M_PI - 15 * x, gridB))
        pts.push_back({x, y});
  } else {
    throw std::domain_error("unknown arc region: " + region);
  }

  if (region == "poch-major" || region == "poch-major-alt") {
    const bool okRT = (r == 1 && t == 4) || (r == 3 && t == 4);
    if (!okRT) throw std::domain_error("poch regions require (r,t) in {(1,4),(3,4)}");
  }

  rep.samples.resize(pts.size());
  const long wp = work_bits(digits);
#pragma omp parallel for schedule(dynamic)
  for (size_t i = 0; i < pts.size(); ++i) {
    const double x = pts[i].x, y = pts[i].y;
    Complex z(Real(wp, x), Real(wp, y));
    double left = 0, bound = 0;
    if (region == "bias-L-major" || region == "bias-L-major-pinned") {
      Complex diff = bias_lambert_direct(r, t, z, digits) -
                     bias_lambert_main(r, t, z, digits);
      left = pl_abs(diff).to_double();
      if (region == "bias-L-major") {
        bound = bias_lambert_bound(r, t, z, digits).to_double();
      } else {
        double az = std::hypot(x, y);
        bound = 0.05 * std::pow((double)t, 5) * std::pow(az, 5);
      }
    } else if (region == "bias-L-minor") {
      left = pl_abs(bias_lambert_direct(r, t, z, digits)).to_double();
      bound = 1.0 / (x * x);
    } else if (region == "bias-xi-major") {
      Complex diff = distinct_log_direct(z, digits) - distinct_log_main(z, digits);
      left = pl_abs(diff).to_double();
      bound = 471.0 * std::pow(std::hypot(x, y), 8);
    } else if (region == "bias-xi-minor") {
      left = std::exp(distinct_log_direct(z, digits).re.to_double());
      bound = std::exp(41.0 / (50.0 * x));
    } else if (region == "poch-major" || region == "poch-major-alt") {
      int eps = (region == "poch-major") ? 1 : -1;
      Complex diff = poch_log_direct(r, t, eps, z, digits) -
                     poch_log_main(r, t, eps, z, digits);
      left = pl_abs(diff).to_double();
      bound = poch_log_bound(r, t, eps, z, digits).to_double();
    } else if (region == "parity-major-plus" || region == "parity-major-minus") {
      int sign = (region == "parity-major-plus") ? 1 : -1;
      Complex diff = parity_log_direct(z, sign, digits) -
                     parity_log_main(z, sign, digits);
      left = pl_abs(diff).to_double();
      double c = (sign == 1) ? 4033.0 : 2689.0;
      bound = c * std::pow(std::hypot(x, y), 4);
    } else {  // parity-minor
      left = std::exp(parity_log_direct(z, 1, digits).re.to_double());
      bound = std::exp(1.0 / (5.0 * x));
    }
    rep.samples[i] = {x, y, left, bound, bound - left};
  }

  rep.minMargin = rep.samples.empty() ? 0.0 : rep.samples[0].margin;
  for (const ArcSample& s : rep.samples) rep.minMargin = std::min(rep.minMargin, s.margin);
  rep.pass = !rep.samples.empty() && rep.minMargin >= 0;
  return rep;
}

// ---------------------------------------------------------------------------
// saddle integrals
// ---------------------------------------------------------------------------

namespace {

// Gauss-Legendre nodes/weights on (-1, 1), cached per (count, prec).
const std::vector<std::pair<Real, Real>>& gl_rule(unsigned k, long prec) {
  static std::map<std::pair<unsigned, long>, std::vector<std::pair<Real, Real>>>
      cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  auto key = std::make_pair(k, prec);
  auto it = cache.find(key);
  if (it != cache.end()) return it->second;
  std::vector<std::pair<Real, Real>> rule;
  for (unsigned i = 1; i <= k; ++i) {
    double seed = std::cos(M_PI * (i - 0.25) / (k + 0.5));
    Real xr(prec, seed);
    Real dp(prec, 0L);
    for (int iter = 0; iter < 60; ++iter) {
      // evaluate P_k and P_k' by recurrence
      Real p0(prec, 1L), p1 = xr;
      for (unsigned j = 2; j <= k; ++j) {
        Real p2 = (xr * p1 * (long)(2 * j - 1) - p0 * (long)(j - 1)) / (long)j;
        p0 = p1;
        p1 = p2;
      }
      dp = (xr * p1 - p0) * (long)k / (xr * xr - Real(prec, 1L));
      Real step = p1 / dp;
      xr = xr - step;
      if (pl_abs(step) < pl_pow_si(Real(prec, 2L), -(prec - 8))) break;
    }
    Real w = Real(prec, 2L) / ((Real(prec, 1L) - xr * xr) * dp * dp);
    rule.emplace_back(xr, w);
  }
  auto res = cache.emplace(key, std::move(rule));
  return res.first->second;
}

// (1/(2 pi)) Int_{-10 eta}^{10 eta} h(eta + iv) dv with h the saddle
// integrand z^{pw} exp(pi^2/(12 z) + np z); panel-doubled composite rule.
Complex saddle_line_integral(long pw, const mpq_class& np, long n, long digits) {
  const long wp = work_bits(digits + 10);
  const Real eta = const_pi(wp) / pl_sqrt(Real(wp, 12L * n));
  const Real vMax = eta * 10;
  const Real npr(wp, np);
  const Real pi2over12 = const_pi(wp) * const_pi(wp) / 12;
  auto integrand = [&](const Real& v) {
    Complex z(eta, v);
    Complex e = pi2over12 * pl_inv(z) + npr * z;
    Complex val = pl_exp(e);
    if (pw != 0) val = val * pl_pow_si(z, pw);
    return val;
  };
  const unsigned nodes = 24;
  Complex prev(Real(wp, 0L), Real(wp, 0L));
  const Real tol = pl_pow_si(Real(wp, 10L), -(digits + 4));
  for (unsigned panels = 8; panels <= 1024; panels *= 2) {
    Complex acc(Real(wp, 0L), Real(wp, 0L));
    const auto& rule = gl_rule(nodes, wp);
    for (unsigned p = 0; p < panels; ++p) {
      Real lo = -vMax + (vMax * 2) * (long)p / (long)panels;
      Real hi = -vMax + (vMax * 2) * (long)(p + 1) / (long)panels;
      Real mid = (lo + hi) / 2, half = (hi - lo) / 2;
      for (const auto& nw : rule)
        acc = acc + nw.second * integrand(mid + half * nw.first);
      // scale by panel half-width folded in after the loop
    }
    // every panel has the same half width
    acc = (vMax / (long)panels) * acc;
    if (panels > 8) {
      Real diff = pl_abs(acc - prev);
      if (diff < tol * (Real(wp, 1L) + pl_abs(acc)))
        return acc / Complex(const_pi(wp) * 2);
    }
    prev = acc;
  }
  throw std::runtime_error("saddle quadrature failed to converge");
}

}  // namespace

Real bessel_saddle_value(int s, long n, long digits) {
  const long wp = work_bits(digits);
  const Real c2 = const_pi(wp) * const_pi(wp) * 2 / Real(wp, 24 * n + 1);
  const mpq_class np(mpz_class(24 * n + 1), mpz_class(24));
  const Real x = const_pi(wp) * pl_sqrt(Real(wp, np / 3));
  Real bess = bessel_i(mpq_class(std::abs(s)), at_prec(wp, x));
  Real halfPow = pl_exp(pl_log(c2) * (long)s / 2);
  return at_prec(bits_for_digits((unsigned)digits),
                 halfPow * bess / pl_sqrt(Real(wp, 2L)));
}

Real contour_saddle_value(int s, long n, long digits) {
  const long wp = work_bits(digits);
  const mpq_class np(mpz_class(24 * n + 1), mpz_class(24));
  Complex val = saddle_line_integral(s - 1, np, n, digits);
  // (1/(2 pi sqrt 2 i)) Int ... dz with dz = i dv: the i cancels, leaving
  // the line integral over sqrt 2
  Real out = val.re / pl_sqrt(Real(wp, 2L));
  if (!(pl_abs(val.im) < pl_abs(val.re) * pl_pow_si(Real(wp, 10L), -(digits / 2))))
    throw std::runtime_error("saddle integral has a non-vanishing imaginary part");
  return at_prec(bits_for_digits((unsigned)digits), out);
}

Real contour_bessel_ihat(int nu, long n, long digits) {
  if (nu > -1) throw std::domain_error("need nu <= -1");
  const long wp = work_bits(digits);
  const mpq_class np(mpz_class(24 * n + 1), mpz_class(24));
  Complex val = saddle_line_integral(-nu - 1, np, n, digits);
  const Real c2 = const_pi(wp) * const_pi(wp) * 2 / Real(wp, 24 * n + 1);
  Real pref = pl_exp(pl_log(c2) * (long)nu / 2);
  if (!(pl_abs(val.im) < pl_abs(val.re) * pl_pow_si(Real(wp, 10L), -(digits / 2))))
    throw std::runtime_error("saddle integral has a non-vanishing imaginary part");
  return at_prec(bits_for_digits((unsigned)digits), pref * val.re);
}

Real bessel_ihat_gap_bound(int nu, long n, long digits) {
  if (nu > -1) throw std::domain_error("need nu <= -1");
  const long wp = work_bits(digits);
  const long m = -nu - 1;
  const mpq_class np(mpz_class(24 * n + 1), mpz_class(24));
  mpq_class integral = 0;
  mpz_class pow10 = 1;
  for (long j = m; j > 0; --j) pow10 *= 10;  // 10^m
  // sum_j C(m,j) 10^{m-j} j! / np^{j+1}
  mpq_class npq = np;
  for (long j = 0; j <= m; ++j) {
    mpq_class term(binomial((unsigned)m, (unsigned)j) * factorial((unsigned)j));
    mpz_class tp = 1;
    for (long i = 0; i < m - j; ++i) tp *= 10;
    term *= tp;
    mpq_class den = 1;
    for (long i = 0; i <= j; ++i) den *= npq;
    term /= den;
    integral += term;
  }
  const Real c2 = const_pi(wp) * const_pi(wp) * 2 / Real(wp, 24 * n + 1);
  Real pref = pl_exp(pl_log(c2) * (long)nu / 2);
  Real expo = pl_exp(const_pi(wp) * 3 / 4 * pl_sqrt(Real(wp, n) / 3));
  return at_prec(bits_for_digits((unsigned)digits),
                 pref * expo * Real(wp, integral) * 2);
}

// ---------------------------------------------------------------------------
// distinct-parts bias, theorem scale
// ---------------------------------------------------------------------------

Real bias_err_budget(int t, long n, long digits) {
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  const Real sqn = pl_sqrt(Real(wp, n));
  const Real mainExp = pl_exp(pi * pl_sqrt(Real(wp, n) / 3));
  // E1
  Real c1 = Real(wp, 3L);
  Real e1rate = pl_sqrt(c1) * 3 / (pi * 2) + pi / pl_sqrt(Real(wp, 12L));
  Real E1 = Real(wp, 9 * n) * pl_exp(e1rate * sqn);
  // E2
  Real n4 = pl_pow_si(Real(wp, n), 4);
  Real E2 = Real(wp, mpz_class("945285959087")) / (Real(wp, (long)t) * n4) * mainExp;
  // E3
  Real t5(wp, mpz_class(mpz_class(t) * t * t * t * t));
  Real E3 = Real(wp, 14381L) * t5 / pl_pow_si(Real(wp, n), 3) * mainExp;
  return at_prec(bits_for_digits((unsigned)digits), E1 + E2 + E3);
}

Real bias_effective_main(int r, int t, long n, long digits) {
  const long wp = work_bits(digits);
  mpq_class a(r, t);
  Real out = const_log2(wp) / (long)t * bessel_saddle_value(0, n, digits + 8);
  mpq_class a1 = -bernoulli_poly(1, a) / 2;
  mpq_class a2 = mpq_class(t, 8) * bernoulli_poly(2, a);
  mpq_class a4 = -mpq_class(mpz_class(t) * t * t, 192) * bernoulli_poly(4, a);
  out = out + Real(wp, a1) * at_prec(wp, bessel_saddle_value(1, n, digits + 8));
  out = out + Real(wp, a2) * at_prec(wp, bessel_saddle_value(2, n, digits + 8));
  out = out + Real(wp, a4) * at_prec(wp, bessel_saddle_value(4, n, digits + 8));
  return at_prec(bits_for_digits((unsigned)digits), out);
}

Real bias_smooth_main(int r, int t, long n, long digits) {
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  Real front = pl_pow(Real(wp, 3L), Real(wp, mpq_class(1, 4))) *
               pl_exp(pi * pl_sqrt(Real(wp, n) / 3));
  front = front / (pi * 2 * (long)t * pl_pow(Real(wp, n), Real(wp, mpq_class(1, 4))));
  Real corr = pl_sqrt(Real(wp, 3L)) * const_log2(wp) / (pi * 8);
  corr = corr - pi / (pl_sqrt(Real(wp, 3L)) * 4) * Real(wp, mpq_class(2 * r - t, 2));
  Real inner = const_log2(wp) + corr / pl_sqrt(Real(wp, n));
  return at_prec(bits_for_digits((unsigned)digits), front * inner);
}

Real bias_q_ratio(int r, long n, long digits) {
  const long wp = work_bits(digits);
  mpz_class d = distinct_bias_value(r, 3, (size_t)n);
  return at_prec(bits_for_digits((unsigned)digits),
                 Real(wp, d) / at_prec(wp, bias_smooth_main(r, 3, n, digits + 8)));
}

WrightEstimate wright_bias_estimate(int r, int t, long n, long digits) {
  if (t < 2 || r < 1 || r > t) throw std::domain_error("need 1 <= r <= t, t >= 2");
  if (3 * n <= 400L * t * t)
    throw std::domain_error("need n > 400 t^2 / 3");
  WrightEstimate est;
  est.n = n;
  est.r = r;
  est.t = t;
  est.main = bias_effective_main(r, t, n, digits);
  const long wp = work_bits(digits);
  mpq_class a(r, t);
  mpq_class a1 = -bernoulli_poly(1, a) / 2;
  mpq_class a2 = mpq_class(t, 8) * bernoulli_poly(2, a);
  mpq_class a4 = -mpq_class(mpz_class(t) * t * t, 192) * bernoulli_poly(4, a);
  est.terms.emplace_back("V0", const_log2(wp) / (long)t *
                                   at_prec(wp, bessel_saddle_value(0, n, digits)));
  est.terms.emplace_back("V1", Real(wp, a1) *
                                   at_prec(wp, bessel_saddle_value(1, n, digits)));
  est.terms.emplace_back("V2", Real(wp, a2) *
                                   at_prec(wp, bessel_saddle_value(2, n, digits)));
  est.terms.emplace_back("V4", Real(wp, a4) *
                                   at_prec(wp, bessel_saddle_value(4, n, digits)));
  est.budget = bias_err_budget(t, n, digits);
  if (n <= 20000) {
    est.hasExact = true;
    est.exact = distinct_bias_value(r, t, (size_t)n);
    est.gap = pl_abs(Real(wp, est.exact) - at_prec(wp, est.main));
  } else {
    est.gap = Real(bits_for_digits((unsigned)digits), 0L);
  }
  return est;
}

std::vector<std::array<long, 3>> bias_inequality_verify(int tMax, long nMax,
                                                        long nMin) {
  if (tMax < 2 || tMax > 12) throw std::domain_error("need 2 <= tMax <= 12");
  std::set<std::array<long, 3>> found;
  for (int t = 2; t <= tMax; ++t) {
    std::vector<std::vector<mpz_class>> cols;
    for (int r = 1; r <= t; ++r) {
      Series<mpz_class> s = distinct_bias_series(r, t, (size_t)nMax + 1);
      cols.push_back(s.c);
    }
    for (int r = 1; r <= t; ++r)
      for (int s = r + 1; s <= t; ++s)
        for (long n = nMin; n <= nMax; ++n)
          if (cols[r - 1][n] < cols[s - 1][n])
            found.insert({(long)r, (long)s, n});
  }
  return std::vector<std::array<long, 3>>(found.begin(), found.end());
}

Real bias_reduced_margin(int t, long n, long digits) {
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  const mpq_class np(mpz_class(24 * n + 1), mpz_class(24));
  const Real x = pi * pl_sqrt(Real(wp, np / 3));
  const Real npr(wp, np);
  const Real sqrt2 = pl_sqrt(Real(wp, 2L));
  Real lhs = pi / (Real(wp, 4L * t) * pl_sqrt(npr * 6)) *
             bessel_i(mpq_class(1), at_prec(wp, x));
  Real rhs = pi * pi / (npr * 64 * sqrt2) * bessel_i(mpq_class(2), at_prec(wp, x));
  rhs = rhs + Real(wp, 233L) * pl_pow_si(pi, 4) /
                  (Real(wp, 6912L) * sqrt2 * npr * npr) *
                  bessel_i(mpq_class(4), at_prec(wp, x));
  Real c = Real(wp, 1L) / (Real(wp, (long)t) * sqrt2) + sqrt2 * 33 / 16 +
           sqrt2 * 314317 / 48;
  rhs = rhs + c / npr * pl_exp(pi * 3 / 4 * pl_sqrt(Real(wp, n) / 3));
  rhs = rhs + at_prec(wp, bias_err_budget(t, n, digits)) * 2;
  return at_prec(bits_for_digits((unsigned)digits), lhs - rhs);
}

const std::vector<std::pair<int, long>>& bias_thresholds() {
  static const std::vector<std::pair<int, long>> table = {
      {2, 108077}, {3, 112183}, {4, 115240},  {5, 117804}, {6, 120247},
      {7, 122995}, {8, 126772}, {9, 133268},  {10, 147752}};
  return table;
}

// ---------------------------------------------------------------------------
// seaweed parity coefficients
// ---------------------------------------------------------------------------

Real parity_main_term(int which, long n, long digits) {
  if (which != 1 && which != 2) throw std::domain_error("which must be 1 or 2");
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  const Real x = pi / 2 * pl_sqrt(Real(wp, n) / 3);
  auto rpow = [&](const Real& b, const mpq_class& e) {
    return pl_exp(pl_log(b) * Real(wp, e));
  };
  if (which == 1) {
    Real front = pl_gamma(Real(wp, mpq_class(1, 4))) * rpow(pi, mpq_class(1, 4));
    front = front / (rpow(Real(wp, 2L), mpq_class(9, 4)) *
                     rpow(Real(wp, 3L), mpq_class(3, 8)) *
                     rpow(Real(wp, n), mpq_class(3, 8)));
    return at_prec(bits_for_digits((unsigned)digits),
                   front * bessel_i(mpq_class(-3, 4), at_prec(wp, x)));
  }
  Real front = pl_gamma(Real(wp, mpq_class(3, 4))) * rpow(pi, mpq_class(3, 4));
  front = front / (rpow(Real(wp, 2L), mpq_class(11, 4)) *
                   rpow(Real(wp, 3L), mpq_class(5, 8)) *
                   rpow(Real(wp, n), mpq_class(5, 8)));
  Real val = front * bessel_i(mpq_class(-5, 4), at_prec(wp, x));
  if (n % 2 != 0) val = -val;
  return at_prec(bits_for_digits((unsigned)digits), val);
}

Real parity_err_budget(long n, long digits) {
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  const Real s3 = pl_sqrt(Real(wp, n) / 3);
  auto rpow = [&](const Real& b, const mpq_class& e) {
    return pl_exp(pl_log(b) * Real(wp, e));
  };
  Real minor = pi * 21 / 10 * pl_exp((pi / 4 + Real(wp, 12L) / (pi * 5)) * s3);
  Real nn(wp, n);
  Real bracket = Real(wp, 4L) / rpow(nn, mpq_class(7, 8)) + Real(wp, 5L) / nn +
                 Real(wp, 13L) / (rpow(nn, mpq_class(9, 8)) * 20) +
                 Real(wp, 21291081L) / rpow(nn, mpq_class(19, 8)) +
                 Real(wp, 17716899L) / rpow(nn, mpq_class(21, 8));
  Real major = bracket * pl_exp(pi / 2 * s3);
  return at_prec(bits_for_digits((unsigned)digits), minor + major);
}

namespace {

const mpz_class& seaweed_coefficient(long n) {
  static std::vector<mpz_class> cache;
  static std::mutex mu;
  std::lock_guard<std::mutex> lock(mu);
  if ((size_t)n >= cache.size()) {
    size_t want = std::max<size_t>((size_t)n + 1, 1024);
    cache = seaweed_series(want).c;
  }
  return cache[(size_t)n];
}

}  // namespace

WrightEstimate seaweed_estimate(long n, long digits) {
  if (n <= 4800) throw std::domain_error("need n > 4800");
  WrightEstimate est;
  est.n = n;
  const long wp = work_bits(digits);
  Real m1 = parity_main_term(1, n, digits);
  Real m2 = parity_main_term(2, n, digits);
  est.terms.emplace_back("M1", m1);
  est.terms.emplace_back("M2", m2);
  est.main = at_prec(bits_for_digits((unsigned)digits),
                     at_prec(wp, m1) + at_prec(wp, m2));
  est.budget = parity_err_budget(n, digits);
  if (n <= 50000) {
    est.hasExact = true;
    est.exact = seaweed_coefficient(n);
    est.gap = pl_abs(Real(wp, est.exact) - at_prec(wp, est.main));
  } else {
    est.gap = Real(bits_for_digits((unsigned)digits), 0L);
  }
  return est;
}

Real parity_positivity_margin(long n, long digits) {
  const long wp = work_bits(digits);
  const Real pi = const_pi(wp);
  const Real s3 = pl_sqrt(Real(wp, n) / 3);
  auto rpow = [&](const Real& b, const mpq_class& e) {
    return pl_exp(pl_log(b) * Real(wp, e));
  };
  Real nn(wp, n);
  Real lhs = pi * 21 / 5 * rpow(nn, mpq_class(5, 8)) *
             pl_exp((Real(wp, 12L) / (pi * 5) - pi / 4) * s3);
  lhs = lhs + Real(wp, 8L) / rpow(nn, mpq_class(1, 4));
  lhs = lhs + Real(wp, 10L) / rpow(nn, mpq_class(3, 8));
  lhs = lhs + Real(wp, 13L) / (pl_sqrt(nn) * 10);
  lhs = lhs + Real(wp, 42582162L) / rpow(nn, mpq_class(7, 4));
  lhs = lhs + Real(wp, 35433798L) / (nn * nn);
  return at_prec(bits_for_digits((unsigned)digits),
                 Real(wp, mpq_class(11, 20)) - lhs);
}

}  // namespace partitionlab
