#pragma once

#include <array>
#include <functional>
#include <string>
#include <utility>
#include <vector>

#include <gmpxx.h>

#include "partitionlab/real.hpp"

namespace partitionlab {

// ---------------------------------------------------------------------------
// Euler-Maclaurin engine with fully explicit error bounds.
//
// Approximates sums of the form  sum_{m>=0} f((m+a) w)  for Re w > 0 and
// 0 < a <= 1.  The kernel f is described by exact rational Laurent
// coefficients c_n (n >= lowestIndex), an exponential decay rate A, an
// integral constant, and an upper bound for the ray integral of the relevant
// derivative.  Two decay classes:
//
//   Rapid      lowestIndex == 0; the approximation is
//              I_f / w - sum_{n<N} c_n B_{n+1}(a)/(n+1) w^n.
//   Sufficient lowestIndex in {-2,-1}; principal-part terms are summed
//              against Hurwitz zeta values, and a residue coefficient c_{-1}
//              contributes -(c_{-1}/w)(Log(Aw) + gamma + psi(a)).
//
// The returned bound is  M_{N+1}/(N+1)! * J * |w|^N + tail, where M_{N+1}
// majorizes |B_{N+1}(x)| on [0,1], J bounds the ray integral of |f^(N+1)|
// (Rapid) resp. |g^(N+1)| with g the kernel minus principal part
// (Sufficient), and the tail sums |b_k| (1 + k!/(10 (k-N)!)) |w|^k over
// k >= N with b_k = c_k minus, in the Sufficient case, (-A)^{k+1} c_{-1}/(k+1)!.
// ---------------------------------------------------------------------------

enum class EmDecay { Rapid, Sufficient };

struct EmFunctionSpec {
  EmDecay decay = EmDecay::Rapid;
  long lowestIndex = 0;
  mpq_class decayRate = 1;  // A
  std::function<mpq_class(long)> coeff;
  std::function<Real(long)> integralConst;  // prec -> I_f resp. I*_{f,A}
  std::function<Complex(const Complex&)> eval;
  // Upper bound for the ray integral of the order-th derivative along the ray
  // of angle theta = |arg w|.  Throws if (order, theta) is outside the
  // validated range for this kernel.
  std::function<Real(unsigned order, double theta, long prec)> rayIntegralBound;
  unsigned defaultOrder = 4;  // N+1 backing the pinned ray constants
  double maxAbsW = 6.0;       // tail convergence guard
  std::string name;
};

struct EmApproximation {
  Complex value;
  Real bound;  // explicit bound for |direct sum - value|
};

// Kernel 1/(e^w + 1).  The exact pole expansion gives ray-integral bounds
// valid for every order >= 2 and every angle theta < pi/2:
//   J(order, theta) <= order! * I_{order+1} * 2 (1 - 2^-order) zeta(order)
//                      / (pi cos theta)^order,
// with I_m the full-line integral of (1+t^2)^(-m/2).
EmFunctionSpec fermi_kernel();

// Kernel e^{-(r/t) w} / (w (1 - e^{-w})), Laurent coefficients
// B_{n+2}(1 - r/t)/(n+2)!.  Ray-integral constants are pinned per (r, t)
// at the default order, with a validity cone checked at call time:
//   (1,4): 20000 at order 4, slope <= 15;
//   (3,4): 40000 at order 4, slope <= 15;
//   (1,1): 2208140 at order 8, slope <= 10.
EmFunctionSpec bose_kernel(int r, int t);

// Kernel (1 + w) e^{-w} / w^2.  Carries a double pole but a vanishing
// residue coefficient, so the expansion has no logarithm; exercises that
// branch of the Sufficient case.  Sum over m >= 1 of f(m z) has the closed
// form Li_2(e^{-z})/z^2 - log(1 - e^{-z})/z.
EmFunctionSpec poly_exp_kernel();

EmApproximation em_approximate(const EmFunctionSpec& spec, const mpq_class& a,
                               const Complex& w, unsigned N, long prec);

// Reference: direct summation of sum_{m>=0} f((m+a) w) to working precision.
Complex em_direct_sum(const EmFunctionSpec& spec, const mpq_class& a,
                      const Complex& w, long prec);

// Majorant for max |B_n(x)| on [0,1]: 2 zeta(n) n! / (2 pi)^n (exact for
// even n, an upper bound for odd n).
Real bernoulli_poly_max(unsigned n, long prec);

// ---------------------------------------------------------------------------
// Generating-function logarithms: direct sums and truncated main terms.
// Throughout q = e^{-z}, Re z > 0.
// ---------------------------------------------------------------------------

// sum_{k>=0} 1/(e^{(k + r/t) t z} + 1); counts parts congruent to r mod t
// over partitions into distinct parts when paired with the distinct-parts
// product.
Complex bias_lambert_direct(int r, int t, const Complex& z, long prec);
// log(2)/(tz) - B_1(r/t)/2 + (t/8) B_2(r/t) z - (t^3/192) B_4(r/t) z^3.
Complex bias_lambert_main(int r, int t, const Complex& z, long prec);
// Direction-aware error bound for the truncation above (fermi kernel at
// order 6 plus live tail); valid at any slope.
Real bias_lambert_bound(int r, int t, const Complex& z, long prec);

// Log (-q; q)_inf = sum_{k>=1} log(1 + e^{-kz}).
Complex distinct_log_direct(const Complex& z, long prec);
// pi^2/(12 z) - log(2)/2 + z/24; the remaining error is exponentially small.
Complex distinct_log_main(const Complex& z, long prec);

// Log of (eps q^r; q^t)_inf^{-1} via its Lambert series
// sum_m eps^m q^{rm} / (m (1 - q^{tm})).
Complex poch_log_direct(int r, int t, int eps, const Complex& z, long prec);
// Euler-Maclaurin main term: tz F_1(tz) for eps=+1, and for eps=-1 the split
// tz (F_1(2tz) - F_{1/2}(2tz)), with F_a the bose-kernel expansion at order 4.
Complex poch_log_main(int r, int t, int eps, const Complex& z, long prec);
// Matching bound: |tz| E(tz) resp. 2 |tz| E(2tz) with E the bose-kernel
// order-4 error form (pinned ray constant plus live tail).
Real poch_log_bound(int r, int t, int eps, const Complex& z, long prec);

// Log G(q) for sign=+1 and Log G(-q) for sign=-1, where
// G(q) = ((q; q^4)_inf (-q^3; q^4)_inf)^{-1} generates the signed
// even-minus-odd part counts over distinct partitions.
Complex parity_log_direct(const Complex& z, int sign, long prec);
// Saddle main terms:
//   +: pi^2/(48 z) - (1/4) Log z + log Gamma(1/4) - log(2 pi)/2 - log(2)/4 + z/24
//   -: pi^2/(48 z) + (1/4) Log z + log Gamma(3/4) - log(2 pi)/2 + log(2)/4 + z/24
// The z/24 term carries a plus sign; both residuals are O(|z|^2) on the real
// ray and satisfy the quartic bounds below on the reported region.
Complex parity_log_main(const Complex& z, int sign, long prec);

// ---------------------------------------------------------------------------
// Arc bound reports.  Each region id names a claim, a domain, and a fixed
// grid parameterization (gridA points in the radial parameter, gridB in the
// angular one).  margin = bound - left; pass requires margin >= 0 at every
// sample.  Grids are evidence, not proof.
// ---------------------------------------------------------------------------

struct ArcSample {
  double x = 0, y = 0;   // z = x + iy
  double left = 0;       // evaluated left-hand side
  double bound = 0;      // claimed bound at this sample
  double margin = 0;
};

struct ArcBoundReport {
  std::string region;
  int r = 0, t = 0;
  unsigned gridA = 0, gridB = 0;
  long digits = 0;
  std::vector<ArcSample> samples;
  double minMargin = 0;
  bool pass = false;
};

// Region ids:
//   bias-L-major         |direct - main| vs. direction-aware bound,
//                        eta in [pi/800, pi/(40t)), slope in [0, 10)
//   bias-L-major-pinned  same left side vs. (1/20) t^5 |z|^5 on the shallow
//                        sub-cone slope in [0, 3] where that constant holds
//   bias-L-minor         |L| vs. 1/eta^2, y in [10 eta, pi)
//   bias-xi-major        |Log xi - main| vs. 471 |z|^8, slope in [0, 10)
//   bias-xi-minor        |xi| vs. exp(41/(50 eta)), y in [10 eta, pi)
//   poch-major           EM truncation vs. pinned bose bound, (r,t) with
//                        eps=+1, x in [pi/1000, pi/481], slope in [0, 15)
//   poch-major-alt       same with eps=-1
//   parity-major-plus    |Log G(q) - main| vs. 4033 |z|^4 on
//                        x in [pi/1000, pi/481], slope in [0, 15)
//   parity-major-minus   |Log G(-q) - main| vs. 2689 |z|^4, same region
//   parity-minor         |G(q)| vs. exp(1/(5x)), y in [15x, pi - 15x]
std::vector<std::string> arc_regions();
ArcBoundReport arc_bound_check(const std::string& region, int r, int t,
                               unsigned gridA, unsigned gridB, long digits);

// ---------------------------------------------------------------------------
// Saddle-point integrals and Bessel comparisons.  n' = n + 1/24 throughout;
// the contour D0 is {eta + iv : |v| <= 10 eta} with eta = pi/sqrt(12 n).
// ---------------------------------------------------------------------------

// V_s(n) = (2 pi sqrt(2) i)^{-1} Int_{D0} z^{s-1} exp(pi^2/(12 z) + n' z) dz,
// evaluated through the exact identity
// V_s(n) = 2^{-1/2} (2 pi^2/(24 n + 1))^{s/2} Ihat_{-s}(n) and the Bessel
// replacement below.
Real bessel_saddle_value(int s, long n, long prec);

// Ihat_nu(n) = (2 pi^2/(24n+1))^{nu/2} (2 pi i)^{-1}
//              Int_{D0} w^{-nu-1} exp(pi^2/(12 w) + n' w) dw
// by composite Gauss-Legendre quadrature with panel doubling.
Real contour_bessel_ihat(int nu, long n, long prec);
// Same contour integral for V_s itself (cross-check of the identity).
Real contour_saddle_value(int s, long n, long prec);

// Closed form for the replacement gap bound at integer nu <= -1:
// 2 (2 pi^2/(24n+1))^{nu/2} exp((3 pi/4) sqrt(n/3))
//   * Int_0^inf (10 + u)^{-nu-1} e^{-n' u} du,
// the integral evaluated exactly as sum_j C(m,j) 10^{m-j} j! / n'^{j+1}.
Real bessel_ihat_gap_bound(int nu, long n, long prec);

// ---------------------------------------------------------------------------
// Distinct-parts bias: theorem-scale evaluators.
// D_{r,t}(n) = total count of parts congruent to r mod t over all partitions
// of n into distinct parts.
// ---------------------------------------------------------------------------

// Err_t(n): sum of the three printed error budgets
//   E1 <= 9 n exp((3 sqrt(3)/(2 pi) + pi/sqrt(12)) sqrt(n))
//   E2 <= 945285959087 / (t n^4) * exp(pi sqrt(n/3))
//   E3 <= 14381 t^5 / n^3 * exp(pi sqrt(n/3))
Real bias_err_budget(int t, long n, long prec);

// (log 2 / t) V_0 - (1/2) B_1(r/t) V_1 + (t/8) B_2(r/t) V_2
//   - (t^3/192) B_4(r/t) V_4.
Real bias_effective_main(int r, int t, long n, long prec);

// Two-term smooth approximation at t=3 scale:
// Dhat_{r,t}(n) = 3^{1/4} e^{pi sqrt(n/3)} / (2 pi t n^{1/4})
//   * (log 2 + (sqrt(3) log(2)/(8 pi) - (pi/(4 sqrt 3))(r - t/2)) / sqrt(n)).
Real bias_smooth_main(int r, int t, long n, long prec);
// Q_r(n) = D_{r,3}(n) / Dhat_{r,3}(n).
Real bias_q_ratio(int r, long n, long digits);

struct WrightEstimate {
  long n = 0;
  int r = 0, t = 0;
  Real main;
  std::vector<std::pair<std::string, Real>> terms;
  Real budget;
  bool hasExact = false;
  mpz_class exact;
  Real gap;  // |exact - main| when hasExact
};

// Requires n > 400 t^2 / 3.  main = bias_effective_main, budget = Err_t(n);
// the exact coefficient is attached for n <= 20000.
WrightEstimate wright_bias_estimate(int r, int t, long n, long digits);

// Violations of D_{r,t}(n) >= D_{s,t}(n) for 1 <= r < s <= t <= tMax and
// nMin <= n <= nMax, deduplicated across t and reported as (r, s, n).
std::vector<std::array<long, 3>> bias_inequality_verify(int tMax, long nMax,
                                                        long nMin = 1);

// Margin of the reduced dominance inequality at level t:
//   (pi/(4 t sqrt(6 n'))) I_1(pi sqrt(n'/3))
//   - (pi^2/(64 n' sqrt 2)) I_2 - (233 pi^4/(6912 sqrt 2 n'^2)) I_4
//   - (1/(t sqrt 2) + 33 sqrt(2)/16 + 314317 sqrt(2)/48) e^{(3pi/4)sqrt(n/3)}/n'
//   - 2 Err_t(n).
// Positive margin certifies D_{r,t}(n) > D_{s,t}(n) for all r < s at that n.
Real bias_reduced_margin(int t, long n, long prec);

// Published cutoffs (t, N_t), 2 <= t <= 10: the margin is positive for every
// n > N_t.  The measured sign change of the inequality sits 0.4-5% below each
// entry (e.g. 107654 vs 108077 at t = 2), so the cutoffs are safe but not
// minimal.
const std::vector<std::pair<int, long>>& bias_thresholds();

// ---------------------------------------------------------------------------
// Seaweed parity coefficients a(n): two-term asymptotic with budget.
// a(n) is the q^n coefficient of G(q).
// ---------------------------------------------------------------------------

// M1(n) = Gamma(1/4) pi^{1/4} / (2^{9/4} 3^{3/8} n^{3/8}) I_{-3/4}((pi/2)sqrt(n/3))
// M2(n) = (-1)^n Gamma(3/4) pi^{3/4} / (2^{11/4} 3^{5/8} n^{5/8}) I_{-5/4}(...)
Real parity_main_term(int which, long n, long prec);

// E(n) = (21 pi/10) exp((pi/4 + 12/(5 pi)) sqrt(n/3))
//   + [4/n^{7/8} + 5/n + 13/(20 n^{9/8}) + 21291081/n^{19/8}
//      + 17716899/n^{21/8}] exp((pi/2) sqrt(n/3)).
Real parity_err_budget(long n, long prec);

// Requires n > 4800.  main = M1 + M2, budget = E(n); exact coefficient
// attached for n <= 50000.
WrightEstimate seaweed_estimate(long n, long digits);

// 11/20 minus the reduced positivity form
//   (21 pi n^{5/8}/5) exp((12/(5 pi) - pi/4) sqrt(n/3))
//   + 8/n^{1/4} + 10/n^{3/8} + 13/(10 sqrt n) + 42582162/n^{7/4} + 35433798/n^2.
// Positive margin certifies a(n) > 0 at that n.  The margin is negative at
// n = 350000 and positive at n = 1200000.
Real parity_positivity_margin(long n, long prec);

}  // namespace partitionlab
