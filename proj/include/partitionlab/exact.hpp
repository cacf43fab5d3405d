#pragma once

#include <vector>

#include <gmpxx.h>

#include "partitionlab/real.hpp"

namespace partitionlab {

// Multiplier phase for the hook-parity generating function under the modular
// substitution attached to h/k.  The transform multiplier is exp(i*pi*alpha)
// with alpha the exact rational returned here, a signed combination of four
// Dedekind sums.
mpq_class parity_phase_exponent(long t, long h, long k);

// K_k(n) = sum over h in [0,k), gcd(h,k)=1, of exp(pi*i*s(h,k) - 2*pi*i*n*h/k).
// Real-valued; the imaginary part cancels in exact arithmetic and is checked
// to vanish numerically.
Real rademacher_kloosterman(long k, long n, int digits);

// S_k(n) = (1/2)*sqrt(k/12) * sum over x mod 24k with x^2 = 1-24n (mod 24k)
// of kronecker(12,x) * exp(2*pi*i*x/(12k)).  Real-valued.
Real quadratic_kloosterman(long k, long n, int digits);

// Convergent Bessel series for p(n): a partial sum over k <= kMax.
Real partition_rademacher_raw(long n, long kMax, int digits);

// Rounds the partial sum to the nearest integer.  Throws std::runtime_error
// if the value sits 0.25 or further from every integer, so an unconverged or
// wrong sum can never silently round.
mpz_class partition_rademacher(long n, long kMax, int digits);

// Branch data for the level-k term of the signed t-hook count expansion.
// The generating function transforms differently according to k0 = k/gcd(k,t)
// mod 4; each branch contributes Bessel terms I_{3/2}((pi/6k)*sqrt((A-B*m)(24n-1)))
// weighted by expansion coefficients c(m), 0 <= m <= mMax, and a global scale
// 2^(log2Scale/2).
struct ParityBranch {
  int branch;  // 1: k0 odd, 2: k0 = 2 mod 4, 3: k0 = 0 mod 4
  long g, k0, t0;
  long mMax;  // negative: the level contributes nothing
  mpq_class besselA, besselB;
  int log2Scale;
};
ParityBranch parity_branch(long t, long k);

// Expansion coefficients as exact polynomials in a k-th root of unity,
// represented in Z[x]/(x^k - 1), for the base choice H = 1 of the inverse
// denominator.  The coefficient for general h is obtained by x -> x^H where
// h*H = -1 mod k.  polys[m][i] multiplies zeta_k^i in c(m).
std::vector<std::vector<mpz_class>> parity_coeff_polys(long t, long k);

// Numeric expansion coefficients c(0..mMax) at a given admissible h.
std::vector<Complex> parity_coeffs(long t, long h, long k, int digits);

// Partial sum over 1 <= k <= kMax of the exact expansion of
// A_t(n) = (# partitions of n with even t-hook count) - (# with odd).
Real hook_parity_rademacher(long t, long n, long kMax, int digits);

// Same quantity from the eta-quotient q-expansion; exact integer oracle.
mpz_class hook_parity_series_value(long t, long n);

// Leading asymptotic term: the k = 2^(s+1) level alone (t = 2^s * odd), which
// dominates all others.
Real hook_parity_main_term(long t, long n, int digits);

// Fraction of partitions of n with an even number of t-hooks,
// (p(n) + A_t(n)) / (2 p(n)), both counts exact.
Real parity_split_even(long t, long n, int digits);

// Indicator appearing in the closed form of the residue-class Kloosterman
// sum: b-1 when (1-t^2)(1-b^2)/24 + a*t - n = 0 mod b, else -1.
long hook_congruence_indicator(long a, long b, long t, long n);

// K(a,b,t;n) = sum_{h=1}^{b-1} (w_{h,b} / w_{t*h,b}^t) * zeta_b^{(a*t-n)*h}
// for odd prime b with gcd(t,b)=1, evaluated as written (direct) and via the
// Gauss-sum closed form (closed).  They must agree.
Complex hook_kloosterman(long a, long b, long t, long n, int digits);
Complex hook_kloosterman_closed(long a, long b, long t, long n, int digits);

// c_t(a,b;n): coefficient of the main term of the count of partitions of n
// with number of t-hooks congruent to a mod b.  Real-valued in all cases
// covered by the closed form; returned with its (numerically zero) imaginary
// part for honesty.
Complex hook_residue_coefficient(long t, long a, long b, long n, int digits);

// c_t(a,b;n) * exp(pi*sqrt(2n/3)) / (4*sqrt(3)*n), the p(n)-scale main term.
Real hook_residue_main_term(long t, long a, long b, long n, int digits);

// Limit density of the Betti-number residue distribution: 1/b for odd b,
// 2/b for even b and even a, 0 for even b and odd a.
mpq_class betti_limit_density(long a, long b);

}  // namespace partitionlab
