#pragma once

#include <gmpxx.h>

#include <vector>

#include "partitionlab/real.hpp"

namespace partitionlab {

// B_n with B_1 = -1/2, exact, cached
const mpq_class& bernoulli_number(unsigned n);
// coefficients of B_n(x), ascending, exact
std::vector<mpq_class> bernoulli_poly_coeffs(unsigned n);
mpq_class bernoulli_poly(unsigned n, const mpq_class& x);

// e_n in e^{-z}/(1+e^{-z}) = sum e_n z^n / n!; equals (1-2^{n+1}) B_{n+1}/(n+1)
mpq_class euler_half_coeff(unsigned n);

mpz_class factorial(unsigned n);
mpz_class binomial(unsigned n, unsigned k);

// Kronecker symbol (a|n)
int kronecker(const mpz_class& a, const mpz_class& n);

// Dedekind sum s(h,k) as an exact rational; defining double-sawtooth sum,
// valid for any h (homogeneity s(ch,ck) = s(h,k) holds)
mpq_class dedekind_sum(long h, long k);
// reciprocity descent, O(log k); agrees with the defining sum
mpq_class dedekind_sum_fast(long h, long k);

// Hurwitz zeta(s, a) for real s > 1, a > 0
Real hurwitz_zeta(const Real& s, const Real& a);
// zeta(-n, a) = -B_{n+1}(a)/(n+1), exact
mpq_class hurwitz_zeta_negative(unsigned n, const mpq_class& a);

// Modified Bessel function I_nu(x) for x > 0 and real nu.
// Ascending series below x = max(30, nu^2); asymptotic expansion with
// smallest-term stop above, falling back to the series at doubled precision
// when the achievable error misses the target.
Real bessel_i(const Real& nu, const Real& x, long targetPrec);
Real bessel_i(const mpq_class& nu, const Real& x);
// closed form sqrt(2/(pi x)) (cosh x - sinh x / x)
Real bessel_i32_closed(const Real& x);

// Hermite polynomials for the generating function e^{-t^2 + Xt}:
// H_0 = 1, H_1 = X, H_{d+1} = X H_d - 2d H_{d-1}; integer coefficients
std::vector<mpz_class> hermite_poly(unsigned d);

// sum_{n>=1} z^n / n^2 at z = e(x) for exact rational x, via Hurwitz zeta
Complex polylog2_unit(const mpq_class& x, long prec);

}  // namespace partitionlab
