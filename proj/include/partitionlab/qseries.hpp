#pragma once

#include <vector>

#include "partitionlab/partitions.hpp"
#include "partitionlab/series.hpp"

namespace partitionlab {

// p(0..nMax) by the pentagonal recurrence; independent of the series engine
std::vector<mpz_class> partition_numbers(size_t nMax);

Series<mpz_class> partition_series(size_t n);            // 1/(q;q)_infty
Series<mpz_class> distinct_series(size_t n);             // (-q;q)_infty
Series<mpz_class> regular_series(unsigned k, size_t n);  // no part divisible by k

// L_{r,t}(q) = sum_{j >= 0} q^{jt+r} / (1 + q^{jt+r}), expanded termwise
Series<mpz_class> lambert_bias_series(int r, int t, size_t n);
// generating function of the total count of parts congruent to r mod t
// over distinct-part partitions: (-q;q)_infty * L_{r,t}(q)
Series<mpz_class> distinct_bias_series(int r, int t, size_t n);
// single coefficient of the above via one convolution against a cached table
mpz_class distinct_bias_value(int r, int t, size_t n);

// 1/((q; q^4)_infty (-q^3; q^4)_infty); coefficients a(n) count odd-part
// partitions by signed arc-diagram parity
Series<mpz_class> seaweed_series(size_t n);
// F(i^s; q) = 1/((i^s q; q^4)_infty (i^s q^3; q^4)_infty), s = 0..3
std::vector<Series<Cyclo>> seaweed_marked_family(size_t n);
// d_j(n) = odd-part partitions of n with part count congruent to j mod 4
std::vector<Series<mpz_class>> seaweed_residue_series(size_t n);
// even/odd arc-index counts recovered from the d_j dictionary
EvenOddCounts seaweed_even_odd(size_t n);

// partitions with an even number of hooks divisible by t minus those with odd
Series<mpz_class> hook_parity_series(int t, size_t n);

// sum_lam xi^{#(hooks divisible by t)} q^{|lam|} at xi = zeta_b^r:
// (q^t;q^t)_infty^t / ((xi q^t; xi q^t)_infty^t (q;q)_infty)
Series<Cyclo> thook_marked_series(int t, unsigned b, long r, size_t n);
// the same with a formal marker variable
Series<IntPoly> thook_bivariate_series(int t, size_t n);
// p_t(a, b; n): partitions of n whose count of hooks divisible by t is a mod b
Series<mpz_class> thook_residue_series(int t, long a, unsigned b, size_t n);

// Poincare polynomial generating functions of Hilbert schemes of points,
// marker variable tracking homological degree
Series<IntPoly> hilbert_poincare_series(size_t n);
// torus-fixed loci for a coprime weight pair (alpha, beta)
Series<IntPoly> quasi_hilbert_poincare_series(unsigned alpha, unsigned beta, size_t n);
// root-of-unity specializations of the two series above, for cross-checks
std::vector<Series<Cyclo>> hilbert_family(unsigned b, size_t n);
std::vector<Series<Cyclo>> quasi_hilbert_family(unsigned alpha, unsigned beta,
                                                unsigned b, size_t n);

// tau(1..nMax) from the 24th power of (q;q)_infty
std::vector<mpz_class> tau_values(size_t nMax);

}  // namespace partitionlab
