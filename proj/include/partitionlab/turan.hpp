#pragma once

#include <gmpxx.h>

#include <functional>
#include <string>
#include <vector>

#include "partitionlab/real.hpp"

namespace partitionlab {

// Exact coefficient sequence feeding a Jensen polynomial; value(n) is total
// thread-safe and caches internally.
struct AlphaSource {
  std::string id;
  std::function<mpz_class(long)> value;
};

AlphaSource alpha_partition();          // p(n)
AlphaSource alpha_regular(unsigned k);  // partitions of n with no part divisible by k

// J^{d,n}(X) = sum_{j<=d} C(d,j) alpha(n+j) X^j, coefficients exact
struct JensenPoly {
  unsigned d = 0;
  long n = 0;
  std::string source;
  std::vector<mpq_class> coeff;  // ascending; coeff[j] = C(d,j) alpha(n+j)
};

JensenPoly jensen(const AlphaSource& alpha, unsigned d, long n);

enum class RootMethod { Sturm, Hankel };

// Newton power sums S_m of the roots (with multiplicity) and the leading
// principal minors of their Hankel moment matrix. The verdict tests positive
// semidefiniteness exactly, which requires every principal minor, not only
// the leading ones; the leading minors are kept because they are the usual
// chain of higher Turan inequalities.
struct HankelReport {
  std::vector<mpq_class> newtonSums;  // S_0 .. S_{2n-2}
  std::vector<mpq_class> minors;      // Delta_1 .. Delta_n
  bool hyperbolic = false;
};

// Hyperbolic means every complex root is real; repeated real roots count.
// Sturm runs on the squarefree part, Hankel tests the moment matrix; the two
// verdicts agree on every input.
bool is_hyperbolic(const std::vector<mpq_class>& poly, RootMethod method);
bool is_hyperbolic(const JensenPoly& p, RootMethod method = RootMethod::Sturm);
HankelReport hankel_report(const std::vector<mpq_class>& poly);

// Shift-expansion data for the k-regular counting function: growth rate A,
// width delta, and the rate constant m_k. delta is positive and decreasing
// in n. m_k = (k-1)/(24k) is a convention of this library (the sources use
// it bare); note records that choice. The growth-ratio check in the tests
// pins it empirically.
struct RenormalizationParams {
  mpq_class mk;
  Real A;
  Real delta;
  unsigned truncation = 0;  // last index kept in the delta series
  std::string note;
};

// A uses the degree-dependent finite correction sum (empty when d <= 1); the
// delta series is cut once a term drops below 10^{-digits-10} relatively.
RenormalizationParams renormalization_params(unsigned k, unsigned d, long n,
                                             unsigned digits);

// J-hat(X) = delta^{-d}/p_k(n) * J^{d,n}((delta X - 1)/exp(A)); deviation is
// the max of |J-hat - H_d| over a dense grid on [-5, 5], H_d the Hermite
// polynomial for e^{-t^2+Xt}.
struct RenormalizedJensen {
  std::vector<Real> coeff;  // ascending, degree d
  Real deviation;
  RenormalizationParams params;
};

RenormalizedJensen renormalized_jensen(unsigned k, unsigned d, long n,
                                       unsigned digits);

// Exact scan of J^{d,n}_{p_k} over 0 <= n <= nMax. threshold is the smallest
// n0 with every shift in [n0, nMax] hyperbolic, relative to the scanned
// window only; nothing is claimed beyond nMax.
struct ThresholdScan {
  unsigned k = 0;
  unsigned d = 0;
  long nMax = 0;
  long threshold = 0;
  std::vector<long> failures;  // non-hyperbolic shifts, increasing
};

ThresholdScan hyperbolicity_threshold(unsigned k, unsigned d, long nMax);

}  // namespace partitionlab
