#pragma once

#include <gmpxx.h>

#include <functional>
#include <map>
#include <string>
#include <utility>
#include <vector>

#include "partitionlab/real.hpp"

namespace partitionlab {

// ---------------------------------------------------------------------------
// Integer factorization with an explicit budget.

struct FactorList {
  // sorted by prime; exponents >= 1
  std::vector<std::pair<mpz_class, unsigned>> primes;
  // composite part that did not crack within the budget; 1 when done
  mpz_class residue = 1;

  bool complete() const { return residue == 1; }
  // Omega of the cracked part; a lower bound for the full Omega when
  // the residue is nontrivial
  long omega() const;
};

// Trial division, then Pollard rho (Brent cycle) capped at `rhoIterations`
// per cofactor. Composite cofactors that survive the cap end up in `residue`.
FactorList factor_integer(const mpz_class& value, unsigned long trialBound = 1000000,
                          unsigned long rhoIterations = 400000);

// ---------------------------------------------------------------------------
// Lucas sequences u_n = (alpha^n - beta^n) / (alpha - beta), where
// alpha + beta = A and alpha beta = B.

struct LucasSpec {
  mpz_class a;  // alpha + beta
  mpz_class b;  // alpha * beta
};

// u_1 = 1, u_2 = A, u_{n+1} = A u_n - B u_{n-1}
mpz_class lucas_u(const LucasSpec& spec, unsigned long n);

struct ProfileEntry {
  unsigned long n = 0;
  mpz_class value;
  // u_n with every prime factor of (alpha-beta)^2 u_1 ... u_{n-1} divided out.
  // The defect flag only needs this to be +-1, so it is exact regardless of
  // the factorization budget.
  mpz_class primitivePart;
  std::vector<mpz_class> primitive;  // cracked prime factors of primitivePart
  bool partial = false;              // budget ran out while listing them
  bool defective = false;            // n > 2 and no primitive prime divisor
  std::string tableRef;              // "", "sporadic", "m2+1", or "B1".."B6"
};

struct DivisorProfile {
  LucasSpec spec;
  std::vector<ProfileEntry> entries;  // n = 1..nMax
  std::vector<unsigned long> defectiveIndices;
};

// Requires gcd(A, B) = 1, B != 0, and a nondegenerate pair (alpha/beta not a
// root of unity, equivalently A^2 not in {0, B, 2B, 3B, 4B}); nMax <= 200.
DivisorProfile primitive_divisor_profile(const LucasSpec& spec, unsigned long nMax);

// ---------------------------------------------------------------------------
// Defective Lucas numbers attached to quadratic polynomials
// X^2 - AX + B with B = p^(2k-1) and |A| <= 2 sqrt(B).

struct DefectRecord {
  std::string family;  // "sporadic", "m2+1", or "B1".."B6"
  long a = 0;          // positive representative of +-A
  mpz_class b;
  unsigned long p = 0;  // b = p^(2k-1)
  unsigned k = 0;
  int r = 0;    // family exponent parameter, 0 when absent
  int eps = 0;  // family sign parameter, 0 when absent
  unsigned long n = 0;
  mpz_class u;  // claimed u_n for the +A representative
};

// the ten sporadic rows, flattened to one record per claimed entry
const std::vector<DefectRecord>& sporadic_defect_records();

// every family instance with 1 <= m <= mMax and 1 <= k <= kMax.
// Family code and defective index:
//   m2+1: B = A^2 + 1 = p prime, A > 1            -> u_3 = -1
//   B1:   u_3 = A^2 - B = eps 3^r, 3 does not divide A
//   B2:   A^2 = 2B - 1, A odd > 1                 -> u_4 = -A
//   B3:   A^2 - 2B = 2 eps, A even > 2            -> u_4 = 2 eps A
//   B4:   A^2 - 3B = (-2)^r, gcd(A, 6) = 1        -> u_6 = (-2)^r A (2A^2 + (-2)^r) / 3
//   B5:   A^2 - 3B = 3 eps, 3 | A, A > 3          -> u_6 = eps A (2A^2 + 3 eps)
//   B6:   A^2 - 3B = 3 eps 2^r, A = 3 mod 6       -> u_6 = 2^(r+1) eps A (A^2 + 3 eps 2^(r-1))
// each constrained by |A| <= 2 sqrt(B) and the small-case exclusions that keep
// B a valid odd prime power.
std::vector<DefectRecord> family_defect_records(long mMax, unsigned kMax);

// claimed value against the recurrence for both sign representatives, and the
// defect flag against the divisor profile
bool verify_defect_record(const DefectRecord& rec);

// code of the table row covering (A, B, n), or "" when none does
std::string defect_table_reference(const mpz_class& a, const mpz_class& b, unsigned long n);

// ---------------------------------------------------------------------------
// Integer-coefficient eigenform coefficients a_f(n): multiplicative, Hecke
// recursion at prime powers away from the level, U(p) action on the level.

struct EigenformSpec {
  unsigned weight = 0;     // 2k
  unsigned long level = 1;  // N
  std::string id;
  // a_f(p) for primes p not dividing the level
  std::function<mpz_class(unsigned long)> primeCoeff;
  // p with ord_p(level) = 1: a_f(p) = sign * p^(k-1)
  std::map<unsigned long, int> levelSign;
};

mpz_class eigenform_coefficient(const EigenformSpec& f, unsigned long n);

// weight 12, level 1; prime coefficients served from the eta(z)^24 expansion
EigenformSpec delta_eigenform();

// prime coefficients read off a stored expansion a(1..N); throws past its end
EigenformSpec series_eigenform(unsigned weight, unsigned long level, std::string id,
                               std::vector<mpz_class> coeff);

// prime coefficients from an explicit table
EigenformSpec user_eigenform(unsigned weight, unsigned long level, std::string id,
                             std::map<unsigned long, mpz_class> primes,
                             std::map<unsigned long, int> levelSign = {});

// a(1..nMax) of prod_i (q^{m_i}; q^{m_i})_infty^{e_i} shifted by its leading
// q-power, which must be a positive integer (the eta-quotient normalization)
std::vector<mpz_class> eta_quotient_coefficients(
    const std::vector<std::pair<unsigned, long>>& factors, unsigned long nMax);

// Ramanujan tau via the weight-12 engine
mpz_class tau_coefficient(unsigned long n);

// ---------------------------------------------------------------------------
// Lower bounds for Omega(a_f(n)), the number of prime divisors counted with
// multiplicity.

// per-prime-power contribution sigma-hat(p; m): sigma_0(m+1) - 1 by default,
// lowered on the defective rows; weight >= 4 and p not dividing the level
long sigma_hat(const EigenformSpec& f, unsigned long p, unsigned long mExp);

struct OmegaBound {
  unsigned long n = 0;
  long bound = 0;         // sum of (k-1) ord_p(n) over p | N and sigma-hat terms
  mpz_class coefficient;  // a_f(n)
  long omegaObserved = 0;  // lower bound for Omega(a_f(n)) from its factorization
  bool partial = false;    // coefficient factorization incomplete
  bool verified = false;   // omegaObserved >= bound
};

OmegaBound omega_lower_bound(const EigenformSpec& f, unsigned long n);

// ---------------------------------------------------------------------------
// Coefficients equal to a power of an odd prime.

// odd primes d dividing ell (ell^2 - 1)
std::vector<unsigned long> admissible_exponents(unsigned long ell);

// smallest m >= 1 with ell | tau(p^m), in closed form per congruence class;
// ell in {3, 5, 7, 691}. Throws domain_error when no index exists (p = ell = 691,
// where tau(691^m) = 1 mod 691 for every m).
unsigned long tau_divisibility_index(unsigned long ell, unsigned long p);

// effective weight bound M^+-(ell, m) ruling out the coefficient value
// sign * ell^m; listed cases ell in {3, 5}
Real lehmer_constant(unsigned ell, int sign, unsigned long m, unsigned digits = 50);

// ---------------------------------------------------------------------------
// Thue forms F_{2m}(X, Y) from 1 / (1 - sqrt(Y) T + X T^2) = sum c_j T^j,
// and bounded Diophantine searches.

struct ThueForm {
  unsigned m = 0;                // F_{2m}, homogeneous of degree m, monic in Y
  std::vector<mpz_class> coeff;  // coeff[i] multiplies X^i Y^(m-i)
};

// carried in Z[X, Y][g] with g^2 = Y; the even-index entries of the recurrence
// c_j = g c_{j-1} - X c_{j-2} are checked to be free of g
ThueForm thue_form(unsigned m);

mpz_class thue_eval(const ThueForm& form, const mpz_class& x, const mpz_class& y);

struct ThueSolution {
  long x = 0;
  long y = 0;
};

// all integer solutions of F(X, Y) = target with |X| <= box.
// For fixed X the real roots in Y sit at 4 X cos^2(pi k / (2m+1)), and any
// integer solution lies within |target|^(1/m) of one of them, so the scan per
// X is a short window around each root.
std::vector<ThueSolution> thue_bounded_search(const ThueForm& form, const mpz_class& target,
                                              long box);

enum class CurveFamily { CPlus, CMinus, HPlus, HMinus };

struct CurvePoint {
  long x = 0;
  mpz_class y;  // y >= 0 stands for the +-y pair
};

// C-family: Y^2 = X^(2d-1) +- ell over |X| <= box (d >= 2);
// H-family: Y^2 = 5 X^(2d) +- 4 ell over 0 <= X <= box (even in X)
std::vector<CurvePoint> curve_bounded_search(CurveFamily family, unsigned d,
                                             const mpz_class& ell, long box);

}  // namespace partitionlab
