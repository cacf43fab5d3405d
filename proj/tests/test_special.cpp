#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include <numeric>

#include "partitionlab/special.hpp"

using namespace partitionlab;

namespace {

const long kPrec = bits_for_digits(50);

bool close(const Real& a, const Real& b, int decimals) {
  return pl_abs(a - b) < pl_pow_si(Real(kPrec, 10L), -decimals);
}

}  // namespace

TEST_CASE("precision policy") {
  Real a(100, 1L), b(200, 3L);
  CHECK((a + b).prec() == 100);
  CHECK((a * b).prec() == 100);
  CHECK((b / a).prec() == 100);
  CHECK((b * b).prec() == 200);
  CHECK(Real::parse("2.5", 64).to_double() == 2.5);
  CHECK(bits_for_digits(50) >= 166 + 32);
}

TEST_CASE("exact Bernoulli data") {
  CHECK(bernoulli_number(0) == 1);
  CHECK(bernoulli_number(1) == mpq_class(-1, 2));
  CHECK(bernoulli_number(2) == mpq_class(1, 6));
  CHECK(bernoulli_number(4) == mpq_class(-1, 30));
  CHECK(bernoulli_number(12) == mpq_class(-691, 2730));
  CHECK(bernoulli_number(3) == 0);

  const auto b2 = bernoulli_poly_coeffs(2);  // x^2 - x + 1/6
  CHECK(b2[0] == mpq_class(1, 6));
  CHECK(b2[1] == -1);
  CHECK(b2[2] == 1);
  CHECK(bernoulli_poly(2, mpq_class(1, 2)) == mpq_class(-1, 12));
  CHECK(bernoulli_poly(1, mpq_class(1, 4)) == mpq_class(-1, 4));
  // B_n(1) = B_n(0) for n != 1
  for (unsigned n : {2u, 3u, 4u, 7u, 10u})
    CHECK(bernoulli_poly(n, 1) == bernoulli_number(n));

  CHECK(euler_half_coeff(0) == mpq_class(1, 2));
  CHECK(euler_half_coeff(1) == mpq_class(-1, 4));
  CHECK(euler_half_coeff(2) == 0);
  CHECK(euler_half_coeff(3) == mpq_class(1, 8));

  SUBCASE("tail majorant |e_k / k!| <= (pi/3) pi^{-k}") {
    const Real pi = const_pi(kPrec);
    for (unsigned k = 0; k <= 24; ++k) {
      const Real lhs =
          pl_abs(Real(kPrec, euler_half_coeff(k) / mpq_class(factorial(k))));
      const Real rhs = (pi / 3) * pl_pow_si(pi, -(long)k);
      CHECK(lhs <= rhs);
    }
  }
}

TEST_CASE("Dedekind sums") {
  CHECK(dedekind_sum(1, 3) == mpq_class(1, 18));
  CHECK(dedekind_sum(1, 2) == 0);
  CHECK(dedekind_sum(5, 7) == dedekind_sum_fast(5, 7));

  SUBCASE("fast descent equals the defining sum") {
    for (long k = 1; k <= 50; ++k)
      for (long h = 0; h < k; ++h) CHECK(dedekind_sum(h, k) == dedekind_sum_fast(h, k));
  }
  SUBCASE("reciprocity") {
    for (long k = 2; k <= 40; ++k)
      for (long h = 1; h < k; ++h) {
        if (std::gcd(h, k) != 1) continue;
        const mpq_class lhs = dedekind_sum(h, k) + dedekind_sum(k, h);
        const mpq_class rhs = mpq_class(-1, 4) +
                              (mpq_class(h, k) + mpq_class(k, h) + mpq_class(1, h * k)) / 12;
        CHECK(lhs == rhs);
      }
  }
  SUBCASE("homogeneity") {
    for (long d : {2L, 3L, 5L}) {
      CHECK(dedekind_sum(3 * d, 8 * d) == dedekind_sum(3, 8));
      CHECK(dedekind_sum_fast(5 * d, 12 * d) == dedekind_sum_fast(5, 12));
    }
  }
}

TEST_CASE("Hurwitz zeta") {
  const Real two(kPrec, 2L);
  const Real pi = const_pi(kPrec);
  CHECK(close(hurwitz_zeta(two, Real(kPrec, 1L)), pi * pi / 6, 45));
  CHECK(close(hurwitz_zeta(two, Real(kPrec, mpq_class(1, 2))), pi * pi / 2, 45));

  // multiplication formula: sum_r zeta(s, r/b) = b^s zeta(s)
  for (unsigned b : {3u, 4u}) {
    Real acc(kPrec, 0L);
    for (unsigned r = 1; r <= b; ++r)
      acc += hurwitz_zeta(two, Real(kPrec, mpq_class(r, b)));
    CHECK(close(acc, Real(kPrec, (long)(b * b)) * pl_zeta(two), 44));
  }
  const Real three(kPrec, 3L);
  CHECK(close(hurwitz_zeta(three, Real(kPrec, 1L)), pl_zeta(three), 45));

  CHECK(hurwitz_zeta_negative(0, mpq_class(1, 4)) == mpq_class(1, 4));
  // zeta(-1, a) = -B_2(a)/2
  CHECK(hurwitz_zeta_negative(1, mpq_class(1)) == mpq_class(-1, 12));
}

TEST_CASE("modified Bessel function") {
  const Real x10(kPrec, 10L);
  CHECK(close(bessel_i(mpq_class(3, 2), x10), bessel_i32_closed(x10), 44));
  const Real x35(kPrec, 35L);  // just past the series/asymptotic switch
  CHECK(close(bessel_i(mpq_class(3, 2), x35), bessel_i32_closed(x35), 30));
  const Real x200(kPrec, 200L);
  const Real direct = bessel_i(mpq_class(3, 2), x200);
  const Real closed = bessel_i32_closed(x200);
  CHECK(pl_abs(direct - closed) / closed < pl_pow_si(Real(kPrec, 10L), -40));

  // I_{1/2} = sqrt(2/(pi x)) sinh x
  const Real half_closed =
      pl_sqrt(Real(kPrec, 2L) / (const_pi(kPrec) * x10)) * pl_sinh(x10);
  CHECK(close(bessel_i(mpq_class(1, 2), x10), half_closed, 44));

  CHECK(bessel_i(mpq_class(0), Real(kPrec, 1L)).to_double() ==
        doctest::Approx(1.2660658777520083).epsilon(1e-12));

  SUBCASE("three-term recurrence at high argument") {
    const Real x(kPrec, 50L);
    const Real nu(kPrec, 2L);
    const Real lhs = bessel_i(mpq_class(1), x) - bessel_i(mpq_class(3), x);
    const Real rhs = (nu * 2 / x) * bessel_i(mpq_class(2), x);
    CHECK(pl_abs(lhs - rhs) / pl_abs(rhs) < pl_pow_si(Real(kPrec, 10L), -40));
  }
  SUBCASE("negative integer order is symmetric") {
    const Real x(kPrec, 40L);
    CHECK(close(bessel_i(mpq_class(-2), x), bessel_i(mpq_class(2), x), 35));
  }
}

TEST_CASE("rational-angle trigonometry") {
  CHECK(close(sin_pi_rational(mpq_class(1, 6), kPrec), Real(kPrec, mpq_class(1, 2)), 48));
  CHECK(close(cos_pi_rational(mpq_class(1, 3), kPrec), Real(kPrec, mpq_class(1, 2)), 48));
  // reduction happens exactly even for huge numerators
  mpq_class big(mpz_class("4000000000000000001"), mpz_class(2));
  CHECK(close(sin_pi_rational(big, kPrec), Real(kPrec, 1L), 48));
  const Complex e8 = unit_phase(mpq_class(1, 8), kPrec);
  CHECK(close(e8.re * e8.re, Real(kPrec, mpq_class(1, 2)), 46));
  CHECK(close(e8.re, e8.im, 46));
  const Complex full = unit_phase(mpq_class(7, 1), kPrec);
  CHECK(close(full.re, Real(kPrec, 1L), 46));
}

TEST_CASE("complex helpers") {
  const Complex z{Real(kPrec, 3L), Real(kPrec, 4L)};
  CHECK(close(pl_abs(z), Real(kPrec, 5L), 46));
  const Complex w = pl_sqrt(z);
  CHECK(close((w * w).re, z.re, 44));
  CHECK(close((w * w).im, z.im, 44));
  const Complex inv = pl_inv(z);
  CHECK(close((inv * z).re, Real(kPrec, 1L), 44));
  const Complex p = pl_pow_si(z, -3);
  const Complex back = pl_pow_si(z, 3) * p;
  CHECK(close(back.re, Real(kPrec, 1L), 40));
  const Complex lg = pl_log(z);
  CHECK(close(pl_exp(lg).im, z.im, 44));
}

TEST_CASE("unit polylogarithm values") {
  const Real pi = const_pi(kPrec);
  const Complex at1 = polylog2_unit(mpq_class(0), kPrec);
  CHECK(close(at1.re, pi * pi / 6, 44));
  CHECK(close(at1.im, Real(kPrec, 0L), 44));
  const Complex atm1 = polylog2_unit(mpq_class(1, 2), kPrec);
  CHECK(close(atm1.re, -(pi * pi) / 12, 44));
  const Complex ati = polylog2_unit(mpq_class(1, 4), kPrec);
  CHECK(close(ati.re, -(pi * pi) / 48, 44));
  CHECK(ati.im.to_double() == doctest::Approx(0.9159655941772190).epsilon(1e-12));
}

TEST_CASE("Hermite recursion") {
  CHECK(hermite_poly(0) == std::vector<mpz_class>{1});
  CHECK(hermite_poly(2) == std::vector<mpz_class>{-2, 0, 1});
  CHECK(hermite_poly(3) == std::vector<mpz_class>{0, -6, 0, 1});
  CHECK(hermite_poly(4) == std::vector<mpz_class>{12, 0, -12, 0, 1});
}

TEST_CASE("rounding with distance report") {
  const auto r = round_to_integer(Real::parse("114580.084", kPrec));
  CHECK(r.value == 114580);
  CHECK(r.distance == doctest::Approx(0.084).epsilon(1e-9));
  const auto neg = round_to_integer(Real::parse("-7.5001", kPrec));
  CHECK(neg.value == -8);
}

TEST_CASE("Kronecker symbol") {
  // the character (12|.) on residues mod 12
  const int chi[12] = {0, 1, 0, 0, 0, -1, 0, -1, 0, 0, 0, 1};
  for (int n = 1; n < 60; ++n) CHECK(kronecker(12, n) == chi[n % 12]);
  CHECK(kronecker(-1, 5) == 1);
  CHECK(kronecker(-1, 7) == -1);
  CHECK(kronecker(2, 7) == 1);
  CHECK(kronecker(2, 5) == -1);
}
