#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partitionlab/partitions.hpp"
#include "partitionlab/qseries.hpp"
#include "partitionlab/series.hpp"

using namespace partitionlab;

namespace {

Series<mpz_class> int_series(std::vector<long> v) {
  Series<mpz_class> s(v.size(), mpz_class(0));
  for (size_t i = 0; i < v.size(); ++i) s.c[i] = v[i];
  return s;
}

}  // namespace

TEST_CASE("pentagonal support matches Euler's expansion") {
  const auto supp = pentagonal_support(1, 30);
  std::vector<std::pair<size_t, int>> sorted(supp.begin(), supp.end());
  std::sort(sorted.begin(), sorted.end());
  const std::vector<std::pair<size_t, int>> expect{
      {0, 1}, {1, -1}, {2, -1}, {5, 1}, {7, 1}, {12, -1}, {15, -1}, {22, 1}, {26, 1}};
  CHECK(sorted == expect);

  const auto scaled = pentagonal_support(3, 30);
  for (const auto& [e, sg] : scaled) CHECK(e % 3 == 0);
}

TEST_CASE("pochhammer expansions at small order") {
  // (q;q)_infty = 1 - q - q^2 + q^5 + q^7 - ...
  const auto euler = pochhammer(mpz_class(1), 1, 1, 9);
  const std::vector<long> expect{1, -1, -1, 0, 0, 1, 0, 1, 0};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(euler.c[i] == expect[i]);

  // a = 0 gives the constant series 1
  const auto trivial = pochhammer(mpz_class(0), 1, 1, 6);
  CHECK(trivial.c[0] == 1);
  for (size_t i = 1; i < 6; ++i) CHECK(trivial.c[i] == 0);

  // shift 0 picks up the constant factor (1 - a)
  const auto shifted = pochhammer(mpz_class(2), 0, 3, 4);
  CHECK(shifted.c[0] == -1);  // (1-2) * ...
}

TEST_CASE("series inversion reproduces partition counts") {
  const size_t n = 32;
  const auto p = pochhammer(mpz_class(1), 1, 1, n).invert();
  const auto table = partition_numbers(n - 1);
  for (size_t i = 0; i < n; ++i) CHECK(p.c[i] == table[i]);
  // and both agree with brute-force enumeration
  for (int i = 0; i <= 20; ++i) CHECK(p.c[(size_t)i] == count_partitions(i));
}

TEST_CASE("product of series and its inverse is one") {
  auto s = int_series({1, 3, -2, 7, 0, 5, -1, 2});
  const auto prod = s.mul(s.invert());
  CHECK(prod.c[0] == 1);
  for (size_t i = 1; i < prod.order(); ++i) CHECK(prod.c[i] == 0);
  CHECK_THROWS_AS(int_series({2, 1}).invert(), std::domain_error);
}

TEST_CASE("parallel product matches serial reference") {
  const size_t n = 160;
  const auto a = partition_series(n);
  const auto b = distinct_series(n);
  const auto fast = a.mul(b);
  const auto slow = a.mul_serial(b);
  REQUIRE(fast.order() == slow.order());
  for (size_t i = 0; i < n; ++i) CHECK(fast.c[i] == slow.c[i]);
}

TEST_CASE("binary powering") {
  const auto bin = int_series({1, 1, 0, 0, 0, 0, 0}).pow(5);
  const std::vector<long> expect{1, 5, 10, 10, 5, 1, 0};
  for (size_t i = 0; i < expect.size(); ++i) CHECK(bin.c[i] == expect[i]);

  auto s = int_series({1, -4, 2, 9, -3, 1, 6, 0, 2, -5});
  const auto via_neg = s.pow(-3).mul(s.pow(3));
  CHECK(via_neg.c[0] == 1);
  for (size_t i = 1; i < via_neg.order(); ++i) CHECK(via_neg.c[i] == 0);
  CHECK(s.pow(0).c[0] == 1);
}

TEST_CASE("eta quotient expansion") {
  const size_t n = 48;
  SUBCASE("single inverse factor is the partition series") {
    const auto s = eta_quotient_expand({{{1, -1}}, {}}, n);
    const auto table = partition_numbers(n - 1);
    for (size_t i = 0; i < n; ++i) CHECK(s.c[i] == table[i]);
  }
  SUBCASE("quotient form of the distinct-part series") {
    const auto s = eta_quotient_expand({{{2, 1}, {1, -1}}, {}}, n);
    const auto d = distinct_series(n);
    for (size_t i = 0; i < n; ++i) CHECK(s.c[i] == d.c[i]);
  }
  SUBCASE("pentagonal passes agree with binary powering") {
    const auto fast = eta_quotient_expand({{{1, 24}}, {}}, 80);
    const auto slow = pochhammer(mpz_class(1), 1, 1, 80).pow(24);
    for (size_t i = 0; i < 80; ++i) CHECK(fast.c[i] == slow.c[i]);
    const auto fastInv = eta_quotient_expand({{{2, -5}}, {}}, 60);
    const auto slowInv = pochhammer(mpz_class(1), 2, 2, 60).pow(-5);
    for (size_t i = 0; i < 60; ++i) CHECK(fastInv.c[i] == slowInv.c[i]);
  }
  SUBCASE("leading power metadata") {
    CHECK(eta_leading_power({{1, 24}}) == 1);
    CHECK(eta_leading_power({{2, 1}, {1, -1}}) == mpq_class(1, 24));
    CHECK(eta_leading_power({{4, 1}, {1, -1}}) == mpq_class(1, 8));
  }
}

TEST_CASE("cyclotomic arithmetic") {
  SUBCASE("polynomial degrees equal the totient") {
    for (unsigned b = 1; b <= 128; ++b)
      CHECK(cyclotomic_poly(b).size() == euler_phi(b) + 1);
  }
  SUBCASE("twelfth cyclotomic polynomial") {
    const auto& phi = cyclotomic_poly(12);
    const std::vector<long> expect{1, 0, -1, 0, 1};
    REQUIRE(phi.size() == expect.size());
    for (size_t i = 0; i < phi.size(); ++i) CHECK(phi[i] == expect[i]);
  }
  SUBCASE("root powers behave like roots of unity") {
    for (unsigned b : {3u, 4u, 5u, 8u, 12u, 30u, 127u}) {
      Cyclo sum(b);
      for (unsigned j = 0; j < b; ++j) sum += Cyclo::root_power(b, j);
      CHECK(sum.is_zero());
      const auto z = Cyclo::root_power(b, 7);
      CHECK(z * Cyclo::root_power(b, -7) == Cyclo::one(b));
      CHECK(Cyclo::root_power(b, 7 + (long)b) == z);
    }
    CHECK(Cyclo::root_power(6, 3) == -Cyclo::one(6));
  }
  SUBCASE("unit inversion in series over a cyclotomic ring") {
    Series<Cyclo> s(12, Cyclo(8));
    s.c[0] = -Cyclo::root_power(8, 3);
    s.c[1] = Cyclo::root_power(8, 1);
    s.c[5] = Cyclo(8, 4);
    const auto prod = s.mul(s.invert());
    CHECK(prod.c[0] == Cyclo::one(8));
    for (size_t i = 1; i < prod.order(); ++i) CHECK(prod.c[i].is_zero());
  }
}

TEST_CASE("residue-class extraction by exact orthogonality") {
  const size_t n = 21;
  const unsigned b = 3;
  // mark distinct-part partitions by their number of parts
  std::vector<Series<Cyclo>> fam;
  for (unsigned k = 0; k < b; ++k) {
    Series<Cyclo> s = Series<Cyclo>::one(n, Cyclo(b));
    for (size_t j = 1; j < n; ++j) s.mul_one_minus(-Cyclo::root_power(b, k), j);
    fam.push_back(std::move(s));
  }
  for (long a = 0; a < (long)b; ++a) {
    const auto cls = extract_residue_class(fam, a, b);
    for (int m = 0; m <= 20; ++m) {
      mpz_class direct = 0;
      enumerate_partitions(m, {EnumFilter::DistinctParts, 0}, [&](const Partition& p) {
        if ((long)p.size() % b == a) ++direct;
      });
      CHECK(cls.c[(size_t)m] == direct);
    }
  }

  SUBCASE("bivariate route gives the same classes") {
    // prod (1 + xi q^j) marks each distinct-part partition by its part count
    Series<IntPoly> biv = Series<IntPoly>::one(n, IntPoly());
    for (size_t j = 1; j < n; ++j) biv.mul_one_minus(IntPoly::monomial(-1, 1), j);
    for (long a = 0; a < (long)b; ++a) {
      const auto viaPoly = extract_residue_class(biv, a, b);
      const auto viaRoots = extract_residue_class(fam, a, b);
      for (size_t i = 0; i < n; ++i) CHECK(viaPoly.c[i] == viaRoots.c[i]);
    }
  }

  SUBCASE("modulus one returns the series unchanged") {
    std::vector<Series<Cyclo>> triv;
    Series<Cyclo> s = Series<Cyclo>::one(8, Cyclo(1));
    s.c[3] = Cyclo(1, -5);
    triv.push_back(s);
    const auto r = extract_residue_class(triv, 0, 1);
    CHECK(r.c[0] == 1);
    CHECK(r.c[3] == -5);
  }
}

TEST_CASE("geometric factor passes match explicit products") {
  const size_t n = 40;
  Series<mpz_class> s = Series<mpz_class>::one(n, mpz_class(0));
  s.div_one_minus(mpz_class(1), 1);
  auto direct = int_series(std::vector<long>(n, 1));  // 1/(1-q)
  for (size_t i = 0; i < n; ++i) CHECK(s.c[i] == direct.c[i]);
  s.mul_one_minus(mpz_class(1), 1);
  CHECK(s.c[0] == 1);
  for (size_t i = 1; i < n; ++i) CHECK(s.c[i] == 0);
}

TEST_CASE("truncation order bookkeeping") {
  auto a = int_series({1, 2, 3, 4, 5});
  auto b = int_series({1, 1});
  const auto prod = a.mul(b);
  CHECK(prod.order() == 2);
  CHECK(prod.c[1] == 3);
  auto sum = a;
  sum += b;
  CHECK(sum.order() == 2);
  a.mul_qpow(2);
  CHECK(a.c[0] == 0);
  CHECK(a.c[2] == 1);
  CHECK(a.c[4] == 3);
}
