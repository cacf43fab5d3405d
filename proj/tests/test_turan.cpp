#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <algorithm>
#include <random>

#include "doctest.h"
#include "partitionlab/qseries.hpp"
#include "partitionlab/special.hpp"
#include "partitionlab/turan.hpp"

using namespace partitionlab;

namespace {

mpq_class q(long num, long den = 1) {
  mpq_class v{mpz_class(num), mpz_class(den)};
  v.canonicalize();
  return v;
}

bool both(const std::vector<mpq_class>& poly) {
  bool s = is_hyperbolic(poly, RootMethod::Sturm);
  bool h = is_hyperbolic(poly, RootMethod::Hankel);
  CHECK(s == h);
  return s;
}

}  // namespace

TEST_CASE("jensen polynomials carry exact binomial-weighted coefficients") {
  AlphaSource p = alpha_partition();
  JensenPoly j1 = jensen(p, 1, 0);
  CHECK(j1.coeff == std::vector<mpq_class>{1, 1});
  JensenPoly j2 = jensen(p, 2, 0);
  CHECK(j2.coeff == std::vector<mpq_class>{1, 2, 2});
  CHECK(j2.source == "p");
  CHECK(j2.d == 2);

  std::vector<mpz_class> table = partition_numbers(30);
  JensenPoly j4 = jensen(p, 4, 7);
  REQUIRE(j4.coeff.size() == 5);
  for (unsigned j = 0; j <= 4; ++j)
    CHECK(j4.coeff[j] == mpq_class(binomial(4, j) * table[7 + j]));
  CHECK(j4.coeff[4] == mpq_class(table[11]));  // leading = alpha(n+d)

  AlphaSource p3 = alpha_regular(3);
  CHECK(p3.id == "p_3");
  // 3-regular counts: 1, 1, 2, 2, 4, 5, 7 for n = 0..6
  CHECK(p3.value(6) == 7);
  CHECK(p3.value(0) == 1);
  JensenPoly r2 = jensen(p3, 2, 4);
  CHECK(r2.coeff == std::vector<mpq_class>{4, 10, 7});

  CHECK_THROWS_AS(jensen(p, 2, -1), std::invalid_argument);
  CHECK_THROWS_AS(alpha_regular(1), std::invalid_argument);
  CHECK_THROWS_AS(p.value(-3), std::invalid_argument);
}

TEST_CASE("root verdicts agree with hand-checked polynomials") {
  CHECK(both({q(-1), q(0), q(1)}));        // X^2 - 1
  CHECK_FALSE(both({q(1), q(0), q(1)}));   // X^2 + 1
  CHECK(both({q(1), q(-2), q(1)}));        // (X-1)^2, repeated root counts
  CHECK(both({q(0), q(-1), q(0), q(1)}));  // X^3 - X
  // (X^2+1)(X-1)^2 = X^4 - 2X^3 + 2X^2 - 2X + 1
  CHECK_FALSE(both({q(1), q(-2), q(2), q(-2), q(1)}));
  CHECK(both({q(5)}));                     // constants are vacuously hyperbolic
  CHECK(both({q(3), q(7)}));               // linear
  CHECK(both({q(-1, 4), q(0), q(1)}));     // X^2 - 1/4
  CHECK_FALSE(both({q(1, 2), q(1), q(3)}));  // 3X^2 + X + 1/2, discriminant < 0
  CHECK(both({q(-1), q(0), q(1), q(0), q(0)}));  // trailing zeros are trimmed

  CHECK_THROWS_AS(is_hyperbolic(std::vector<mpq_class>{}, RootMethod::Sturm),
                  std::invalid_argument);
  CHECK_THROWS_AS(is_hyperbolic(std::vector<mpq_class>{q(0), q(0)},
                                RootMethod::Hankel),
                  std::invalid_argument);
  // the moment route enumerates principal minors and refuses large degrees
  std::vector<mpq_class> big(18, q(0));
  big[0] = q(-1);
  big[17] = q(1);
  CHECK_THROWS_AS(is_hyperbolic(big, RootMethod::Hankel), std::invalid_argument);
  CHECK_FALSE(is_hyperbolic(big, RootMethod::Sturm));  // X^17 - 1, one real root
}

TEST_CASE("newton sums and minors match direct root computations") {
  // (X-1)(X-2)(X-3): power sums of {1,2,3}
  HankelReport c = hankel_report({q(-6), q(11), q(-6), q(1)});
  CHECK(c.newtonSums == std::vector<mpq_class>{3, 6, 14, 36, 98});
  CHECK(c.hyperbolic);

  HankelReport a = hankel_report({q(-1), q(0), q(1)});
  CHECK(a.newtonSums == std::vector<mpq_class>{2, 0, 2});
  CHECK(a.minors == std::vector<mpq_class>{2, 4});
  CHECK(a.hyperbolic);

  HankelReport b = hankel_report({q(1), q(0), q(1)});
  CHECK(b.newtonSums == std::vector<mpq_class>{2, 0, -2});
  CHECK(b.minors == std::vector<mpq_class>{2, -4});
  CHECK_FALSE(b.hyperbolic);

  // repeated root: singular but still positive semidefinite
  HankelReport r = hankel_report({q(1), q(-2), q(1)});
  CHECK(r.newtonSums == std::vector<mpq_class>{2, 2, 2});
  CHECK(r.minors == std::vector<mpq_class>{2, 0});
  CHECK(r.hyperbolic);

  // scaling the polynomial leaves the roots and the report unchanged
  HankelReport s = hankel_report({q(-3), q(0), q(3)});
  CHECK(s.newtonSums == a.newtonSums);
}

TEST_CASE("sturm and moment verdicts agree on random rational polynomials") {
  std::mt19937 rng(20240817);
  std::uniform_int_distribution<int> degDist(1, 5);
  std::uniform_int_distribution<long> numDist(-9, 9);
  std::uniform_int_distribution<long> denDist(1, 9);
  int hyperbolicCount = 0;
  for (int trial = 0; trial < 1000; ++trial) {
    int deg = degDist(rng);
    std::vector<mpq_class> poly;
    for (int i = 0; i <= deg; ++i) {
      long num = numDist(rng);
      if (i == deg)
        while (num == 0) num = numDist(rng);
      poly.push_back(q(num, denDist(rng)));
    }
    if (both(poly)) ++hyperbolicCount;
  }
  // both root classes occur in the sample
  CHECK(hyperbolicCount > 100);
  CHECK(hyperbolicCount < 900);
}

TEST_CASE("sturm and moment verdicts agree on jensen windows") {
  AlphaSource p2 = alpha_regular(2);
  for (long n = 0; n <= 40; ++n) {
    JensenPoly j = jensen(p2, 2, n);
    CHECK(is_hyperbolic(j, RootMethod::Sturm) ==
          is_hyperbolic(j, RootMethod::Hankel));
  }
  AlphaSource p3 = alpha_regular(3);
  for (long n = 175; n <= 190; ++n) {
    JensenPoly j = jensen(p3, 3, n);
    bool s = is_hyperbolic(j, RootMethod::Sturm);
    CHECK(s == is_hyperbolic(j, RootMethod::Hankel));
    if (n == 183) CHECK_FALSE(s);  // last failing shift before the cutoff
    if (n >= 184) CHECK(s);
  }
}

TEST_CASE("degree-2 shift window for the partition sequence") {
  AlphaSource p = alpha_partition();
  for (long n : {23L, 25L, 26L, 500L}) {
    CHECK(is_hyperbolic(jensen(p, 2, n), RootMethod::Sturm));
    CHECK(is_hyperbolic(jensen(p, 2, n), RootMethod::Hankel));
  }
  CHECK_FALSE(is_hyperbolic(jensen(p, 2, 24), RootMethod::Sturm));
  CHECK_FALSE(is_hyperbolic(jensen(p, 2, 24), RootMethod::Hankel));

  // the order-2 inequality p(n+1)^2 >= p(n) p(n+2) holds on all of [25, 2000]
  std::vector<mpz_class> t = partition_numbers(2002);
  long lastFailure = -1;
  for (long n = 1; n <= 2000; ++n)
    if (t[n + 1] * t[n + 1] < t[n] * t[n + 2]) lastFailure = n;
  CHECK(lastFailure == 24);
}

TEST_CASE("threshold scans reproduce the recorded cutoffs") {
  const long expected[3][4] = {
      {32, 57, 16, 41},      // degree 2, k = 2..5
      {120, 184, 63, 136},   // degree 3
      {266, 390, 137, 294},  // degree 4
  };
  for (unsigned d = 2; d <= 4; ++d)
    for (unsigned k = 2; k <= 5; ++k) {
      ThresholdScan s = hyperbolicity_threshold(k, d, 500);
      CHECK(s.threshold == expected[d - 2][k - 2]);
      REQUIRE(!s.failures.empty());
      CHECK(s.failures.back() == s.threshold - 1);
      CHECK(std::is_sorted(s.failures.begin(), s.failures.end()));
    }
  ThresholdScan s22 = hyperbolicity_threshold(2, 2, 500);
  CHECK(s22.failures.size() == 14);

  // the scan window matters only above the last failure
  CHECK(hyperbolicity_threshold(2, 2, 200).threshold == 32);

  CHECK_THROWS_AS(hyperbolicity_threshold(2, 0, 100), std::invalid_argument);
  CHECK_THROWS_AS(hyperbolicity_threshold(2, 5, 100), std::invalid_argument);
  CHECK_THROWS_AS(hyperbolicity_threshold(1, 2, 100), std::invalid_argument);
  CHECK_THROWS_AS(hyperbolicity_threshold(2, 2, 0), std::invalid_argument);
}

TEST_CASE("renormalization parameters behave") {
  RenormalizationParams a = renormalization_params(2, 1, 100, 50);
  CHECK(a.mk == q(1, 48));
  CHECK(renormalization_params(3, 1, 100, 50).mk == q(1, 36));
  CHECK(a.delta > Real(64, 0.0));
  CHECK(a.truncation >= 2);
  CHECK(a.note.find("convention") != std::string::npos);

  // the width shrinks as the shift grows
  Real d100 = renormalization_params(2, 3, 100, 50).delta;
  Real d1k = renormalization_params(2, 3, 1000, 50).delta;
  Real d10k = renormalization_params(2, 3, 10000, 50).delta;
  CHECK(d1k < d100);
  CHECK(d10k < d1k);

  // degree feeds only the growth-rate correction, not the width
  Real a1 = renormalization_params(2, 1, 400, 50).A;
  Real a4 = renormalization_params(2, 4, 400, 50).A;
  CHECK(pl_abs(a1 - a4) > Real(64, 1e-10));  // the correction sum is active
  CHECK(pl_abs(renormalization_params(2, 3, 400, 50).delta -
               renormalization_params(2, 4, 400, 50).delta) <= Real(64, 0.0));

  CHECK_THROWS_AS(renormalization_params(1, 2, 100, 50), std::invalid_argument);
  CHECK_THROWS_AS(renormalization_params(2, 2, 1, 50), std::invalid_argument);
}

TEST_CASE("growth rate matches the exact ratio of k-regular counts") {
  RenormalizationParams pr = renormalization_params(2, 1, 2000, 50);
  std::vector<mpz_class> pk = regular_series(2, 2003).c;
  long wp = bits_for_digits(60);
  Real ratio = Real(wp, pk[2001]) / Real(wp, pk[2000]);
  Real rel = pl_abs(ratio / pl_exp(pr.A) - Real(wp, 1L));
  CHECK(rel < Real(wp, 1e-2));  // the contract
  CHECK(rel < Real(wp, 5e-4));  // the measured slack, frozen
}

TEST_CASE("renormalized polynomials approach the hermite limit") {
  RenormalizedJensen flat = renormalized_jensen(2, 0, 100, 50);
  REQUIRE(flat.coeff.size() == 1);
  CHECK(pl_abs(flat.coeff[0] - Real(64, 1.0)) <= Real(64, 0.0));
  CHECK(flat.deviation <= Real(64, 0.0));

  for (unsigned k = 2; k <= 3; ++k)
    for (unsigned d = 1; d <= 4; ++d) {
      Real prev;
      bool first = true;
      for (long n : {100L, 400L, 1600L}) {
        RenormalizedJensen r = renormalized_jensen(k, d, n, 50);
        if (!first) CHECK(r.deviation < prev);
        prev = r.deviation;
        first = false;
      }
    }

  // coefficient-wise convergence toward the hermite coefficients
  for (unsigned k = 2; k <= 3; ++k)
    for (unsigned d = 1; d <= 4; ++d) {
      std::vector<mpz_class> h = hermite_poly(d);
      auto maxErr = [&](long n) {
        RenormalizedJensen r = renormalized_jensen(k, d, n, 50);
        Real m(r.coeff[0].prec(), 0L);
        for (unsigned i = 0; i <= d; ++i) {
          Real e = pl_abs(r.coeff[i] - Real(r.coeff[i].prec(), h[i]));
          if (e > m) m = e;
        }
        return m;
      };
      CHECK(maxErr(1600) < maxErr(100));
    }

  RenormalizedJensen r = renormalized_jensen(2, 3, 1600, 50);
  CHECK(r.deviation > Real(64, 1.5));
  CHECK(r.deviation < Real(64, 1.7));
  CHECK(pl_abs(r.coeff[3] - Real(64, 1.0)) < Real(64, 1e-3));
  CHECK(pl_abs(r.coeff[1] - Real(64, -6.0)) < Real(64, 0.5));
}

TEST_CASE("renormalized deviation is insensitive to the precision request") {
  Real lo = renormalized_jensen(2, 3, 400, 30).deviation;
  Real hi = renormalized_jensen(2, 3, 400, 60).deviation;
  CHECK(pl_abs(lo - hi) < Real(64, 1e-20));
}
