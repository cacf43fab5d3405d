#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"

#include "partitionlab/partitions.hpp"
#include "partitionlab/qseries.hpp"

using namespace partitionlab;

TEST_CASE("partition series, recurrence, and enumeration agree") {
  const size_t n = 40;
  const auto s = partition_series(n);
  const auto table = partition_numbers(n - 1);
  for (size_t i = 0; i < n; ++i) CHECK(s.c[i] == table[i]);
  for (int i = 0; i <= 26; ++i) CHECK(table[(size_t)i] == count_partitions(i));
  CHECK(table[39] == 31185);
}

TEST_CASE("filtered series match enumeration") {
  const size_t n = 26;
  const auto d = distinct_series(n);
  for (int i = 0; i < (int)n; ++i)
    CHECK(d.c[(size_t)i] == count_partitions(i, {EnumFilter::DistinctParts, 0}));
  for (unsigned k : {2u, 3u, 5u, 7u}) {
    const auto r = regular_series(k, n);
    for (int i = 0; i < (int)n; ++i)
      CHECK(r.c[(size_t)i] == count_partitions(i, {EnumFilter::Regular, (int)k}));
  }
  // 2-regular is the distinct-part series
  const auto r2 = regular_series(2, n);
  for (size_t i = 0; i < n; ++i) CHECK(r2.c[i] == d.c[i]);
}

TEST_CASE("biased part-count series over distinct partitions") {
  for (int t = 1; t <= 5; ++t)
    for (int r = 1; r <= t; ++r) {
      const auto D = distinct_bias_series(r, t, 19);
      for (int m = 0; m <= 18; ++m)
        CHECK(D.c[(size_t)m] == sum_parts_congruent_distinct(m, r, t));
    }
  CHECK(distinct_bias_series(1, 1, 4).c[3] == 3);

  SUBCASE("single-coefficient path agrees with the full product") {
    const auto D = distinct_bias_series(2, 3, 50);
    for (size_t m : {5, 17, 30, 49}) CHECK(distinct_bias_value(2, 3, m) == D.c[m]);
  }
}

TEST_CASE("signed arc-parity series") {
  const size_t n = 25;
  const auto g = seaweed_series(n);
  for (int m = 0; m < (int)n; ++m) {
    const auto eo = meander_parity_counts(m);
    // a(m) = (-1)^{ceil(m/2)} (odd - even)
    mpz_class diff = eo.odd - eo.even;
    if (((m + 1) / 2) % 2 == 1) diff = -diff;
    CHECK(g.c[(size_t)m] == diff);
  }

  SUBCASE("part-count residues against enumeration") {
    const auto d = seaweed_residue_series(n);
    for (int m = 0; m < (int)n; ++m) {
      const auto hist = partcount_residue_counts_odd(m, 4);
      for (size_t j = 0; j < 4; ++j) CHECK(d[j].c[(size_t)m] == hist[j]);
    }
  }
  SUBCASE("even/odd dictionary") {
    for (int m = 1; m < (int)n; ++m) {
      const auto eo = meander_parity_counts(m);
      const auto viaSeries = seaweed_even_odd((size_t)m);
      CHECK(viaSeries.even == eo.even);
      CHECK(viaSeries.odd == eo.odd);
    }
  }
}

TEST_CASE("hook parity imbalance series") {
  for (int t : {2, 3, 5, 7}) {
    const auto s = hook_parity_series(t, 29);
    for (int m = 0; m <= 28; ++m) CHECK(s.c[(size_t)m] == hook_parity_imbalance(m, t));
  }
}

TEST_CASE("marked hook-count series") {
  SUBCASE("bivariate coefficients at small size") {
    const auto h2 = thook_bivariate_series(2, 6);
    CHECK(h2.c[3].coeff(0) == 1);
    CHECK(h2.c[3].coeff(1) == 2);
    CHECK(h2.c[4].coeff(2) == 5);
    CHECK(h2.c[4].coeff(0) == 0);
    CHECK(h2.c[4].coeff(1) == 0);
    const auto h3 = thook_bivariate_series(3, 6);
    CHECK(h3.c[2].coeff(0) == 2);
    CHECK(h3.c[3].coeff(1) == 3);
    CHECK(h3.c[3].coeff(0) == 0);
  }
  SUBCASE("residue series against enumeration") {
    struct Probe {
      int t;
      unsigned b;
    };
    for (const auto& pr : {Probe{2, 3}, Probe{3, 4}, Probe{4, 3}}) {
      std::vector<Series<mpz_class>> cls;
      for (long a = 0; a < (long)pr.b; ++a)
        cls.push_back(thook_residue_series(pr.t, a, pr.b, 21));
      for (int m = 0; m <= 20; ++m) {
        const auto hist = thook_residue_counts(m, pr.t, pr.b);
        for (size_t a = 0; a < pr.b; ++a) CHECK(cls[a].c[(size_t)m] == hist[a]);
      }
    }
  }
  SUBCASE("named small values") {
    const auto h13 = thook_residue_series(3, 1, 3, 6);
    CHECK(h13.c[3] == 3);
    CHECK(h13.c[4] == 3);
    CHECK(h13.c[5] == 6);
    const auto h02 = thook_residue_series(2, 0, 3, 7);
    CHECK(h02.c[0] == 1);
    CHECK(h02.c[1] == 1);
    CHECK(h02.c[2] == 0);
    CHECK(h02.c[3] == 1);
    CHECK(h02.c[6] == 11);
  }
}

TEST_CASE("Poincare polynomial series of point configurations") {
  SUBCASE("full plane") {
    const auto g = hilbert_poincare_series(6);
    // degree profile at q^4: 1 + T^2 + 2T^4 + T^6
    CHECK(g.c[4].coeff(0) == 1);
    CHECK(g.c[4].coeff(2) == 1);
    CHECK(g.c[4].coeff(4) == 2);
    CHECK(g.c[4].coeff(6) == 1);
    CHECK(g.c[4].coeff(1) == 0);
    CHECK(g.c[4].coeff(3) == 0);
    // specializing the marker to 1 recovers p(n)
    const auto p = partition_numbers(5);
    for (size_t m = 0; m < 6; ++m) {
      mpz_class total = 0;
      for (size_t j = 0; j < g.c[m].c.size(); ++j) total += g.c[m].c[j];
      CHECK(total == p[m]);
    }
  }
  SUBCASE("weighted fixed locus") {
    const auto g = quasi_hilbert_poincare_series(2, 3, 7);
    CHECK(g.c[5].coeff(0) == 6);
    CHECK(g.c[5].coeff(2) == 1);
    const auto p = partition_numbers(6);
    for (size_t m = 0; m < 7; ++m) {
      mpz_class total = 0;
      for (size_t j = 0; j < g.c[m].c.size(); ++j) total += g.c[m].c[j];
      CHECK(total == p[m]);
    }
  }
  SUBCASE("root-of-unity families match the bivariate route") {
    const unsigned b = 3;
    const size_t n = 18;
    const auto biv = hilbert_poincare_series(n);
    const auto fam = hilbert_family(b, n);
    for (long a = 0; a < (long)b; ++a) {
      const auto viaPoly = extract_residue_class(biv, a, b);
      const auto viaRoots = extract_residue_class(fam, a, b);
      for (size_t i = 0; i < n; ++i) CHECK(viaPoly.c[i] == viaRoots.c[i]);
    }
    const auto qbiv = quasi_hilbert_poincare_series(2, 3, n);
    const auto qfam = quasi_hilbert_family(2, 3, b, n);
    for (long a = 0; a < (long)b; ++a) {
      const auto viaPoly = extract_residue_class(qbiv, a, b);
      const auto viaRoots = extract_residue_class(qfam, a, b);
      for (size_t i = 0; i < n; ++i) CHECK(viaPoly.c[i] == viaRoots.c[i]);
    }
  }
}

TEST_CASE("discriminant power series coefficients") {
  const auto tau = tau_values(12);
  CHECK(tau[1] == 1);
  CHECK(tau[2] == -24);
  CHECK(tau[3] == 252);
  CHECK(tau[4] == -1472);
  CHECK(tau[5] == 4830);
  CHECK(tau[6] == -6048);
  CHECK(tau[7] == -16744);
  CHECK(tau[10] == -115920);
  CHECK(tau[12] == -370944);
}
