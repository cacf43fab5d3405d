#include "partitionlab/series.hpp"

namespace partitionlab {

std::vector<std::pair<size_t, int>> pentagonal_support(size_t m, size_t n) {
  // prod_k (1 - x^k) = sum_{g in Z} (-1)^g x^{g(3g-1)/2}, then x = q^m
  std::vector<std::pair<size_t, int>> out;
  out.emplace_back(0, 1);
  for (long g = 1;; ++g) {
    const long e1 = g * (3 * g - 1) / 2;
    const long e2 = g * (3 * g + 1) / 2;
    const int sign = (g % 2 == 0) ? 1 : -1;
    const size_t k1 = (size_t)e1 * m, k2 = (size_t)e2 * m;
    if (k1 >= n && k2 >= n) break;
    if (k1 < n) out.emplace_back(k1, sign);
    if (k2 < n) out.emplace_back(k2, sign);
  }
  return out;
}

void mul_eta_factor(Series<mpz_class>& s, size_t m) {
  const size_t n = s.order();
  auto supp = pentagonal_support(m, n);
  std::vector<mpz_class> out(n);
#pragma omp parallel for schedule(static)
  for (long long i = 0; i < (long long)n; ++i) {
    mpz_class acc = 0;
    for (const auto& [e, sg] : supp) {
      if (e > (size_t)i) break;
      if (sg > 0) acc += s.c[(size_t)i - e];
      else acc -= s.c[(size_t)i - e];
    }
    out[(size_t)i] = std::move(acc);
  }
  s.c = std::move(out);
}

void div_eta_factor(Series<mpz_class>& s, size_t m) {
  // solve out * prod(1 - q^{mk}) = s coefficient by coefficient; the support
  // starts with +1 at exponent 0, so the recurrence needs no division
  const size_t n = s.order();
  auto supp = pentagonal_support(m, n);
  for (size_t i = 0; i < n; ++i) {
    mpz_class acc = s.c[i];
    for (size_t t = 1; t < supp.size(); ++t) {
      const auto& [e, sg] = supp[t];
      if (e > i) break;
      if (sg > 0) acc -= s.c[i - e];
      else acc += s.c[i - e];
    }
    s.c[i] = std::move(acc);
  }
}

mpq_class eta_leading_power(const std::vector<EtaQuotientSpec::Factor>& factors) {
  mpq_class p = 0;
  for (const auto& f : factors) p += mpq_class((long)f.scale * f.exponent, 24);
  p.canonicalize();
  return p;
}

Series<mpz_class> eta_quotient_expand(const EtaQuotientSpec& spec, size_t n) {
  Series<mpz_class> s = Series<mpz_class>::one(n, mpz_class(0));
  for (const auto& f : spec.factors) {
    if (f.scale == 0) throw std::invalid_argument("eta factor scale must be >= 1");
    for (long r = 0; r < std::abs(f.exponent); ++r) {
      if (f.exponent > 0) mul_eta_factor(s, f.scale);
      else div_eta_factor(s, f.scale);
    }
  }
  return s;
}

Series<mpz_class> extract_residue_class(const std::vector<Series<Cyclo>>& family,
                                        long a, unsigned b) {
  if (family.size() != b)
    throw std::invalid_argument("need one specialization per b-th root of unity");
  if (b == 1) {
    const auto& s = family[0];
    Series<mpz_class> r(s.order(), mpz_class(0));
    for (size_t i = 0; i < s.order(); ++i) r.c[i] = s.c[i].integer_value();
    return r;
  }
  size_t n = family[0].order();
  for (const auto& s : family) {
    n = std::min(n, s.order());
    if (s.proto.b != b) throw std::invalid_argument("family ring mismatch");
  }
  Series<mpz_class> r(n, mpz_class(0));
  for (size_t i = 0; i < n; ++i) {
    Cyclo acc(b);
    for (unsigned k = 0; k < b; ++k) {
      // zeta_b^{-ak} * S(zeta_b^k; q)[i]
      acc += Cyclo::root_power(b, -(a * (long)k)) * family[k].c[i];
    }
    mpz_class v = acc.integer_value();  // throws if not an integer
    if (v % b != 0) throw std::logic_error("orthogonality sum not divisible by b");
    r.c[i] = v / b;
  }
  return r;
}

Series<mpz_class> extract_residue_class(const Series<IntPoly>& s, long a, unsigned b) {
  if (b == 0) throw std::invalid_argument("residue modulus must be >= 1");
  long am = a % (long)b;
  if (am < 0) am += b;
  Series<mpz_class> r(s.order(), mpz_class(0));
  for (size_t i = 0; i < s.order(); ++i) {
    mpz_class acc = 0;
    const auto& p = s.c[i].c;
    for (size_t d = (size_t)am; d < p.size(); d += b) acc += p[d];
    r.c[i] = std::move(acc);
  }
  return r;
}

}  // namespace partitionlab
