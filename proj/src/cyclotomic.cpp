#include "partitionlab/cyclotomic.hpp"

#include <map>
#include <mutex>
#include <stdexcept>

namespace partitionlab {

unsigned euler_phi(unsigned b) {
  unsigned r = b;
  for (unsigned p = 2; p * p <= b; ++p) {
    if (b % p == 0) {
      r -= r / p;
      while (b % p == 0) b /= p;
    }
  }
  if (b > 1) r -= r / b;
  return r;
}

namespace {

// quotient of exact polynomial division, both operands monic, ascending coeffs
std::vector<mpz_class> poly_divide_exact(std::vector<mpz_class> num,
                                         const std::vector<mpz_class>& den) {
  const size_t dn = num.size() - 1, dd = den.size() - 1;
  std::vector<mpz_class> q(dn - dd + 1);
  for (size_t i = dn + 1; i-- > dd;) {
    mpz_class c = num[i];
    q[i - dd] = c;
    if (c == 0) continue;
    for (size_t j = 0; j <= dd; ++j) num[i - dd + j] -= c * den[j];
  }
  for (const auto& r : num)
    if (r != 0) throw std::logic_error("cyclotomic division not exact");
  return q;
}

std::map<unsigned, std::vector<mpz_class>> g_phi_cache;
std::mutex g_phi_mutex;

std::vector<mpz_class> compute_cyclotomic(unsigned b) {
  if (b == 1) return {mpz_class(-1), mpz_class(1)};
  // x^b - 1 divided by the cyclotomic polynomials of all proper divisors
  std::vector<mpz_class> num(b + 1);
  num[0] = -1;
  num[b] = 1;
  for (unsigned d = 1; d < b; ++d)
    if (b % d == 0) num = poly_divide_exact(std::move(num), cyclotomic_poly(d));
  return num;
}

}  // namespace

const std::vector<mpz_class>& cyclotomic_poly(unsigned b) {
  {
    std::lock_guard<std::mutex> lk(g_phi_mutex);
    auto it = g_phi_cache.find(b);
    if (it != g_phi_cache.end()) return it->second;
  }
  auto phi = compute_cyclotomic(b);
  std::lock_guard<std::mutex> lk(g_phi_mutex);
  return g_phi_cache.emplace(b, std::move(phi)).first->second;
}

void cyclo_reduce(unsigned b, std::vector<mpz_class>& a) {
  const auto& phi = cyclotomic_poly(b);
  const size_t d = phi.size() - 1;
  if (a.size() <= d) return;
  for (size_t i = a.size(); i-- > d;) {
    if (a[i] == 0) continue;
    mpz_class c = a[i];
    a[i] = 0;
    for (size_t j = 0; j < d; ++j) a[i - d + j] -= c * phi[j];
  }
  a.resize(d);
}

Cyclo Cyclo::root_power(unsigned b, long j) {
  j %= (long)b;
  if (j < 0) j += b;
  Cyclo r(b);
  r.a.assign((size_t)j + 1, 0);
  r.a[(size_t)j] = 1;
  cyclo_reduce(b, r.a);
  return r;
}

bool Cyclo::is_zero() const {
  for (const auto& c : a)
    if (c != 0) return false;
  return true;
}

bool Cyclo::is_integer() const {
  for (size_t i = 1; i < a.size(); ++i)
    if (a[i] != 0) return false;
  return true;
}

mpz_class Cyclo::integer_value() const {
  if (!is_integer()) throw std::logic_error("cyclotomic value is not an integer");
  return a.empty() ? mpz_class(0) : a[0];
}

Cyclo& Cyclo::operator+=(const Cyclo& o) {
  if (b != o.b) throw std::invalid_argument("cyclotomic ring mismatch");
  if (a.size() < o.a.size()) a.resize(o.a.size());
  for (size_t i = 0; i < o.a.size(); ++i) a[i] += o.a[i];
  return *this;
}

Cyclo& Cyclo::operator-=(const Cyclo& o) {
  if (b != o.b) throw std::invalid_argument("cyclotomic ring mismatch");
  if (a.size() < o.a.size()) a.resize(o.a.size());
  for (size_t i = 0; i < o.a.size(); ++i) a[i] -= o.a[i];
  return *this;
}

Cyclo Cyclo::operator-() const {
  Cyclo r(b);
  r.a.resize(a.size());
  for (size_t i = 0; i < a.size(); ++i) r.a[i] = -a[i];
  return r;
}

Cyclo Cyclo::operator*(const Cyclo& o) const {
  if (b != o.b) throw std::invalid_argument("cyclotomic ring mismatch");
  Cyclo r(b);
  if (is_zero() || o.is_zero()) return r;
  r.a.assign(a.size() + o.a.size() - 1, 0);
  for (size_t i = 0; i < a.size(); ++i) {
    if (a[i] == 0) continue;
    for (size_t j = 0; j < o.a.size(); ++j) r.a[i + j] += a[i] * o.a[j];
  }
  cyclo_reduce(b, r.a);
  return r;
}

bool Cyclo::operator==(const Cyclo& o) const {
  if (b != o.b) return false;
  size_t n = std::max(a.size(), o.a.size());
  for (size_t i = 0; i < n; ++i) {
    const mpz_class& x = i < a.size() ? a[i] : mpz_class(0);
    const mpz_class& y = i < o.a.size() ? o.a[i] : mpz_class(0);
    if (x != y) return false;
  }
  return true;
}

void Cyclo::mul_int(const mpz_class& c) {
  for (auto& x : a) x *= c;
}

void Cyclo::div_int_exact(const mpz_class& d) {
  for (auto& x : a) {
    if (x % d != 0) throw std::logic_error("cyclotomic coordinate not divisible");
    x /= d;
  }
}

Cyclo operator+(Cyclo a, const Cyclo& b) { return a += b; }
Cyclo operator-(Cyclo a, const Cyclo& b) { return a -= b; }

}  // namespace partitionlab
