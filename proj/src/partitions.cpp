#include "partitionlab/partitions.hpp"

#include <numeric>
#include <stdexcept>

namespace partitionlab {

namespace {

struct Enumerator {
  const EnumFilter& f;
  const std::function<void(const Partition&)>& cb;
  Partition cur;

  // maxPart already respects the distinctness constraint; runLen counts how
  // often the previous part value occurs at the tail of cur
  void rec(int remaining, int maxPart, int runLen) {
    if (remaining == 0) {
      cb(cur);
      return;
    }
    for (int p = std::min(maxPart, remaining); p >= 1; --p) {
      switch (f.kind) {
        case EnumFilter::OddParts:
          if (p % 2 == 0) continue;
          break;
        case EnumFilter::Regular:
          if (p % f.k == 0) continue;
          break;
        case EnumFilter::BoundedMultiplicity:
          if (!cur.empty() && cur.back() == p && runLen + 1 >= f.k) continue;
          break;
        default:
          break;
      }
      const int run = (!cur.empty() && cur.back() == p) ? runLen + 1 : 1;
      cur.push_back(p);
      rec(remaining - p, f.kind == EnumFilter::DistinctParts ? p - 1 : p, run);
      cur.pop_back();
    }
  }
};

}  // namespace

void enumerate_partitions(int n, const EnumFilter& f,
                          const std::function<void(const Partition&)>& cb) {
  if (n < 0) throw std::invalid_argument("partition size must be >= 0");
  if ((f.kind == EnumFilter::Regular || f.kind == EnumFilter::BoundedMultiplicity) &&
      f.k < 2)
    throw std::invalid_argument("filter parameter must be >= 2");
  Enumerator e{f, cb, {}};
  e.rec(n, n, 0);
}

std::vector<int> conjugate(const Partition& p) {
  if (p.empty()) return {};
  std::vector<int> c(p[0], 0);
  for (int part : p)
    for (int j = 0; j < part; ++j) ++c[j];
  return c;
}

std::vector<int> hook_lengths(const Partition& p) {
  const auto conj = conjugate(p);
  std::vector<int> h;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      h.push_back(p[i] - j + conj[j] - (int)i - 1);
  return h;
}

std::vector<int> hook_lengths_multiple_of(const Partition& p, int t) {
  std::vector<int> out;
  for (int h : hook_lengths(p))
    if (h % t == 0) out.push_back(h);
  return out;
}

int hook_count_multiple_of(const Partition& p, int t) {
  const auto conj = conjugate(p);
  int cnt = 0;
  for (size_t i = 0; i < p.size(); ++i)
    for (int j = 0; j < p[i]; ++j)
      if ((p[i] - j + conj[j] - (int)i - 1) % t == 0) ++cnt;
  return cnt;
}

mpz_class hook_product(const Partition& p) {
  mpz_class r = 1;
  for (int h : hook_lengths(p)) r *= h;
  return r;
}

mpz_class standard_tableaux(const Partition& p) {
  const int n = std::accumulate(p.begin(), p.end(), 0);
  mpz_class fact;
  mpz_fac_ui(fact.get_mpz_t(), (unsigned long)n);
  const mpz_class hp = hook_product(p);
  if (fact % hp != 0) throw std::logic_error("hook product does not divide n!");
  return fact / hp;
}

namespace {

struct DSU {
  std::vector<int> parent;
  explicit DSU(int n) : parent(n) {
    for (int i = 0; i < n; ++i) parent[i] = i;
  }
  int find(int x) {
    while (parent[x] != x) x = parent[x] = parent[parent[x]];
    return x;
  }
  void unite(int a, int b) { parent[find(a)] = find(b); }
};

// nested arcs of one side; row of length L at offset c pairs cell c+j with
// cell c+L-1-j
void add_arcs(const Partition& rows, std::vector<int>& partner) {
  int c = 0;
  for (int L : rows) {
    for (int j = 0; 2 * j + 1 < L; ++j) {
      partner[c + j] = c + L - 1 - j;
      partner[c + L - 1 - j] = c + j;
    }
    c += L;
  }
}

}  // namespace

MeanderShape meander_index(const Partition& top, const Partition& bottom) {
  const int n = std::accumulate(top.begin(), top.end(), 0);
  if (n != std::accumulate(bottom.begin(), bottom.end(), 0))
    throw std::invalid_argument("arc diagram needs equal sizes");
  std::vector<int> up(n, -1), down(n, -1);
  add_arcs(top, up);
  add_arcs(bottom, down);
  DSU dsu(n);
  std::vector<int> edges;
  for (int i = 0; i < n; ++i) {
    if (up[i] > i) dsu.unite(i, up[i]);
    if (down[i] > i) dsu.unite(i, down[i]);
  }
  // a component is a cycle iff its edge count equals its vertex count
  std::vector<long> vcnt(n, 0), ecnt(n, 0);
  for (int i = 0; i < n; ++i) {
    ++vcnt[dsu.find(i)];
    if (up[i] > i) ++ecnt[dsu.find(i)];
    if (down[i] > i) ++ecnt[dsu.find(i)];
  }
  MeanderShape s;
  for (int i = 0; i < n; ++i) {
    if (vcnt[i] == 0) continue;
    if (ecnt[i] == vcnt[i]) ++s.cycles;
    else ++s.paths;
  }
  s.index = 2 * s.cycles + s.paths - 1;
  return s;
}

long parts_congruent(const Partition& p, int r, int t) {
  long cnt = 0;
  const int rm = ((r % t) + t) % t;
  for (int part : p)
    if (part % t == rm) ++cnt;
  return cnt;
}

EvenOddCounts meander_parity_counts(int n) {
  EvenOddCounts out{0, 0};
  const Partition row{n};
  enumerate_partitions(n, {EnumFilter::OddParts, 0}, [&](const Partition& lam) {
    const auto s = meander_index(lam, row);
    if (s.index % 2 == 0) ++out.even;
    else ++out.odd;
  });
  return out;
}

mpz_class count_partitions(int n) { return count_partitions(n, {}); }

mpz_class count_partitions(int n, const EnumFilter& f) {
  mpz_class cnt = 0;
  enumerate_partitions(n, f, [&](const Partition&) { ++cnt; });
  return cnt;
}

mpz_class sum_parts_congruent_distinct(int n, int r, int t) {
  mpz_class total = 0;
  enumerate_partitions(n, {EnumFilter::DistinctParts, 0},
                       [&](const Partition& p) { total += parts_congruent(p, r, t); });
  return total;
}

std::vector<mpz_class> thook_residue_counts(int n, int t, unsigned b) {
  std::vector<mpz_class> out(b, 0);
  enumerate_partitions(n, {}, [&](const Partition& p) {
    ++out[(unsigned)hook_count_multiple_of(p, t) % b];
  });
  return out;
}

std::vector<mpz_class> partcount_residue_counts_odd(int n, unsigned b) {
  std::vector<mpz_class> out(b, 0);
  enumerate_partitions(n, {EnumFilter::OddParts, 0}, [&](const Partition& p) {
    ++out[p.size() % b];
  });
  return out;
}

mpz_class hook_parity_imbalance(int n, int t) {
  mpz_class diff = 0;
  enumerate_partitions(n, {}, [&](const Partition& p) {
    if (hook_count_multiple_of(p, t) % 2 == 0) ++diff;
    else --diff;
  });
  return diff;
}

}  // namespace partitionlab
