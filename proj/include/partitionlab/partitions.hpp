#pragma once

#include <gmpxx.h>

#include <functional>
#include <vector>

namespace partitionlab {

// weakly decreasing positive parts
using Partition = std::vector<int>;

struct EnumFilter {
  enum Kind {
    All,
    DistinctParts,
    OddParts,
    Regular,              // no part divisible by k
    BoundedMultiplicity,  // each part appears fewer than k times
  } kind = All;
  int k = 0;
};

// Visits partitions of n in descending lexicographic order, (n) first.
// Filters prune inside the recursion, not after.
void enumerate_partitions(int n, const EnumFilter& f,
                          const std::function<void(const Partition&)>& cb);

std::vector<int> conjugate(const Partition& p);
// multiset of hook lengths, row-major order
std::vector<int> hook_lengths(const Partition& p);
std::vector<int> hook_lengths_multiple_of(const Partition& p, int t);
int hook_count_multiple_of(const Partition& p, int t);

mpz_class hook_product(const Partition& p);
// n! / (product of hooks); throws if the division is not exact
mpz_class standard_tableaux(const Partition& p);

// Arc diagram of a pair of partitions of the same n: cells 0..n-1, each row of
// `top` contributes nested arcs above, each row of `bottom` below. Components
// are cycles or paths (an isolated cell is a path); index = 2*cycles + paths - 1.
struct MeanderShape {
  long cycles = 0;
  long paths = 0;
  long index = 0;
};
MeanderShape meander_index(const Partition& top, const Partition& bottom);

long parts_congruent(const Partition& p, int r, int t);

// counts of odd-part partitions of n whose index against the single row (n)
// is even resp. odd
struct EvenOddCounts {
  mpz_class even, odd;
};
EvenOddCounts meander_parity_counts(int n);

// enumeration-backed oracles
mpz_class count_partitions(int n);
mpz_class count_partitions(int n, const EnumFilter& f);
// total number of parts congruent to r mod t over all distinct-part partitions
mpz_class sum_parts_congruent_distinct(int n, int r, int t);
// partitions of n split by (number of hooks divisible by t) mod b
std::vector<mpz_class> thook_residue_counts(int n, int t, unsigned b);
// odd-part partitions of n split by (number of parts) mod b
std::vector<mpz_class> partcount_residue_counts_odd(int n, unsigned b);
// partitions with an even number of hooks divisible by t, minus those with odd
mpz_class hook_parity_imbalance(int n, int t);

}  // namespace partitionlab
