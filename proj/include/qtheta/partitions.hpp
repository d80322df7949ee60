#pragma once

#include <algorithm>
#include <cstdlib>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/bigint.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/polynomial.hpp"

namespace qtheta {

enum class PartitionClass { All, Distinct };

enum class Statistic { None, NumParts, NumEvenParts };

// y marks yStatistic; each partition is additionally signed by
// (-1)^{# even parts} when signStatistic is NumEvenParts.
struct StatisticSpec {
  Statistic yStatistic = Statistic::None;
  Statistic signStatistic = Statistic::None;
};

struct Partition {
  std::vector<int> parts;  // weakly decreasing, positive
  int size = 0;
  int num_parts = 0;
  int num_even_parts = 0;
};

// Enumeration ceiling, overridable through QTHETA_PARTITION_CEILING.
inline int default_partition_ceiling() {
  if (const char* env = std::getenv("QTHETA_PARTITION_CEILING")) {
    const int v = std::atoi(env);
    if (v > 0) return v;
  }
  return 120;
}

inline void check_partition_ceiling(int n, int ceiling) {
  if (n < 0) throw Error("partitions: n must be nonnegative");
  if (n > ceiling)
    throw CeilingExceeded("partitions: n = " + std::to_string(n) +
                          " exceeds the enumeration ceiling " +
                          std::to_string(ceiling));
}

namespace detail {

// Recursive descent with a max-part bound. Largest parts first, which yields
// lexicographically decreasing order overall. The visitor receives the parts
// buffer and the running count of even parts.
template <class F>
void descend_partitions(int remaining, int maxPart, PartitionClass cls,
                        std::vector<int>& buf, int evenParts, F& visit) {
  if (remaining == 0) {
    visit(buf, evenParts);
    return;
  }
  int top = std::min(remaining, maxPart);
  for (int p = top; p >= 1; --p) {
    buf.push_back(p);
    const int nextMax = cls == PartitionClass::Distinct ? p - 1 : p;
    descend_partitions(remaining - p, nextMax, cls, buf,
                       evenParts + (p % 2 == 0 ? 1 : 0), visit);
    buf.pop_back();
  }
}

}  // namespace detail

// Streaming enumeration; the core behind every partition-based oracle.
template <class F>
void for_each_partition(int n, PartitionClass cls, F&& visit) {
  if (n < 0) throw Error("for_each_partition: n must be nonnegative");
  std::vector<int> buf;
  buf.reserve(static_cast<std::size_t>(n) + 1);
  detail::descend_partitions(n, n == 0 ? 1 : n, cls, buf, 0, visit);
}

// Complete, duplicate-free list in lexicographically decreasing order.
inline std::vector<Partition> enumerate_partitions(
    int n, PartitionClass cls, int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(n, ceiling);
  std::vector<Partition> out;
  for_each_partition(n, cls, [&](const std::vector<int>& parts, int even) {
    out.push_back(Partition{parts, n, static_cast<int>(parts.size()), even});
  });
  return out;
}

inline BigInt count_partitions(int n, PartitionClass cls,
                               int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(n, ceiling);
  BigInt count = 0;
  for_each_partition(n, cls, [&](const std::vector<int>&, int) { ++count; });
  return count;
}

inline int statistic_value(const std::vector<int>& parts, int evenParts,
                           Statistic s) {
  switch (s) {
    case Statistic::NumParts:
      return static_cast<int>(parts.size());
    case Statistic::NumEvenParts:
      return evenParts;
    case Statistic::None:
      return 0;
  }
  return 0;
}

// tally[k] = number of partitions of n in the class whose statistic equals k.
inline std::vector<BigInt> tally_by_statistic(
    int n, PartitionClass cls, Statistic stat,
    int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(n, ceiling);
  std::vector<BigInt> tally;
  for_each_partition(n, cls, [&](const std::vector<int>& parts, int even) {
    const int k = statistic_value(parts, even, stat);
    if (static_cast<std::size_t>(k) >= tally.size())
      tally.resize(static_cast<std::size_t>(k) + 1, BigInt(0));
    ++tally[static_cast<std::size_t>(k)];
  });
  return tally;
}

// Same tally computed without enumeration: dynamic programming over part
// values, tracking (sum, # even parts). Used as the independent cross-check
// for the convolution identity tests.
inline std::vector<std::vector<BigInt>> even_part_tally_table(
    int maxN, PartitionClass cls) {
  const int maxEven = maxN / 2 + 1;
  std::vector<std::vector<BigInt>> dp(
      static_cast<std::size_t>(maxN) + 1,
      std::vector<BigInt>(static_cast<std::size_t>(maxEven) + 1, BigInt(0)));
  dp[0][0] = 1;
  for (int v = 1; v <= maxN; ++v) {
    const int inc = v % 2 == 0 ? 1 : 0;
    if (cls == PartitionClass::Distinct) {
      for (int s = maxN; s >= v; --s)
        for (int k = maxEven; k >= inc; --k)
          dp[s][k] += dp[s - v][k - inc];
    } else {
      for (int s = v; s <= maxN; ++s)
        for (int k = inc; k <= maxEven; ++k)
          dp[s][k] += dp[s - v][k - inc];
    }
  }
  return dp;
}

// Sum over partitions of sign^{signStatistic} * y^{yStatistic}. A constant
// polynomial when yStatistic is None.
inline YPolynomial weighted_count(int n, PartitionClass cls, StatisticSpec spec,
                                  int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(n, ceiling);
  if (spec.signStatistic != Statistic::None &&
      spec.signStatistic != Statistic::NumEvenParts)
    throw Error("weighted_count: sign statistic must be NumEvenParts or None");
  std::vector<BigInt> acc;
  for_each_partition(n, cls, [&](const std::vector<int>& parts, int even) {
    const int k = statistic_value(parts, even, spec.yStatistic);
    if (static_cast<std::size_t>(k) >= acc.size())
      acc.resize(static_cast<std::size_t>(k) + 1, BigInt(0));
    const bool negative =
        spec.signStatistic == Statistic::NumEvenParts && even % 2 != 0;
    acc[static_cast<std::size_t>(k)] += negative ? -1 : 1;
  });
  return YPolynomial(std::move(acc));
}

// Number of ordered pairs (lambda, mu) in the class with
// |lambda| + |mu| = total and ev(lambda) + ev(mu) = k, where ev counts parts
// divisible by 2. Counted from enumeration tallies of each summand size.
inline BigInt delta_count(int total, int k, PartitionClass cls,
                          int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(total, ceiling);
  if (k < 0) return 0;
  std::vector<std::vector<BigInt>> tallies;
  tallies.reserve(static_cast<std::size_t>(total) + 1);
  for (int a = 0; a <= total; ++a)
    tallies.push_back(
        tally_by_statistic(a, cls, Statistic::NumEvenParts, ceiling));
  BigInt count = 0;
  for (int a = 0; a <= total; ++a) {
    const auto& ta = tallies[static_cast<std::size_t>(a)];
    const auto& tb = tallies[static_cast<std::size_t>(total - a)];
    for (int i = 0; i <= k; ++i) {
      if (static_cast<std::size_t>(i) >= ta.size()) break;
      const int j = k - i;
      if (static_cast<std::size_t>(j) >= tb.size()) continue;
      count += ta[static_cast<std::size_t>(i)] * tb[static_cast<std::size_t>(j)];
    }
  }
  return count;
}

}  // namespace qtheta
