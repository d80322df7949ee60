#pragma once

#include <string>

#include "qtheta/compare.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/partitions.hpp"
#include "qtheta/theta.hpp"

namespace qtheta {

// Check a registered generating product against the brute-force partition
// enumerator: coefficients for all n <= upTo must match the enumerated
// weighted counts. Univariate products take an optional sign weight;
// bivariate products are compared y-power by y-power.
inline Comparison coefficient_oracle_check(
    const std::string& productId, PartitionClass cls, StatisticSpec spec,
    int upTo, int ceiling = default_partition_ceiling()) {
  check_partition_ceiling(upTo, ceiling);
  const ProductEntry& entry = find_product(productId);
  const long long order = static_cast<long long>(upTo) + 1;

  Comparison c;
  c.compared_order = order;

  if (entry.series) {
    if (spec.yStatistic != Statistic::None)
      throw Error("coefficient_oracle_check: univariate product cannot carry "
                  "a y statistic");
    const QSeries s = entry.series(order);
    for (int n = 0; n <= upTo; ++n) {
      const BigInt fromSeries = s.coefficient_at(n);
      const BigInt fromOracle =
          weighted_count(n, cls, spec, ceiling).coefficient(0);
      if (fromSeries != fromOracle) {
        c.equal = false;
        c.exponent = n;
        c.lhs = fromSeries;
        c.rhs = fromOracle;
        return c;
      }
    }
    return c;
  }

  const QYSeries s = entry.yseries(order);
  for (int n = 0; n <= upTo; ++n) {
    const YPolynomial fromSeries = s.coefficient_at(n);
    const YPolynomial fromOracle = weighted_count(n, cls, spec, ceiling);
    if (!(fromSeries == fromOracle)) {
      c.equal = false;
      c.exponent = n;
      locate_y_divergence(fromSeries, fromOracle, c);
      return c;
    }
  }
  return c;
}

}  // namespace qtheta
