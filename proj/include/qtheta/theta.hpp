#pragma once

#include <functional>
#include <string>
#include <utility>
#include <vector>

#include "qtheta/bigint.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/pochhammer.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

// psi(q^m) = sum_{k >= 0} q^{m k(k+1)/2}, truncated. The index runs while the
// exponent stays below the order, which is complete for quadratic exponents.
inline QSeries psi_sum(long long m, long long order) {
  if (m < 1) throw Error("psi_sum: m must be >= 1");
  if (order < 1) throw Error("psi_sum: order must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(order), BigInt(0));
  for (long long k = 0;; ++k) {
    const long long e = m * k * (k + 1) / 2;
    if (e >= order) break;
    c[static_cast<std::size_t>(e)] += 1;
  }
  return QSeries(0, order, std::move(c));
}

// phi(q^m) = sum_{k in Z} q^{m k^2}: constant term 1, coefficient 2 at every
// positive multiple of a square.
inline QSeries phi_sum(long long m, long long order) {
  if (m < 1) throw Error("phi_sum: m must be >= 1");
  if (order < 1) throw Error("phi_sum: order must be positive");
  std::vector<BigInt> c(static_cast<std::size_t>(order), BigInt(0));
  c[0] = 1;
  for (long long k = 1;; ++k) {
    const long long e = m * k * k;
    if (e >= order) break;
    c[static_cast<std::size_t>(e)] += 2;
  }
  return QSeries(0, order, std::move(c));
}

// Product form psi(q^m) = (-q^m; q^m)_inf (q^{2m}; q^{2m})_inf.
inline QSeries psi_prod(long long m, long long order) {
  if (m < 1) throw Error("psi_prod: m must be >= 1");
  return pochhammer_infinite(-1, m, m, order) *
         pochhammer_infinite(+1, 2 * m, 2 * m, order);
}

// Product form phi(q^m) = (-q^m; q^{2m})_inf^2 (q^{2m}; q^{2m})_inf.
inline QSeries phi_prod(long long m, long long order) {
  if (m < 1) throw Error("phi_prod: m must be >= 1");
  const QSeries a = pochhammer_infinite(-1, m, 2 * m, order);
  return a * a * pochhammer_infinite(+1, 2 * m, 2 * m, order);
}

enum class JtpSide { Lhs, Rhs };

// The specialization z = sign * q^j of the triple product variable.
struct ZSpec {
  int sign = 1;    // +1 or -1
  long long j = 0; // >= 0
};

namespace detail {

inline long long isqrt_ceil(long long v) {
  long long r = 0;
  while (r * r < v) ++r;
  return r;
}

}  // namespace detail

// Jacobi's triple product at z = sign * q^j:
//
//   LHS  sum_{n in Z} q^{n^2} z^n = sum_{n in Z} sign^n q^{n^2 + j n}
//   RHS  (q^2; q^2)_inf (-z q; q^2)_inf (-q/z; q^2)_inf
//
// Both sides are Laurent series when j > 0; the lowest exponent is
// -floor(j^2/4). The RHS picks up factors with nonpositive exponents, which
// cost truncation order, so it is built with padding and cut back to the
// requested order.
inline QSeries jtp_side(JtpSide side, ZSpec z, long long order) {
  if (z.sign != 1 && z.sign != -1) throw Error("jtp_side: sign must be +1 or -1");
  if (z.j < 0) throw Error("jtp_side: j must be >= 0");
  if (order < 1) throw Error("jtp_side: order must be positive");
  const long long vmin = -(z.j * z.j) / 4;

  if (side == JtpSide::Lhs) {
    std::vector<BigInt> c(static_cast<std::size_t>(order - vmin), BigInt(0));
    const long long bound = detail::isqrt_ceil(order) + z.j + 2;
    for (long long n = -bound; n <= bound; ++n) {
      const long long e = n * n + z.j * n;
      if (e >= order) continue;
      c[static_cast<std::size_t>(e - vmin)] +=
          (z.sign == -1 && (n % 2 != 0)) ? -1 : 1;
    }
    return QSeries(vmin, order, std::move(c));
  }

  // Negative-exponent factors shave at most j^2/4 + j off the working order.
  const long long pad = z.j * z.j + 2 * z.j + 2;
  const long long work = order + pad;
  QSeries acc = pochhammer_infinite(+1, 2, 2, work);
  // (-z q; q^2): factors (1 + sign q^{j+1+2k}).
  for (long long e = z.j + 1; e < acc.order(); e += 2)
    acc = acc.times_binomial(BigInt(z.sign), e);
  // (-q/z; q^2): factors (1 + sign q^{1-j+2k}), the first few of which may
  // have nonpositive exponents.
  for (long long k = 0;; ++k) {
    const long long e = 1 - z.j + 2 * k;
    if (e >= acc.order()) break;
    acc = acc.times_binomial(BigInt(z.sign), e);
  }
  return acc.truncated(order);
}

// Two-variable refinement Psi(q^m, y) = prod_{k >= 1} (1 + y q^{m k}):
// y marks the number of factors used, i.e. the number of parts.
inline QYSeries big_psi(long long m, long long order) {
  if (m < 1) throw Error("big_psi: m must be >= 1");
  QYSeries acc = QYSeries::one(order);
  const YPolynomial y = YPolynomial::monomial(BigInt(1), 1);
  for (long long e = m; e < order; e += m) acc = acc.times_binomial(y, e);
  return acc;
}

// Phi(q^m, y) = prod_{k >= 1} (1 - y^2 q^{2mk}) / (1 - q^{2mk}). The
// denominator is a unit over the integers and is realized through the exact
// series inverse, keeping everything in the integer-coefficient ring.
inline QYSeries big_phi(long long m, long long order) {
  if (m < 1) throw Error("big_phi: m must be >= 1");
  const QSeries den = pochhammer_infinite(+1, 2 * m, 2 * m, order);
  QYSeries acc = lift_to_y(den.inverse(order));
  const YPolynomial minusY2 = YPolynomial::monomial(BigInt(-1), 2);
  for (long long e = 2 * m; e < order; e += 2 * m)
    acc = acc.times_binomial(minusY2, e);
  return acc;
}

// Exponent shapes occurring in the theta expansions: c * k(k+1)/2 over k >= 0
// and c * k^2 over all integers k, plus a constant shift.
struct QuadraticForm {
  enum class Kind { Triangular, Square };
  struct Term {
    long long multiplier = 1;  // > 0
    Kind kind = Kind::Triangular;
  };
  std::vector<Term> terms;
  long long shift = 0;
};

namespace detail {

inline void count_representations(const QuadraticForm& form, std::size_t i,
                                  long long remaining, BigInt& count) {
  if (i == form.terms.size()) {
    if (remaining == 0) ++count;
    return;
  }
  const auto& t = form.terms[i];
  if (t.kind == QuadraticForm::Kind::Triangular) {
    for (long long k = 0;; ++k) {
      const long long v = t.multiplier * k * (k + 1) / 2;
      if (v > remaining) break;
      count_representations(form, i + 1, remaining - v, count);
    }
  } else {
    count_representations(form, i + 1, remaining, count);  // k = 0
    for (long long k = 1;; ++k) {
      const long long v = t.multiplier * k * k;
      if (v > remaining) break;
      count_representations(form, i + 1, remaining - v, count);
      count_representations(form, i + 1, remaining - v, count);  // -k
    }
  }
}

}  // namespace detail

// Number of index tuples of the form's domain hitting exponent exactly N.
// Square terms run over all integers, so +-k are counted separately.
inline BigInt repr_count(long long N, const QuadraticForm& form) {
  if (form.terms.empty()) throw Error("repr_count: form must be nonempty");
  if (N < form.shift) return 0;
  BigInt count = 0;
  detail::count_representations(form, 0, N - form.shift, count);
  return count;
}

// The representation counts, packaged as a series: the independent lattice
// route to the same coefficients a theta product produces analytically.
inline QSeries repr_series(const QuadraticForm& form, long long order) {
  std::vector<BigInt> c(static_cast<std::size_t>(order), BigInt(0));
  for (long long e = 0; e < order; ++e) c[static_cast<std::size_t>(e)] = repr_count(e, form);
  return QSeries(0, order, std::move(c));
}

// ---------------------------------------------------------------------------
// Registry of named generating products. Identifiers are stable strings used
// by the CLI `expand` command and by the partition-oracle checks.

struct ProductEntry {
  std::string id;
  std::string description;
  std::function<QSeries(long long order)> series;     // univariate, or
  std::function<QYSeries(long long order)> yseries;   // bivariate
};

inline const std::vector<ProductEntry>& product_registry() {
  static const std::vector<ProductEntry> registry = [] {
    std::vector<ProductEntry> r;
    auto add = [&r](std::string id, std::string desc,
                    std::function<QSeries(long long)> f) {
      r.push_back(ProductEntry{std::move(id), std::move(desc), std::move(f), {}});
    };
    auto addY = [&r](std::string id, std::string desc,
                     std::function<QYSeries(long long)> f) {
      r.push_back(ProductEntry{std::move(id), std::move(desc), {}, std::move(f)});
    };
    add("psi", "psi(q) as the triangular-exponent sum",
        [](long long o) { return psi_sum(1, o); });
    add("psi-prod", "psi(q) as (-q;q)inf (q^2;q^2)inf",
        [](long long o) { return psi_prod(1, o); });
    add("phi", "phi(q) as the square-exponent bilateral sum",
        [](long long o) { return phi_sum(1, o); });
    add("phi-prod", "phi(q) as (-q;q^2)inf^2 (q^2;q^2)inf",
        [](long long o) { return phi_prod(1, o); });
    add("euler-distinct", "(-q;q)inf, generating distinct-part partitions",
        [](long long o) { return pochhammer_infinite(-1, 1, 1, o); });
    add("euler-all", "1/(q;q)inf, generating all partitions",
        [](long long o) { return pochhammer_infinite(+1, 1, 1, o).inverse(o); });
    add("pentagonal", "(q;q)inf, Euler's pentagonal-number series",
        [](long long o) { return pochhammer_infinite(+1, 1, 1, o); });
    add("psi-section4-product", "(q^2;q^2)inf / (-q;q)inf",
        [](long long o) {
          return pochhammer_infinite(+1, 2, 2, o) *
                 pochhammer_infinite(-1, 1, 1, o).inverse(o);
        });
    add("phi-section4-product", "(q;q^2)inf / (q^2;q^2)inf",
        [](long long o) {
          return pochhammer_infinite(+1, 1, 2, o) *
                 pochhammer_infinite(+1, 2, 2, o).inverse(o);
        });
    add("ramanujan-lhs", "psi(q) psi(q^3)",
        [](long long o) { return psi_sum(1, o) * psi_sum(3, o); });
    add("ramanujan-rhs", "psi(q^4) phi(q^6) + q phi(q^2) psi(q^12)",
        [](long long o) {
          return psi_sum(4, o) * phi_sum(6, o) +
                 (phi_sum(2, o) * psi_sum(12, o)).shifted(1);
        });
    addY("big-psi", "Psi(q,y) = prod (1 + y q^k)",
         [](long long o) { return big_psi(1, o); });
    addY("big-phi", "Phi(q,y) = prod (1 - y^2 q^{2k}) / (1 - q^{2k})",
         [](long long o) { return big_phi(1, o); });
    return r;
  }();
  return registry;
}

inline const ProductEntry& find_product(const std::string& id) {
  for (const auto& e : product_registry())
    if (e.id == id) return e;
  throw UnknownProduct("unknown product id: " + id);
}

}  // namespace qtheta
