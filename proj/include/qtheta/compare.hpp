#pragma once

#include <algorithm>

#include "qtheta/bigint.hpp"
#include "qtheta/polynomial.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

// Outcome of comparing two sides of an identity, flattened to integers.
// For bivariate sides the divergence is localized at the first divergent
// q-exponent and, within it, the lowest y-power where the coefficients
// differ; y_power is -1 for univariate and scalar comparisons.
struct Comparison {
  bool equal = true;
  long long compared_order = 0;  // exponents strictly below were compared
  long long exponent = 0;
  long long y_power = -1;
  BigInt lhs;
  BigInt rhs;
};

inline Comparison compare_scalars(const BigInt& a, const BigInt& b) {
  Comparison c;
  c.compared_order = 1;
  if (a != b) {
    c.equal = false;
    c.exponent = 0;
    c.lhs = a;
    c.rhs = b;
  }
  return c;
}

inline void locate_y_divergence(const YPolynomial& a, const YPolynomial& b,
                                Comparison& c) {
  const long long top = std::max(a.degree(), b.degree());
  for (long long t = 0; t <= top; ++t) {
    if (a.coefficient(t) != b.coefficient(t)) {
      c.y_power = t;
      c.lhs = a.coefficient(t);
      c.rhs = b.coefficient(t);
      return;
    }
  }
}

inline Comparison compare_series(const QSeries& a, const QSeries& b) {
  const auto rep = equality_report(a, b);
  Comparison c;
  c.compared_order = rep.compared_order;
  if (!rep.equal) {
    c.equal = false;
    c.exponent = rep.divergent_exponent;
    c.lhs = rep.lhs;
    c.rhs = rep.rhs;
  }
  return c;
}

inline Comparison compare_series(const QYSeries& a, const QYSeries& b) {
  const auto rep = equality_report(a, b);
  Comparison c;
  c.compared_order = rep.compared_order;
  if (!rep.equal) {
    c.equal = false;
    c.exponent = rep.divergent_exponent;
    locate_y_divergence(rep.lhs, rep.rhs, c);
  }
  return c;
}

// Exact polynomial comparison; no truncation is involved.
inline Comparison compare_polynomials(const QPolynomial& a,
                                      const QPolynomial& b) {
  Comparison c;
  c.compared_order = std::max(a.degree(), b.degree()) + 1;
  if (a == b) return c;
  const long long top = std::max(a.degree(), b.degree());
  for (long long e = 0; e <= top; ++e) {
    if (a.coefficient(e) != b.coefficient(e)) {
      c.equal = false;
      c.exponent = e;
      c.lhs = a.coefficient(e);
      c.rhs = b.coefficient(e);
      return c;
    }
  }
  return c;
}

inline Comparison compare_polynomials(const QYPolynomial& a,
                                      const QYPolynomial& b) {
  Comparison c;
  c.compared_order = std::max(a.degree(), b.degree()) + 1;
  if (a == b) return c;
  const long long top = std::max(a.degree(), b.degree());
  for (long long e = 0; e <= top; ++e) {
    if (!(a.coefficient(e) == b.coefficient(e))) {
      c.equal = false;
      c.exponent = e;
      locate_y_divergence(a.coefficient(e), b.coefficient(e), c);
      return c;
    }
  }
  return c;
}

// y-polynomials compared as such (used by the weighted classical identity,
// where q has already been specialized away).
inline Comparison compare_y_polynomials(const YPolynomial& a,
                                        const YPolynomial& b) {
  Comparison c;
  c.compared_order = std::max(a.degree(), b.degree()) + 1;
  if (a == b) return c;
  Comparison d;
  d.equal = false;
  d.compared_order = c.compared_order;
  d.exponent = 0;
  locate_y_divergence(a, b, d);
  d.exponent = d.y_power;  // the only variable is y; report it as the exponent
  d.y_power = -1;
  return d;
}

}  // namespace qtheta
