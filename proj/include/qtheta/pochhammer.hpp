#pragma once

#include <string>

#include "qtheta/bigint.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/polynomial.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

// (a; q^m)_n with a = sign * q^j: the exact product of the n factors
// (1 - sign * q^{j + k m}), k = 0..n-1.
inline QPolynomial pochhammer_finite(int sign, long long j, long long m,
                                     long long n) {
  if (sign != 1 && sign != -1)
    throw Error("pochhammer_finite: sign must be +1 or -1");
  if (j < 0 || m < 1 || n < 0)
    throw Error("pochhammer_finite: bad parameters");
  QPolynomial p = QPolynomial::constant(BigInt(1));
  for (long long k = 0; k < n; ++k)
    p = p.times_binomial(BigInt(-sign), static_cast<std::size_t>(j + k * m));
  return p;
}

// (a; q^m)_infinity with a = sign * q^j, truncated at the given order.
// Factors whose smallest exponent is at or beyond the order cannot touch any
// trusted coefficient and are skipped; j >= 1 keeps the factor count finite.
inline QSeries pochhammer_infinite(int sign, long long j, long long m,
                                   long long order) {
  if (sign != 1 && sign != -1)
    throw Error("pochhammer_infinite: sign must be +1 or -1");
  if (j < 1) throw Error("pochhammer_infinite: j must be >= 1");
  if (m < 1) throw Error("pochhammer_infinite: m must be >= 1");
  if (order < 1) throw Error("pochhammer_infinite: order must be positive");
  QSeries acc = QSeries::one(order);
  for (long long e = j; e < order; e += m)
    acc = acc.times_binomial(BigInt(-sign), e);
  return acc;
}

// Gaussian binomial [n k]_q via the product formula
//
//   (1 - q^n)(1 - q^{n-1}) ... (1 - q^{n-k+1})
//   -----------------------------------------
//   (1 - q^k)(1 - q^{k-1}) ... (1 - q)
//
// expanded exactly, dividing factor by factor. Every division checks its
// remainder, so each call re-verifies the divisibility the formula asserts.
// k > n is an error rather than zero.
inline QPolynomial gauss_binomial(long long n, long long k) {
  if (n < 0 || k < 0)
    throw IndexOutOfRange("gauss_binomial: negative index");
  if (k > n)
    throw IndexOutOfRange("gauss_binomial: k = " + std::to_string(k) +
                          " exceeds n = " + std::to_string(n));
  std::vector<BigInt> c{BigInt(1)};
  for (long long i = n - k + 1; i <= n; ++i) {
    c.resize(c.size() + static_cast<std::size_t>(i), BigInt(0));
    for (long long t = static_cast<long long>(c.size()) - 1; t >= i; --t)
      c[static_cast<std::size_t>(t)] -= c[static_cast<std::size_t>(t - i)];
  }
  for (long long i = 1; i <= k; ++i) {
    const long long top = static_cast<long long>(c.size()) - 1;
    for (long long t = i; t <= top; ++t)
      c[static_cast<std::size_t>(t)] += c[static_cast<std::size_t>(t - i)];
    // The i highest entries now hold the remainder and must vanish.
    for (long long t = top - i + 1; t <= top; ++t)
      if (c[static_cast<std::size_t>(t)] != 0)
        throw Error("gauss_binomial: nonzero remainder in the product formula");
    c.resize(static_cast<std::size_t>(top - i + 1));
  }
  return QPolynomial(std::move(c));
}

}  // namespace qtheta
