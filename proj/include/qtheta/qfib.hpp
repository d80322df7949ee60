#pragma once

#include <string>
#include <utility>
#include <vector>

#include "qtheta/bigint.hpp"
#include "qtheta/errors.hpp"
#include "qtheta/pochhammer.hpp"
#include "qtheta/polynomial.hpp"

namespace qtheta {

// The recurrence family F_{n+1} = F_n + q^{n + offset} F_{n-1} with
// F_0 = 0, F_1 = 1. Offset 0 is the classical Carlitz exponent q^n; the other
// offsets exist because the closed-form and determinant companions of that
// recurrence circulate with shifted exponents, and the audit has to map which
// pairings actually hold rather than assume one.
struct RecurrenceVariant {
  int exponent_offset = 0;
};

inline void validate(const RecurrenceVariant& v) {
  if (v.exponent_offset > 0 || v.exponent_offset < -2)
    throw Error("RecurrenceVariant: offset must be 0, -1 or -2");
}

// Exponent attached to the Gaussian-binomial term in the closed form.
enum class ClosedKind { Triangular, Square, DoubledTriangular };

// F_0 .. F_n by direct iteration of the recurrence.
inline std::vector<QPolynomial> fib_rec_ladder(long long n,
                                               RecurrenceVariant variant) {
  validate(variant);
  if (n < 0) throw Error("fib_rec_ladder: n must be nonnegative");
  std::vector<QPolynomial> f;
  f.reserve(static_cast<std::size_t>(n) + 1);
  f.push_back(QPolynomial());                       // F_0 = 0
  if (n >= 1) f.push_back(QPolynomial::constant(BigInt(1)));  // F_1 = 1
  for (long long k = 1; k < n; ++k) {
    const long long e = k + variant.exponent_offset;
    QPolynomial next = f[static_cast<std::size_t>(k)];
    const QPolynomial& prev = f[static_cast<std::size_t>(k - 1)];
    if (!prev.is_zero()) {
      if (e < 0) throw Error("fib_rec_ladder: negative exponent");
      next += prev.shifted(static_cast<std::size_t>(e));
    }
    f.push_back(std::move(next));
  }
  return f;
}

inline QPolynomial fib_rec(long long n, RecurrenceVariant variant = {}) {
  return fib_rec_ladder(n, variant).back();
}

// Closed form: sum_{k=0}^{floor((n-1)/2)} q^{E(k)} [n-k-1 choose k]_q with
// E(k) one of k(k+1)/2, k^2, k(k+1). Built from Gaussian binomials, so this
// route shares nothing with the recurrence iteration.
inline QPolynomial fib_closed(long long n, ClosedKind kind) {
  if (n < 0) throw Error("fib_closed: n must be nonnegative");
  if (n == 0) return QPolynomial();
  QPolynomial sum;
  for (long long k = 0; 2 * k <= n - 1; ++k) {
    long long e = 0;
    switch (kind) {
      case ClosedKind::Triangular:
        e = k * (k + 1) / 2;
        break;
      case ClosedKind::Square:
        e = k * k;
        break;
      case ClosedKind::DoubledTriangular:
        e = k * (k + 1);
        break;
    }
    sum += gauss_binomial(n - k - 1, k).shifted(static_cast<std::size_t>(e));
  }
  return sum;
}

// Coefficient of z^n in 1/(1 - z - q z^2): C_0 = 1, C_1 = 1,
// C_n = C_{n-1} + q C_{n-2}. Note the constant term is 1 already at n = 0.
inline QPolynomial fib_genfun(long long n) {
  if (n < 0) throw Error("fib_genfun: n must be nonnegative");
  QPolynomial prev = QPolynomial::constant(BigInt(1));
  if (n == 0) return prev;
  QPolynomial cur = QPolynomial::constant(BigInt(1));
  for (long long k = 2; k <= n; ++k) {
    QPolynomial next = cur + prev.shifted(1);
    prev = std::move(cur);
    cur = std::move(next);
  }
  return cur;
}

// Two-variable family: F_{n+1}(q,y) = F_n(q,y) + q^{n+offset} y^{chi2(n)}
// F_{n-1}(q,y), where chi2(n) = 1 iff n is even. y = 1 collapses to the
// univariate family of the same variant.
inline std::vector<QYPolynomial> fib_two_var_ladder(long long n,
                                                    RecurrenceVariant variant) {
  validate(variant);
  if (n < 0) throw Error("fib_two_var_ladder: n must be nonnegative");
  std::vector<QYPolynomial> f;
  f.reserve(static_cast<std::size_t>(n) + 1);
  f.push_back(QYPolynomial());
  if (n >= 1) f.push_back(RingTraits<QYPolynomial>::one());
  for (long long k = 1; k < n; ++k) {
    const long long e = k + variant.exponent_offset;
    const std::size_t yexp = k % 2 == 0 ? 1 : 0;
    QYPolynomial next = f[static_cast<std::size_t>(k)];
    const QYPolynomial& prev = f[static_cast<std::size_t>(k - 1)];
    if (!prev.is_zero()) {
      if (e < 0) throw Error("fib_two_var_ladder: negative exponent");
      next += prev * q_monomial_with_y(BigInt(1),
                                       static_cast<std::size_t>(e), yexp);
    }
    f.push_back(std::move(next));
  }
  return f;
}

inline QYPolynomial fib_two_var(long long n, RecurrenceVariant variant = {}) {
  return fib_two_var_ladder(n, variant).back();
}

// Cardinalities for N = 2j + r:
//   A = |{(k, m) : k + m = j}|
//   B = |{(l, s) : l + s = j}| + (-1)^r |{(t, u) : t + u = j - 1}|
// counted by literal enumeration of the index pairs.
inline std::pair<BigInt, BigInt> card_counts(long long j, int r) {
  if (j < 0) throw Error("card_counts: j must be nonnegative");
  if (r != 0 && r != 1) throw Error("card_counts: r must be 0 or 1");
  BigInt a = 0;
  for (long long k = 0; k <= j; ++k) ++a;  // m = j - k
  BigInt b = 0;
  for (long long l = 0; l <= j; ++l) ++b;
  BigInt c = 0;
  for (long long t = 0; t <= j - 1; ++t) ++c;
  b += r % 2 == 0 ? c : -c;
  return {a, b};
}

// Integer Fibonacci by iteration; the independent oracle for every q = 1
// specialization.
inline BigInt classical_fibonacci(long long n) {
  if (n < 0) throw Error("classical_fibonacci: n must be nonnegative");
  BigInt a = 0, b = 1;
  for (long long i = 0; i < n; ++i) {
    BigInt next = a + b;
    a = std::move(b);
    b = std::move(next);
  }
  return a;
}

}  // namespace qtheta
