#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "qtheta/bigint.hpp"
#include "qtheta/errors.hpp"

namespace qtheta {

template <class R>
class Polynomial;

// Minimal ring interface used by Polynomial and Series. The primary template
// covers BigInt; nested polynomials get a specialization below.
template <class R>
struct RingTraits {
  static R zero() { return R(0); }
  static R one() { return R(1); }
  static bool is_zero(const R& x) { return x == 0; }
  static bool is_plus_minus_one(const R& x) { return x == 1 || x == -1; }
};

// Dense polynomial over a commutative ring R, coefficient of x^i at index i.
// Always normalized: no trailing zero coefficients, zero polynomial is empty.
template <class R>
class Polynomial {
 public:
  Polynomial() = default;

  explicit Polynomial(std::vector<R> coeffs) : c_(std::move(coeffs)) { trim(); }

  static Polynomial constant(R v) {
    std::vector<R> c;
    c.push_back(std::move(v));
    return Polynomial(std::move(c));
  }

  static Polynomial monomial(R v, std::size_t e) {
    std::vector<R> c(e + 1, RingTraits<R>::zero());
    c[e] = std::move(v);
    return Polynomial(std::move(c));
  }

  bool is_zero() const { return c_.empty(); }

  // Degree of the zero polynomial is -1.
  long long degree() const { return static_cast<long long>(c_.size()) - 1; }

  const std::vector<R>& coefficients() const { return c_; }

  R coefficient(long long e) const {
    if (e < 0 || e >= static_cast<long long>(c_.size()))
      return RingTraits<R>::zero();
    return c_[static_cast<std::size_t>(e)];
  }

  Polynomial& operator+=(const Polynomial& b) {
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] += b.c_[i];
    trim();
    return *this;
  }

  Polynomial& operator-=(const Polynomial& b) {
    if (c_.size() < b.c_.size()) c_.resize(b.c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < b.c_.size(); ++i) c_[i] -= b.c_[i];
    trim();
    return *this;
  }

  friend Polynomial operator+(Polynomial a, const Polynomial& b) {
    a += b;
    return a;
  }

  friend Polynomial operator-(Polynomial a, const Polynomial& b) {
    a -= b;
    return a;
  }

  Polynomial operator-() const {
    std::vector<R> c(c_.size(), RingTraits<R>::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) c[i] -= c_[i];
    return Polynomial(std::move(c));
  }

  friend Polynomial operator*(const Polynomial& a, const Polynomial& b) {
    if (a.is_zero() || b.is_zero()) return Polynomial();
    std::vector<R> c(a.c_.size() + b.c_.size() - 1, RingTraits<R>::zero());
    for (std::size_t i = 0; i < a.c_.size(); ++i) {
      if (RingTraits<R>::is_zero(a.c_[i])) continue;
      for (std::size_t j = 0; j < b.c_.size(); ++j) c[i + j] += a.c_[i] * b.c_[j];
    }
    return Polynomial(std::move(c));
  }

  friend bool operator==(const Polynomial& a, const Polynomial& b) {
    return a.c_ == b.c_;
  }

  // this * x^e.
  Polynomial shifted(std::size_t e) const {
    if (is_zero() || e == 0) return *this;
    std::vector<R> out(c_.size() + e, RingTraits<R>::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + e] = c_[i];
    return Polynomial(std::move(out));
  }

  // this * (1 + c x^e), single pass.
  Polynomial times_binomial(const R& c, std::size_t e) const {
    if (is_zero()) return Polynomial();
    std::vector<R> out(c_.size() + e, RingTraits<R>::zero());
    for (std::size_t i = 0; i < c_.size(); ++i) out[i] = c_[i];
    for (std::size_t i = 0; i < c_.size(); ++i) out[i + e] += c * c_[i];
    return Polynomial(std::move(out));
  }

  // Exact division by (1 + c x^e). The remainder must vanish; a nonzero
  // remainder throws, which doubles as a self-test wherever divisibility is
  // a theorem rather than an assumption.
  Polynomial divide_exact_binomial(const R& c, std::size_t e) const {
    if (e == 0) throw Error("divide_exact_binomial: exponent must be positive");
    if (is_zero()) return Polynomial();
    const long long d = degree();
    if (d < static_cast<long long>(e))
      throw Error("divide_exact_binomial: nonzero remainder");
    std::vector<R> q(static_cast<std::size_t>(d) - e + 1, RingTraits<R>::zero());
    for (std::size_t t = 0; t < q.size(); ++t) {
      q[t] = c_[t];
      if (t >= e) q[t] -= c * q[t - e];
    }
    for (std::size_t t = q.size(); t <= static_cast<std::size_t>(d); ++t) {
      R expected = t >= e ? R(c * q[t - e]) : RingTraits<R>::zero();
      if (c_[t] != expected)
        throw Error("divide_exact_binomial: nonzero remainder");
    }
    return Polynomial(std::move(q));
  }

  R sum_of_coefficients() const {
    R s = RingTraits<R>::zero();
    for (const R& v : c_) s += v;
    return s;
  }

 private:
  void trim() {
    while (!c_.empty() && RingTraits<R>::is_zero(c_.back())) c_.pop_back();
  }

  std::vector<R> c_;
};

template <class R>
struct RingTraits<Polynomial<R>> {
  static Polynomial<R> zero() { return Polynomial<R>(); }
  static Polynomial<R> one() {
    return Polynomial<R>::constant(RingTraits<R>::one());
  }
  static bool is_zero(const Polynomial<R>& p) { return p.is_zero(); }
  static bool is_plus_minus_one(const Polynomial<R>& p) {
    return p.degree() == 0 &&
           RingTraits<R>::is_plus_minus_one(p.coefficient(0));
  }
};

// Exact value at 1: the coefficient sum. Defined for polynomials only; the
// Series overload in series.hpp rejects truncations.
template <class R>
R evaluate_at_one(const Polynomial<R>& p) {
  return p.sum_of_coefficients();
}

// Polynomials in q over the integers, and in the weight variable y. The two
// aliases share a representation; the variable is contextual.
using QPolynomial = Polynomial<BigInt>;
using YPolynomial = Polynomial<BigInt>;

// Polynomial in q whose coefficients are integer polynomials in y.
using QYPolynomial = Polynomial<YPolynomial>;

inline QYPolynomial q_monomial_with_y(BigInt c, std::size_t qExp,
                                      std::size_t yExp) {
  return QYPolynomial::monomial(YPolynomial::monomial(std::move(c), yExp),
                                qExp);
}

// Specialize y := 1, collapsing each y-coefficient to its sum.
inline QPolynomial specialize_y_at_one(const QYPolynomial& p) {
  std::vector<BigInt> c;
  c.reserve(p.coefficients().size());
  for (const YPolynomial& yc : p.coefficients())
    c.push_back(yc.sum_of_coefficients());
  return QPolynomial(std::move(c));
}

inline QYPolynomial lift_to_y(const QPolynomial& p) {
  std::vector<YPolynomial> c;
  c.reserve(p.coefficients().size());
  for (const BigInt& v : p.coefficients())
    c.push_back(YPolynomial::constant(v));
  return QYPolynomial(std::move(c));
}

}  // namespace qtheta
