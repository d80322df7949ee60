#pragma once

#include <algorithm>
#include <cstddef>
#include <utility>
#include <vector>

#include "qtheta/errors.hpp"
#include "qtheta/polynomial.hpp"

namespace qtheta {

namespace detail {

// Schoolbook truncated convolution, isolated so a subquadratic kernel could
// replace it without touching the order/valuation bookkeeping.
template <class R>
void schoolbook_convolve(const std::vector<R>& a, const std::vector<R>& b,
                         std::vector<R>& out) {
  const std::size_t n = out.size();
  for (std::size_t i = 0; i < a.size() && i < n; ++i) {
    if (RingTraits<R>::is_zero(a[i])) continue;
    const std::size_t jmax = std::min(b.size(), n - i);
    for (std::size_t j = 0; j < jmax; ++j) out[i + j] += a[i] * b[j];
  }
}

}  // namespace detail

// Truncated formal power series over R with an integer valuation offset, so
// Laurent expansions with finitely many negative exponents fit too.
//
//   coefficient of q^e  =  coeffs[e - valuation]   for valuation <= e < order
//   exponents below the valuation are exactly zero
//   exponents at or above the order are unknown (truncated away)
//
// "order" means trusted strictly below: every operation computes the tightest
// honest output order so long pipelines cannot silently lose precision.
template <class R>
class Series {
 public:
  Series(long long valuation, long long order, std::vector<R> coeffs)
      : v_(valuation), o_(order), c_(std::move(coeffs)) {
    if (o_ <= v_) throw Error("Series: order must exceed valuation");
    if (static_cast<long long>(c_.size()) != o_ - v_)
      throw Error("Series: coefficient count must equal order - valuation");
  }

  static Series zero(long long order) {
    if (order < 1) throw Error("Series::zero: order must be positive");
    return Series(0, order,
                  std::vector<R>(static_cast<std::size_t>(order),
                                 RingTraits<R>::zero()));
  }

  static Series one(long long order) {
    Series s = zero(order);
    s.c_[0] = RingTraits<R>::one();
    return s;
  }

  // The polynomial is total, so any order is a valid truncation of it.
  static Series from_polynomial(const Polynomial<R>& p, long long order) {
    Series s = zero(order);
    const auto& pc = p.coefficients();
    for (std::size_t i = 0; i < pc.size() && static_cast<long long>(i) < order;
         ++i)
      s.c_[i] = pc[i];
    return s;
  }

  long long valuation() const { return v_; }
  long long order() const { return o_; }
  const std::vector<R>& coefficients() const { return c_; }

  R coefficient_at(long long e) const {
    if (e >= o_)
      throw BeyondTruncation("coefficient_at: exponent " + std::to_string(e) +
                             " is at or beyond the truncation order " +
                             std::to_string(o_));
    if (e < v_) return RingTraits<R>::zero();
    return c_[static_cast<std::size_t>(e - v_)];
  }

  friend Series operator+(const Series& a, const Series& b) {
    const long long v = std::min(a.v_, b.v_);
    const long long o = std::min(a.o_, b.o_);
    Series out(v, o, std::vector<R>(static_cast<std::size_t>(o - v),
                                    RingTraits<R>::zero()));
    for (long long e = v; e < o; ++e) {
      R s = RingTraits<R>::zero();
      if (e >= a.v_ && e < a.o_) s += a.c_[static_cast<std::size_t>(e - a.v_)];
      if (e >= b.v_ && e < b.o_) s += b.c_[static_cast<std::size_t>(e - b.v_)];
      out.c_[static_cast<std::size_t>(e - v)] = std::move(s);
    }
    return out;
  }

  friend Series operator-(const Series& a, const Series& b) {
    return a + b.negated();
  }

  Series negated() const {
    Series out = *this;
    for (R& x : out.c_) x = RingTraits<R>::zero() - x;
    return out;
  }

  // Valuations add; order = min(a.order + b.valuation, b.order + a.valuation),
  // the largest exponent range the operands can honestly support.
  friend Series operator*(const Series& a, const Series& b) {
    const long long v = a.v_ + b.v_;
    const long long o = std::min(a.o_ + b.v_, b.o_ + a.v_);
    std::vector<R> out(static_cast<std::size_t>(o - v), RingTraits<R>::zero());
    detail::schoolbook_convolve(a.c_, b.c_, out);
    return Series(v, o, std::move(out));
  }

  // this * (1 + c q^e) for any integer e (the factor is an exact Laurent
  // binomial). A negative e lowers both the valuation and the honest order.
  Series times_binomial(const R& c, long long e) const {
    const long long shift = std::min<long long>(e, 0);
    const long long v = v_ + shift;
    const long long o = o_ + shift;
    std::vector<R> out(static_cast<std::size_t>(o - v), RingTraits<R>::zero());
    for (long long x = v_; x < o_; ++x) {
      const R& cv = c_[static_cast<std::size_t>(x - v_)];
      if (RingTraits<R>::is_zero(cv)) continue;
      if (x < o) out[static_cast<std::size_t>(x - v)] += cv;
      const long long t = x + e;
      if (t >= v && t < o) out[static_cast<std::size_t>(t - v)] += c * cv;
    }
    return Series(v, o, std::move(out));
  }

  // Multiplicative inverse up to the requested order. The lowest nonzero
  // coefficient must be +1 or -1 (a unit over the integers); if it sits at
  // exponent w the inverse starts at -w. The result order is clamped to what
  // the operand's own order can support.
  Series inverse(long long order) const {
    long long w = v_;
    while (w < o_ &&
           RingTraits<R>::is_zero(c_[static_cast<std::size_t>(w - v_)]))
      ++w;
    if (w == o_)
      throw NonUnitLeadingCoefficient(
          "inverse: series has no nonzero coefficient below its order");
    const R& lead = c_[static_cast<std::size_t>(w - v_)];
    if (!RingTraits<R>::is_plus_minus_one(lead))
      throw NonUnitLeadingCoefficient(
          "inverse: lowest nonzero coefficient is not +1 or -1");
    const bool negative = RingTraits<R>::is_zero(lead - RingTraits<R>::one())
                              ? false
                              : true;

    const long long o = std::min(order, o_ - 2 * w);
    if (o <= -w) throw Error("inverse: requested order is too small");
    // u = +-q^{-w} * this is a unit power series; invert it by the standard
    // recurrence, then shift back.
    const std::size_t len = static_cast<std::size_t>(o + w);
    std::vector<R> u(len, RingTraits<R>::zero());
    for (std::size_t k = 0; k < len && w + static_cast<long long>(k) < o_; ++k) {
      u[k] = c_[static_cast<std::size_t>(w + static_cast<long long>(k) - v_)];
      if (negative) u[k] = RingTraits<R>::zero() - u[k];
    }
    std::vector<R> inv(len, RingTraits<R>::zero());
    inv[0] = RingTraits<R>::one();
    for (std::size_t n = 1; n < len; ++n) {
      R s = RingTraits<R>::zero();
      for (std::size_t k = 1; k <= n; ++k) {
        if (RingTraits<R>::is_zero(u[k])) continue;
        s += u[k] * inv[n - k];
      }
      inv[n] = RingTraits<R>::zero() - s;
    }
    if (negative)
      for (R& x : inv) x = RingTraits<R>::zero() - x;
    return Series(-w, o, std::move(inv));
  }

  // Multiply by the exact monomial q^e: everything moves, nothing is lost.
  Series shifted(long long e) const {
    Series out = *this;
    out.v_ += e;
    out.o_ += e;
    return out;
  }

  // q -> q^m. All information is preserved: the output is trusted exactly
  // below m * order.
  Series substitute_power(long long m) const {
    if (m < 1) throw Error("substitute_power: m must be >= 1");
    const long long v = m * v_;
    const long long o = m * o_;
    std::vector<R> out(static_cast<std::size_t>(o - v), RingTraits<R>::zero());
    for (long long e = v_; e < o_; ++e)
      out[static_cast<std::size_t>(m * e - v)] =
          c_[static_cast<std::size_t>(e - v_)];
    return Series(v, o, std::move(out));
  }

  Series truncated(long long newOrder) const {
    if (newOrder > o_)
      throw BeyondTruncation("truncated: cannot extend a series");
    if (newOrder <= v_) throw Error("truncated: order must exceed valuation");
    std::vector<R> out(c_.begin(),
                       c_.begin() + static_cast<std::size_t>(newOrder - v_));
    return Series(v_, newOrder, std::move(out));
  }

 private:
  long long v_;
  long long o_;
  std::vector<R> c_;
};

template <class R>
struct EqualityReport {
  bool equal;                   // true: equal at every trusted exponent
  long long compared_order;     // exponents below this were compared
  long long divergent_exponent; // meaningful only when !equal
  R lhs;                        // both sides' coefficients there
  R rhs;
};

// Compare coefficients for all exponents below min(a.order, b.order);
// exponents below a valuation count as zero.
template <class R>
EqualityReport<R> equality_report(const Series<R>& a, const Series<R>& b) {
  const long long o = std::min(a.order(), b.order());
  const long long lo = std::min(a.valuation(), b.valuation());
  for (long long e = lo; e < o; ++e) {
    R x = a.coefficient_at(e);
    R y = b.coefficient_at(e);
    if (!(x == y)) return {false, o, e, std::move(x), std::move(y)};
  }
  return {true, o, 0, RingTraits<R>::zero(), RingTraits<R>::zero()};
}

// A truncated series has no exact value at q = 1; only polynomials do.
template <class R>
[[noreturn]] R evaluate_at_one(const Series<R>&) {
  throw NotAPolynomial("evaluate_at_one: series is a truncation, not an exact polynomial");
}

using QSeries = Series<BigInt>;
using QYSeries = Series<YPolynomial>;

// y := 1 on every coefficient.
inline QSeries specialize_y_at_one(const QYSeries& s) {
  std::vector<BigInt> c;
  c.reserve(s.coefficients().size());
  for (const YPolynomial& p : s.coefficients())
    c.push_back(p.sum_of_coefficients());
  return QSeries(s.valuation(), s.order(), std::move(c));
}

inline QYSeries lift_to_y(const QSeries& s) {
  std::vector<YPolynomial> c;
  c.reserve(s.coefficients().size());
  for (const BigInt& v : s.coefficients()) c.push_back(YPolynomial::constant(v));
  return QYSeries(s.valuation(), s.order(), std::move(c));
}

}  // namespace qtheta
