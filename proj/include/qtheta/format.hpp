#pragma once

#include <string>
#include <string_view>

#include "qtheta/bigint.hpp"
#include "qtheta/polynomial.hpp"
#include "qtheta/series.hpp"

namespace qtheta {

namespace detail {

inline void append_term(std::string& out, const BigInt& c, long long e,
                        std::string_view var) {
  const bool negative = c < 0;
  if (out.empty()) {
    if (negative) out += '-';
  } else {
    out += negative ? '-' : '+';
  }
  BigInt mag = negative ? BigInt(-c) : c;
  if (e == 0) {
    out += mag.str();
    return;
  }
  if (mag != 1) out += mag.str();
  out += var;
  if (e != 1) {
    out += '^';
    out += std::to_string(e);
  }
}

}  // namespace detail

// Frozen text rendering: ascending exponents, '+'-separated with '-' absorbed
// into the term, coefficient 1 elided except on the constant term, exponent 1
// written without the caret. The zero polynomial renders as "0".
inline std::string format_polynomial(const QPolynomial& p,
                                     std::string_view var = "q") {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& c = p.coefficients();
  for (std::size_t i = 0; i < c.size(); ++i) {
    if (c[i] == 0) continue;
    detail::append_term(out, c[i], static_cast<long long>(i), var);
  }
  return out;
}

// Bivariate rendering: monomials c * q^a * y^b in ascending (a, b) order,
// '*'-separated factors, same coefficient elision as above.
inline std::string format_bivariate(const QYPolynomial& p) {
  if (p.is_zero()) return "0";
  std::string out;
  const auto& qc = p.coefficients();
  for (std::size_t a = 0; a < qc.size(); ++a) {
    const auto& yc = qc[a].coefficients();
    for (std::size_t b = 0; b < yc.size(); ++b) {
      const BigInt& c = yc[b];
      if (c == 0) continue;
      const bool negative = c < 0;
      if (out.empty()) {
        if (negative) out += '-';
      } else {
        out += negative ? '-' : '+';
      }
      BigInt mag = negative ? BigInt(-c) : c;
      std::string factors;
      if (a > 0) {
        factors += 'q';
        if (a != 1) factors += '^' + std::to_string(a);
      }
      if (b > 0) {
        if (!factors.empty()) factors += '*';
        factors += 'y';
        if (b != 1) factors += '^' + std::to_string(b);
      }
      if (factors.empty()) {
        out += mag.str();
      } else {
        if (mag != 1) out += mag.str() + "*";
        out += factors;
      }
    }
  }
  return out;
}

inline std::string format_y_polynomial(const YPolynomial& p) {
  return format_polynomial(p, "y");
}

// Nonzero coefficients of a series as "(exponent,coefficient)" pairs.
inline std::string format_series_pairs(const QSeries& s) {
  std::string out;
  for (long long e = s.valuation(); e < s.order(); ++e) {
    const BigInt c = s.coefficient_at(e);
    if (c == 0) continue;
    out += '(' + std::to_string(e) + ',' + c.str() + ')';
  }
  if (out.empty()) out = "(all zero)";
  return out;
}

}  // namespace qtheta
