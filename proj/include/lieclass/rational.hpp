#pragma once

#include <gmpxx.h>

#include <cmath>
#include <cstdint>
#include <string>
#include <string_view>
#include <vector>

#include "lieclass/error.hpp"

namespace lieclass {

/// Exact rational number. mpq_class keeps values canonical: lowest terms and a
/// positive denominator after every arithmetic operation.
using Rational = mpq_class;

/// Coefficient vector over the rationals.
using QVector = std::vector<Rational>;

/// "p/q", or "p" when the denominator is 1.
inline std::string to_string(const Rational& q) { return q.get_str(); }

/// Parses "p", "-p" or "p/q" (q != 0). Throws OutOfRange on malformed input.
inline Rational parse_rational(std::string_view text) {
  if (text.empty()) throw OutOfRange("empty rational literal");
  const auto slash = text.find('/');
  auto valid_integer = [](std::string_view s, bool allow_sign) {
    if (s.empty()) return false;
    std::size_t i = 0;
    if (allow_sign && (s[0] == '-' || s[0] == '+')) i = 1;
    if (i == s.size()) return false;
    for (; i < s.size(); ++i)
      if (s[i] < '0' || s[i] > '9') return false;
    return true;
  };
  const std::string_view num = text.substr(0, slash);
  const std::string_view den =
      slash == std::string_view::npos ? std::string_view{} : text.substr(slash + 1);
  if (!valid_integer(num, true) || (slash != std::string_view::npos && !valid_integer(den, false)))
    throw OutOfRange("malformed rational literal '" + std::string(text) + "'");
  std::string numerator(num);
  if (numerator[0] == '+') numerator.erase(0, 1);
  mpz_class p(numerator, 10);
  mpz_class q(1);
  if (slash != std::string_view::npos) q = mpz_class(std::string(den), 10);
  if (q == 0) throw OutOfRange("zero denominator in '" + std::string(text) + "'");
  Rational r(p, q);
  r.canonicalize();
  return r;
}

inline QVector zero_vector(std::size_t n) { return QVector(n, Rational(0)); }

/// 1-based basis vector e_i of length n.
inline QVector basis_vector(std::size_t n, std::size_t i) {
  if (i < 1 || i > n) throw OutOfRange("basis index " + std::to_string(i) + " outside 1.." +
                                       std::to_string(n));
  QVector v = zero_vector(n);
  v[i - 1] = 1;
  return v;
}

inline bool is_zero(const QVector& v) {
  for (const auto& x : v)
    if (x != 0) return false;
  return true;
}

/// Best rational approximation of `value` with denominator at most `max_denominator`,
/// from the continued-fraction convergents and the last admissible semiconvergent.
inline Rational best_rational_approximation(double value, std::int64_t max_denominator) {
  if (max_denominator < 1) throw OutOfRange("denominator cap must be positive");
  if (!std::isfinite(value)) throw OutOfRange("cannot approximate a non-finite value");
  const bool negative = value < 0;
  double x = std::fabs(value);
  // h/k convergents
  std::int64_t h_prev = 1, h = static_cast<std::int64_t>(std::floor(x));
  std::int64_t k_prev = 0, k = 1;
  double frac = x - std::floor(x);
  Rational best(h, k);
  while (frac > 1e-15) {
    const double inv = 1.0 / frac;
    const auto a = static_cast<std::int64_t>(std::floor(inv));
    frac = inv - static_cast<double>(a);
    const std::int64_t k_next = a * k + k_prev;
    if (k_next > max_denominator) {
      // largest semiconvergent that still fits
      const std::int64_t t = (max_denominator - k_prev) / k;
      if (t > 0 && 2 * t >= a) {
        Rational semi(t * h + h_prev, t * k + k_prev);
        semi.canonicalize();
        const double err_semi = std::fabs(semi.get_d() - x);
        if (err_semi < std::fabs(best.get_d() - x)) best = semi;
      }
      break;
    }
    const std::int64_t h_next = a * h + h_prev;
    h_prev = h;
    h = h_next;
    k_prev = k;
    k = k_next;
    best = Rational(h, k);
    best.canonicalize();
  }
  return negative ? Rational(-best) : best;
}

}  // namespace lieclass
