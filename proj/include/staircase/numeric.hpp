#pragma once

#include <boost/multiprecision/cpp_int.hpp>
#include <cassert>
#include <cmath>
#include <cstdint>
#include <limits>
#include <stdexcept>
#include <string>

// Exact and log-space number types shared by every evaluator.
// All partition-function code is templated over a weight type W; the
// supported weights are BigInt, BigRat, double, cpp_bin_float, SignedLog
// and Poly<T> (see poly.hpp). weight_traits<W> adapts construction from
// exact integers and the one division the formulas need.

namespace staircase {

using BigInt = boost::multiprecision::cpp_int;
using BigRat = boost::multiprecision::cpp_rational;

// Always-on invariant check; the library must not silently truncate an
// inexact division even in release builds.
#define SC_CHECK(cond, msg)                                                  \
  do {                                                                       \
    if (!(cond)) throw std::logic_error(std::string("staircase: ") + (msg)); \
  } while (0)

// log of a positive big integer; safe far beyond double range.
inline double log_value(const BigInt& x) {
  SC_CHECK(x > 0, "log_value needs a positive integer");
  const std::size_t bits = boost::multiprecision::msb(x);
  if (bits < 900) return std::log(x.convert_to<double>());
  const std::size_t shift = bits - 64;
  BigInt top = x >> shift;
  return std::log(top.convert_to<double>()) +
         static_cast<double>(shift) * std::log(2.0);
}

inline double log_value(const BigRat& x) {
  SC_CHECK(x > 0, "log_value needs a positive rational");
  return log_value(boost::multiprecision::numerator(x)) -
         log_value(boost::multiprecision::denominator(x));
}

// Signed log-space scalar: value = sign * exp(lg). Addition uses
// log-sum-exp, so sums of same-sign terms never overflow and lose at most
// one ulp per operation. sign == 0 encodes exact zero (lg ignored).
struct SignedLog {
  double lg = -std::numeric_limits<double>::infinity();
  int sign = 0;

  SignedLog() = default;
  SignedLog(double l, int s) : lg(l), sign(s) {}

  static SignedLog zero() { return SignedLog(); }
  static SignedLog one() { return SignedLog(0.0, 1); }
  static SignedLog from_double(double v) {
    if (v == 0.0) return zero();
    return SignedLog(std::log(std::fabs(v)), v > 0 ? 1 : -1);
  }
  static SignedLog from_log(double l, int s = 1) { return SignedLog(l, s); }

  double to_double() const { return sign == 0 ? 0.0 : sign * std::exp(lg); }
  double log_abs() const { return lg; }
  bool is_zero() const { return sign == 0; }

  friend SignedLog operator+(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0) return b;
    if (b.sign == 0) return a;
    if (a.sign == b.sign) {
      const double hi = std::max(a.lg, b.lg), lo = std::min(a.lg, b.lg);
      return SignedLog(hi + std::log1p(std::exp(lo - hi)), a.sign);
    }
    if (a.lg == b.lg) return zero();
    const SignedLog& big = (a.lg > b.lg) ? a : b;
    const SignedLog& sml = (a.lg > b.lg) ? b : a;
    return SignedLog(big.lg + std::log1p(-std::exp(sml.lg - big.lg)),
                     big.sign);
  }
  friend SignedLog operator-(const SignedLog& a, const SignedLog& b) {
    return a + SignedLog(b.lg, -b.sign);
  }
  friend SignedLog operator*(const SignedLog& a, const SignedLog& b) {
    if (a.sign == 0 || b.sign == 0) return zero();
    return SignedLog(a.lg + b.lg, a.sign * b.sign);
  }
  friend SignedLog operator/(const SignedLog& a, const SignedLog& b) {
    SC_CHECK(b.sign != 0, "SignedLog division by zero");
    if (a.sign == 0) return zero();
    return SignedLog(a.lg - b.lg, a.sign * b.sign);
  }
  SignedLog& operator+=(const SignedLog& o) { return *this = *this + o; }
  SignedLog& operator-=(const SignedLog& o) { return *this = *this - o; }
  SignedLog& operator*=(const SignedLog& o) { return *this = *this * o; }
  friend bool operator==(const SignedLog& a, const SignedLog& b) {
    return a.sign == b.sign && (a.sign == 0 || a.lg == b.lg);
  }
};

// Construction of weights from exact integers plus the one exact division
// the partition formulas use (dividing out a guaranteed factor of a).
template <class W>
struct weight_traits {
  static W from(const BigInt& x) { return static_cast<W>(x); }
  static W div(const W& num, const W& den) { return num / den; }
};

template <>
struct weight_traits<BigInt> {
  static BigInt from(const BigInt& x) { return x; }
  static BigInt div(const BigInt& num, const BigInt& den) {
    SC_CHECK(den != 0 && num % den == 0, "inexact BigInt division");
    return num / den;
  }
};

template <>
struct weight_traits<BigRat> {
  static BigRat from(const BigInt& x) { return BigRat(x); }
  static BigRat div(const BigRat& num, const BigRat& den) {
    SC_CHECK(den != 0, "BigRat division by zero");
    return num / den;
  }
};

template <>
struct weight_traits<double> {
  static double from(const BigInt& x) { return x.convert_to<double>(); }
  static double div(const double& num, const double& den) { return num / den; }
};

template <>
struct weight_traits<SignedLog> {
  static SignedLog from(const BigInt& x) {
    if (x == 0) return SignedLog::zero();
    const BigInt ax = x > 0 ? x : BigInt(-x);
    return SignedLog(log_value(ax), x > 0 ? 1 : -1);
  }
  static SignedLog div(const SignedLog& num, const SignedLog& den) {
    return num / den;
  }
};

template <class W>
W weight_from_int(long long v) {
  return weight_traits<W>::from(BigInt(v));
}

}  // namespace staircase
