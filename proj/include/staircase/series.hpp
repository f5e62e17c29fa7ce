#pragma once

#include <vector>

#include "binomial.hpp"
#include "numeric.hpp"

// Truncated power series with exact rational coefficients. Everything is
// fixed-order: a series of order N stores coefficients of t^0 .. t^N and
// all operations truncate there.

namespace staircase {

struct RatSeries {
  std::vector<BigRat> c;

  RatSeries() = default;
  explicit RatSeries(std::size_t order) : c(order + 1, BigRat(0)) {}
  std::size_t order() const { return c.size() - 1; }
  BigRat coeff(std::size_t k) const { return k < c.size() ? c[k] : BigRat(0); }
};

inline RatSeries series_add(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] + b.c[k];
  return r;
}

inline RatSeries series_sub(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < r.c.size(); ++k) r.c[k] = a.c[k] - b.c[k];
  return r;
}

inline RatSeries series_mul(const RatSeries& a, const RatSeries& b) {
  RatSeries r(std::min(a.order(), b.order()));
  for (std::size_t i = 0; i < r.c.size(); ++i) {
    if (a.c[i] == 0) continue;
    for (std::size_t j = 0; i + j < r.c.size(); ++j)
      if (b.c[j] != 0) r.c[i + j] += a.c[i] * b.c[j];
  }
  return r;
}

// a / b with b(0) != 0, by the standard long-division recurrence.
inline RatSeries series_div(const RatSeries& a, const RatSeries& b) {
  SC_CHECK(b.c[0] != 0, "series_div: denominator has zero constant term");
  RatSeries r(std::min(a.order(), b.order()));
  for (std::size_t k = 0; k < r.c.size(); ++k) {
    BigRat acc = a.c[k];
    for (std::size_t j = 1; j <= k; ++j) acc -= b.c[j] * r.c[k - j];
    r.c[k] = acc / b.c[0];
  }
  return r;
}

// exp(f) for f(0) = 0 via e_k = (1/k) sum_{j=1..k} j f_j e_{k-j}.
inline RatSeries series_exp(const RatSeries& f) {
  SC_CHECK(f.c[0] == 0, "series_exp: needs vanishing constant term");
  RatSeries e(f.order());
  e.c[0] = 1;
  for (std::size_t k = 1; k < e.c.size(); ++k) {
    BigRat acc = 0;
    for (std::size_t j = 1; j <= k; ++j)
      if (f.c[j] != 0) acc += BigRat(j) * f.c[j] * e.c[k - j];
    e.c[k] = acc / BigRat(k);
  }
  return e;
}

// sqrt(1 - 4 t^2) = 1 - 2 sum_{k>=0} Catalan_k t^(2k+2), exact to order N.
inline RatSeries sqrt_one_minus_4t2(std::size_t N) {
  RatSeries r(N);
  r.c[0] = 1;
  for (std::size_t k = 0; 2 * k + 2 <= N; ++k)
    r.c[2 * k + 2] = BigRat(-2) * BigRat(catalan(static_cast<long long>(k)));
  return r;
}

// Half-space walk generating function: coefficient of t^n is the partition
// polynomial of n-step walks weighted a per surface vertex (first vertex
// included) and y per unit of final height.
inline RatSeries series_C(std::size_t N, const BigRat& a, const BigRat& y) {
  const RatSeries R = sqrt_one_minus_4t2(N);

  RatSeries num = R;
  num.c[0] += 1;
  num.c[2] -= 2;
  for (auto& v : num.c) v *= BigRat(2) * a;

  RatSeries d1 = R;  // 1 - 2 a t^2 + R
  d1.c[0] += 1;
  d1.c[2] -= BigRat(2) * a;
  RatSeries d2 = R;  // 1 - 2 y t + R
  d2.c[0] += 1;
  d2.c[1] -= BigRat(2) * y;

  return series_div(num, series_mul(d1, d2));
}

}  // namespace staircase
