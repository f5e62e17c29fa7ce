#pragma once

#include <array>
#include <cmath>
#include <stdexcept>
#include <utility>
#include <vector>

#include "closed_form.hpp"
#include "series.hpp"
#include "transfer.hpp"

// Numerical asymptotics: growth/exponent/amplitude fits against the exact
// ladders, dominant-summand scans of the four-path bounds, bridge growth
// rates, and the exact series and four-bridge inequalities.

namespace staircase {

// --- regression on log v = n log mu - theta log n + log A ------------------

struct AsymptoticFit {
  double mu = 0.0;
  double theta = 0.0;
  double amplitude = 0.0;
  double residual = 0.0;   // rms of log-residuals
  int parity_class = 0;    // n mod 4 shared by the ladder
};

namespace detail {

inline int common_parity4(const std::vector<std::pair<int, double>>& pts) {
  SC_CHECK(!pts.empty(), "fit: empty ladder");
  const int r = pts.front().first % 4;
  for (const auto& [n, lv] : pts)
    SC_CHECK(n % 4 == r, "fit: mixed parity ladder");
  return r;
}

// Solve the d x d normal equations by Gaussian elimination.
template <int D>
std::array<double, D> solve_normal(std::array<std::array<double, D>, D> M,
                                   std::array<double, D> b) {
  for (int col = 0; col < D; ++col) {
    int piv = col;
    for (int r = col + 1; r < D; ++r)
      if (std::fabs(M[r][col]) > std::fabs(M[piv][col])) piv = r;
    std::swap(M[col], M[piv]);
    std::swap(b[col], b[piv]);
    if (std::fabs(M[col][col]) < 1e-12)
      throw std::runtime_error("fit: ill-conditioned normal equations");
    for (int r = col + 1; r < D; ++r) {
      const double f = M[r][col] / M[col][col];
      for (int c = col; c < D; ++c) M[r][c] -= f * M[col][c];
      b[r] -= f * b[col];
    }
  }
  std::array<double, D> x{};
  for (int r = D - 1; r >= 0; --r) {
    double s = b[r];
    for (int c = r + 1; c < D; ++c) s -= M[r][c] * x[c];
    x[r] = s / M[r][r];
  }
  return x;
}

inline double fit_residual(const std::vector<std::pair<int, double>>& pts,
                           double log_mu, double theta, double log_a) {
  double ss = 0.0;
  for (const auto& [n, lv] : pts) {
    const double pred = n * log_mu - theta * std::log(n) + log_a;
    ss += (lv - pred) * (lv - pred);
  }
  return std::sqrt(ss / pts.size());
}

}  // namespace detail

// Free fit of (mu, theta, A) over a single-parity ladder of
// (n, log value) points.
inline AsymptoticFit fit_asymptotics(
    const std::vector<std::pair<int, double>>& pts) {
  SC_CHECK(pts.size() >= 3, "fit_asymptotics: need >= 3 points");
  AsymptoticFit out;
  out.parity_class = detail::common_parity4(pts);
  // basis: phi0 = n, phi1 = -log n, phi2 = 1
  std::array<std::array<double, 3>, 3> M{};
  std::array<double, 3> b{};
  for (const auto& [n, lv] : pts) {
    const double phi[3] = {static_cast<double>(n), -std::log(n), 1.0};
    for (int r = 0; r < 3; ++r) {
      for (int c = 0; c < 3; ++c) M[r][c] += phi[r] * phi[c];
      b[r] += phi[r] * lv;
    }
  }
  auto x = detail::solve_normal<3>(M, b);
  out.mu = std::exp(x[0]);
  out.theta = x[1];
  out.amplitude = std::exp(x[2]);
  out.residual = detail::fit_residual(pts, x[0], x[1], x[2]);
  return out;
}

// Fit of (theta, A) with the growth rate pinned.
inline AsymptoticFit fit_asymptotics_pinned(
    const std::vector<std::pair<int, double>>& pts, double mu) {
  SC_CHECK(pts.size() >= 2, "fit_asymptotics_pinned: need >= 2 points");
  SC_CHECK(mu > 0.0, "fit_asymptotics_pinned: mu > 0");
  AsymptoticFit out;
  out.parity_class = detail::common_parity4(pts);
  out.mu = mu;
  const double lmu = std::log(mu);
  std::array<std::array<double, 2>, 2> M{};
  std::array<double, 2> b{};
  for (const auto& [n, lv] : pts) {
    const double r = lv - n * lmu;  // -theta log n + log A
    const double phi[2] = {-std::log(n), 1.0};
    for (int i = 0; i < 2; ++i) {
      for (int j = 0; j < 2; ++j) M[i][j] += phi[i] * phi[j];
      b[i] += phi[i] * r;
    }
  }
  auto x = detail::solve_normal<2>(M, b);
  out.theta = x[0];
  out.amplitude = std::exp(x[1]);
  out.residual = detail::fit_residual(pts, lmu, x[0], x[1]);
  return out;
}

// Growth rate per unit n from the last two ladder points, with the leading
// n^{-theta} correction removed. Exact up to O(1/n^2) terms.
inline double growth_estimate(const std::vector<std::pair<int, double>>& pts,
                              double theta) {
  SC_CHECK(pts.size() >= 2, "growth_estimate: need >= 2 points");
  const auto& [n1, v1] = pts[pts.size() - 2];
  const auto& [n2, v2] = pts[pts.size() - 1];
  return std::exp((v2 - v1 + theta * (std::log(n2) - std::log(n1))) /
                  (n2 - n1));
}

// --- exact and numeric grafted ladders --------------------------------------

// log P^G_{2n}(a, y) over a ladder, exact big-integer closed form.
inline std::vector<std::pair<int, double>> pg_log_ladder_exact(
    const std::vector<int>& ns, long long a, long long y) {
  std::vector<std::pair<int, double>> out;
  out.reserve(ns.size());
  for (int n : ns)
    out.emplace_back(n, log_value(PG(n, BigInt(a), BigInt(y))));
  return out;
}

// log P^G_{2n}(a, y) over a ladder via the transfer evaluator.
inline std::vector<std::pair<int, double>> pg_log_ladder_transfer(
    const std::vector<int>& ns, double a, double y) {
  std::vector<std::pair<int, double>> out;
  out.reserve(ns.size());
  for (int n : ns) {
    SignedLog z = polygon_partition(n, PolygonFamily::G,
                                    SignedLog::from_double(a),
                                    SignedLog::from_double(y));
    out.emplace_back(n, z.log_abs());
  }
  return out;
}

// Exact logs of the two grafted parts at y = 1 (the anchored-height block
// and the rest); g1 entries exist only for n = 2 mod 4.
struct GraftedPartLogs {
  std::vector<std::pair<int, double>> g1;
  std::vector<std::pair<int, double>> g2;
};

inline GraftedPartLogs pg_part_log_ladders(const std::vector<int>& ns,
                                           long long a) {
  GraftedPartLogs out;
  for (int n : ns) {
    auto [first, second] = pg_parts(n, BigInt(a), BigInt(1));
    if (first != 0) out.g1.emplace_back(n, log_value(first));
    out.g2.emplace_back(n, log_value(second));
  }
  return out;
}

// ratio of an exact log-value to the model A mu^n n^{-theta}
inline double amplitude_ratio(int n, double log_value_, double mu,
                              double theta, double amplitude) {
  return std::exp(log_value_ - n * std::log(mu) + theta * std::log(n) -
                  std::log(amplitude));
}

// --- closed-form amplitudes and growth rates -------------------------------

inline double growth_ballistic(double a, double y) {
  return a * (y + 1.0) / std::sqrt((a - 1.0) * y);
}

// multicritical point (a,y) = (2,1)
inline double amp_g1_21() {
  return 24.0 * std::sqrt(2.0) / std::pow(M_PI, 1.5);
}
inline double amp_g2_21() { return 4.0 / M_PI; }

// a < 2, y = 1
inline double amp_g1_y1(double a) {
  return 1920.0 * std::sqrt(2.0) * std::pow(a, 4) /
         (std::pow(M_PI, 1.5) * std::pow(a - 2.0, 6));
}
inline double amp_g2_y1(double a) {
  return 48.0 * a * a / (M_PI * std::pow(a - 2.0, 4));
}

// a > 2, y > 1; residue is n mod 4 (the anchored block needs residue 2)
inline double amp_g1_ballistic(double a, double y) {
  return std::pow(a - 2.0, 2) * std::pow(y - 1.0, 2) *
         std::pow((a - 1.0) * y - 1.0, 2) /
         (std::sqrt(2.0 * M_PI) * std::pow(a - 1.0, 3) * std::pow(y, 1.5) *
          (y + 1.0));
}
inline double amp_g2_ballistic(double a, double y, int residue) {
  const double ap = residue == 2 ? std::pow(a - 1.0, 3)
                                 : std::pow(a - 1.0, 2);
  return (a - 2.0) * std::pow(y - 1.0, 2) *
         std::pow((a - 1.0) * y - 1.0, 2) /
         (std::sqrt(2.0 * M_PI) * a * ap * std::pow(y, 1.5) * (y + 1.0));
}

// --- dominant-summand scans --------------------------------------------------

// Argmax profile of the four-path sum T_{4n}: the height index k of the
// split point, the shared endpoint ordinate i, and the visit index w inside
// the weighted single-path factor. Fractions are relative to the quarter
// length n. flat reports a plateau (within 1 nat of the peak) wider than
// n^{5/8}: a quadratic peak spans ~n^{1/2} indices, a degenerate quartic
// one ~n^{3/4}, so the geometric midpoint separates the two regimes.
struct ScanProfile {
  int k_star = 0;
  int i_star = 0;
  int w_star = 0;
  double k_frac = 0.0;
  double i_frac = 0.0;
  double w_frac = 0.0;
  int plateau_width = 0;
  bool flat = false;
};

inline ScanProfile scan_T(int n, double a, double y) {
  SC_CHECK(n >= 4, "scan_T: n >= 4");
  const SignedLog aw = SignedLog::from_double(a);
  std::vector<SignedLog> col(n + 1);
  for (int i = 0; i <= n; ++i) col[i] = t_closed(n, i, 0, aw);
  const double ly = std::log(y);
  std::vector<double> val(2 * n + 1, -1e300);
  for (int k = 0; k <= 2 * n; ++k) {
    SignedLog f = SignedLog::zero();
    for (int i = 0; i <= n; ++i) {
      const BigInt c = t1(n, i, k);
      if (c != 0) f = f + weight_traits<SignedLog>::from(c) * col[i];
    }
    if (!f.is_zero()) val[k] = 2.0 * f.log_abs() + k * ly;
  }
  ScanProfile out;
  double best = -1e300;
  for (int k = 0; k <= 2 * n; ++k)
    if (val[k] > best) {
      best = val[k];
      out.k_star = k;
    }
  int width = 0;
  for (int k = 0; k <= 2 * n; ++k)
    if (val[k] >= best - 1.0) ++width;
  out.plateau_width = width;
  out.flat = width >= std::max(6.0, std::pow(n, 0.625));
  double besti = -1e300;
  for (int i = 0; i <= n; ++i) {
    const BigInt c = t1(n, i, out.k_star);
    if (c == 0) continue;
    const double v = log_value(c) + col[i].log_abs();
    if (v > besti) {
      besti = v;
      out.i_star = i;
    }
  }
  // visit index inside t(n, i*, 0): w-th term of the surface expansion
  {
    const int i = out.i_star;
    const long long J = (static_cast<long long>(n) + i) / 2;
    double bestw = -1e300;
    const double lam1 = std::log(std::fabs(a - 1.0));
    for (long long w = 0; w <= (n - i) / 2; ++w) {
      const BigInt diff = binom(n, J + w) - binom(n, J + w + 1);
      if (diff == 0) continue;
      const double v = log_value(diff) + w * lam1;
      if (v > bestw) {
        bestw = v;
        out.w_star = static_cast<int>(w);
      }
    }
  }
  out.k_frac = static_cast<double>(out.k_star) / n;
  out.i_frac = static_cast<double>(out.i_star) / n;
  out.w_frac = static_cast<double>(out.w_star) / n;
  return out;
}

// Argmax over q (abscissa of the lower path's first surface visit) of the
// staircase bound S_L. q_frac is relative to the quarter length L/4.
struct ScanQ {
  int q_star = 0;
  double q_frac = 0.0;
  int plateau_width = 0;
  bool flat = false;
};

inline ScanQ scan_S(int L, double a, double y) {
  auto per_q = S_upper_by_q(L, SignedLog::from_double(a),
                            SignedLog::from_double(y));
  ScanQ out;
  double best = -1e300;
  std::vector<double> val(per_q.size(), -1e300);
  for (std::size_t q = 0; q < per_q.size(); ++q) {
    if (per_q[q].is_zero()) continue;
    val[q] = per_q[q].log_abs();
    if (val[q] > best) {
      best = val[q];
      out.q_star = static_cast<int>(q);
    }
  }
  int width = 0;
  for (double v : val)
    if (v >= best - 1.0) ++width;
  out.plateau_width = width;
  out.flat = width >= std::max(6.0, std::pow(L / 2.0, 0.625));
  out.q_frac = static_cast<double>(out.q_star) / (L / 4.0);
  return out;
}

// --- bridges and series inequalities ----------------------------------------

// (n, (1/n) log B_n(y)) over a ladder, exact rational partition sums.
inline std::vector<std::pair<int, double>> bridge_log_rates(
    const std::vector<int>& ns, const BigRat& y) {
  std::vector<std::pair<int, double>> out;
  out.reserve(ns.size());
  for (int n : ns)
    out.emplace_back(n, log_value(bridge_partition(n, y)) / n);
  return out;
}

// Coefficient-wise comparison of t*y*C(t;1,y) against
// exp(B(t;y) + B(t;1/y)) through order N, exact rationals.
struct SeriesCheck {
  bool ok = true;
  int first_violation = -1;
};

inline SeriesCheck appendix_series_check(const BigRat& y, int N) {
  SC_CHECK(N >= 1 && N <= 40, "appendix_series_check: 1 <= N <= 40");
  SC_CHECK(y > 0, "appendix_series_check: y > 0");
  RatSeries C = series_C(N, BigRat(1), y);
  RatSeries lhs(N);
  for (int k = 1; k <= N; ++k) lhs.c[k] = y * C.c[k - 1];
  const BigRat yinv = BigRat(1) / y;
  RatSeries f(N);
  for (int n = 1; n <= N; ++n)
    f.c[n] = bridge_partition(n, y) + bridge_partition(n, yinv);
  RatSeries rhs = series_exp(f);
  SeriesCheck out;
  for (int k = 0; k <= N; ++k) {
    if (lhs.c[k] > rhs.c[k]) {
      out.ok = false;
      out.first_violation = k;
      break;
    }
  }
  return out;
}

// a (b_{n,h*} y^{h*})^4 <= P^C at lengths 4n and 4n+2 with height fugacity
// y^2, exact.
inline bool four_bridge_lower_bound_check(const BigRat& a, const BigRat& y,
                                          int n) {
  SC_CHECK(n >= 1, "four_bridge_lower_bound_check: n >= 1");
  auto [h, w] = most_popular_height(n, y);
  (void)h;
  const BigRat lhs = a * w * w * w * w;
  const BigRat y2 = y * y;
  const BigRat rhs0 =
      polygon_partition_poly(2 * n, PolygonFamily::C).eval(a, y2);
  const BigRat rhs2 =
      polygon_partition_poly(2 * n + 1, PolygonFamily::C).eval(a, y2);
  return lhs <= rhs0 && lhs <= rhs2;
}

}  // namespace staircase
