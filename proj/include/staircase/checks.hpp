#pragma once

#include <cmath>
#include <cstdio>
#include <random>
#include <sstream>
#include <string>
#include <vector>

#include "asymptotics.hpp"
#include "closed_form.hpp"
#include "enumerate.hpp"
#include "free_energy.hpp"
#include "series.hpp"
#include "transfer.hpp"

// Acceptance battery: twelve self-contained checks, each returning a
// pass/fail verdict plus a measurement summary. Tolerances are fixed here;
// a failing check reports its numbers rather than loosening them.

namespace staircase {

struct CheckResult {
  std::string name;
  bool passed = false;
  std::string detail;
};

namespace detail {

inline std::string fmt_g(double v, int digits = 6) {
  char buf[64];
  std::snprintf(buf, sizeof(buf), "%.*g", digits, v);
  return buf;
}

inline PolygonFamily family_of(PolygonClass cls) {
  switch (cls) {
    case PolygonClass::S: return PolygonFamily::S;
    case PolygonClass::G: return PolygonFamily::G;
    case PolygonClass::C: return PolygonFamily::C;
    default: return PolygonFamily::GC;
  }
}

}  // namespace detail

// 1: transfer evaluation equals brute-force enumeration as exact bivariate
// polynomials for every class and length up to 20.
inline CheckResult criterion_01() {
  CheckResult r{"oracle polynomial equality", true, ""};
  const PolygonClass classes[] = {PolygonClass::S, PolygonClass::G,
                                  PolygonClass::C, PolygonClass::GC};
  int compared = 0;
  for (PolygonClass cls : classes) {
    if (!enumerate_polygons(1, cls).empty()) {
      r.passed = false;
      r.detail = "length 2 unexpectedly admits polygons";
      return r;
    }
    for (int n = 2; n <= 10; ++n) {
      BivariatePolynomial brute = enumerate_polygons(n, cls);
      BivariatePolynomial fast =
          polygon_partition_poly(n, detail::family_of(cls));
      ++compared;
      if (brute != fast) {
        r.passed = false;
        r.detail = "mismatch at class " + to_string(cls) + ", half-length " +
                   std::to_string(n);
        return r;
      }
    }
  }
  r.detail = std::to_string(compared) + " polynomials equal (classes S,G,C,GC; half-lengths 2..10)";
  return r;
}

// 2: unweighted pair-count closed forms equal brute-force nonintersecting
// pair counts on full endpoint grids, n <= 10.
inline CheckResult criterion_02() {
  CheckResult r{"pair-count closed forms", true, ""};
  long long checked = 0;
  for (int n = 1; n <= 10; ++n) {
    auto lo = enumerate_pairs_all(n, 0, 2);
    auto hi = enumerate_pairs_all(n, 1, 3);
    for (int k = 0; k <= n + 2; ++k) {
      for (int m = 0; m <= n + 2; ++m) {
        BigInt want(0);
        if (auto it = lo.find({m, k + 2}); it != lo.end())
          want = it->second.eval(BigInt(1));
        if (s1(n, k, m) != want) {
          r.passed = false;
          r.detail = "anchored count off at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " m=" + std::to_string(m);
          return r;
        }
        BigInt want_hat(0);
        if (auto it = hi.find({m, k + 2}); it != hi.end())
          want_hat = it->second.eval(BigInt(1));
        if (shat1(n, k, m) != want_hat) {
          r.passed = false;
          r.detail = "lifted count off at n=" + std::to_string(n) +
                     " k=" + std::to_string(k) + " m=" + std::to_string(m);
          return r;
        }
        checked += 2;
      }
    }
  }
  r.detail = std::to_string(checked) + " grid entries equal (n <= 10)";
  return r;
}

// 3: weighted single-path closed form equals the transfer table as
// polynomials in the surface fugacity, n <= 14.
inline CheckResult criterion_03() {
  CheckResult r{"single-path closed form", true, ""};
  const APoly av = APoly::variable();
  long long checked = 0;
  for (int n = 0; n <= 14; ++n) {
    for (int i = 0; i <= n; ++i) {
      auto table = single_path_table(n, i, av);
      for (int k = 0; k <= n + 1; ++k) {
        APoly want;
        if (auto it = table.find(k); it != table.end()) want = it->second;
        if (!(t_closed(n, i, k, av) == want)) {
          r.passed = false;
          r.detail = "mismatch at n=" + std::to_string(n) +
                     " i=" + std::to_string(i) + " k=" + std::to_string(k);
          return r;
        }
        ++checked;
      }
    }
  }
  r.detail = std::to_string(checked) + " (n,i,k) polynomials equal (n <= 14)";
  return r;
}

// 4: half-plane walk generating function matches brute-force series
// coefficients through order 12 at five deterministic rational points.
inline CheckResult criterion_04() {
  CheckResult r{"walk series coefficients", true, ""};
  std::mt19937 rng(20250816u);
  std::uniform_int_distribution<int> digit(1, 9);
  std::vector<std::map<std::pair<int, int>, BigInt>> walks;
  for (int k = 0; k <= 12; ++k) walks.push_back(enumerate_half_space_paths(k));
  for (int pt = 0; pt < 5; ++pt) {
    const BigRat a(digit(rng), digit(rng));
    const BigRat y(digit(rng), digit(rng));
    RatSeries C = series_C(12, a, y);
    for (int k = 0; k <= 12; ++k) {
      BigRat want(0);
      for (const auto& [vh, c] : walks[k]) {
        BigRat t(c);
        for (int i = 0; i < vh.first; ++i) t *= a;
        for (int i = 0; i < vh.second; ++i) t *= y;
        want += t;
      }
      if (C.c[k] != want) {
        r.passed = false;
        std::ostringstream os;
        os << "coefficient " << k << " off at a=" << a << " y=" << y;
        r.detail = os.str();
        return r;
      }
    }
  }
  r.detail = "13 coefficients equal at 5 rational points";
  return r;
}

// 5: finite-size free-energy estimate at half-length 200 within 0.03 of the
// closed form at five grafted points. The gap behaves like
// (theta*log n - log A)/(2n), so points with large exponent theta and small
// amplitude A are expected to miss the band at n = 200; they are reported,
// not excused.
inline CheckResult criterion_05() {
  CheckResult r{"free-energy convergence", true, ""};
  const double pts[5][2] = {{1, 1}, {3, 1}, {1, 2}, {3, 2}, {2, 1}};
  std::ostringstream os;
  for (const auto& p : pts) {
    const double est = psi_estimate(ModelKind::Grafted, p[0], p[1], 200);
    const double gap = std::fabs(est - psi_closed(ModelKind::Grafted, p[0], p[1]));
    if (gap > 0.03) r.passed = false;
    os << "(" << detail::fmt_g(p[0], 3) << "," << detail::fmt_g(p[1], 3)
       << "): gap " << detail::fmt_g(gap, 3) << (gap > 0.03 ? " > 0.03; " : "; ");
  }
  r.detail = os.str() + "tolerance 0.03 at n=200";
  if (!r.passed)
    r.detail +=
        "; log-partition correction decays like (theta*log n - log A)/(2n), "
        "so points with large theta or small amplitude A need n well beyond "
        "200 to enter the band";
  return r;
}

// 6: grafted partition at the multicritical point (2,1): value * n^3 / 4^n within
// 15% of 4/pi at n = 300 and approaching it across n in {100, 200, 300}.
inline CheckResult criterion_06() {
  CheckResult r{"multicritical amplitude", true, ""};
  const double target = 4.0 / M_PI;
  std::vector<double> devs;
  std::ostringstream os;
  for (int n : {100, 200, 300}) {
    const double lv = log_value(PG(n, BigInt(2), BigInt(1)));
    const double ratio = amplitude_ratio(n, lv, 4.0, 3.0, target);
    devs.push_back(std::fabs(ratio - 1.0));
    os << "n=" << n << ": ratio " << detail::fmt_g(ratio, 6) << "; ";
  }
  if (devs[2] > 0.15) r.passed = false;
  if (!(devs[0] > devs[1] && devs[1] > devs[2])) r.passed = false;
  r.detail = os.str() + "target 4/pi, 15% band at n=300, deviation decreasing";
  return r;
}

// 7: pinned-growth fits recover the power-law exponents 3, 5, 1/2 within
// 0.3 on ladders up to n = 256.
inline CheckResult criterion_07() {
  CheckResult r{"exponent recovery", true, ""};
  const std::vector<int> ns = {48, 64, 96, 128, 192, 256};
  std::ostringstream os;
  {
    auto fit = fit_asymptotics_pinned(pg_log_ladder_exact(ns, 2, 1), 4.0);
    os << "(2,1): theta " << detail::fmt_g(fit.theta, 4) << "; ";
    if (std::fabs(fit.theta - 3.0) > 0.3) r.passed = false;
  }
  {
    auto fit = fit_asymptotics_pinned(pg_log_ladder_exact(ns, 1, 1), 4.0);
    os << "(1,1): theta " << detail::fmt_g(fit.theta, 4) << "; ";
    if (std::fabs(fit.theta - 5.0) > 0.3) r.passed = false;
  }
  {
    auto fit = fit_asymptotics_pinned(pg_log_ladder_transfer(ns, 3.0, 2.0),
                                      growth_ballistic(3.0, 2.0));
    os << "(3,2): theta " << detail::fmt_g(fit.theta, 4) << "; ";
    if (std::fabs(fit.theta - 0.5) > 0.3) r.passed = false;
  }
  r.detail = os.str() + "targets 3, 5, 0.5 within 0.3";
  return r;
}

// 8: the four-path upper bounds dominate the exact partition polynomials at
// five positive rational points for lengths up to 16, and the four-bridge
// product lower-bounds the centred partition, all exact.
inline CheckResult criterion_08() {
  CheckResult r{"bounds battery", true, ""};
  const std::pair<BigRat, BigRat> pts[5] = {
      {BigRat(1), BigRat(1)},
      {BigRat(2), BigRat(1)},
      {BigRat(3), BigRat(2)},
      {BigRat(1, 2), BigRat(3)},
      {BigRat(5, 2), BigRat(1, 3)}};
  long long checked = 0;
  for (const auto& [a, y] : pts) {
    for (int L = 4; L <= 16; L += 2) {
      const BigRat pc =
          polygon_partition_poly(L / 2, PolygonFamily::C).eval(a, y);
      const BigRat ps =
          polygon_partition_poly(L / 2, PolygonFamily::S).eval(a, y);
      if (T_upper(L, a, y) < pc || S_upper(L, a, y) < ps) {
        std::ostringstream os;
        os << "bound violated at L=" << L << " a=" << a << " y=" << y;
        r.passed = false;
        r.detail = os.str();
        return r;
      }
      checked += 2;
    }
  }
  for (int n = 1; n <= 5; ++n)
    for (int y : {2, 3})
      for (int a : {1, 2}) {
        if (!four_bridge_lower_bound_check(BigRat(a), BigRat(y), n)) {
          r.passed = false;
          r.detail = "four-bridge inequality violated at n=" +
                     std::to_string(n) + " y=" + std::to_string(y) +
                     " a=" + std::to_string(a);
          return r;
        }
        ++checked;
      }
  r.detail = std::to_string(checked) + " exact inequalities hold";
  return r;
}

// 9: bridge partition growth rate at y = 3 within 0.05 of log(10/3) by
// n = 400, gap shrinking from n = 100.
inline CheckResult criterion_09() {
  CheckResult r{"bridge growth rate", true, ""};
  const double target = std::log(10.0 / 3.0);
  auto rates = bridge_log_rates({100, 200, 400}, BigRat(3));
  std::vector<double> gaps;
  std::ostringstream os;
  for (auto& [n, rate] : rates) {
    gaps.push_back(std::fabs(rate - target));
    os << "n=" << n << ": gap " << detail::fmt_g(gaps.back(), 4) << "; ";
  }
  if (gaps[2] > 0.05) r.passed = false;
  if (!(gaps[0] > gaps[1] && gaps[1] > gaps[2])) r.passed = false;
  r.detail = os.str() + "target log(10/3), band 0.05 at n=400";
  return r;
}

// 10: series inequality: coefficients of t*y*C(t;1,y) never exceed those of
// exp(B(t;y) + B(t;1/y)) through order 20, exact rationals, y in {1, 2}.
inline CheckResult criterion_10() {
  CheckResult r{"bridge series inequality", true, ""};
  for (int y : {1, 2}) {
    auto chk = appendix_series_check(BigRat(y), 20);
    if (!chk.ok) {
      r.passed = false;
      r.detail = "violated at y=" + std::to_string(y) + ", order " +
                 std::to_string(chk.first_violation);
      return r;
    }
  }
  r.detail = "42 coefficient comparisons hold (orders 0..20, y in {1,2})";
  return r;
}

// 11: numeric maximizer of the Stirling log-summand agrees with the closed
// stationary point to 1e-6 at three ballistic points.
inline CheckResult criterion_11() {
  CheckResult r{"saddle agreement", true, ""};
  const double pts[3][2] = {{3, 2}, {4, 3}, {10, 1.5}};
  std::ostringstream os;
  for (const auto& p : pts) {
    auto closed = saddle_values(p[0], p[1]);
    auto numeric = saddle_solve(p[0], p[1]);
    const double dg = std::fabs(closed.gamma - numeric.gamma);
    const double dd = std::fabs(closed.delta - numeric.delta);
    os << "(" << detail::fmt_g(p[0], 3) << "," << detail::fmt_g(p[1], 3)
       << "): dgamma " << detail::fmt_g(dg, 3) << ", ddelta "
       << detail::fmt_g(dd, 3) << "; ";
    if (dg > 1e-6 || dd > 1e-6) r.passed = false;
  }
  r.detail = os.str() + "tolerance 1e-6";
  return r;
}

// 12: closed-form identities on a 25x25 log grid to 1e-12, plus finite-n
// convexity and monotonicity of the exact polynomials for lengths up to 20.
inline CheckResult criterion_12() {
  CheckResult r{"phase-grid properties", true, ""};
  std::vector<double> grid(25);
  for (int i = 0; i < 25; ++i)
    grid[i] = 0.5 * std::pow(16.0, i / 24.0);
  const double tol = 1e-12;
  for (double a : grid) {
    for (double y : grid) {
      const double lam = lambdaP(std::sqrt(y));
      const double kap = kappaP(a);
      const double pg = psi_closed(ModelKind::Grafted, a, y);
      const double pc = psi_closed(ModelKind::Centred, a, y);
      bool ok = std::fabs(psiP(a, y) - std::max(lambdaP(y), kappaP(a))) <= tol;
      ok = ok && std::fabs(psiP(a, y) + std::log(t_crit(a, y))) <= tol;
      ok = ok && std::fabs(pg - 0.5 * lam - 0.5 * kap) <= tol;
      ok = ok && std::fabs(pc - 0.5 * lam - 0.5 * std::max(lam, kap)) <= tol;
      ok = ok && std::fabs(pc - std::max(pg, lam)) <= tol;
      ok = ok &&
           std::fabs(psi_closed(ModelKind::Staircase, a, y) - pc) <= tol;
      if (y <= 1.0)
        ok = ok &&
             std::fabs(pg - psi_closed(ModelKind::SemiGrafted, a, y)) <= tol &&
             std::fabs(pc - pg) <= tol;
      if (y > 1.0 + 1e-6 && a < y + 1.0 - 1e-6)
        ok = ok && pc - pg > 1e-13;
      if (a >= y + 1.0 - 1e-9 || y <= 1.0) ok = ok && std::fabs(pc - pg) <= tol;
      if (!ok) {
        r.passed = false;
        r.detail = "identity failed at a=" + detail::fmt_g(a, 6) +
                   " y=" + detail::fmt_g(y, 6);
        return r;
      }
    }
  }
  // finite-n shape: log-partition convex along each log-fugacity axis,
  // nondecreasing in both fugacities
  std::vector<double> nine(9);
  for (int i = 0; i < 9; ++i) nine[i] = 0.5 * std::pow(16.0, i / 8.0);
  const PolygonFamily fams[] = {PolygonFamily::S, PolygonFamily::G,
                                PolygonFamily::C, PolygonFamily::GC};
  for (PolygonFamily fam : fams) {
    for (int n = 2; n <= 10; ++n) {
      BivariatePolynomial P = polygon_partition_poly(n, fam);
      if (P.empty()) continue;
      for (double fixed : {0.8, 2.5}) {
        std::vector<double> fa(9), fy(9);
        for (int i = 0; i < 9; ++i) {
          fa[i] = std::log(P.eval<double>(nine[i], fixed)) / (2.0 * n);
          fy[i] = std::log(P.eval<double>(fixed, nine[i])) / (2.0 * n);
        }
        for (int i = 0; i + 1 < 9; ++i) {
          if (fa[i + 1] < fa[i] - 1e-12 || fy[i + 1] < fy[i] - 1e-12) {
            r.passed = false;
            r.detail = "monotonicity failed, family " +
                       std::to_string(static_cast<int>(fam)) +
                       " n=" + std::to_string(n);
            return r;
          }
        }
        for (int i = 1; i + 1 < 9; ++i) {
          if (fa[i + 1] - 2 * fa[i] + fa[i - 1] < -1e-9 ||
              fy[i + 1] - 2 * fy[i] + fy[i - 1] < -1e-9) {
            r.passed = false;
            r.detail = "convexity failed, family " +
                       std::to_string(static_cast<int>(fam)) +
                       " n=" + std::to_string(n);
            return r;
          }
        }
      }
    }
  }
  r.detail = "625 grid identities and finite-n shape checks hold";
  return r;
}

inline std::vector<CheckResult> run_criteria(const std::vector<int>& ids) {
  std::vector<CheckResult> out;
  for (int id : ids) {
    CheckResult c;
    switch (id) {
      case 1: c = criterion_01(); break;
      case 2: c = criterion_02(); break;
      case 3: c = criterion_03(); break;
      case 4: c = criterion_04(); break;
      case 5: c = criterion_05(); break;
      case 6: c = criterion_06(); break;
      case 7: c = criterion_07(); break;
      case 8: c = criterion_08(); break;
      case 9: c = criterion_09(); break;
      case 10: c = criterion_10(); break;
      case 11: c = criterion_11(); break;
      case 12: c = criterion_12(); break;
      default: throw std::invalid_argument("unknown criterion id");
    }
    c.name = "criterion " + std::string(id < 10 ? "0" : "") +
             std::to_string(id) + ": " + c.name;
    out.push_back(std::move(c));
  }
  return out;
}

// Named verification suites exposed by the command-line tool.
inline std::vector<int> suite_criteria(const std::string& suite) {
  if (suite == "oracle") return {1, 2, 3, 4};
  if (suite == "bounds") return {8};
  if (suite == "appendix") return {10};
  if (suite == "asymptotics") return {5, 6, 7, 9, 11, 12};
  if (suite == "all") return {1, 2, 3, 4, 5, 6, 7, 8, 9, 10, 11, 12};
  throw std::invalid_argument("unknown suite: " + suite);
}

}  // namespace staircase
