#pragma once

#include <algorithm>
#include <cmath>
#include <functional>
#include <stdexcept>
#include <string>

#include "numeric.hpp"
#include "transfer.hpp"

// Thermodynamics: closed-form free energies per polygon family, finite-size
// estimates from the transfer evaluator, order parameters, phase
// classification and the saddle point of the ballistic-phase summand.

namespace staircase {

enum class ModelKind { PathP, Grafted, Centred, Staircase, SemiGrafted };

inline std::string to_string(ModelKind k) {
  switch (k) {
    case ModelKind::PathP: return "path";
    case ModelKind::Grafted: return "grafted";
    case ModelKind::Centred: return "centred";
    case ModelKind::Staircase: return "staircase";
    case ModelKind::SemiGrafted: return "semigrafted";
  }
  return "?";
}

inline ModelKind model_kind_from_string(const std::string& s) {
  if (s == "path") return ModelKind::PathP;
  if (s == "grafted") return ModelKind::Grafted;
  if (s == "centred" || s == "centered") return ModelKind::Centred;
  if (s == "staircase") return ModelKind::Staircase;
  if (s == "semigrafted") return ModelKind::SemiGrafted;
  throw std::invalid_argument("unknown model kind: " + s);
}

enum class Phase { Free, Adsorbed, Ballistic, Mixed, Boundary };

inline std::string to_string(Phase p) {
  switch (p) {
    case Phase::Free: return "Free";
    case Phase::Adsorbed: return "Adsorbed";
    case Phase::Ballistic: return "Ballistic";
    case Phase::Mixed: return "Mixed";
    case Phase::Boundary: return "Boundary";
  }
  return "?";
}

// One evaluated grid point for reporting.
struct PhasePoint {
  double a = 1.0;
  double y = 1.0;
  double psi = 0.0;
  Phase phase = Phase::Free;
  double visit_density = 0.0;
  double height_density = 0.0;
};

namespace detail {

inline void require_positive(double a, double y) {
  if (!(a > 0.0) || !(y > 0.0))
    throw std::domain_error("fugacities must be positive");
}

}  // namespace detail

// Pulled half-space path free energy: log 2 for y <= 1, else
// log(y + 1/y) + log y - log y = log((y^2+1)/y).
inline double lambdaP(double y) {
  if (!(y > 0.0)) throw std::domain_error("lambdaP: y > 0 required");
  if (y <= 1.0) return std::log(2.0);
  return std::log(y * y + 1.0) - std::log(y);
}

// Adsorbing half-space path free energy: log 2 for a <= 2, else
// log(a / sqrt(a - 1)).
inline double kappaP(double a) {
  if (!(a > 0.0)) throw std::domain_error("kappaP: a > 0 required");
  if (a <= 2.0) return std::log(2.0);
  return std::log(a) - 0.5 * std::log(a - 1.0);
}

// Adsorbing and pulled path: the two mechanisms decouple.
inline double psiP(double a, double y) {
  detail::require_positive(a, y);
  return std::max(lambdaP(y), kappaP(a));
}

// Radius of convergence of the path generating function in t.
inline double t_crit(double a, double y) {
  detail::require_positive(a, y);
  double t = 0.5;
  if (y > 1.0) t = std::min(t, y / (y * y + 1.0));
  if (a > 2.0) t = std::min(t, std::sqrt(a - 1.0) / a);
  return t;
}

// Limiting free energy per step pair (half the per-step path rate for the
// hooked families; the mid-height fugacity only sees half the length, so
// everything is expressed through lambdaP(sqrt(y))).
inline double psi_closed(ModelKind kind, double a, double y) {
  detail::require_positive(a, y);
  const double lam = lambdaP(std::sqrt(y));
  switch (kind) {
    case ModelKind::PathP:
      return psiP(a, y);
    case ModelKind::Grafted:
      return 0.5 * lam + 0.5 * kappaP(a);
    case ModelKind::Centred:
    case ModelKind::Staircase:
      return 0.5 * lam + 0.5 * std::max(lam, kappaP(a));
    case ModelKind::SemiGrafted:
      return 0.5 * std::log(2.0) + 0.5 * kappaP(a);
  }
  throw std::logic_error("psi_closed: bad kind");
}

inline PolygonFamily family_for(ModelKind kind) {
  switch (kind) {
    case ModelKind::Grafted: return PolygonFamily::G;
    case ModelKind::Centred: return PolygonFamily::C;
    case ModelKind::Staircase: return PolygonFamily::S;
    case ModelKind::SemiGrafted: return PolygonFamily::SG;
    default: throw std::invalid_argument("family_for: no polygon family");
  }
}

// Finite-size estimate (1/2n) log Z_2n for polygon kinds, or (1/n) log of
// the weighted path sum for PathP. n is the half-length for polygons and
// the step count for paths.
inline double psi_estimate(ModelKind kind, double a, double y, int n) {
  detail::require_positive(a, y);
  const SignedLog aw = SignedLog::from_double(a);
  const SignedLog yw = SignedLog::from_double(y);
  if (kind == ModelKind::PathP) {
    SC_CHECK(n >= 1, "psi_estimate: n >= 1");
    auto table = single_path_table(n, 0, aw);
    SignedLog acc = SignedLog::zero();
    for (const auto& [k, wgt] : table) {
      SignedLog yk = SignedLog::one();
      for (int i = 0; i < k; ++i) yk = yk * yw;
      acc = acc + wgt * yk;
    }
    return acc.log_abs() / static_cast<double>(n);
  }
  SignedLog z = polygon_partition(n, family_for(kind), aw, yw);
  SC_CHECK(!z.is_zero(), "psi_estimate: empty partition sum");
  return z.log_abs() / (2.0 * static_cast<double>(n));
}

// Mean surface-visit and mid-height densities at half-length n. Exact
// polynomial averages for small n; central log-fugacity differences of
// the transfer evaluation otherwise.
struct OrderParameters {
  double visit_density = 0.0;  // <v> / 2n
  double height_density = 0.0; // <h> / 2n
};

inline OrderParameters order_parameters(ModelKind kind, double a, double y,
                                        int n) {
  detail::require_positive(a, y);
  SC_CHECK(kind != ModelKind::PathP,
           "order_parameters: polygon families only");
  OrderParameters out;
  const PolygonFamily fam = family_for(kind);
  if (n <= 10) {
    BivariatePolynomial p = polygon_partition_poly(n, fam);
    double z = 0.0, sv = 0.0, sh = 0.0;
    for (const auto& [key, c] : p.terms()) {
      const double w = static_cast<double>(c) * std::pow(a, key.first) *
                       std::pow(y, key.second);
      z += w;
      sv += key.first * w;
      sh += key.second * w;
    }
    SC_CHECK(z > 0.0, "order_parameters: empty family");
    out.visit_density = sv / z / (2.0 * n);
    out.height_density = sh / z / (2.0 * n);
    return out;
  }
  const double eps = 1e-3;
  auto lz = [&](double aa, double yy) {
    SignedLog zz = polygon_partition(n, fam, SignedLog::from_double(aa),
                                     SignedLog::from_double(yy));
    return zz.log_abs();
  };
  // d log Z / d log a and d log Z / d log y
  out.visit_density =
      (lz(a * std::exp(eps), y) - lz(a * std::exp(-eps), y)) / (2 * eps) /
      (2.0 * n);
  out.height_density =
      (lz(a, y * std::exp(eps)) - lz(a, y * std::exp(-eps))) / (2 * eps) /
      (2.0 * n);
  return out;
}

// Limiting order parameters from the closed-form free energy:
// V = a d(psi)/da, H = y d(psi)/dy by central differences in log fugacity.
inline OrderParameters limiting_order_parameters(ModelKind kind, double a,
                                                 double y) {
  detail::require_positive(a, y);
  const double eps = 1e-6;
  OrderParameters out;
  out.visit_density = (psi_closed(kind, a * std::exp(eps), y) -
                       psi_closed(kind, a * std::exp(-eps), y)) /
                      (2 * eps);
  out.height_density = (psi_closed(kind, a, y * std::exp(eps)) -
                        psi_closed(kind, a, y * std::exp(-eps))) /
                       (2 * eps);
  return out;
}

// Phase classification from the closed-form diagram. Points within tol of
// a phase boundary report Boundary.
inline Phase classify_phase(ModelKind kind, double a, double y,
                            double tol = 1e-9) {
  detail::require_positive(a, y);
  auto near = [&](double u, double v) { return std::fabs(u - v) <= tol; };
  switch (kind) {
    case ModelKind::PathP: {
      if (near(a, 2.0) && y <= 1.0 + tol) return Phase::Boundary;
      if (near(y, 1.0) && a <= 2.0 + tol) return Phase::Boundary;
      if (y > 1.0 && near(a, y * y + 1.0)) return Phase::Boundary;
      if (a < 2.0 && y < 1.0) return Phase::Free;
      if (a > 2.0 && (y <= 1.0 || a > y * y + 1.0)) return Phase::Adsorbed;
      return Phase::Ballistic;
    }
    case ModelKind::Grafted:
    case ModelKind::SemiGrafted: {
      // independent mechanisms; boundaries a = 2 and (for Grafted) y = 1
      const bool handles_y = kind == ModelKind::Grafted;
      if (near(a, 2.0)) return Phase::Boundary;
      if (handles_y && near(y, 1.0)) return Phase::Boundary;
      const bool ads = a > 2.0;
      const bool bal = handles_y && y > 1.0;
      if (ads && bal) return Phase::Mixed;
      if (ads) return Phase::Adsorbed;
      if (bal) return Phase::Ballistic;
      return Phase::Free;
    }
    case ModelKind::Centred:
    case ModelKind::Staircase: {
      if (near(y, 1.0)) return Phase::Boundary;
      if (y < 1.0) {
        if (near(a, 2.0)) return Phase::Boundary;
        return a < 2.0 ? Phase::Free : Phase::Adsorbed;
      }
      // y > 1: first-order line a = y + 1 between ballistic and the
      // mixed phase (the pulling term stays active beyond it)
      if (near(a, y + 1.0)) return Phase::Boundary;
      return a < y + 1.0 ? Phase::Ballistic : Phase::Mixed;
    }
  }
  throw std::logic_error("classify_phase: bad kind");
}

// --- ballistic-summand saddle point ----------------------------------------

// Scaled log of the dominant grafted summand at visit fraction delta and
// height fraction gamma (per unit half-length):
//   F = H((1+gamma)/2) + H((1+2delta)/2) + delta log(a-1) + (gamma/2) log y
// with H the binary entropy. Valid for a > 1.
struct SaddlePoint {
  double gamma = 0.0;
  double delta = 0.0;
  double value = 0.0;
};

namespace detail {

inline double binary_entropy(double x) {
  double acc = 0.0;
  if (x > 0.0) acc -= x * std::log(x);
  if (x < 1.0) acc -= (1.0 - x) * std::log(1.0 - x);
  return acc;
}

inline double golden_max(double lo, double hi,
                         const std::function<double(double)>& f) {
  const double gr = (std::sqrt(5.0) - 1.0) / 2.0;
  double c = hi - gr * (hi - lo);
  double d = lo + gr * (hi - lo);
  double fc = f(c), fd = f(d);
  for (int it = 0; it < 200 && hi - lo > 1e-13; ++it) {
    if (fc > fd) {
      hi = d;
      d = c;
      fd = fc;
      c = hi - gr * (hi - lo);
      fc = f(c);
    } else {
      lo = c;
      c = d;
      fc = fd;
      d = lo + gr * (hi - lo);
      fd = f(d);
    }
  }
  return 0.5 * (lo + hi);
}

}  // namespace detail

inline double saddle_objective(double gamma, double delta, double a,
                               double y) {
  if (!(a > 1.0)) throw std::domain_error("saddle_objective: a > 1");
  detail::require_positive(a, y);
  return detail::binary_entropy((1.0 + gamma) / 2.0) +
         detail::binary_entropy((1.0 + 2.0 * delta) / 2.0) +
         delta * std::log(a - 1.0) + 0.5 * gamma * std::log(y);
}

// Stationary point of the separable objective: gamma* = (y-1)/(y+1)
// (clamped to [0,1)), delta* = (a-2)/(2a) (clamped to [0,1/2)).
inline SaddlePoint saddle_values(double a, double y) {
  if (!(a > 1.0)) throw std::domain_error("saddle_values: a > 1");
  detail::require_positive(a, y);
  SaddlePoint s;
  s.gamma = std::max(0.0, (y - 1.0) / (y + 1.0));
  s.delta = std::max(0.0, (a - 2.0) / (2.0 * a));
  s.value = saddle_objective(s.gamma, s.delta, a, y);
  return s;
}

// Numeric maximisation over [0,1) x [0,1/2); the objective is separable,
// so one golden-section pass per coordinate suffices.
inline SaddlePoint saddle_solve(double a, double y) {
  if (!(a > 1.0)) throw std::domain_error("saddle_solve: a > 1");
  detail::require_positive(a, y);
  SaddlePoint s;
  s.gamma = detail::golden_max(0.0, 1.0 - 1e-12, [&](double g) {
    return detail::binary_entropy((1.0 + g) / 2.0) + 0.5 * g * std::log(y);
  });
  s.delta = detail::golden_max(0.0, 0.5 - 1e-12, [&](double d) {
    return detail::binary_entropy((1.0 + 2.0 * d) / 2.0) +
           d * std::log(a - 1.0);
  });
  s.value = saddle_objective(s.gamma, s.delta, a, y);
  return s;
}

}  // namespace staircase
