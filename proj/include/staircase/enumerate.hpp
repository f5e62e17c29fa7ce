#pragma once

#include <cstdlib>
#include <map>
#include <utility>

#include "lattice.hpp"
#include "poly.hpp"

// Exhaustive enumeration oracles. Everything here is depth-first search
// with feasibility pruning only; no closed form or transfer recurrence from
// the evaluator modules is reused, so these counts are independent ground
// truth. All results are exact.

namespace staircase {

inline constexpr int kMaxPolygonHalfLength = 12;  // lengths up to 24
inline constexpr int kMaxWalkSteps = 24;
inline constexpr int kMaxBridgeDfsSteps = 26;
inline constexpr int kMaxBridgeSteps = 40;

namespace detail {

// Lock-step DFS over interior columns 1..n-1. At column i the pair sits at
// heights (l, u), u > l >= 0; closure requires u = l + 2 at the last
// interior column, making the shared right tip l + 1.
class PolygonDfs {
 public:
  PolygonDfs(int n, bool need_mid_contact, int need_right_tip)
      : n_(n), mid_(n / 2), need_mid_contact_(need_mid_contact),
        need_right_tip_(need_right_tip) {}

  // Enumerate all polygons whose left tip is s; results accumulate into
  // out keyed by (surface visits, upper height above the mid abscissa).
  void run_from_tip(int s, BivariatePolynomial& out) {
    out_ = &out;
    walk(1, s - 1, s + 1, s - 1 == 0 ? 1 : 0, 0);
  }

 private:
  void walk(int i, int l, int u, int visits, int mid_h) {
    if (need_mid_contact_ && i <= mid_ && l > mid_ - i) return;
    if (i == mid_) {
      mid_h = u;
      if (need_mid_contact_ && l != 0) return;
    }
    const int remaining = n_ - 1 - i;
    if (remaining == 0) {
      if (u != l + 2) return;
      if (visits == 0) return;  // every tracked class requires a visit
      if (need_right_tip_ != 0 && l + 1 != need_right_tip_) return;
      out_->add_term(visits, mid_h, BigInt(1));
      return;
    }
    if (u - l - 2 > 2 * remaining) return;  // cannot close anymore
    if (visits == 0 && l > remaining) return;  // can no longer touch
    if (need_right_tip_ != 0) {  // reachability of the forced tip
      if (std::abs(l - (need_right_tip_ - 1)) > remaining) return;
      if (std::abs(u - (need_right_tip_ + 1)) > remaining) return;
    }
    for (int dl = -1; dl <= 1; dl += 2) {
      const int l2 = l + dl;
      if (l2 < 0) continue;
      for (int du = -1; du <= 1; du += 2) {
        const int u2 = u + du;
        if (u2 <= l2) continue;
        walk(i + 1, l2, u2, visits + (l2 == 0 ? 1 : 0), mid_h);
      }
    }
  }

  int n_;
  int mid_;
  bool need_mid_contact_;
  int need_right_tip_;  // 0 = unconstrained
  BivariatePolynomial* out_ = nullptr;
};

}  // namespace detail

// All polygons of half-length n in the given class, as the exact
// generating polynomial in (visits, mid-height). Throws beyond the
// documented exhaustive range. n = 1 admits no polygon at all (the two
// paths would coincide), so the result is empty.
inline BivariatePolynomial enumerate_polygons(int n, PolygonClass cls) {
  if (n < 1) throw std::invalid_argument("enumerate_polygons: n >= 1");
  if (n > kMaxPolygonHalfLength)
    throw std::invalid_argument(
        "enumerate_polygons: n beyond exhaustive range");
  BivariatePolynomial out;
  if (n < 2) return out;

  static constexpr int kGcLeft[4] = {2, 2, 1, 1};
  static constexpr int kGcRight[4] = {2, 1, 1, 2};

  int s_lo = 1, s_hi = n - 1;
  bool mid_contact = false;
  int right_tip = 0;
  switch (cls) {
    case PolygonClass::S:
      break;
    case PolygonClass::G:
      s_lo = s_hi = 1;
      right_tip = n % 2 == 0 ? 1 : 2;
      break;
    case PolygonClass::C:
      mid_contact = true;
      break;
    case PolygonClass::GC:
      s_lo = s_hi = kGcLeft[n % 4];
      right_tip = kGcRight[n % 4];
      mid_contact = true;
      break;
  }
  detail::PolygonDfs dfs(n, mid_contact, right_tip);
  for (int s = s_lo; s <= s_hi; ++s) dfs.run_from_tip(s, out);
  return out;
}

// Half-space walks from the origin: map (surface vertices including the
// start, final height) -> count, over all n-step walks staying at y >= 0.
inline std::map<std::pair<int, int>, BigInt> enumerate_half_space_paths(
    int n) {
  if (n < 0 || n > kMaxWalkSteps)
    throw std::invalid_argument(
        "enumerate_half_space_paths: n outside exhaustive range");
  std::map<std::pair<int, int>, BigInt> out;
  struct Rec {
    int n;
    std::map<std::pair<int, int>, BigInt>* out;
    void walk(int i, int h, int visits) {
      if (i == n) {
        (*out)[{visits, h}] += 1;
        return;
      }
      walk(i + 1, h + 1, visits);
      if (h - 1 >= 0) walk(i + 1, h - 1, visits + (h - 1 == 0 ? 1 : 0));
    }
  };
  Rec r{n, &out};
  r.walk(0, 0, 1);
  return out;
}

namespace detail {

// Strictly ordered pair DFS: lower path from sl, upper from su > sl; at
// every abscissa the upper height exceeds the lower one (the polygon
// closure case relaxes strictness at shared endpoints only). The weight is
// a to the number of lower-path vertices at y = 0, start included.
inline void pairs_walk(int i, int n, int l, int u, int apow, bool closure,
                       std::map<std::pair<int, int>, APoly>& out) {
  if (i == n) {
    auto& p = out[{l, u}];
    if (p.c.size() < static_cast<std::size_t>(apow + 1))
      p.c.resize(apow + 1, BigInt(0));
    p.c[apow] += 1;
    return;
  }
  for (int dl = -1; dl <= 1; dl += 2) {
    const int l2 = l + dl;
    if (l2 < 0) continue;
    for (int du = -1; du <= 1; du += 2) {
      const int u2 = u + du;
      const bool strict = !closure || i + 1 < n;
      if (strict ? u2 <= l2 : u2 < l2) continue;
      pairs_walk(i + 1, n, l2, u2, apow + (l2 == 0 ? 1 : 0), closure, out);
    }
  }
}

}  // namespace detail

// All endpoint pairs reachable by completely nonintersecting path pairs of
// length n from heights (start_lower, start_upper); value is the exact
// polynomial in a. Keyed by (end_lower, end_upper).
inline std::map<std::pair<int, int>, APoly> enumerate_pairs_all(
    int n, int start_lower, int start_upper) {
  if (n < 0 || n > kMaxPolygonHalfLength)
    throw std::invalid_argument("enumerate_pairs_all: n outside range");
  if (start_lower < 0 || start_upper <= start_lower)
    throw std::invalid_argument("enumerate_pairs_all: bad start heights");
  std::map<std::pair<int, int>, APoly> out;
  detail::pairs_walk(0, n, start_lower, start_upper,
                     start_lower == 0 ? 1 : 0, /*closure=*/false, out);
  return out;
}

inline APoly enumerate_pairs(int n, int start_lower, int start_upper,
                             int end_lower, int end_upper) {
  auto all = enumerate_pairs_all(n, start_lower, start_upper);
  auto it = all.find({end_lower, end_upper});
  return it == all.end() ? APoly() : it->second;
}

// Weight of one explicit nonintersecting pair configuration: the power of
// a, i.e. the number of lower-path vertices on the surface including the
// start. Throws if the pair is not strictly ordered or leaves y >= 0.
inline int pair_surface_visits(const BinomialPath& lower,
                               const BinomialPath& upper) {
  const int n = lower.length();
  if (upper.length() != n)
    throw std::invalid_argument("pair_surface_visits: lengths differ");
  const auto lo = lower.heights();
  const auto hi = upper.heights();
  int visits = 0;
  for (int i = 0; i <= n; ++i) {
    if (lo[i] < 0) throw std::invalid_argument("pair leaves the half-space");
    if (hi[i] <= lo[i])
      throw std::invalid_argument("pair is not strictly ordered");
    if (lo[i] == 0) ++visits;
  }
  return visits;
}

// Bridges: n-step walks with 0 = y_0 < y_i <= y_n for 0 < i < n, counted
// by final height. DFS up to kMaxBridgeDfsSteps; beyond that an exact
// (height, running-max) dynamic program takes over, still independent of
// the strip recurrence used by the evaluator modules.
inline std::map<int, BigInt> enumerate_bridges(int n) {
  if (n < 1 || n > kMaxBridgeSteps)
    throw std::invalid_argument("enumerate_bridges: n outside range");
  std::map<int, BigInt> out;
  if (n <= kMaxBridgeDfsSteps) {
    // h starts at 1 after the forced first step.
    struct Rec {
      int n;
      std::map<int, BigInt>* out;
      void walk(int i, int h, int hi) {
        if (i == n) {
          if (h >= hi) (*out)[h] += 1;
          return;
        }
        if (h + (n - i) < hi) return;  // final height cannot cover the max
        if (h + 1 <= n) walk(i + 1, h + 1, std::max(hi, h + 1));
        if (h - 1 >= 1) walk(i + 1, h - 1, hi);
      }
    };
    Rec r{n, &out};
    r.walk(1, 1, 1);
    return out;
  }
  // state: (height, running max over vertices 1..i) -> count
  std::map<std::pair<int, int>, BigInt> cur;
  cur[{1, 1}] = 1;
  for (int i = 2; i <= n; ++i) {
    std::map<std::pair<int, int>, BigInt> next;
    for (const auto& [hm, c] : cur) {
      const auto [h, m] = hm;
      if (h + 1 <= n) next[{h + 1, std::max(m, h + 1)}] += c;
      if (h - 1 >= 1) next[{h - 1, m}] += c;
    }
    cur.swap(next);
  }
  for (const auto& [hm, c] : cur)
    if (hm.first == hm.second) out[hm.first] += c;
  return out;
}

}  // namespace staircase
