#pragma once

#include <map>
#include <vector>

#include "lattice.hpp"
#include "poly.hpp"
#include "series.hpp"

// Transfer (column-by-column) evaluation of path pairs and single paths,
// templated over the weight type. The same dynamic program runs with exact
// big integers, rationals, polynomials in a, or log-space doubles; every
// weight here is a nonnegative combination of inputs, so log-space mode
// never cancels.

namespace staircase {

struct PairState {
  int lower = 0;
  int upper = 0;  // invariant: upper > lower >= 0
  friend bool operator<(const PairState& a, const PairState& b) {
    return a.lower != b.lower ? a.lower < b.lower : a.upper < b.upper;
  }
  friend bool operator==(const PairState& a, const PairState& b) {
    return a.lower == b.lower && a.upper == b.upper;
  }
};

template <class W>
bool weight_is_zero(const W& w) {
  return w == weight_from_int<W>(0);
}
inline bool weight_is_zero(const SignedLog& w) { return w.is_zero(); }

namespace detail {

// Dense DP grid over states (l, u), 0 <= l < u <= height_cap.
template <class W>
class PairGrid {
 public:
  explicit PairGrid(int cap)
      : cap_(cap), cells_((cap + 1) * (cap + 1), weight_from_int<W>(0)) {}
  W& at(int l, int u) { return cells_[l * (cap_ + 1) + u]; }
  const W& at(int l, int u) const { return cells_[l * (cap_ + 1) + u]; }
  int cap() const { return cap_; }

 private:
  int cap_;
  std::vector<W> cells_;
};

// One transfer step: both paths move by +-1, the lower stays in the
// half-space, the order stays strict, and landing on the surface pays a.
template <class W>
PairGrid<W> pair_step(const PairGrid<W>& cur, const W& a) {
  PairGrid<W> next(cur.cap());
  for (int l = 0; l <= cur.cap(); ++l) {
    for (int u = l + 1; u <= cur.cap(); ++u) {
      const W& w = cur.at(l, u);
      if (weight_is_zero(w)) continue;
      for (int dl = -1; dl <= 1; dl += 2) {
        const int l2 = l + dl;
        if (l2 < 0) continue;
        for (int du = -1; du <= 1; du += 2) {
          const int u2 = u + du;
          if (u2 <= l2 || u2 > cur.cap()) continue;
          W t = w;
          if (l2 == 0) t = t * a;
          next.at(l2, u2) = next.at(l2, u2) + t;
        }
      }
    }
  }
  return next;
}

}  // namespace detail

// Evolve an initial state distribution through `length` transfer steps.
template <class W>
std::map<PairState, W> pair_evolve(int length,
                                   const std::map<PairState, W>& init,
                                   const W& a) {
  int cap = 2;
  for (const auto& [st, w] : init) cap = std::max(cap, st.upper);
  cap += length;
  detail::PairGrid<W> grid(cap);
  for (const auto& [st, w] : init) {
    SC_CHECK(st.lower >= 0 && st.upper > st.lower, "bad pair state");
    grid.at(st.lower, st.upper) = grid.at(st.lower, st.upper) + w;
  }
  for (int i = 0; i < length; ++i) grid = detail::pair_step(grid, a);
  std::map<PairState, W> out;
  for (int l = 0; l <= grid.cap(); ++l)
    for (int u = l + 1; u <= grid.cap(); ++u)
      if (!weight_is_zero(grid.at(l, u))) out[{l, u}] = grid.at(l, u);
  return out;
}

// Weights of all final states of a strictly ordered pair after n steps
// from the given start, a per lower-path surface vertex, start included.
template <class W>
std::map<PairState, W> pair_table(int n, PairState start, const W& a) {
  SC_CHECK(n >= 0, "pair_table: negative length");
  std::map<PairState, W> init;
  W w0 = weight_from_int<W>(1);
  if (start.lower == 0) w0 = w0 * a;
  init[start] = w0;
  return pair_evolve(n, init, a);
}

// Single half-space path: final-height weight table after n steps from
// height i, a per surface vertex including the start.
template <class W>
std::map<int, W> single_path_table(int n, int i, const W& a) {
  SC_CHECK(n >= 0 && i >= 0, "single_path_table: bad arguments");
  const int cap = i + n;
  std::vector<W> cur(cap + 1, weight_from_int<W>(0));
  cur[i] = i == 0 ? a : weight_from_int<W>(1);
  for (int s = 0; s < n; ++s) {
    std::vector<W> next(cap + 1, weight_from_int<W>(0));
    for (int h = 0; h <= cap; ++h) {
      if (weight_is_zero(cur[h])) continue;
      if (h + 1 <= cap) next[h + 1] = next[h + 1] + cur[h];
      if (h - 1 >= 0) {
        W t = cur[h];
        if (h - 1 == 0) t = t * a;
        next[h - 1] = next[h - 1] + t;
      }
    }
    cur.swap(next);
  }
  std::map<int, W> out;
  for (int h = 0; h <= cap; ++h)
    if (!weight_is_zero(cur[h])) out[h] = cur[h];
  return out;
}

// Polygon families the two-stage evaluator supports. The first four match
// the polygon classes; SG fixes the left tip at height 1 and leaves the
// right tip free.
enum class PolygonFamily { S, G, C, GC, SG };

inline PolygonFamily family_of(PolygonClass c) {
  switch (c) {
    case PolygonClass::S: return PolygonFamily::S;
    case PolygonClass::G: return PolygonFamily::G;
    case PolygonClass::C: return PolygonFamily::C;
    case PolygonClass::GC: return PolygonFamily::GC;
  }
  return PolygonFamily::S;
}

namespace detail {

inline void family_tips(PolygonFamily fam, int n, std::vector<int>& left,
                        std::vector<int>& right) {
  static constexpr int kGcLeft[4] = {2, 2, 1, 1};
  static constexpr int kGcRight[4] = {2, 1, 1, 2};
  left.clear();
  right.clear();
  auto all = [n](std::vector<int>& v) {
    for (int s = 1; s <= n; ++s) v.push_back(s);
  };
  switch (fam) {
    case PolygonFamily::S:
      all(left);
      all(right);
      break;
    case PolygonFamily::G:
      left = {1};
      right = {n % 2 == 0 ? 1 : 2};
      break;
    case PolygonFamily::C:
      all(left);
      all(right);
      break;
    case PolygonFamily::GC:
      left = {kGcLeft[n % 4]};
      right = {kGcRight[n % 4]};
      break;
    case PolygonFamily::SG:
      left = {1};
      all(right);
      break;
  }
}

// Left (or mirrored right) piece of the two-stage split: evolve the summed
// tip states up to the junction column.
template <class W>
std::map<PairState, W> polygon_piece(int length, const std::vector<int>& tips,
                                     const W& a) {
  std::map<PairState, W> init;
  for (int s : tips) {
    PairState st{s - 1, s + 1};
    W w = weight_from_int<W>(1);
    if (st.lower == 0) w = w * a;
    auto it = init.find(st);
    if (it == init.end())
      init[st] = w;
    else
      it->second = it->second + w;
  }
  return pair_evolve(length, init, a);
}

}  // namespace detail

// Partition value of the polygon family at half-length n: split at the
// abscissa n/2, evolve both halves to the junction, pair them up. The
// junction column is counted by both halves, so a surface contact there is
// divided out once; the mid height picks up the y weight. For the family
// that only requires a contact somewhere (S), configurations with no
// contact at all are removed by a second evaluation at a = 0.
template <class W>
W polygon_partition(int n, PolygonFamily fam, const W& a, const W& y) {
  SC_CHECK(n >= 2, "polygon_partition: n >= 2");
  const int mid = n / 2;
  const int left_len = mid - 1;
  const int right_len = n - 1 - mid;

  std::vector<int> left_tips, right_tips;
  detail::family_tips(fam, n, left_tips, right_tips);

  auto assemble = [&](const W& av) {
    auto F = detail::polygon_piece(left_len, left_tips, av);
    auto G = detail::polygon_piece(right_len, right_tips, av);
    const bool centred =
        fam == PolygonFamily::C || fam == PolygonFamily::GC;
    W on_surface = weight_from_int<W>(0);
    W off_surface = weight_from_int<W>(0);
    for (const auto& [st, fw] : F) {
      auto it = G.find(st);
      if (it == G.end()) continue;
      if (centred && st.lower != 0) continue;
      W term = fw * it->second;
      for (int i = 0; i < st.upper; ++i) term = term * y;
      if (st.lower == 0)
        on_surface = on_surface + term;
      else
        off_surface = off_surface + term;
    }
    // The junction contact was weighted by both halves; divide one out.
    // Every on-surface term carries a factor of av from each side, so the
    // division is exact in every weight type (at av = 0 the sum is empty).
    if (!weight_is_zero(on_surface))
      on_surface = weight_traits<W>::div(on_surface, av);
    return on_surface + off_surface;
  };

  W total = assemble(a);
  if (fam == PolygonFamily::S) {
    // Remove never-touching configurations: evaluate at a = 0, where any
    // surface contact kills the weight.
    total = total - assemble(weight_from_int<W>(0));
  }
  return total;
}

// Exact bivariate generating polynomial of the family: coefficient of
// a^v y^h counts polygons with v surface vertices and mid height h.
inline BivariatePolynomial polygon_partition_poly(int n, PolygonFamily fam) {
  SC_CHECK(n >= 2, "polygon_partition_poly: n >= 2");
  const int mid = n / 2;
  const int left_len = mid - 1;
  const int right_len = n - 1 - mid;

  std::vector<int> left_tips, right_tips;
  detail::family_tips(fam, n, left_tips, right_tips);
  const APoly a = APoly::variable();
  auto F = detail::polygon_piece(left_len, left_tips, a);
  auto G = detail::polygon_piece(right_len, right_tips, a);
  const bool centred = fam == PolygonFamily::C || fam == PolygonFamily::GC;

  BivariatePolynomial out;
  for (const auto& [st, fw] : F) {
    auto it = G.find(st);
    if (it == G.end()) continue;
    if (centred && st.lower != 0) continue;
    APoly term = fw * it->second;
    if (st.lower == 0) term = term.shifted_down(1);
    for (std::size_t v = 0; v < term.c.size(); ++v) {
      if (term.c[v] == 0) continue;
      if (fam == PolygonFamily::S && v == 0) continue;  // never touches
      out.add_term(static_cast<int>(v), st.upper, term.c[v]);
    }
  }
  return out;
}

}  // namespace staircase
