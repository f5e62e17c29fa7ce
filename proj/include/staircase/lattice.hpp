#pragma once

#include <set>
#include <stdexcept>
#include <string>
#include <vector>

#include "numeric.hpp"

// Directed paths of diagonal unit steps and staircase polygons built from
// two such paths sharing their endpoints. The surface is the line y = 0;
// every object here lives in the half-space y >= 0.
//
// Coordinates are relative to the stored start vertex; no absolute parity
// of (x, y) is imposed (examples start at both even and odd heights), but
// along a path x + y keeps the parity of the start by construction.

namespace staircase {

enum class Step : int { Up = +1, Down = -1 };

struct Vertex {
  int x = 0;
  int y = 0;
  friend bool operator==(const Vertex& a, const Vertex& b) {
    return a.x == b.x && a.y == b.y;
  }
};

// A path of n diagonal steps; vertex i sits at (x0 + i, height_i).
struct BinomialPath {
  int x0 = 0;
  int y0 = 0;
  std::vector<Step> steps;

  int length() const { return static_cast<int>(steps.size()); }
  int height(int i) const {
    int h = y0;
    for (int j = 0; j < i; ++j) h += static_cast<int>(steps[j]);
    return h;
  }
  Vertex vertex(int i) const { return Vertex{x0 + i, height(i)}; }
  std::vector<int> heights() const {
    std::vector<int> h(steps.size() + 1);
    h[0] = y0;
    for (std::size_t j = 0; j < steps.size(); ++j)
      h[j + 1] = h[j] + static_cast<int>(steps[j]);
    return h;
  }
  int end_height() const { return height(length()); }
  bool in_half_space() const {
    for (int h : heights())
      if (h < 0) return false;
    return true;
  }
};

// Build a path from a compact step string, e.g. "UDDU".
inline BinomialPath make_path(int x0, int y0, const std::string& pattern) {
  BinomialPath p;
  p.x0 = x0;
  p.y0 = y0;
  p.steps.reserve(pattern.size());
  for (char c : pattern) {
    if (c == 'U' || c == 'u')
      p.steps.push_back(Step::Up);
    else if (c == 'D' || c == 'd')
      p.steps.push_back(Step::Down);
    else
      throw std::invalid_argument("step pattern must be U/D");
  }
  return p;
}

// Two paths with common endpoints; the upper path is strictly above the
// lower one at every interior abscissa. Half-length n = steps per path.
struct StaircasePolygon {
  BinomialPath lower;
  BinomialPath upper;
  int half_length() const { return lower.length(); }
};

enum class PolygonClass { S, G, C, GC };

inline std::string to_string(PolygonClass c) {
  switch (c) {
    case PolygonClass::S: return "S";
    case PolygonClass::G: return "G";
    case PolygonClass::C: return "C";
    case PolygonClass::GC: return "GC";
  }
  return "?";
}

inline PolygonClass polygon_class_from_string(const std::string& s) {
  if (s == "S" || s == "s") return PolygonClass::S;
  if (s == "G" || s == "g") return PolygonClass::G;
  if (s == "C" || s == "c") return PolygonClass::C;
  if (s == "GC" || s == "gc" || s == "Gc") return PolygonClass::GC;
  throw std::invalid_argument("unknown polygon class: " + s);
}

// Number of distinct polygon vertices on the surface and the height of the
// upper path above the midpoint abscissa.
struct PolygonStats {
  int visits = 0;
  int mid_height = 0;
};

namespace detail {
inline void validate_polygon(const StaircasePolygon& p) {
  const int n = p.lower.length();
  if (n < 2) throw std::invalid_argument("polygon needs at least 2 steps");
  if (p.upper.length() != n)
    throw std::invalid_argument("path lengths differ");
  if (!(p.lower.vertex(0) == p.upper.vertex(0)) ||
      !(p.lower.vertex(n) == p.upper.vertex(n)))
    throw std::invalid_argument("paths must share both endpoints");
  const auto lo = p.lower.heights();
  const auto hi = p.upper.heights();
  for (int i = 0; i <= n; ++i) {
    if (lo[i] < 0) throw std::invalid_argument("lower path leaves half-space");
    if (0 < i && i < n && hi[i] <= lo[i])
      throw std::invalid_argument("paths intersect at interior abscissa");
  }
}
}  // namespace detail

// Throws std::invalid_argument on any constraint violation. Only the lower
// path can reach the surface: the shared endpoints sit strictly above it
// (the upper path is above the lower, which is above y = 0 next to a tip).
inline PolygonStats polygon_stats(const StaircasePolygon& p) {
  detail::validate_polygon(p);
  const int n = p.lower.length();
  const auto lo = p.lower.heights();
  PolygonStats st;
  for (int i = 1; i < n; ++i)
    if (lo[i] == 0) ++st.visits;
  st.mid_height = p.upper.height(n / 2);
  return st;
}

// Class predicates. Endpoint heights follow the residue of n where a class
// constrains them:
//   G : left tip at 1; right tip at 1 (n even) or 2 (n odd)
//   C : lower path at height 0 above the midpoint abscissa
//   GC: C together with tips (2,2),(2,1),(1,1),(1,2) for n = 0,1,2,3 mod 4
//   S : at least one surface visit
inline std::set<PolygonClass> classify(const StaircasePolygon& p) {
  detail::validate_polygon(p);
  const int n = p.lower.length();
  const auto lo = p.lower.heights();
  std::set<PolygonClass> out;

  bool touches = false;
  for (int i = 1; i < n; ++i)
    if (lo[i] == 0) touches = true;
  if (touches) out.insert(PolygonClass::S);

  const int left = lo[0];
  const int right = lo[n];
  if (left == 1 && right == (n % 2 == 0 ? 1 : 2)) out.insert(PolygonClass::G);

  const bool centred = lo[n / 2] == 0;
  if (centred) out.insert(PolygonClass::C);

  static constexpr int kGcLeft[4] = {2, 2, 1, 1};
  static constexpr int kGcRight[4] = {2, 1, 1, 2};
  if (centred && left == kGcLeft[n % 4] && right == kGcRight[n % 4])
    out.insert(PolygonClass::GC);

  return out;
}

// Mirror around the vertical line through the midpoint of the span.
inline StaircasePolygon reflect_left_right(const StaircasePolygon& p) {
  auto flip = [](const BinomialPath& q) {
    BinomialPath r;
    r.x0 = q.x0;
    r.y0 = q.end_height();
    r.steps.assign(q.steps.rbegin(), q.steps.rend());
    for (auto& s : r.steps) s = (s == Step::Up) ? Step::Down : Step::Up;
    return r;
  };
  return StaircasePolygon{flip(p.lower), flip(p.upper)};
}

}  // namespace staircase
