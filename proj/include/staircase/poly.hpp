#pragma once

#include <map>
#include <sstream>
#include <utility>
#include <vector>

#include "numeric.hpp"

// Dense univariate polynomials (used as weights polynomial in the surface
// fugacity a) and the exact bivariate polynomial in (a, y) that the
// enumeration oracles produce.

namespace staircase {

template <class T>
struct Poly {
  std::vector<T> c;  // c[i] multiplies x^i; trailing zeros trimmed

  Poly() = default;
  explicit Poly(std::vector<T> coeffs) : c(std::move(coeffs)) { normalize(); }
  static Poly constant(const T& v) { return Poly(std::vector<T>{v}); }
  static Poly variable() { return Poly(std::vector<T>{T(0), T(1)}); }

  void normalize() {
    while (!c.empty() && c.back() == T(0)) c.pop_back();
  }
  bool is_zero() const { return c.empty(); }
  int degree() const { return static_cast<int>(c.size()) - 1; }
  T coeff(std::size_t i) const { return i < c.size() ? c[i] : T(0); }

  friend Poly operator+(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] += b.c[i];
    r.normalize();
    return r;
  }
  friend Poly operator-(const Poly& a, const Poly& b) {
    Poly r;
    r.c.resize(std::max(a.c.size(), b.c.size()), T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i) r.c[i] += a.c[i];
    for (std::size_t i = 0; i < b.c.size(); ++i) r.c[i] -= b.c[i];
    r.normalize();
    return r;
  }
  friend Poly operator*(const Poly& a, const Poly& b) {
    if (a.is_zero() || b.is_zero()) return Poly();
    Poly r;
    r.c.assign(a.c.size() + b.c.size() - 1, T(0));
    for (std::size_t i = 0; i < a.c.size(); ++i)
      for (std::size_t j = 0; j < b.c.size(); ++j) r.c[i + j] += a.c[i] * b.c[j];
    r.normalize();
    return r;
  }
  Poly& operator+=(const Poly& o) { return *this = *this + o; }
  Poly& operator-=(const Poly& o) { return *this = *this - o; }
  Poly& operator*=(const Poly& o) { return *this = *this * o; }
  friend bool operator==(const Poly& a, const Poly& b) { return a.c == b.c; }
  friend bool operator!=(const Poly& a, const Poly& b) { return !(a == b); }

  // Divide by x^k; requires the k lowest coefficients to vanish.
  Poly shifted_down(std::size_t k) const {
    if (is_zero()) return Poly();
    SC_CHECK(c.size() > k, "shifted_down: degree too small");
    for (std::size_t i = 0; i < k; ++i)
      SC_CHECK(c[i] == T(0), "shifted_down: nonzero low coefficient");
    Poly r;
    r.c.assign(c.begin() + k, c.end());
    return r;
  }

  template <class X>
  X eval(const X& x) const {
    X acc = X(0);
    for (std::size_t i = c.size(); i-- > 0;) acc = acc * x + X(c[i]);
    return acc;
  }
};

using APoly = Poly<BigInt>;   // exact polynomial in the visit fugacity a
using RPoly = Poly<BigRat>;

// Weight adaptation: a Poly weight is constructed from integers as a
// constant, and division is only ever by the bare variable a (an exact
// shift after checking the constant term vanishes).
template <class T>
struct weight_traits<Poly<T>> {
  static Poly<T> from(const BigInt& x) {
    if (x == 0) return Poly<T>();
    return Poly<T>::constant(weight_traits<T>::from(x));
  }
  static Poly<T> div(const Poly<T>& num, const Poly<T>& den) {
    SC_CHECK(den == Poly<T>::variable(),
             "Poly weight division is only defined by the variable");
    if (num.is_zero()) return num;
    return num.shifted_down(1);
  }
};

// Exact generating polynomial in (a, y): coefficient of a^v y^h counts
// configurations with v surface visits and mid-height h. Terms are kept in
// a sorted map so iteration order (and all printed output) is stable.
class BivariatePolynomial {
 public:
  using Key = std::pair<int, int>;  // (v, h)
  using Map = std::map<Key, BigInt>;

  void add_term(int v, int h, const BigInt& coeff) {
    if (coeff == 0) return;
    auto it = terms_.find({v, h});
    if (it == terms_.end()) {
      terms_.emplace(Key{v, h}, coeff);
    } else {
      it->second += coeff;
      if (it->second == 0) terms_.erase(it);
    }
  }

  const Map& terms() const { return terms_; }
  bool empty() const { return terms_.empty(); }
  BigInt coefficient(int v, int h) const {
    auto it = terms_.find({v, h});
    return it == terms_.end() ? BigInt(0) : it->second;
  }
  BigInt total() const {  // value at a = y = 1
    BigInt s = 0;
    for (const auto& [k, c] : terms_) s += c;
    return s;
  }

  friend BivariatePolynomial operator+(const BivariatePolynomial& a,
                                       const BivariatePolynomial& b) {
    BivariatePolynomial r = a;
    for (const auto& [k, c] : b.terms_) r.add_term(k.first, k.second, c);
    return r;
  }
  friend bool operator==(const BivariatePolynomial& a,
                         const BivariatePolynomial& b) {
    return a.terms_ == b.terms_;
  }
  friend bool operator!=(const BivariatePolynomial& a,
                         const BivariatePolynomial& b) {
    return !(a == b);
  }

  // Coefficient-wise <=; both polynomials must be coefficient-nonnegative
  // for this to order partition functions.
  bool dominated_by(const BivariatePolynomial& other) const {
    for (const auto& [k, c] : terms_)
      if (c > other.coefficient(k.first, k.second)) return false;
    return true;
  }

  template <class X>
  X eval(const X& a, const X& y) const {
    X acc = weight_from_int<X>(0);
    for (const auto& [k, c] : terms_) {
      X t = weight_traits<X>::from(c);
      for (int i = 0; i < k.first; ++i) t = t * a;
      for (int i = 0; i < k.second; ++i) t = t * y;
      acc = acc + t;
    }
    return acc;
  }

  std::string str() const {
    std::ostringstream os;
    bool first = true;
    for (const auto& [k, c] : terms_) {
      if (!first) os << " + ";
      first = false;
      if (c != 1) os << c << "*";
      os << "a^" << k.first << "*y^" << k.second;
    }
    if (first) os << "0";
    return os.str();
  }

 private:
  Map terms_;
};

}  // namespace staircase
