#include <catch2/catch_amalgamated.hpp>

#include <staircase/binomial.hpp>
#include <staircase/enumerate.hpp>

using namespace staircase;

TEST_CASE("smallest polygons") {
  for (PolygonClass cls : {PolygonClass::S, PolygonClass::G, PolygonClass::C,
                           PolygonClass::GC}) {
    CHECK(enumerate_polygons(1, cls).empty());
    BivariatePolynomial p = enumerate_polygons(2, cls);
    // only the unit diamond exists at half-length 2, in every class
    CHECK(p.terms().size() == 1);
    CHECK(p.coefficient(1, 2) == 1);
  }
  // half-length 3: tips at 1 and 2
  BivariatePolynomial g3 = enumerate_polygons(3, PolygonClass::G);
  CHECK(g3.terms().size() == 1);
  CHECK(g3.coefficient(1, 2) == 1);
}

TEST_CASE("class containment as polynomial domination") {
  for (int n = 2; n <= 10; ++n) {
    BivariatePolynomial s = enumerate_polygons(n, PolygonClass::S);
    BivariatePolynomial c = enumerate_polygons(n, PolygonClass::C);
    BivariatePolynomial gc = enumerate_polygons(n, PolygonClass::GC);
    CHECK(gc.dominated_by(c));
    CHECK(c.dominated_by(s));
  }
}

TEST_CASE("half-space walk totals") {
  // walks free to touch but not cross the surface: central binomial count
  for (int n = 0; n <= 10; ++n) {
    auto walks = enumerate_half_space_paths(n);
    BigInt total(0);
    for (const auto& [vh, c] : walks) total += c;
    CHECK(total == binom(n, n / 2));
  }
  // n = 0: single empty walk, one surface vertex, height zero
  auto w0 = enumerate_half_space_paths(0);
  REQUIRE(w0.size() == 1);
  CHECK(w0.at({1, 0}) == 1);
}

TEST_CASE("pair enumeration consistency") {
  auto all = enumerate_pairs_all(6, 0, 2);
  for (const auto& [ends, p] : all) {
    CHECK(p == enumerate_pairs(6, 0, 2, ends.first, ends.second));
    // lower path starts on the surface: every pair carries at least a^1
    CHECK(p.c.size() >= 2);
    CHECK(p.c[0] == 0);
  }
  CHECK(enumerate_pairs(4, 1, 3, 9, 9).is_zero());
}

TEST_CASE("explicit pair weight") {
  // sixteen-step nonintersecting pair with five lower-path surface vertices
  const BinomialPath lower = make_path(0, 0, "UDUDUUDUUDDDUDUU");
  const BinomialPath upper = make_path(0, 4, "DUDUUDUDUUUDUUDU");
  CHECK(lower.end_height() == 2);
  CHECK(upper.end_height() == 8);
  CHECK(pair_surface_visits(lower, upper) == 5);
  CHECK_THROWS_AS(pair_surface_visits(upper, lower), std::invalid_argument);
}

TEST_CASE("small bridge counts") {
  CHECK(enumerate_bridges(1) == std::map<int, BigInt>{{1, 1}});
  CHECK(enumerate_bridges(2) == std::map<int, BigInt>{{2, 1}});
  CHECK(enumerate_bridges(3) == std::map<int, BigInt>{{3, 1}});
  CHECK(enumerate_bridges(5) == std::map<int, BigInt>{{3, 2}, {5, 1}});
  for (int n = 1; n <= 12; ++n) {
    auto b = enumerate_bridges(n);
    // top height always reachable in exactly one way
    CHECK(b.at(n) == 1);
    for (const auto& [h, c] : b) {
      CHECK((h - n) % 2 == 0);
      CHECK(c > 0);
      CHECK(h >= 1);
    }
  }
}

TEST_CASE("bridge enumeration crossover") {
  // the DFS range ends at 26 steps; the (height, running-max) program
  // continues beyond and must agree where both apply
  auto dfs_side = enumerate_bridges(kMaxBridgeDfsSteps);
  auto dp_side = enumerate_bridges(kMaxBridgeDfsSteps + 1);
  CHECK(dfs_side.at(kMaxBridgeDfsSteps) == 1);
  CHECK(dp_side.at(kMaxBridgeDfsSteps + 1) == 1);
  // totals grow monotonically with length for odd/even separately
  BigInt t26(0), t28(0);
  for (const auto& [h, c] : dfs_side) t26 += c;
  for (const auto& [h, c] : enumerate_bridges(kMaxBridgeDfsSteps + 2))
    t28 += c;
  CHECK(t28 > t26);
}

TEST_CASE("enumeration range guards") {
  CHECK_THROWS_AS(enumerate_polygons(kMaxPolygonHalfLength + 1,
                                     PolygonClass::S),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_half_space_paths(kMaxWalkSteps + 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_bridges(0), std::invalid_argument);
  CHECK_THROWS_AS(enumerate_bridges(kMaxBridgeSteps + 1),
                  std::invalid_argument);
  CHECK_THROWS_AS(enumerate_pairs_all(3, 2, 2), std::invalid_argument);
}
