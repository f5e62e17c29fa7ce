#include <catch2/catch_amalgamated.hpp>

#include <staircase/lattice.hpp>

using namespace staircase;

namespace {

StaircasePolygon poly(int y0, const std::string& lo, const std::string& hi) {
  return StaircasePolygon{make_path(0, y0, lo), make_path(0, y0, hi)};
}

}  // namespace

TEST_CASE("unit diamond statistics and classes") {
  const StaircasePolygon p = poly(1, "DU", "UD");
  const PolygonStats st = polygon_stats(p);
  CHECK(st.visits == 1);
  CHECK(st.mid_height == 2);
  const auto cls = classify(p);
  CHECK(cls.count(PolygonClass::S) == 1);
  CHECK(cls.count(PolygonClass::G) == 1);
  CHECK(cls.count(PolygonClass::C) == 1);
  CHECK(cls.count(PolygonClass::GC) == 1);
}

TEST_CASE("sixteen-step samples") {
  // adsorbed sample: three visits, mid-height 7, no tip/centre structure
  {
    const StaircasePolygon p =
        poly(3, "DUDDDUDUUDDUUDUU", "UUUDDUUUDUDDUDDD");
    const PolygonStats st = polygon_stats(p);
    CHECK(st.visits == 3);
    CHECK(st.mid_height == 7);
    CHECK(classify(p) == std::set<PolygonClass>{PolygonClass::S});
  }
  // grafted sample: tips at the minimum heights for even length
  {
    const StaircasePolygon p =
        poly(1, "DUDUDUUDUUDDDUDU", "UUUUUUUDDDUDDDDD");
    const PolygonStats st = polygon_stats(p);
    CHECK(st.visits == 5);
    CHECK(st.mid_height == 7);
    CHECK(classify(p) ==
          std::set<PolygonClass>{PolygonClass::S, PolygonClass::G});
  }
  // centred sample: lower path on the surface above the midpoint
  {
    const StaircasePolygon p =
        poly(4, "DDUDDDUDUUDUUDUU", "UDUDUUDUUUDDUDDD");
    const PolygonStats st = polygon_stats(p);
    CHECK(st.visits == 2);
    CHECK(st.mid_height == 6);
    CHECK(classify(p) ==
          std::set<PolygonClass>{PolygonClass::S, PolygonClass::C});
  }
}

TEST_CASE("validation rejects malformed polygons") {
  // length mismatch
  CHECK_THROWS_AS(polygon_stats(StaircasePolygon{make_path(0, 1, "DU"),
                                                 make_path(0, 1, "UUDD")}),
                  std::invalid_argument);
  // endpoints differ
  CHECK_THROWS_AS(polygon_stats(StaircasePolygon{make_path(0, 1, "DU"),
                                                 make_path(0, 1, "UU")}),
                  std::invalid_argument);
  // interior contact between the paths
  CHECK_THROWS_AS(polygon_stats(poly(1, "DU", "DU")), std::invalid_argument);
  // lower path below the surface
  CHECK_THROWS_AS(polygon_stats(poly(0, "DU", "UD")), std::invalid_argument);
  // too short
  CHECK_THROWS_AS(polygon_stats(StaircasePolygon{make_path(0, 1, "U"),
                                                 make_path(0, 1, "U")}),
                  std::invalid_argument);
  // bad step characters
  CHECK_THROWS_AS(make_path(0, 0, "UPDOWN"), std::invalid_argument);
}

TEST_CASE("class membership implications") {
  // centred forces a surface visit; the doubly-constrained class sits
  // inside the centred class
  for (const auto& p : {poly(1, "DU", "UD"),
                        poly(4, "DDUDDDUDUUDUUDUU", "UDUDUUDUUUDDUDDD")}) {
    const auto cls = classify(p);
    if (cls.count(PolygonClass::GC)) CHECK(cls.count(PolygonClass::C) == 1);
    if (cls.count(PolygonClass::C)) CHECK(cls.count(PolygonClass::S) == 1);
  }
}

TEST_CASE("left-right reflection preserves structure") {
  const StaircasePolygon p =
      poly(4, "DDUDDDUDUUDUUDUU", "UDUDUUDUUUDDUDDD");
  const StaircasePolygon r = reflect_left_right(p);
  const PolygonStats a = polygon_stats(p);
  const PolygonStats b = polygon_stats(r);
  CHECK(a.visits == b.visits);
  CHECK(a.mid_height == b.mid_height);
  CHECK(classify(r).count(PolygonClass::C) == 1);
  // reflecting twice restores the original step sequence
  const StaircasePolygon rr = reflect_left_right(r);
  CHECK(rr.lower.steps == p.lower.steps);
  CHECK(rr.upper.steps == p.upper.steps);
  CHECK(rr.lower.y0 == p.lower.y0);
}

TEST_CASE("path helpers") {
  const BinomialPath p = make_path(2, 3, "UUDD");
  CHECK(p.length() == 4);
  CHECK(p.height(0) == 3);
  CHECK(p.height(2) == 5);
  CHECK(p.end_height() == 3);
  CHECK(p.vertex(4) == Vertex{6, 3});
  CHECK(p.in_half_space());
  CHECK_FALSE(make_path(0, 0, "DD").in_half_space());
}
