#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include "doctest.h"
#include "updag/geometry.hpp"
#include "updag/drawing.hpp"

using namespace updag;

static Point P(int x, int y) { return {Rat(x), Rat(y)}; }

TEST_CASE("orientation") {
  CHECK(orient(P(0, 0), P(1, 0), P(0, 1)) == 1);
  CHECK(orient(P(0, 0), P(0, 1), P(1, 0)) == -1);
  CHECK(orient(P(0, 0), P(1, 1), P(2, 2)) == 0);
}

TEST_CASE("proper segment crossing at exact point") {
  auto h = seg_intersect(P(0, 0), P(2, 2), P(0, 2), P(2, 0));
  CHECK(h.rel == SegRel::Proper);
  CHECK(h.p == P(1, 1));
}

TEST_CASE("disjoint and touching segments") {
  CHECK(seg_intersect(P(0, 0), P(1, 0), P(0, 1), P(1, 1)).rel == SegRel::Disjoint);
  auto t = seg_intersect(P(0, 0), P(2, 0), P(1, 0), P(1, 2));
  CHECK(t.rel == SegRel::Touch);
  CHECK(t.p == P(1, 0));
  auto sharede = seg_intersect(P(0, 0), P(1, 1), P(1, 1), P(2, 0));
  CHECK(sharede.rel == SegRel::Touch);
}

TEST_CASE("collinear overlap") {
  CHECK(seg_intersect(P(0, 0), P(2, 0), P(1, 0), P(3, 0)).rel == SegRel::Overlap);
  CHECK(seg_intersect(P(0, 0), P(1, 0), P(1, 0), P(2, 0)).rel == SegRel::Touch);
  CHECK(seg_intersect(P(0, 0), P(1, 0), P(2, 0), P(3, 0)).rel == SegRel::Disjoint);
}

TEST_CASE("rational crossing point") {
  auto h = seg_intersect(P(0, 0), P(3, 1), P(0, 1), P(3, 0));
  CHECK(h.rel == SegRel::Proper);
  CHECK(h.p.x == Rat(3, 2));
  CHECK(h.p.y == Rat(1, 2));
}

TEST_CASE("angular order") {
  CHECK(angle_less({Rat(1), Rat(0)}, {Rat(0), Rat(1)}));
  CHECK(angle_less({Rat(0), Rat(1)}, {Rat(-1), Rat(0)}));
  CHECK(angle_less({Rat(-1), Rat(0)}, {Rat(0), Rat(-1)}));
  CHECK(!angle_less({Rat(0), Rat(-1)}, {Rat(1), Rat(0)}));
}

TEST_CASE("triangle interior") {
  CHECK(strictly_inside_triangle(P(1, 1), P(0, 0), P(4, 0), P(0, 4)));
  CHECK(!strictly_inside_triangle(P(2, 0), P(0, 0), P(4, 0), P(0, 4)));
  CHECK(!strictly_inside_triangle(P(5, 5), P(0, 0), P(4, 0), P(0, 4)));
}
