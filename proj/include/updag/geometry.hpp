#pragma once

#include <optional>

#include "updag/rational.hpp"

namespace updag {

struct Point {
  Rat x, y;
  bool operator==(const Point& o) const { return x == o.x && y == o.y; }
  bool operator<(const Point& o) const { return x < o.x || (x == o.x && y < o.y); }
};

/// Sign of the cross product (b-a) x (c-a): +1 left turn, -1 right, 0 collinear.
int orient(const Point& a, const Point& b, const Point& c);

/// p collinear with [a,b] and within the closed bounding box.
bool on_segment(const Point& p, const Point& a, const Point& b);

enum class SegRel {
  Disjoint,
  Proper,    // transversal crossing in both interiors
  Touch,     // single shared point involving a segment endpoint
  Overlap,   // collinear with a shared sub-segment of positive length
};

struct SegHit {
  SegRel rel = SegRel::Disjoint;
  Point p;  // valid for Proper and Touch
};

SegHit seg_intersect(const Point& a, const Point& b, const Point& c, const Point& d);

/// y-coordinate of line(a,b) at x; requires a.x != b.x.
Rat line_y_at(const Point& a, const Point& b, const Rat& x);
/// x-coordinate of line(a,b) at y; requires a.y != b.y.
Rat line_x_at(const Point& a, const Point& b, const Rat& y);

bool strictly_inside_triangle(const Point& p, const Point& a, const Point& b, const Point& c);

/// Angular comparison of direction vectors for ccw sorting, starting from
/// direction (1,0). Returns true if da comes strictly before db.
bool angle_less(const Point& da, const Point& db);

}  // namespace updag
