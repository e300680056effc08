#pragma once

#include <optional>
#include <vector>

#include "updag/drawing.hpp"

namespace updag {

/// Obstacle segment for routing: part of an already-drawn edge.
struct RouteObstacle {
  Point a, b;
  int edge;  // id in the caller's numbering; -1 for hard walls
};

struct RouteLimits {
  std::vector<int> budget;       // per edge: how many further crossings are allowed
  std::optional<Rat> x_max;      // vertical wall (exclusive for interior points)
};

struct RoutedPath {
  std::vector<Point> bends;          // interior bend points, from->...->to
  std::vector<int> crossed_edges;    // edge ids crossed, possibly with repeats
};

/// Finds a strictly y-monotone polyline from `from` (lower) to `to` (higher)
/// through the obstacle arrangement, minimizing the number of crossings, then
/// the number of bends, with lexicographic tie-breaking for determinism.
/// Edges with zero budget (or edge == -1) are never crossed. Returns nullopt
/// when no route within budgets exists.
std::optional<RoutedPath> route_monotone(const Point& from, const Point& to,
                                         const std::vector<RouteObstacle>& obstacles,
                                         const RouteLimits& limits);

}  // namespace updag
