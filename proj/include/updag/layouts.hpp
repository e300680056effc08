#pragma once

#include <vector>

#include "updag/drawing.hpp"
#include "updag/outerpath.hpp"

namespace updag {

/// Ordered partition of a fan's outer path into maximal runs whose edges to
/// the centre all point the same way.
struct FanPartition {
  std::vector<int> path;                      // v_1..v_{n-1}
  std::vector<std::pair<int, int>> subpaths;  // [first,last] index ranges into path
  std::vector<bool> toward_c;                 // per subpath
};

FanPartition fan_partition(const Dag& f, int c);

/// Upward 2-planar fan drawing with the four structural guarantees:
/// uncrossed centre edges, pinned x-coordinates, the [1, n-1] strip for
/// centre/subpath edges, and the bounded first-connector crossing.
Drawing draw_fan(const Dag& f, int c);

/// Upward 2-planar drawing of a directed acyclic outerpath.
Drawing draw_outerpath(const Dag& g);

struct BandwidthLabeling {
  std::vector<int> label;  // vertex -> distinct value in 1..n
  int width = 0;
};

/// Exact minimum-bandwidth labeling by branch and bound.
/// Throws Error(TooLarge) when g.n > limit.
BandwidthLabeling exact_bandwidth(const Dag& g, int limit = 12);

int labeling_width(const Dag& g, const std::vector<int>& label);

/// x = label, y = linear-extension rank, deterministic perturbation,
/// straight-line edges. Upward always; per-edge crossings <= maxdeg*(bw-2)
/// for bw >= 2 and crossing-free for bw = 1.
Drawing draw_bandwidth(const Dag& g, const BandwidthLabeling& lab);

}  // namespace updag
