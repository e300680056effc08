#pragma once

#include <vector>

namespace updag {

/// Undirected planarity test (Demoucron-Malgrange-Pertuiset face placement,
/// run per biconnected component). Input: n and undirected edge list; simple
/// graphs only.
bool planar_graph(int n, const std::vector<std::pair<int, int>>& edges);

}  // namespace updag
