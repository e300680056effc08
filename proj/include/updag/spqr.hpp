#pragma once

#include <vector>

#include "updag/dag.hpp"

namespace updag {

/// Skeleton edge of an SPQR node. Vertices are the block's vertex ids.
struct SkelEdge {
  int u = -1, v = -1;
  bool real = false;
  int g_edge = -1;  // real: index into the block's edge list
  int arc = -1;     // virtual: tree arc id
  int dir = 0;      // +1: u->v, -1: v->u, 0: undirected (virtual only)
};

struct SpqrNode {
  char kind = '?';  // 'S', 'P', 'R'
  std::vector<SkelEdge> edges;
  std::vector<int> vertices;  // sorted
};

/// Tree arc: virtual edge ea of node na pairs with virtual edge eb of nb.
struct SpqrArc {
  int na, ea, nb, eb;
};

struct SpqrTree {
  Dag block;
  std::vector<SpqrNode> nodes;
  std::vector<SpqrArc> arcs;
  // expansion graphs per arc: the block edge ids represented beyond the arc,
  // seen from each side. exp_from_na[a] = real edges on nb's side.
  std::vector<std::vector<int>> exp_from_na, exp_from_nb;

  int other_node(int arc, int node) const {
    return arcs[arc].na == node ? arcs[arc].nb : arcs[arc].na;
  }
  const std::vector<int>& expansion_of(int arc, int seen_from_node) const {
    return arcs[arc].na == seen_from_node ? exp_from_na[arc] : exp_from_nb[arc];
  }
};

/// Canonical SPQR tree of a biconnected block (>= 3 vertices, or a cycle).
/// Recursive split at separation pairs / parallel bundles, followed by
/// merging of adjacent same-type S/P nodes. Throws Error(NotBiconnected).
SpqrTree build_spqr(const Dag& block);

/// Tags every skeleton edge with its direction: real edges from the digraph,
/// virtual edges by directed-path existence between the poles inside the
/// expansion graph.
void orient_virtual_edges(SpqrTree& t);

/// Necessary structural conditions for outer-1-planarity: every R-skeleton
/// is a K4 with two non-adjacent real edges, every P-skeleton has at most
/// four virtual edges and at most one real edge.
bool check_o1p_structure(const SpqrTree& t, std::string* why = nullptr);

/// Test helper: rebuilds the block edge set by 2-clique sums over all arcs.
Dag reconstruct_from_spqr(const SpqrTree& t);

}  // namespace updag
