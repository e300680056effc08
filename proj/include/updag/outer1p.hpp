#pragma once

#include <array>
#include <optional>
#include <string>
#include <vector>

#include "updag/drawing.hpp"
#include "updag/spqr.hpp"

namespace updag {

/// One embedding class of a skeleton (quotiented by reflection).
struct SkelEmbedding {
  // P-nodes: skeleton edge indices left-to-right; crossed pairs are listed
  // as adjacent positions in this order.
  std::vector<int> lane_order;
  struct XPair {
    int pos;           // lane_order positions pos, pos+1 form the X
    bool first_at_u;   // lane_order[pos] attaches leftmost at pole u
  };
  std::vector<XPair> xpairs;
  // R-nodes: the two non-adjacent real skeleton edges that cross.
  int r_diag_a = -1, r_diag_b = -1;
  // Per skeleton edge: whether its segment at edge.u / edge.v borders the
  // outer face (uncrossed edges: both true).
  std::vector<std::array<bool, 2>> side_outer;
};

/// All embeddings of skel(node) satisfying C1-C4, filtered to those whose
/// extended planarization is acyclic (P- and R-nodes). S-nodes yield their
/// unique planar embedding.
std::vector<SkelEmbedding> feasible_embeddings(const SpqrTree& t, int node);

/// One embedding index per node, satisfying the C5 coupling between P-nodes
/// adjacent through an S-node; nullopt when no consistent choice exists.
std::optional<std::vector<int>> consistent_choice(
    const SpqrTree& t, const std::vector<std::vector<SkelEmbedding>>& feasible);

/// Combinatorial outer-1-planar embedding of the whole input graph.
struct Outer1PlanarEmbedding {
  PlanarizedGraph planarized;         // dag_star over original+dummy, rotation, origins
  std::vector<int> outer_walk;        // vertex walk of the outer face boundary
  std::vector<int> crossing_node;     // per dummy: SPQR node that produced it (-1 n/a)
};

struct RejectionCertificate {
  std::string stage;   // "structure" | "feasibility" | "consistency"
  std::string detail;
};

struct O1pResult {
  bool accepted = false;
  Outer1PlanarEmbedding embedding;
  RejectionCertificate rejection;
  int max_feasible_list = 0;     // across all skeletons (paper bound: <= 12)
  long long cyclic_filtered = 0; // embeddings dropped by the acyclicity filter
};

/// Upward outer-1-planarity test for connected single-source DAGs.
/// Throws Error(UnsupportedInput) for cyclic, disconnected or multi-source
/// inputs; Error(InternalVerification) if an accepted embedding fails its
/// own soundness checks.
O1pResult test_upward_o1p(const Dag& g);

/// Per-block pipeline pieces are combined with this; exposed for tests.
Outer1PlanarEmbedding combine_embeddings(const SpqrTree& t, const std::vector<int>& choice,
                                         const std::vector<std::vector<SkelEmbedding>>& feasible,
                                         const std::vector<int>& vertex_map,
                                         const std::vector<int>& edge_map, int global_n,
                                         int first_dummy);

struct EmbeddingCheck {
  bool ok = true;
  std::vector<std::string> problems;
};

/// Independent soundness checks: all real vertices on the outer face, at most
/// one crossing per original edge, dummy rotation alternation, acyclic
/// planarization, and edge-set equality with g.
EmbeddingCheck check_o1p_embedding(const Dag& g, const Outer1PlanarEmbedding& emb);

std::string embedding_to_json(const Outer1PlanarEmbedding& emb);

}  // namespace updag
