#pragma once

#include <map>
#include <string>
#include <vector>

#include "updag/dag.hpp"

namespace updag {

/// st-graph with designated poles.
struct PoledDag {
  Dag dag;
  int s = 0, t = 0;
};

/// Base graphs: "g0" (8-vertex bipartite outerplanar, not upward planar) and
/// "fan7" (7-vertex fan, not upward planar but upward 1-planar).
Dag gen_base(const std::string& name);

/// Iterated family: G_0 = g0; G_l adds a 3-edge path on every outer edge of
/// G_{l-1}. |V| = 8*3^l, max degree 2l+3.
Dag gen_g_ell(int ell, int max_ell = 8);

/// Pathwidth-2 family from the lower-bound construction; |V| = 20k+9.
Dag gen_pathwidth2(int k);

PoledDag gen_parallel(int b, int q);
PoledDag gen_gate(int p);
PoledDag gen_chain(int h, int q, int a);

struct ThreePartitionInstance {
  std::vector<long> elements;  // a_1..a_k
  int b = 0;                   // k/3
  long W = 0;                  // sum = W*b
};

/// Validates k % 3 == 0 and sum divisibility. Throws Error(InvalidInstance).
ThreePartitionInstance make_instance(std::vector<long> elements);
ThreePartitionInstance parse_instance(const std::string& text);

/// Identifier of one gate inside G_A: chain index i (0-based) and gate
/// position r in 1..2b-1 along the chain; r == b is the (a_i)-gate.
struct GateRef {
  int chain;
  int pos;
  bool operator<(const GateRef& o) const {
    return chain < o.chain || (chain == o.chain && pos < o.pos);
  }
};

struct ReductionGraphs {
  PoledDag g_a;
  PoledDag g_b;
  ThreePartitionInstance inst;
  long m_a = 0, m_b = 0;
  // gate -> list of "lanes"; each lane is the edge list (indices into
  // g_a.dag.edges) of one parallel branch of that gate.
  std::map<GateRef, std::vector<std::vector<int>>> gate_lanes;
  // paths of G_B: per path, its edge ids in order along the path
  std::vector<std::vector<int>> b_paths;
  Dag hard_instance;
  int hard_case = 1;
};

ReductionGraphs gen_reduction(const ThreePartitionInstance& inst, int hard_case);

/// Routing witness: for each path pi_j of G_B, the ordered list of
/// (g_a edge, pi_j edge) crossings it makes.
struct CrossingAssignment {
  std::vector<std::vector<std::pair<int, int>>> per_path;
  std::vector<std::vector<int>> bins;  // element indices (0-based), b triples
};

/// Constructive direction of the reduction: builds the crossing pattern for a
/// valid 3-partition (bins = index triples). Throws Error(NotASolution).
CrossingAssignment route_solution(const ReductionGraphs& r,
                                  const std::vector<std::vector<int>>& bins);

struct AssignmentCheck {
  bool ok = false;
  std::vector<std::string> problems;
};

/// Independent verification of the budget arithmetic: every G_A edge crossed
/// <= 1, every path edge exactly once, three a-gates and k-3 (W+1)-gates per
/// path, and encoded bins each sum to W.
AssignmentCheck verify_assignment(const ReductionGraphs& r, const CrossingAssignment& a);

/// Random instance helpers used by tests and the CLI batch mode.
Dag random_connected_dag(int n, int m, unsigned long long seed);
Dag random_single_source_dag(int n, int extra_edges, unsigned long long seed);
Dag random_outerpath(int n, unsigned long long seed);
Dag random_fan(int n, unsigned long long seed, int* center = nullptr);

}  // namespace updag
