#pragma once

#include <string>
#include <utility>
#include <vector>

#include "updag/errors.hpp"

namespace updag {

/// Simple directed graph on vertices 0..n-1. Acyclicity is not an invariant
/// of the type; operations that need it check it.
struct Dag {
  int n = 0;
  std::vector<std::pair<int, int>> edges;
  std::vector<std::string> labels;  // cosmetic; empty or size n

  Dag() = default;
  Dag(int n_, std::vector<std::pair<int, int>> e) : n(n_), edges(std::move(e)) {}

  int m() const { return static_cast<int>(edges.size()); }
  bool has_edge(int u, int v) const;

  /// Throws Error(InvalidParameter) on self-loops, duplicates, bad indices.
  void validate() const;

  std::vector<std::vector<int>> out_adj() const;
  std::vector<std::vector<int>> in_adj() const;
  /// Underlying undirected adjacency, neighbor lists sorted.
  std::vector<std::vector<int>> undirected_adj() const;

  std::vector<int> sources() const;
  std::vector<int> sinks() const;
  std::vector<int> degrees() const;  // underlying degrees
  int max_degree() const;

  bool connected() const;  // underlying; true for n <= 1
  bool operator==(const Dag& o) const { return n == o.n && edges == o.edges; }
};

struct LinearExtension {
  std::vector<int> order;  // order[i] = i-th vertex
  std::vector<int> rank;   // inverse permutation
};

/// Kahn's algorithm, smallest-index-first. Throws Error(CyclicGraph) with a
/// directed cycle witness <v0,...,v0> when g has a cycle.
LinearExtension linear_extension(const Dag& g);

bool is_acyclic_dag(const Dag& g);

/// Biconnected components of the underlying graph. Edge sets partition E(g);
/// cut vertices appear in several blocks. Throws Error(Disconnected).
struct Block {
  Dag dag;                    // local indices 0..k-1
  std::vector<int> vertex_map;  // local -> global
};
std::vector<Block> blocks(const Dag& g);

/// Parses the DAG text format: optional '#' comment lines, header "n m",
/// then m lines "u v" (0-based, directed u->v).
Dag parse_dag(const std::string& text);

/// Canonical serialization: header, then edges sorted lexicographically.
std::string serialize_dag(const Dag& g);

Dag read_dag_file(const std::string& path);
void write_dag_file(const Dag& g, const std::string& path);

}  // namespace updag
