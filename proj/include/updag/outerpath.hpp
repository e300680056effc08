#pragma once

#include <array>
#include <optional>
#include <vector>

#include "updag/dag.hpp"

namespace updag {

/// Result of outerpath recognition + triangulation to a maximal outerpath.
struct OuterpathStructure {
  std::vector<int> backbone;                  // degree->=4 vertices of the maximal outerpath, in path order
  std::vector<int> fan_assignment;            // vertex -> backbone vertex; -1 for backbone vertices
  std::vector<std::pair<int, int>> added_edges;  // directed edges inserted (2-connecting + triangulation)
  std::vector<int> hamiltonian_outer_cycle;   // cyclic vertex order of the maximal outerpath

  Dag augmented;                              // g + added_edges (the maximal outerpath)
  std::vector<std::array<int, 3>> triangles;  // internal faces of augmented, in dual path order
};

/// Undirected outerplanar embedding of a 2-connected graph:
/// Hamiltonian outer cycle + non-crossing chords. Throws NotAnOuterpath-style
/// errors via the generic recognizer below.
struct OuterplaneEmbedding {
  std::vector<int> cycle;                    // outer cycle order
  std::vector<std::pair<int, int>> chords;   // as (position, position) in cycle order, pos_a < pos_b
};

/// Recognizes a 2-connected outerplanar graph and returns its unique (up to
/// reflection) outerplane embedding; nullopt when not outerplanar.
std::optional<OuterplaneEmbedding> outerplane_embedding(const Dag& g);

/// Recognition, 2-connectivity augmentation, triangulation and backbone/fan
/// identification for a connected acyclic outerpath.
/// Throws Error(NotAnOuterpath), Error(CyclicGraph), Error(Disconnected).
OuterpathStructure outerpath_structure(const Dag& g);

/// True iff the underlying graph is a fan with central vertex c; fills the
/// path order v_1..v_{n-1} when given.
bool is_fan(const Dag& g, int c, std::vector<int>* path_order = nullptr);

/// Finds some central vertex making g a fan, or -1.
int find_fan_center(const Dag& g);

}  // namespace updag
