#pragma once

#include <map>
#include <optional>
#include <set>
#include <string>
#include <vector>

#include "updag/dag.hpp"
#include "updag/geometry.hpp"

namespace updag {

/// Straight-line/polyline drawing with exact rational coordinates.
/// route[e] holds interior bend points of edge e; endpoints are implied.
struct Drawing {
  Dag dag;
  std::vector<Point> position;
  std::vector<std::vector<Point>> route;

  Drawing() = default;
  explicit Drawing(Dag d) : dag(std::move(d)) {
    position.resize(dag.n);
    route.resize(dag.edges.size());
  }
  /// Full polyline of edge e including endpoints.
  std::vector<Point> polyline(int e) const;
};

struct Crossing {
  int ea, eb;  // ea < eb
  Point p;
  bool operator<(const Crossing& o) const {
    if (ea != o.ea) return ea < o.ea;
    if (eb != o.eb) return eb < o.eb;
    return p < o.p;
  }
  bool operator==(const Crossing& o) const { return ea == o.ea && eb == o.eb && p == o.p; }
};

struct CrossingReport {
  std::vector<Crossing> crossings;
  std::vector<int> per_edge_count;
  int max_per_edge = 0;
  bool is_upward = false;
  bool is_simple = false;
  std::vector<std::string> violations;              // non-empty iff !is_simple
  std::optional<std::set<int>> outer_vertices;      // computed on demand
};

/// Computes crossings, upwardness and simplicity. Never throws on non-simple
/// input; inspect is_simple/violations. `parallel` toggles the OpenMP pair
/// kernel (results are identical to the serial reference).
CrossingReport analyze_drawing(const Drawing& d, bool parallel = true,
                               bool with_outer = false);

/// Spec operation: analysis that rejects non-simple drawings.
/// Throws Error(NonSimpleDrawing) listing the offending elements.
CrossingReport compute_crossings(const Drawing& d, bool with_outer = true);

/// True iff d is simple, upward, and max crossings per edge <= k.
std::pair<bool, CrossingReport> verify_drawing(const Drawing& d, int k);

/// Vertices incident to the unbounded face, by exact ray escape.
std::set<int> outer_face_vertices(const Drawing& d);

/// Planarized graph: crossings replaced by degree-4 dummy vertices.
struct PlanarizedGraph {
  Dag dag_star;
  int original_n = 0;
  std::vector<int> dummy_vertices;                   // vertex ids >= original_n
  std::vector<std::pair<int, int>> crossing_origin;  // per dummy: (ea, eb)
  std::vector<int> edge_origin;                      // dag_star edge -> original edge (-1 none)
  // Embedding (optional): rotation[v] = ccw cyclic list of dag_star edge ids.
  std::vector<std::vector<int>> rotation;
  bool has_embedding = false;
};

/// Builds the planarization of a simple drawing; dummies are inserted in
/// route order along each edge. Throws Error(NonSimpleDrawing).
PlanarizedGraph planarize(const Drawing& d);

/// True iff dag_star has no directed cycle; else witness holds one.
bool planarized_acyclic(const PlanarizedGraph& p, std::vector<int>* witness = nullptr);

/// Contract all dummy vertices back; must reproduce the original edge set.
Dag contract_dummies(const PlanarizedGraph& p);

std::string drawing_to_json(const Drawing& d);
Drawing drawing_from_json(const std::string& text);

}  // namespace updag
