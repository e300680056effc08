#pragma once

#include "updag/dag.hpp"

namespace updag {

/// Exhaustive check of the outer-1-planar-with-acyclic-planarization
/// predicate: enumerates matchings on independent edge pairs, tests the
/// planarized graph plus rotation-forcing wheels plus an apex over the real
/// vertices for planarity, and requires the planarization to be acyclic.
/// For single-source DAGs this decides upward outer-1-planarity.
/// Throws Error(TooLarge) when g.n > limit.
bool oracle_o1p(const Dag& g, int limit = 9);

/// Exhaustive upward-planarity test: searches augmentations (optional super
/// source/sink plus extra edges) reaching an acyclic planar single-source
/// single-sink graph whose source and sink share a face.
/// Throws Error(TooLarge) when g.n > limit.
bool oracle_upward_planar(const Dag& g, int limit = 10);

}  // namespace updag
