#pragma once

#include <string>
#include <vector>

#include "ont/plane_graph.hpp"

namespace ont {

/// Canonical form of the abstract graph (labels forgotten): the
/// lexicographically smallest upper-triangle adjacency bitstring over all
/// relabelings, found by iterative color refinement with backtracking on
/// non-singleton cells. Intended for small graphs (n <= 12 or so).
std::string canonical_form(const std::vector<std::vector<VertexId>>& adj);
std::string canonical_form(const PlaneGraph& g);

bool are_isomorphic(const PlaneGraph& a, const PlaneGraph& b);

/// Canonical form of the embedded graph with its outer face, up to
/// relabeling and reflection. Two plane graphs get the same string iff an
/// isomorphism preserves rotations (possibly all reversed) and the outer
/// face. Used to deduplicate during enumeration.
std::string embedded_canonical_form(const PlaneGraph& g);

/// If the abstract graphs are isomorphic, returns a vertex map from `a` to
/// `b` realizing one isomorphism; empty vector otherwise.
std::vector<VertexId> find_isomorphism(const std::vector<std::vector<VertexId>>& a,
                                       const std::vector<std::vector<VertexId>>& b);

} // namespace ont
