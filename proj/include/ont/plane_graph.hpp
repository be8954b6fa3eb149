#pragma once

#include <optional>
#include <string>
#include <utility>
#include <vector>

#include "ont/error.hpp"

namespace ont {

using VertexId = int;
using FaceId = int;

/// A directed edge side; every undirected edge {u,v} yields darts (u,v) and (v,u).
struct Dart {
    VertexId tail = -1;
    VertexId head = -1;

    friend bool operator==(const Dart&, const Dart&) = default;
};

/// An immutable 2-connected-or-weaker plane graph given by a rotation system.
///
/// Rotations are stored in clockwise order. Faces are traced by the
/// successor-in-rotation rule: after arriving at v along (u,v), the walk
/// continues with (v, w) where w follows u in the rotation of v. Under this
/// convention every inner face is walked clockwise and the outer face walk
/// runs counterclockwise along the boundary; outer_cycle() reverses it so the
/// outer cycle reads clockwise.
class PlaneGraph {
public:
    PlaneGraph() = default;  // empty placeholder; all real graphs come from build()

    /// Builds from rotations, tracing faces and checking Euler's formula.
    /// The outer face is the longest facial walk (ties: lexicographically
    /// smallest canonical vertex sequence) unless a hint names it.
    static PlaneGraph build(std::vector<std::vector<VertexId>> rotations);
    static PlaneGraph build(std::vector<std::vector<VertexId>> rotations,
                            const std::vector<VertexId>& outer_cycle_hint);

    int vertex_count() const { return static_cast<int>(rotations_.size()); }
    int edge_count() const { return static_cast<int>(edges_.size()); }
    int face_count() const { return static_cast<int>(faces_.size()); }

    const std::vector<VertexId>& rotation(VertexId v) const { return rotations_[v]; }
    const std::vector<std::vector<VertexId>>& rotations() const { return rotations_; }
    int degree(VertexId v) const { return static_cast<int>(rotations_[v].size()); }
    bool has_edge(VertexId u, VertexId v) const;

    /// Edges as normalized (min,max) pairs, sorted.
    const std::vector<std::pair<VertexId, VertexId>>& edges() const { return edges_; }

    FaceId outer_face() const { return outer_face_; }
    int face_length(FaceId f) const { return static_cast<int>(faces_[f].size()); }
    const std::vector<Dart>& face_darts(FaceId f) const { return faces_[f]; }
    /// Vertex sequence of a facial walk (tails of its darts).
    std::vector<VertexId> face_walk(FaceId f) const;
    FaceId face_of(VertexId tail, VertexId head) const;

    /// The outer cycle in clockwise order. Requires 2-connectivity.
    std::vector<VertexId> outer_cycle() const;

    bool is_two_connected() const;
    bool on_outer_face(VertexId v) const;
    /// Vertices not incident with the outer face.
    std::vector<VertexId> interior_vertices() const;

    bool operator==(const PlaneGraph& other) const {
        return rotations_ == other.rotations_ && outer_face_walk_key() == other.outer_face_walk_key();
    }

private:
    void trace_faces();
    void choose_outer(const std::vector<VertexId>* hint);
    std::vector<VertexId> outer_face_walk_key() const;

    std::vector<std::vector<VertexId>> rotations_;
    std::vector<std::pair<VertexId, VertexId>> edges_;
    std::vector<std::vector<Dart>> faces_;
    std::vector<std::vector<FaceId>> face_at_;  // face_at_[v][i]: face of dart (v, rotation(v)[i])
    FaceId outer_face_ = -1;
};

struct ValidationReport {
    bool near_triangulation = false;
    bool two_connected = false;
    std::vector<FaceId> bad_faces;  // non-outer faces of length != 3
    std::string detail;
};

/// Yes iff every non-outer face is a triangle and the graph is 2-connected.
ValidationReport is_near_triangulation(const PlaneGraph& g);

/// Subpath of the outer cycle from u to v in clockwise order (inclusive).
std::vector<VertexId> outer_subpath(const PlaneGraph& g, VertexId u, VertexId v);

/// Result of surgery that renumbers vertices: to_parent[new_id] = old_id.
struct Subgraph {
    PlaneGraph graph;
    std::vector<VertexId> to_parent;
};

/// Everything on or inside `cycle`; the result's outer cycle is `cycle`.
Subgraph closed_disk(const PlaneGraph& g, const std::vector<VertexId>& cycle);

/// Deletes one edge; vertex ids are preserved. The faces on both sides of the
/// edge merge; the merged face is outer iff one of them was.
PlaneGraph delete_edge(const PlaneGraph& g, VertexId u, VertexId v);

/// Deletes a vertex set; ids are compacted. The caller must keep the graph
/// connected with a well-defined merged region (outer-boundary surgery).
Subgraph delete_vertices(const PlaneGraph& g, const std::vector<VertexId>& vs);

} // namespace ont
