#pragma once

#include <array>
#include <functional>
#include <optional>
#include <string>
#include <vector>

#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"

namespace ont {

/// Removes outer-cycle edges whose inner facial triangle has an interior
/// apex, until none remain. The result spans the input, so any diameter
/// bound certified for it transfers back.
struct StripStep {
    VertexId u = -1, w = -1;
};
struct StripResult {
    PlaneGraph graph;
    std::vector<StripStep> steps;
};
StripResult strip_separating_outer_edges(const PlaneGraph& g);

/// The degree-2 / attachment structure of a stripped near triangulation,
/// plus the corner decomposition when exactly three degree-2 vertices exist.
struct Decomposition {
    std::array<VertexId, 3> corners{};  // u1,u2,u3 in clockwise outer order
    std::array<VertexId, 3> deg2{};     // v_i, the unique degree-2 vertex per arc
    Subgraph t_bar;                     // closed disk of the triangle G[S]
    std::array<Subgraph, 3> pieces;     // O_i = disk of u_i..u_{i+1} arc + chord
    int n_t = 0;
    std::array<int, 3> n_i{};
};

struct StructureReport {
    std::vector<VertexId> deg2;        // A, all on the outer cycle
    std::vector<VertexId> attachment;  // S, outer vertices with interior neighbors
    bool has_interior = false;
    std::optional<std::array<VertexId, 3>> triangle;  // T = G[S] when |A| == 3
    std::optional<Decomposition> decomposition;
};

/// Requires a stripped 2-connected near triangulation (HypothesisViolated
/// otherwise). When |A| == 3 and interior vertices exist, verifies |S| == 3,
/// that G[S] is a triangle containing all interior vertices, and builds the
/// decomposition.
StructureReport analyze(const PlaneGraph& g);

/// Direction query into an orientation of the reduced graph H, in parent ids.
using ArcDir = std::function<bool(VertexId, VertexId)>;  // true iff arc u->v present

struct ReductionStep {
    enum class Kind { TwoDeg2, FourDeg2, ThreeDeg2WithDeg3 };
    Kind kind = Kind::TwoDeg2;

    struct Ear {
        VertexId v = -1, a = -1, b = -1;  // ear vertex and its chord in H
    };
    struct Gadget {
        VertexId v = -1, vp = -1, c = -1, w = -1;  // deg-2 v, deg-3 vp, chord (c,w) in H
    };

    // TwoDeg2: ears[0]=(v1,x), ears[1]=(v2,y), shared neighbor u
    std::vector<Ear> ears;
    std::array<Gadget, 3> gadgets{};
    VertexId shared = -1;

    /// Arcs for the removed edges given the directions chosen in H.
    std::vector<Arc> replay(const ArcDir& dir_in_h) const;
    std::string trace_line() const;
    std::vector<VertexId> removed_vertices() const;
};

struct Reduction {
    Subgraph h;  // the reduced graph, with to_parent mapping
    ReductionStep step;
};

/// Lemma-2 style: two degree-2 vertices with a common neighbor; the
/// extension keeps diameter within max(diam(H)+1, 4).
Reduction reduce_two_deg2(const PlaneGraph& g, VertexId v1, VertexId v2);

/// Lemma-3 style: four distinct degree-2 vertices; extension adds at most 2.
Reduction reduce_four_deg2(const PlaneGraph& g, const std::array<VertexId, 4>& ears);

/// Lemma-4 style: three degree-2 vertices, each with a degree-3 neighbor;
/// extension adds at most 3.
Reduction reduce_three_deg2_with_deg3(const PlaneGraph& g,
                                      const std::array<std::pair<VertexId, VertexId>, 3>& pairs);

/// A stripped near triangulation with no interior vertices.
bool is_maximal_outerplanar(const PlaneGraph& g);

} // namespace ont
