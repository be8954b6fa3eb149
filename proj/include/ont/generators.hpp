#pragma once

#include <array>
#include <cstdint>
#include <functional>
#include <vector>

#include "ont/plane_graph.hpp"

namespace ont {

/// Incremental builder for triangulated disks. Keeps rotations, the clockwise
/// boundary, and the list of inner triangles in trace order.
class DiskBuilder {
public:
    static DiskBuilder triangle();

    int vertex_count() const { return static_cast<int>(rot_.size()); }
    const std::vector<VertexId>& boundary() const { return boundary_; }
    const std::vector<std::array<VertexId, 3>>& inner_faces() const { return faces_; }

    /// Splits inner face `fi` with a new vertex joined to its three corners.
    VertexId split_face(int fi);

    /// Glues a new vertex onto the boundary arc of `k` consecutive vertices
    /// starting at boundary position `start` (2 <= k <= boundary size).
    VertexId glue_arc(int start, int k);

    PlaneGraph to_plane_graph() const;

private:
    std::vector<std::vector<VertexId>> rot_;
    std::vector<VertexId> boundary_;
    std::vector<std::array<VertexId, 3>> faces_;
};

/// Seeded random 2-connected near triangulation: grown from a triangle by
/// interior face splits (probability interior_bias) and boundary ears.
PlaneGraph random_near_triangulation(int n, uint64_t seed, double interior_bias);

/// Random triangulation of an n-gon (ears only); `fan` forces the fan.
PlaneGraph random_maximal_outerplanar(int n, uint64_t seed, bool fan = false);

/// The zig-zag strip triangulation on n vertices (edges i-(i+1), i-(i+2)).
PlaneGraph snake(int n);

/// A maximal outerplanar graph with oriented diameter exactly ceil(n/2).
/// Returns the snake; callers verify attainment with the exact solver and
/// may fall back to search_tight_family below.
PlaneGraph tight_family(int n);

/// Searches random ear sequences for a maximal outerplanar graph whose exact
/// oriented diameter is ceil(n/2), testing each candidate with `attains`.
PlaneGraph search_tight_family(int n, const std::function<bool(const PlaneGraph&)>& attains, int max_tries);

/// All 2-connected near triangulations on exactly n vertices, one embedded
/// representative per abstract isomorphism class, in a deterministic order.
/// Generated by gluing a new boundary vertex onto every contiguous boundary
/// arc (complete for triangulated disks; see README), deduplicated first by
/// embedded canonical form, then abstractly.
std::vector<PlaneGraph> enumerate_near_triangulations(int n);

/// Embedded-class counts per vertex count (diagnostics / manifests).
struct EnumerationManifest {
    int n = 0;
    int embedded_classes = 0;
    int abstract_classes = 0;
};
std::vector<EnumerationManifest> enumeration_manifest(int n_max);

} // namespace ont
