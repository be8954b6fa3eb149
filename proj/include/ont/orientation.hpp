#pragma once

#include <optional>
#include <utility>
#include <vector>

#include "ont/plane_graph.hpp"

namespace ont {

using Arc = std::pair<VertexId, VertexId>;  // (tail, head)

/// An assignment of one direction to every edge of some graph on vertices
/// 0..n-1. Metrics below only need the arcs; validation against a PlaneGraph
/// is done where an operation demands a total orientation of that graph.
class Orientation {
public:
    Orientation() = default;
    Orientation(int n, std::vector<Arc> arcs);

    /// Directs every edge of g: direction_toward_larger[i] tells whether
    /// edge i of g.edges() runs min->max.
    static Orientation of(const PlaneGraph& g, const std::vector<bool>& direction_toward_larger);

    int vertex_count() const { return n_; }
    int arc_count() const { return static_cast<int>(arcs_.size()); }
    const std::vector<Arc>& arcs() const { return arcs_; }
    bool has_arc(VertexId u, VertexId v) const;

    const std::vector<std::vector<VertexId>>& out_adj() const { return out_; }
    const std::vector<std::vector<VertexId>>& in_adj() const { return in_; }

    /// True iff this orients every edge of g exactly once and nothing else.
    bool covers_exactly(const PlaneGraph& g) const;

    friend bool operator==(const Orientation&, const Orientation&) = default;

private:
    int n_ = 0;
    std::vector<Arc> arcs_;  // sorted
    std::vector<std::vector<VertexId>> out_, in_;
};

Orientation reverse(const Orientation& d);

/// Union of two orientations that may share edges. Shared edges must agree;
/// if they all disagree and allow_reverse is set, d2 is reversed wholesale.
Orientation combine(const Orientation& d1, const Orientation& d2, bool allow_reverse);

bool is_strongly_connected(const Orientation& d);

/// Directed distances from src (-1 where unreachable).
std::vector<int> bfs_from(const Orientation& d, VertexId src);
/// Directed distances to dst, i.e. BFS on reversed arcs.
std::vector<int> bfs_to(const Orientation& d, VertexId dst);

/// Max over ordered pairs of directed distances; nullopt iff not strongly
/// connected. The _serial variant is the reference implementation; the
/// default runs the per-source sweeps under OpenMP.
std::optional<int> diameter(const Orientation& d);
std::optional<int> diameter_serial(const Orientation& d);

/// max over u of max(d(u,v), d(v,u)); throws NotStrong if some side is
/// unreachable.
int anchored_ecc(const Orientation& d, VertexId v);

/// diameter of the underlying undirected graph (treating arcs as edges)
int undirected_diameter(const Orientation& d);
int undirected_diameter(const PlaneGraph& g);

struct Certificate {
    Orientation orientation;
    std::optional<int> diameter;  // nullopt = infinite
    bool strongly_connected = false;
    int bound = 0;  // ceil(n/2)
    bool exception = false;
    std::string exception_name;
    std::vector<std::string> trace;
};

inline int half_ceil(int n) { return (n + 1) / 2; }

/// Re-derives diameter/strong flags from the orientation and checks them
/// against the certificate. Returns false (with a reason) on mismatch.
bool verify_certificate(const PlaneGraph& g, const Certificate& cert, std::string* reason = nullptr);

} // namespace ont
