#include "ont/orientation.hpp"

#include <algorithm>
#include <queue>
#include <string>

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ont {

Orientation::Orientation(int n, std::vector<Arc> arcs) : n_(n), arcs_(std::move(arcs)) {
    std::sort(arcs_.begin(), arcs_.end());
    arcs_.erase(std::unique(arcs_.begin(), arcs_.end()), arcs_.end());
    out_.assign(n_, {});
    in_.assign(n_, {});
    for (const auto& [u, v] : arcs_) {
        if (u < 0 || v < 0 || u >= n_ || v >= n_ || u == v)
            fail(Errc::PreconditionFailed, "bad arc " + std::to_string(u) + "->" + std::to_string(v));
        if (has_arc(v, u)) fail(Errc::PreconditionFailed, "edge oriented both ways: " + std::to_string(u) + "-" + std::to_string(v));
        out_[u].push_back(v);
        in_[v].push_back(u);
    }
}

Orientation Orientation::of(const PlaneGraph& g, const std::vector<bool>& direction_toward_larger) {
    const auto& es = g.edges();
    if (direction_toward_larger.size() != es.size())
        fail(Errc::PreconditionFailed, "direction vector size mismatch");
    std::vector<Arc> arcs;
    arcs.reserve(es.size());
    for (size_t i = 0; i < es.size(); ++i) {
        auto [u, v] = es[i];
        arcs.emplace_back(direction_toward_larger[i] ? Arc{u, v} : Arc{v, u});
    }
    return Orientation(g.vertex_count(), std::move(arcs));
}

bool Orientation::has_arc(VertexId u, VertexId v) const {
    return std::binary_search(arcs_.begin(), arcs_.end(), Arc{u, v});
}

bool Orientation::covers_exactly(const PlaneGraph& g) const {
    if (n_ != g.vertex_count()) return false;
    if (arc_count() != g.edge_count()) return false;
    for (const auto& [u, v] : arcs_)
        if (!g.has_edge(u, v)) return false;
    return true;  // both-ways duplicates are rejected at construction
}

Orientation reverse(const Orientation& d) {
    std::vector<Arc> rev;
    rev.reserve(d.arcs().size());
    for (const auto& [u, v] : d.arcs()) rev.emplace_back(v, u);
    return Orientation(d.vertex_count(), std::move(rev));
}

Orientation combine(const Orientation& d1, const Orientation& d2, bool allow_reverse) {
    int agree = 0, disagree = 0;
    for (const auto& [u, v] : d2.arcs()) {
        if (d1.has_arc(u, v))
            ++agree;
        else if (d1.has_arc(v, u))
            ++disagree;
    }
    const Orientation* second = &d2;
    Orientation reversed;
    if (disagree > 0) {
        if (agree > 0) {
            if (allow_reverse)
                fail(Errc::OverlapTooLarge, "shared edges disagree pairwise under both polarities");
            fail(Errc::IncompatibleOnSharedEdges, "shared edges disagree");
        }
        if (!allow_reverse) fail(Errc::IncompatibleOnSharedEdges, "shared edges disagree and reversal is disabled");
        reversed = reverse(d2);
        second = &reversed;
    }
    const int n = std::max(d1.vertex_count(), second->vertex_count());
    std::vector<Arc> arcs = d1.arcs();
    arcs.insert(arcs.end(), second->arcs().begin(), second->arcs().end());
    return Orientation(n, std::move(arcs));
}

std::vector<int> bfs_from(const Orientation& d, VertexId src) {
    std::vector<int> dist(d.vertex_count(), -1);
    std::queue<VertexId> q;
    dist[src] = 0;
    q.push(src);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : d.out_adj()[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

std::vector<int> bfs_to(const Orientation& d, VertexId dst) {
    std::vector<int> dist(d.vertex_count(), -1);
    std::queue<VertexId> q;
    dist[dst] = 0;
    q.push(dst);
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : d.in_adj()[v])
            if (dist[w] < 0) {
                dist[w] = dist[v] + 1;
                q.push(w);
            }
    }
    return dist;
}

bool is_strongly_connected(const Orientation& d) {
    const int n = d.vertex_count();
    if (n == 0) return false;
    auto fwd = bfs_from(d, 0);
    auto bwd = bfs_to(d, 0);
    for (int v = 0; v < n; ++v)
        if (fwd[v] < 0 || bwd[v] < 0) return false;
    return true;
}

namespace {

// Eccentricity of one source, or -1 if some vertex is unreachable.
int out_ecc(const Orientation& d, VertexId src) {
    auto dist = bfs_from(d, src);
    int ecc = 0;
    for (int x : dist) {
        if (x < 0) return -1;
        ecc = std::max(ecc, x);
    }
    return ecc;
}

} // namespace

std::optional<int> diameter_serial(const Orientation& d) {
    const int n = d.vertex_count();
    int diam = 0;
    for (VertexId v = 0; v < n; ++v) {
        int e = out_ecc(d, v);
        if (e < 0) return std::nullopt;
        diam = std::max(diam, e);
    }
    return diam;
}

std::optional<int> diameter(const Orientation& d) {
    const int n = d.vertex_count();
    if (n < 64) return diameter_serial(d);
    int diam = 0;
    bool infinite = false;
#pragma omp parallel for schedule(dynamic, 8) reduction(max : diam) reduction(|| : infinite)
    for (VertexId v = 0; v < n; ++v) {
        int e = out_ecc(d, v);
        if (e < 0)
            infinite = true;
        else
            diam = std::max(diam, e);
    }
    if (infinite) return std::nullopt;
    return diam;
}

int anchored_ecc(const Orientation& d, VertexId v) {
    auto fwd = bfs_from(d, v);
    auto bwd = bfs_to(d, v);
    int ecc = 0;
    for (VertexId u = 0; u < d.vertex_count(); ++u) {
        if (fwd[u] < 0 || bwd[u] < 0) fail(Errc::NotStrong, "vertex " + std::to_string(u) + " not on a round trip");
        ecc = std::max({ecc, fwd[u], bwd[u]});
    }
    return ecc;
}

namespace {

int undirected_diameter_adj(const std::vector<std::vector<VertexId>>& adj) {
    const int n = static_cast<int>(adj.size());
    int diam = 0;
    std::vector<int> dist(n);
    for (VertexId s = 0; s < n; ++s) {
        std::fill(dist.begin(), dist.end(), -1);
        std::queue<VertexId> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            VertexId v = q.front();
            q.pop();
            for (VertexId w : adj[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int x : dist) {
            if (x < 0) fail(Errc::Disconnected, "undirected graph not connected");
            diam = std::max(diam, x);
        }
    }
    return diam;
}

} // namespace

int undirected_diameter(const Orientation& d) {
    std::vector<std::vector<VertexId>> adj(d.vertex_count());
    for (const auto& [u, v] : d.arcs()) {
        adj[u].push_back(v);
        adj[v].push_back(u);
    }
    return undirected_diameter_adj(adj);
}

int undirected_diameter(const PlaneGraph& g) {
    return undirected_diameter_adj(g.rotations());
}

bool verify_certificate(const PlaneGraph& g, const Certificate& cert, std::string* reason) {
    auto report = [&](const std::string& r) {
        if (reason != nullptr) *reason = r;
        return false;
    };
    if (!cert.orientation.covers_exactly(g)) return report("orientation does not cover the graph's edges exactly");
    const bool strong = is_strongly_connected(cert.orientation);
    if (strong != cert.strongly_connected) return report("strong connectivity flag mismatch");
    const auto diam = diameter(cert.orientation);
    if (diam != cert.diameter) return report("recorded diameter mismatch");
    if (cert.bound != half_ceil(g.vertex_count())) return report("bound is not ceil(n/2)");
    if (!cert.exception) {
        if (!diam.has_value() || *diam > cert.bound) return report("diameter exceeds bound");
    }
    return true;
}

} // namespace ont
