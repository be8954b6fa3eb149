// Test-only oracles, independent of the library's search/enumeration paths.
#pragma once

#include <algorithm>
#include <functional>
#include <numeric>
#include <optional>
#include <queue>
#include <set>
#include <string>
#include <vector>

#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"

namespace oracle {

using ont::Arc;
using ont::Orientation;
using ont::PlaneGraph;
using ont::VertexId;

// Diameter of an arc set by n BFS sweeps; nullopt when not strongly connected.
inline std::optional<int> diam_of(int n, const std::vector<Arc>& arcs) {
    std::vector<std::vector<int>> out(n);
    for (auto [u, v] : arcs) out[u].push_back(v);
    int diam = 0;
    for (int s = 0; s < n; ++s) {
        std::vector<int> dist(n, -1);
        std::queue<int> q;
        dist[s] = 0;
        q.push(s);
        while (!q.empty()) {
            int v = q.front();
            q.pop();
            for (int w : out[v])
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push(w);
                }
        }
        for (int x : dist) {
            if (x < 0) return std::nullopt;
            diam = std::max(diam, x);
        }
    }
    return diam;
}

// Minimum diameter over all 2^m orientations (exhaustive); anchored variant
// restricts to orientations whose anchored eccentricity at v stays within b.
inline std::optional<int> brute_oriented_diameter(const PlaneGraph& g,
                                                  std::optional<VertexId> anchor = {},
                                                  int anchor_bound = 0) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();
    std::optional<int> best;
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Arc> arcs(m);
        for (int e = 0; e < m; ++e)
            arcs[e] = (mask >> e) & 1 ? Arc{edges[e].first, edges[e].second}
                                      : Arc{edges[e].second, edges[e].first};
        auto d = diam_of(n, arcs);
        if (!d) continue;
        if (anchor) {
            Orientation o(n, arcs);
            bool ok = true;
            auto fwd = ont::bfs_from(o, *anchor);
            auto bwd = ont::bfs_to(o, *anchor);
            for (int v = 0; v < n; ++v)
                if (fwd[v] < 0 || bwd[v] < 0 || fwd[v] > anchor_bound || bwd[v] > anchor_bound) ok = false;
            if (!ok) continue;
        }
        if (!best || *d < *best) best = d;
    }
    return best;
}

// Every optimal strong orientation, as arc vectors.
inline std::vector<std::vector<Arc>> brute_optimal_orientations(const PlaneGraph& g) {
    const auto& edges = g.edges();
    const int m = static_cast<int>(edges.size());
    const int n = g.vertex_count();
    std::optional<int> best = brute_oriented_diameter(g);
    std::vector<std::vector<Arc>> out;
    if (!best) return out;
    for (uint64_t mask = 0; mask < (1ull << m); ++mask) {
        std::vector<Arc> arcs(m);
        for (int e = 0; e < m; ++e)
            arcs[e] = (mask >> e) & 1 ? Arc{edges[e].first, edges[e].second}
                                      : Arc{edges[e].second, edges[e].first};
        auto d = diam_of(n, arcs);
        if (d && *d == *best) out.push_back(std::move(arcs));
    }
    return out;
}

// Canonical form by minimum over all n! relabelings (independent of the
// library's refinement-based canon).
inline std::string brute_canon(int n, const std::vector<std::pair<int, int>>& edges) {
    std::vector<std::vector<char>> adj(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) adj[u][v] = adj[v][u] = 1;
    std::vector<int> perm(n);
    std::iota(perm.begin(), perm.end(), 0);
    std::string best;
    do {
        std::string s;
        s.reserve(n * (n - 1) / 2);
        for (int i = 0; i < n; ++i)
            for (int j = i + 1; j < n; ++j) s.push_back(adj[perm[i]][perm[j]] ? '1' : '0');
        if (best.empty() || s < best) best = s;
    } while (std::next_permutation(perm.begin(), perm.end()));
    return std::to_string(n) + ":" + best;
}

namespace detail {

struct DiskProblem {
    int n;
    std::vector<std::vector<char>> adj;
};

using EdgeSet = std::set<std::pair<int, int>>;

inline std::pair<int, int> norm_edge(int a, int b) { return {std::min(a, b), std::max(a, b)}; }

// Do `edges` triangulate the disk bounded by `boundary` (cyclic) with the
// given interior vertices, using every listed edge exactly once?
inline bool disk_ok(const DiskProblem& p, const std::vector<int>& boundary, const std::set<int>& inside,
                    const EdgeSet& edges) {
    const int k = static_cast<int>(boundary.size());
    if (k == 2)  // degenerated to a single edge
        return inside.empty() && edges.size() == 1 && edges.count(norm_edge(boundary[0], boundary[1])) > 0;
    if (k == 3 && inside.empty()) {
        if (edges.size() != 3) return false;
        for (int i = 0; i < 3; ++i)
            if (!edges.count(norm_edge(boundary[i], boundary[(i + 1) % 3]))) return false;
        return true;
    }
    if (k < 3) return false;

    const int b0 = boundary[0], b1 = boundary[1];
    std::vector<int> candidates(boundary.begin() + 2, boundary.end());
    candidates.insert(candidates.end(), inside.begin(), inside.end());
    // the inner face at edge (b0,b1) is a triangle with some apex w
    for (int w : candidates) {
        if (!edges.count(norm_edge(b0, w)) || !edges.count(norm_edge(b1, w))) continue;
        if (inside.count(w)) {
            std::vector<int> nb;
            nb.reserve(k + 1);
            nb.push_back(b0);
            nb.push_back(w);
            for (int i = 1; i < k; ++i) nb.push_back(boundary[i]);
            std::set<int> ni = inside;
            ni.erase(w);
            EdgeSet e2 = edges;
            e2.erase(norm_edge(b0, b1));
            if (disk_ok(p, nb, ni, e2)) return true;
        } else {
            int j = -1;
            for (int i = 2; i < k; ++i)
                if (boundary[i] == w) j = i;
            if (j < 0) continue;
            std::vector<int> bA(boundary.begin() + 1, boundary.begin() + j + 1);  // b1..bj
            std::vector<int> bB(boundary.begin() + j, boundary.end());            // bj..b_{k-1}, b0
            bB.push_back(b0);
            std::set<int> setA(bA.begin(), bA.end()), setB(bB.begin(), bB.end());

            std::vector<std::set<int>> comps;
            {
                std::set<int> left = inside;
                while (!left.empty()) {
                    std::set<int> comp;
                    std::vector<int> stack{*left.begin()};
                    while (!stack.empty()) {
                        int v = stack.back();
                        stack.pop_back();
                        if (comp.count(v)) continue;
                        comp.insert(v);
                        left.erase(v);
                        for (int u : inside)
                            if (p.adj[v][u] && !comp.count(u)) stack.push_back(u);
                    }
                    comps.push_back(std::move(comp));
                }
            }
            const int c = static_cast<int>(comps.size());
            for (int assign = 0; assign < (1 << c); ++assign) {
                std::set<int> iA, iB;
                for (int ci = 0; ci < c; ++ci)
                    for (int v : comps[ci]) (assign >> ci & 1 ? iA : iB).insert(v);
                auto inA = [&](int v) { return setA.count(v) > 0 || iA.count(v) > 0; };
                auto inB = [&](int v) { return setB.count(v) > 0 || iB.count(v) > 0; };
                EdgeSet eA, eB;
                bool ok = true;
                for (const auto& e : edges) {
                    if (e == norm_edge(b0, b1)) continue;  // consumed by the peeled face
                    const auto [u, v] = e;
                    const bool a_side = inA(u) && inA(v);
                    const bool b_side = inB(u) && inB(v);
                    if (a_side)
                        eA.insert(e);
                    else if (b_side)
                        eB.insert(e);
                    else {
                        ok = false;
                        break;
                    }
                }
                if (!ok) continue;
                if (disk_ok(p, bA, iA, eA) && disk_ok(p, bB, iB, eB)) return true;
            }
        }
    }
    return false;
}

inline bool two_connected(int n, const std::vector<std::vector<char>>& adj) {
    if (n < 3) return false;
    for (int skip = 0; skip < n; ++skip) {
        int start = skip == 0 ? 1 : 0;
        std::vector<char> seen(n, 0);
        std::vector<int> stack{start};
        seen[start] = 1;
        int cnt = 0;
        while (!stack.empty()) {
            int v = stack.back();
            stack.pop_back();
            ++cnt;
            for (int w = 0; w < n; ++w)
                if (adj[v][w] && !seen[w] && w != skip) {
                    seen[w] = 1;
                    stack.push_back(w);
                }
        }
        if (cnt != n - 1) return false;
    }
    return true;
}

} // namespace detail

// Does the abstract graph admit an embedding as a 2-connected near
// triangulation? Searches over candidate outer cycles and recursive disk
// triangulations. Intended for n <= 7.
inline bool admits_near_triangulation(int n, const std::vector<std::pair<int, int>>& edges) {
    detail::DiskProblem p;
    p.n = n;
    p.adj.assign(n, std::vector<char>(n, 0));
    for (auto [u, v] : edges) p.adj[u][v] = p.adj[v][u] = 1;
    if (!detail::two_connected(n, p.adj)) return false;
    const int m = static_cast<int>(edges.size());
    const int k = 3 * n - 3 - m;  // forced outer cycle length
    if (k < 3 || k > n) return false;

    // candidate outer cycles of length k, anchored at their smallest member
    std::vector<int> cyc;
    std::vector<char> used(n, 0);
    bool found = false;
    for (int anchor = 0; anchor < n && !found; ++anchor) {
        cyc = {anchor};
        used.assign(n, 0);
        used[anchor] = 1;
        detail::EdgeSet all;
        for (auto [u, v] : edges) all.insert(detail::norm_edge(u, v));
        std::function<void(int)> go = [&](int depth) {
            if (found) return;
            if (depth == k) {
                if (!p.adj[cyc.back()][cyc.front()]) return;
                std::set<int> inside;
                for (int v = 0; v < n; ++v)
                    if (!used[v]) inside.insert(v);
                if (detail::disk_ok(p, cyc, inside, all)) found = true;
                return;
            }
            for (int v = anchor + 1; v < n; ++v) {
                if (used[v] || !p.adj[cyc.back()][v]) continue;
                used[v] = 1;
                cyc.push_back(v);
                go(depth + 1);
                cyc.pop_back();
                used[v] = 0;
                if (found) return;
            }
        };
        go(1);
    }
    return found;
}

} // namespace oracle
