#include "ont/plane_graph.hpp"

#include <algorithm>
#include <cassert>
#include <functional>
#include <queue>
#include <unordered_map>
#include <unordered_set>

namespace ont {

namespace {

uint64_t dart_key(VertexId tail, VertexId head) {
    return (static_cast<uint64_t>(static_cast<uint32_t>(tail)) << 32) | static_cast<uint32_t>(head);
}

// Canonical representative of a cyclic vertex sequence, both directions.
std::vector<VertexId> cyclic_canonical(const std::vector<VertexId>& walk) {
    std::vector<VertexId> best;
    const int len = static_cast<int>(walk.size());
    for (int dir = 0; dir < 2; ++dir) {
        std::vector<VertexId> seq = walk;
        if (dir == 1) std::reverse(seq.begin(), seq.end());
        for (int s = 0; s < len; ++s) {
            std::vector<VertexId> rot(len);
            for (int i = 0; i < len; ++i) rot[i] = seq[(s + i) % len];
            if (best.empty() || rot < best) best = std::move(rot);
        }
    }
    return best;
}

bool connected(const std::vector<std::vector<VertexId>>& rot) {
    const int n = static_cast<int>(rot.size());
    if (n == 0) return false;
    std::vector<char> seen(n, 0);
    std::queue<VertexId> q;
    q.push(0);
    seen[0] = 1;
    int cnt = 1;
    while (!q.empty()) {
        VertexId v = q.front();
        q.pop();
        for (VertexId w : rot[v])
            if (!seen[w]) {
                seen[w] = 1;
                ++cnt;
                q.push(w);
            }
    }
    return cnt == n;
}

} // namespace

bool PlaneGraph::has_edge(VertexId u, VertexId v) const {
    if (u < 0 || v < 0 || u >= vertex_count() || v >= vertex_count()) return false;
    const auto& r = rotations_[u];
    return std::find(r.begin(), r.end(), v) != r.end();
}

void PlaneGraph::trace_faces() {
    const int n = vertex_count();
    // succ[(v,u)] = neighbor following u in the rotation of v
    std::unordered_map<uint64_t, VertexId> succ;
    succ.reserve(static_cast<size_t>(edges_.size()) * 4 + 8);
    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rotations_[v];
        const int d = static_cast<int>(r.size());
        for (int i = 0; i < d; ++i) succ[dart_key(v, r[i])] = r[(i + 1) % d];
    }

    faces_.clear();
    face_at_.assign(n, {});
    for (VertexId v = 0; v < n; ++v) face_at_[v].assign(rotations_[v].size(), -1);

    for (VertexId v = 0; v < n; ++v) {
        const auto& r = rotations_[v];
        for (int i = 0; i < static_cast<int>(r.size()); ++i) {
            if (face_at_[v][i] != -1) continue;
            const FaceId f = static_cast<FaceId>(faces_.size());
            faces_.emplace_back();
            Dart d{v, r[i]};
            while (true) {
                const auto& rt = rotations_[d.tail];
                const int idx = static_cast<int>(std::find(rt.begin(), rt.end(), d.head) - rt.begin());
                if (face_at_[d.tail][idx] != -1) break;  // orbit closed
                face_at_[d.tail][idx] = f;
                faces_[f].push_back(d);
                d = Dart{d.head, succ.at(dart_key(d.head, d.tail))};
            }
        }
    }
}

void PlaneGraph::choose_outer(const std::vector<VertexId>* hint) {
    if (hint != nullptr) {
        if (hint->size() < 3) fail(Errc::NotACycle, "outer hint shorter than 3");
        const auto want = cyclic_canonical(*hint);
        for (FaceId f = 0; f < face_count(); ++f) {
            if (face_length(f) != static_cast<int>(hint->size())) continue;
            if (cyclic_canonical(face_walk(f)) == want) {
                outer_face_ = f;
                return;
            }
        }
        fail(Errc::NotACycle, "outer hint does not match any facial walk");
    }
    FaceId best = -1;
    std::vector<VertexId> best_key;
    for (FaceId f = 0; f < face_count(); ++f) {
        auto key = cyclic_canonical(face_walk(f));
        if (best == -1 || face_length(f) > face_length(best) ||
            (face_length(f) == face_length(best) && key < best_key)) {
            best = f;
            best_key = std::move(key);
        }
    }
    outer_face_ = best;
}

PlaneGraph PlaneGraph::build(std::vector<std::vector<VertexId>> rotations) {
    PlaneGraph g;
    g.rotations_ = std::move(rotations);
    const int n = g.vertex_count();
    if (n < 3) fail(Errc::NotSimple, "need at least 3 vertices");

    for (VertexId v = 0; v < n; ++v) {
        std::unordered_set<VertexId> seen;
        for (VertexId w : g.rotations_[v]) {
            if (w < 0 || w >= n) fail(Errc::NotSimple, "neighbor id out of range at vertex " + std::to_string(v));
            if (w == v) fail(Errc::NotSimple, "loop at vertex " + std::to_string(v));
            if (!seen.insert(w).second)
                fail(Errc::NotSimple, "repeated neighbor " + std::to_string(w) + " at vertex " + std::to_string(v));
            if (v < w) g.edges_.emplace_back(v, w);
        }
    }
    for (VertexId v = 0; v < n; ++v)
        for (VertexId w : g.rotations_[v])
            if (!g.has_edge(w, v))
                fail(Errc::NotSimple, "asymmetric adjacency " + std::to_string(v) + "-" + std::to_string(w));
    std::sort(g.edges_.begin(), g.edges_.end());

    if (!connected(g.rotations_)) fail(Errc::Disconnected, "graph is not connected");

    g.trace_faces();
    if (n - g.edge_count() + g.face_count() != 2)
        fail(Errc::NonPlanarEmbedding, "Euler check failed: n=" + std::to_string(n) + " m=" +
                                           std::to_string(g.edge_count()) + " f=" + std::to_string(g.face_count()));
    g.choose_outer(nullptr);
    return g;
}

PlaneGraph PlaneGraph::build(std::vector<std::vector<VertexId>> rotations,
                             const std::vector<VertexId>& outer_cycle_hint) {
    PlaneGraph g = build(std::move(rotations));
    g.choose_outer(&outer_cycle_hint);
    return g;
}

std::vector<VertexId> PlaneGraph::face_walk(FaceId f) const {
    std::vector<VertexId> walk;
    walk.reserve(faces_[f].size());
    for (const Dart& d : faces_[f]) walk.push_back(d.tail);
    return walk;
}

FaceId PlaneGraph::face_of(VertexId tail, VertexId head) const {
    const auto& r = rotations_[tail];
    const auto it = std::find(r.begin(), r.end(), head);
    if (it == r.end()) fail(Errc::EdgeAbsent, "no edge " + std::to_string(tail) + "-" + std::to_string(head));
    return face_at_[tail][it - r.begin()];
}

std::vector<VertexId> PlaneGraph::outer_face_walk_key() const {
    return cyclic_canonical(face_walk(outer_face_));
}

std::vector<VertexId> PlaneGraph::outer_cycle() const {
    std::vector<VertexId> walk = face_walk(outer_face_);
    std::unordered_set<VertexId> seen(walk.begin(), walk.end());
    if (seen.size() != walk.size())
        fail(Errc::NotTwoConnected, "outer walk revisits a vertex");
    std::reverse(walk.begin(), walk.end());
    return walk;
}

bool PlaneGraph::is_two_connected() const {
    const int n = vertex_count();
    if (n < 3) return false;
    // articulation points by DFS lowpoints
    std::vector<int> disc(n, -1), low(n, 0);
    std::vector<VertexId> parent(n, -1);
    int timer = 0;
    bool has_cut = false;
    std::vector<std::pair<VertexId, size_t>> stack;
    stack.emplace_back(0, 0);
    disc[0] = low[0] = timer++;
    int root_children = 0;
    while (!stack.empty()) {
        auto& [v, i] = stack.back();
        if (i < rotations_[v].size()) {
            VertexId w = rotations_[v][i++];
            if (disc[w] == -1) {
                parent[w] = v;
                if (v == 0) ++root_children;
                disc[w] = low[w] = timer++;
                stack.emplace_back(w, 0);
            } else if (w != parent[v]) {
                low[v] = std::min(low[v], disc[w]);
            }
        } else {
            stack.pop_back();
            if (!stack.empty()) {
                VertexId p = stack.back().first;
                low[p] = std::min(low[p], low[v]);
                if (p != 0 && low[v] >= disc[p]) has_cut = true;
            }
        }
    }
    if (root_children > 1) has_cut = true;
    return !has_cut;
}

bool PlaneGraph::on_outer_face(VertexId v) const {
    for (const Dart& d : faces_[outer_face_])
        if (d.tail == v) return true;
    return false;
}

std::vector<VertexId> PlaneGraph::interior_vertices() const {
    std::vector<char> outer(vertex_count(), 0);
    for (const Dart& d : faces_[outer_face_]) outer[d.tail] = 1;
    std::vector<VertexId> out;
    for (VertexId v = 0; v < vertex_count(); ++v)
        if (!outer[v]) out.push_back(v);
    return out;
}

ValidationReport is_near_triangulation(const PlaneGraph& g) {
    ValidationReport rep;
    rep.two_connected = g.is_two_connected();
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (f == g.outer_face()) continue;
        if (g.face_length(f) != 3) rep.bad_faces.push_back(f);
    }
    rep.near_triangulation = rep.two_connected && rep.bad_faces.empty();
    if (!rep.two_connected)
        rep.detail = "not 2-connected";
    else if (!rep.bad_faces.empty())
        rep.detail = std::to_string(rep.bad_faces.size()) + " non-triangular inner face(s)";
    return rep;
}

std::vector<VertexId> outer_subpath(const PlaneGraph& g, VertexId u, VertexId v) {
    const std::vector<VertexId> cyc = g.outer_cycle();
    const int len = static_cast<int>(cyc.size());
    int iu = -1;
    for (int i = 0; i < len; ++i)
        if (cyc[i] == u) iu = i;
    if (iu < 0) fail(Errc::VertexAbsent, "vertex " + std::to_string(u) + " not on outer cycle");
    if (u == v) return {u};
    std::vector<VertexId> path;
    for (int i = 0; i < len; ++i) {
        VertexId x = cyc[(iu + i) % len];
        path.push_back(x);
        if (x == v && i > 0) return path;
    }
    fail(Errc::VertexAbsent, "vertex " + std::to_string(v) + " not on outer cycle");
}

namespace {

// Restrict rotations to kept vertices/edges, compact ids, rebuild with hint.
Subgraph rebuild_restricted(const PlaneGraph& g, const std::vector<char>& keep_vertex,
                            const std::function<bool(VertexId, VertexId)>& keep_edge,
                            const std::vector<VertexId>* outer_hint_old_ids) {
    const int n = g.vertex_count();
    std::vector<VertexId> to_parent;
    std::vector<VertexId> to_new(n, -1);
    for (VertexId v = 0; v < n; ++v)
        if (keep_vertex[v]) {
            to_new[v] = static_cast<VertexId>(to_parent.size());
            to_parent.push_back(v);
        }
    std::vector<std::vector<VertexId>> rot(to_parent.size());
    for (VertexId v = 0; v < n; ++v) {
        if (!keep_vertex[v]) continue;
        for (VertexId w : g.rotation(v))
            if (keep_vertex[w] && keep_edge(v, w)) rot[to_new[v]].push_back(to_new[w]);
    }
    Subgraph out;
    if (outer_hint_old_ids != nullptr) {
        std::vector<VertexId> hint;
        hint.reserve(outer_hint_old_ids->size());
        for (VertexId v : *outer_hint_old_ids) hint.push_back(to_new[v]);
        out.graph = PlaneGraph::build(std::move(rot), hint);
    } else {
        out.graph = PlaneGraph::build(std::move(rot));
    }
    out.to_parent = std::move(to_parent);
    return out;
}

} // namespace

Subgraph closed_disk(const PlaneGraph& g, const std::vector<VertexId>& cycle) {
    const int len = static_cast<int>(cycle.size());
    if (len < 3) fail(Errc::NotACycle, "cycle shorter than 3");
    std::unordered_set<VertexId> cyc_verts(cycle.begin(), cycle.end());
    if (static_cast<int>(cyc_verts.size()) != len) fail(Errc::NotACycle, "cycle revisits a vertex");
    std::unordered_set<uint64_t> cyc_edges;
    for (int i = 0; i < len; ++i) {
        VertexId a = cycle[i], b = cycle[(i + 1) % len];
        if (!g.has_edge(a, b)) fail(Errc::NotACycle, "missing edge " + std::to_string(a) + "-" + std::to_string(b));
        cyc_edges.insert(dart_key(std::min(a, b), std::max(a, b)));
    }

    // Faces reachable from the outer face without crossing the cycle are outside.
    std::vector<char> outside(g.face_count(), 0);
    std::queue<FaceId> q;
    q.push(g.outer_face());
    outside[g.outer_face()] = 1;
    while (!q.empty()) {
        FaceId f = q.front();
        q.pop();
        for (const Dart& d : g.face_darts(f)) {
            if (cyc_edges.count(dart_key(std::min(d.tail, d.head), std::max(d.tail, d.head)))) continue;
            FaceId other = g.face_of(d.head, d.tail);
            if (!outside[other]) {
                outside[other] = 1;
                q.push(other);
            }
        }
    }

    std::vector<char> keep(g.vertex_count(), 0);
    for (VertexId v : cycle) keep[v] = 1;
    std::unordered_set<uint64_t> kept_edges = cyc_edges;
    for (FaceId f = 0; f < g.face_count(); ++f) {
        if (outside[f]) continue;
        for (const Dart& d : g.face_darts(f)) {
            keep[d.tail] = 1;
            kept_edges.insert(dart_key(std::min(d.tail, d.head), std::max(d.tail, d.head)));
        }
    }
    auto keep_edge = [&kept_edges](VertexId a, VertexId b) {
        return kept_edges.count(dart_key(std::min(a, b), std::max(a, b))) > 0;
    };
    return rebuild_restricted(g, keep, keep_edge, &cycle);
}

namespace {

// Identifies the outer face of the rebuilt graph. `dead` marks old faces
// destroyed by the surgery; surviving faces trace identically, so the new
// outer face is either the match of the old one or the unique merged face.
FaceId locate_new_outer(const PlaneGraph& old_g, const PlaneGraph& new_g,
                        const std::vector<char>& dead, const std::vector<VertexId>& to_new) {
    auto lift_face = [&](FaceId nf) -> FaceId {
        const Dart& d = new_g.face_darts(nf).front();
        // map back to old ids
        VertexId a = -1, b = -1;
        for (VertexId v = 0; v < static_cast<VertexId>(to_new.size()); ++v) {
            if (to_new[v] == d.tail) a = v;
            if (to_new[v] == d.head) b = v;
        }
        return old_g.face_of(a, b);
    };
    if (!dead[old_g.outer_face()]) {
        for (FaceId nf = 0; nf < new_g.face_count(); ++nf)
            if (lift_face(nf) == old_g.outer_face()) return nf;
        fail(Errc::PreconditionFailed, "outer face lost");
    }
    // old outer destroyed: prefer a face holding one of its surviving darts
    for (const Dart& d : old_g.face_darts(old_g.outer_face())) {
        if (to_new[d.tail] < 0 || to_new[d.head] < 0) continue;
        if (!new_g.has_edge(to_new[d.tail], to_new[d.head])) continue;
        return new_g.face_of(to_new[d.tail], to_new[d.head]);
    }
    // otherwise the unique new face not tracing an old surviving face
    FaceId found = -1;
    for (FaceId nf = 0; nf < new_g.face_count(); ++nf) {
        FaceId of = lift_face(nf);
        if (dead[of]) {
            if (found != -1) fail(Errc::PreconditionFailed, "ambiguous outer face after surgery");
            found = nf;
        }
    }
    if (found == -1) fail(Errc::PreconditionFailed, "no candidate outer face after surgery");
    return found;
}

} // namespace

PlaneGraph delete_edge(const PlaneGraph& g, VertexId u, VertexId v) {
    if (!g.has_edge(u, v)) fail(Errc::EdgeAbsent, "no edge " + std::to_string(u) + "-" + std::to_string(v));
    std::vector<char> dead(g.face_count(), 0);
    dead[g.face_of(u, v)] = 1;
    dead[g.face_of(v, u)] = 1;

    std::vector<char> keep(g.vertex_count(), 1);
    auto keep_edge = [&](VertexId a, VertexId b) {
        return !((a == u && b == v) || (a == v && b == u));
    };
    Subgraph sub = rebuild_restricted(g, keep, keep_edge, nullptr);
    std::vector<VertexId> to_new(g.vertex_count());
    for (VertexId x = 0; x < g.vertex_count(); ++x) to_new[x] = x;
    FaceId outer = locate_new_outer(g, sub.graph, dead, to_new);
    // rebuild once more with the located outer walk as hint
    std::vector<VertexId> hint = sub.graph.face_walk(outer);
    return PlaneGraph::build(sub.graph.rotations(), hint);
}

Subgraph delete_vertices(const PlaneGraph& g, const std::vector<VertexId>& vs) {
    std::vector<char> removed(g.vertex_count(), 0);
    for (VertexId v : vs) {
        if (v < 0 || v >= g.vertex_count()) fail(Errc::VertexAbsent, "vertex " + std::to_string(v));
        removed[v] = 1;
    }
    std::vector<char> dead(g.face_count(), 0);
    for (FaceId f = 0; f < g.face_count(); ++f)
        for (const Dart& d : g.face_darts(f))
            if (removed[d.tail] || removed[d.head]) {
                dead[f] = 1;
                break;
            }
    std::vector<char> keep(g.vertex_count());
    for (VertexId v = 0; v < g.vertex_count(); ++v) keep[v] = !removed[v];
    Subgraph sub = rebuild_restricted(g, keep, [](VertexId, VertexId) { return true; }, nullptr);
    std::vector<VertexId> to_new(g.vertex_count(), -1);
    for (size_t i = 0; i < sub.to_parent.size(); ++i) to_new[sub.to_parent[i]] = static_cast<VertexId>(i);
    FaceId outer = locate_new_outer(g, sub.graph, dead, to_new);
    std::vector<VertexId> hint = sub.graph.face_walk(outer);
    sub.graph = PlaneGraph::build(sub.graph.rotations(), hint);
    return sub;
}

} // namespace ont
