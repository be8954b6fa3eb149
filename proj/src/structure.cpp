#include "ont/structure.hpp"

#include <algorithm>
#include <unordered_set>

#include "ont/canon.hpp"

namespace ont {

namespace {

// Inner face apex of the outer edge (u,w), u->w clockwise consecutive.
VertexId inner_apex(const PlaneGraph& g, VertexId u, VertexId w) {
    FaceId f = g.face_of(u, w) == g.outer_face() ? g.face_of(w, u) : g.face_of(u, w);
    for (const Dart& d : g.face_darts(f))
        if (d.tail != u && d.tail != w) return d.tail;
    fail(Errc::NotNearTriangulation, "outer edge without a triangular inner face");
}

} // namespace

StripResult strip_separating_outer_edges(const PlaneGraph& g) {
    ValidationReport rep = is_near_triangulation(g);
    if (!rep.near_triangulation) fail(Errc::NotNearTriangulation, rep.detail);
    StripResult out{g, {}};
    bool removed = true;
    while (removed) {
        removed = false;
        std::vector<VertexId> cyc = out.graph.outer_cycle();
        const int len = static_cast<int>(cyc.size());
        // scan clockwise from the smallest-id outer vertex
        int start = static_cast<int>(std::min_element(cyc.begin(), cyc.end()) - cyc.begin());
        std::vector<char> outer(out.graph.vertex_count(), 0);
        for (VertexId v : cyc) outer[v] = 1;
        for (int i = 0; i < len; ++i) {
            VertexId u = cyc[(start + i) % len], w = cyc[(start + i + 1) % len];
            VertexId apex = inner_apex(out.graph, u, w);
            if (!outer[apex]) {
                out.graph = delete_edge(out.graph, u, w);
                out.steps.push_back({u, w});
                removed = true;
                break;
            }
        }
    }
    return out;
}

StructureReport analyze(const PlaneGraph& g) {
    ValidationReport rep = is_near_triangulation(g);
    if (!rep.near_triangulation) fail(Errc::NotNearTriangulation, rep.detail);
    StructureReport r;
    std::vector<VertexId> cyc = g.outer_cycle();
    const int len = static_cast<int>(cyc.size());
    std::vector<char> outer(g.vertex_count(), 0);
    for (VertexId v : cyc) outer[v] = 1;

    for (int i = 0; i < len; ++i) {
        VertexId apex = inner_apex(g, cyc[i], cyc[(i + 1) % len]);
        if (!outer[apex])
            fail(Errc::HypothesisViolated,
                 "outer edge " + std::to_string(cyc[i] + 1) + "-" + std::to_string(cyc[(i + 1) % len] + 1) +
                     " still forms a facial triangle with an interior vertex; strip first");
    }

    for (VertexId v = 0; v < g.vertex_count(); ++v)
        if (g.degree(v) == 2) {
            if (!outer[v]) fail(Errc::NotNearTriangulation, "degree-2 vertex off the outer cycle");
            r.deg2.push_back(v);
        }
    r.has_interior = static_cast<int>(cyc.size()) < g.vertex_count();
    for (VertexId v : cyc) {
        bool has_int = false;
        for (VertexId w : g.rotation(v))
            if (!outer[w]) has_int = true;
        if (has_int) r.attachment.push_back(v);
    }

    if (!r.has_interior) return r;

    if (static_cast<int>(r.attachment.size()) < 3)
        fail(Errc::HypothesisViolated, "|S| < 3 on a stripped near triangulation with interior vertices");
    if (static_cast<int>(r.deg2.size()) < 3)
        fail(Errc::HypothesisViolated, "fewer than 3 degree-2 vertices despite interior vertices");

    if (r.deg2.size() != 3) return r;

    if (r.attachment.size() != 3)
        fail(Errc::HypothesisViolated, "|A| == 3 but |S| != 3");
    // order S along the outer cycle, clockwise
    std::array<VertexId, 3> u{};
    int k = 0;
    for (int i = 0; i < len; ++i)
        if (std::find(r.attachment.begin(), r.attachment.end(), cyc[i]) != r.attachment.end()) u[k++] = cyc[i];
    for (int i = 0; i < 3; ++i)
        if (!g.has_edge(u[i], u[(i + 1) % 3]))
            fail(Errc::HypothesisViolated, "attachment set does not span a triangle");
    r.triangle = u;

    Decomposition dec;
    dec.corners = u;
    dec.t_bar = closed_disk(g, {u[0], u[1], u[2]});
    // every interior vertex must live inside the triangle's disk
    {
        std::unordered_set<VertexId> in_disk(dec.t_bar.to_parent.begin(), dec.t_bar.to_parent.end());
        for (VertexId v = 0; v < g.vertex_count(); ++v)
            if (!outer[v] && !in_disk.count(v))
                fail(Errc::HypothesisViolated, "interior vertex outside the attachment triangle");
    }
    dec.n_t = dec.t_bar.graph.vertex_count();
    for (int i = 0; i < 3; ++i) {
        std::vector<VertexId> path = outer_subpath(g, u[i], u[(i + 1) % 3]);
        dec.pieces[i] = closed_disk(g, path);
        dec.n_i[i] = dec.pieces[i].graph.vertex_count();
        VertexId found = -1;
        for (size_t j = 1; j + 1 < path.size(); ++j)
            if (g.degree(path[j]) == 2) {
                if (found != -1) fail(Errc::HypothesisViolated, "two degree-2 vertices in one outer arc");
                found = path[j];
            }
        if (found == -1) fail(Errc::HypothesisViolated, "no degree-2 vertex in outer arc " + std::to_string(i + 1));
        dec.deg2[i] = found;
    }
    r.decomposition = std::move(dec);
    return r;
}

namespace {

std::array<VertexId, 2> deg2_neighbors(const PlaneGraph& g, VertexId v) {
    if (g.degree(v) != 2) fail(Errc::PreconditionFailed, "vertex " + std::to_string(v + 1) + " is not degree-2");
    VertexId a = g.rotation(v)[0], b = g.rotation(v)[1];
    if (!g.has_edge(a, b))
        fail(Errc::NotNearTriangulation, "degree-2 vertex whose neighbors are non-adjacent");
    return {a, b};
}

void require_near_triangulation(const PlaneGraph& h, const char* what) {
    ValidationReport rep = is_near_triangulation(h);
    if (!rep.near_triangulation)
        fail(Errc::PreconditionFailed, std::string(what) + ": reduced graph is not a 2-connected near triangulation");
}

} // namespace

Reduction reduce_two_deg2(const PlaneGraph& g, VertexId v1, VertexId v2) {
    if (v1 == v2) fail(Errc::PreconditionFailed, "need two distinct degree-2 vertices");
    auto [a1, b1] = deg2_neighbors(g, v1);
    auto [a2, b2] = deg2_neighbors(g, v2);
    VertexId u = -1;
    for (VertexId c1 : {a1, b1})
        for (VertexId c2 : {a2, b2})
            if (c1 == c2 && (u == -1 || c1 < u)) u = c1;
    if (u == -1) fail(Errc::PreconditionFailed, "degree-2 vertices share no neighbor");
    VertexId x = (a1 == u) ? b1 : a1;
    VertexId y = (a2 == u) ? b2 : a2;

    Reduction red;
    red.h = delete_vertices(g, {v1, v2});
    require_near_triangulation(red.h.graph, "two-deg2");
    red.step.kind = ReductionStep::Kind::TwoDeg2;
    red.step.ears = {{v1, x, u}, {v2, y, u}};
    red.step.shared = u;
    return red;
}

Reduction reduce_four_deg2(const PlaneGraph& g, const std::array<VertexId, 4>& ears) {
    for (int i = 0; i < 4; ++i)
        for (int j = i + 1; j < 4; ++j)
            if (ears[i] == ears[j]) fail(Errc::PreconditionFailed, "ears must be distinct");
    Reduction red;
    red.step.kind = ReductionStep::Kind::FourDeg2;
    for (VertexId v : ears) {
        auto [a, b] = deg2_neighbors(g, v);
        red.step.ears.push_back({v, a, b});
    }
    red.h = delete_vertices(g, {ears[0], ears[1], ears[2], ears[3]});
    require_near_triangulation(red.h.graph, "four-deg2");
    return red;
}

Reduction reduce_three_deg2_with_deg3(const PlaneGraph& g,
                                      const std::array<std::pair<VertexId, VertexId>, 3>& pairs) {
    std::vector<VertexId> removed;
    Reduction red;
    red.step.kind = ReductionStep::Kind::ThreeDeg2WithDeg3;
    for (int i = 0; i < 3; ++i) {
        auto [v, vp] = pairs[i];
        auto [a, b] = deg2_neighbors(g, v);
        if (vp != a && vp != b) fail(Errc::PreconditionFailed, "v' is not a neighbor of v");
        if (g.degree(vp) != 3) fail(Errc::PreconditionFailed, "v' does not have degree 3");
        VertexId c = (vp == a) ? b : a;
        VertexId w = -1;
        for (VertexId z : g.rotation(vp))
            if (z != v && z != c) w = z;
        if (w == -1) fail(Errc::PreconditionFailed, "cannot identify the third neighbor of v'");
        if (!g.has_edge(c, w))
            fail(Errc::PreconditionFailed, "gadget chord missing; not a near-triangulation configuration");
        red.step.gadgets[i] = {v, vp, c, w};
        removed.push_back(v);
        removed.push_back(vp);
    }
    std::vector<VertexId> sorted = removed;
    std::sort(sorted.begin(), sorted.end());
    if (std::unique(sorted.begin(), sorted.end()) != sorted.end())
        fail(Errc::PreconditionFailed, "the six removed vertices must be distinct");
    for (const auto& gd : red.step.gadgets)
        for (VertexId anchor : {gd.c, gd.w})
            if (std::find(sorted.begin(), sorted.end(), anchor) != sorted.end())
                fail(Errc::PreconditionFailed, "gadget anchors must survive the reduction");
    red.h = delete_vertices(g, removed);
    require_near_triangulation(red.h.graph, "three-deg2");
    return red;
}

std::vector<Arc> ReductionStep::replay(const ArcDir& dir) const {
    std::vector<Arc> arcs;
    switch (kind) {
        case Kind::TwoDeg2: {
            const VertexId v1 = ears[0].v, x = ears[0].a;
            const VertexId v2 = ears[1].v, y = ears[1].a;
            const VertexId u = shared;
            const bool xu = dir(x, u), yu = dir(y, u);
            if (xu && !yu) {  // x->u, u->y: route v2 -> u -> v1
                arcs = {{u, v1}, {v1, x}, {y, v2}, {v2, u}};
            } else if (!xu && yu) {  // u->x, y->u: route v1 -> u -> v2
                arcs = {{x, v1}, {v1, u}, {u, v2}, {v2, y}};
            } else if (xu && yu) {  // both chords point into u
                arcs = {{u, v1}, {v1, x}, {u, v2}, {v2, y}};
            } else {  // both chords point out of u
                arcs = {{x, v1}, {v1, u}, {y, v2}, {v2, u}};
            }
            break;
        }
        case Kind::FourDeg2: {
            for (const Ear& e : ears) {
                if (dir(e.a, e.b))
                    arcs.insert(arcs.end(), {{e.b, e.v}, {e.v, e.a}});  // triangle a->b->v->a
                else
                    arcs.insert(arcs.end(), {{e.a, e.v}, {e.v, e.b}});
            }
            break;
        }
        case Kind::ThreeDeg2WithDeg3: {
            for (const Gadget& gd : gadgets) {
                if (dir(gd.c, gd.w))  // 4-cycle c->w->vp->v->c with shortcut vp->c
                    arcs.insert(arcs.end(), {{gd.w, gd.vp}, {gd.vp, gd.v}, {gd.v, gd.c}, {gd.vp, gd.c}});
                else  // 4-cycle w->c->v->vp->w with shortcut c->vp
                    arcs.insert(arcs.end(), {{gd.c, gd.v}, {gd.v, gd.vp}, {gd.vp, gd.w}, {gd.c, gd.vp}});
            }
            break;
        }
    }
    return arcs;
}

std::string ReductionStep::trace_line() const {
    auto id = [](VertexId v) { return std::to_string(v + 1); };
    switch (kind) {
        case Kind::TwoDeg2:
            return "two-deg2 " + id(ears[0].v) + " " + id(ears[1].v);
        case Kind::FourDeg2:
            return "four-deg2 " + id(ears[0].v) + " " + id(ears[1].v) + " " + id(ears[2].v) + " " + id(ears[3].v);
        case Kind::ThreeDeg2WithDeg3:
            return "three-deg2 " + id(gadgets[0].v) + " " + id(gadgets[0].vp) + " " + id(gadgets[1].v) + " " +
                   id(gadgets[1].vp) + " " + id(gadgets[2].v) + " " + id(gadgets[2].vp);
    }
    return "";
}

std::vector<VertexId> ReductionStep::removed_vertices() const {
    std::vector<VertexId> out;
    if (kind == Kind::ThreeDeg2WithDeg3) {
        for (const Gadget& gd : gadgets) {
            out.push_back(gd.v);
            out.push_back(gd.vp);
        }
    } else {
        for (const Ear& e : ears) out.push_back(e.v);
    }
    return out;
}

bool is_maximal_outerplanar(const PlaneGraph& g) {
    ValidationReport rep = is_near_triangulation(g);
    return rep.near_triangulation && g.interior_vertices().empty();
}

} // namespace ont
