#include "ont/engine.hpp"

#include <algorithm>
#include <cassert>
#include <set>
#include <unordered_set>

#include "ont/canon.hpp"

namespace ont {

namespace {

std::string id1(VertexId v) { return std::to_string(v + 1); }

VertexId local_id(const Subgraph& sub, VertexId parent_id) {
    for (size_t i = 0; i < sub.to_parent.size(); ++i)
        if (sub.to_parent[i] == parent_id) return static_cast<VertexId>(i);
    fail(Errc::VertexAbsent, "vertex " + id1(parent_id) + " not in subgraph");
}

void append_nested(std::vector<std::string>& trace, const std::vector<std::string>& inner) {
    for (const auto& line : inner) trace.push_back("  " + line);
}

} // namespace

Orientation lift_arcs(const Subgraph& sub, const Orientation& d, int parent_n) {
    std::vector<Arc> arcs;
    arcs.reserve(d.arcs().size());
    for (const auto& [u, v] : d.arcs()) arcs.emplace_back(sub.to_parent[u], sub.to_parent[v]);
    return Orientation(parent_n, std::move(arcs));
}

Engine::Engine(Catalog catalog, EngineConfig cfg) : catalog_(std::move(catalog)), cfg_(cfg) {
    if (cfg_.base_case_max_n < 8) fail(Errc::PreconditionFailed, "base_case_max_n must stay at least 8");
}

Certificate Engine::finish(const PlaneGraph& g, Orientation d, std::vector<std::string> trace) const {
    Certificate cert;
    cert.bound = half_ceil(g.vertex_count());
    cert.strongly_connected = is_strongly_connected(d);
    cert.diameter = diameter(d);
    cert.orientation = std::move(d);
    cert.trace = std::move(trace);
    return cert;
}

Certificate Engine::verified_or_rescue(const PlaneGraph& g, Certificate cert) const {
    std::string reason;
    if (verify_certificate(g, cert, &reason)) return cert;
    if (g.vertex_count() <= cfg_.fallback_exact_max_n) {
        std::vector<std::string> trace = cert.trace;
        trace.push_back("fallback-exact (" + reason + ")");
        return exact_certificate(g, std::move(trace));
    }
    fail(Errc::VerificationFailed, reason);
}

Certificate Engine::exact_certificate(const PlaneGraph& g, std::vector<std::string> trace) const {
    ExactOptions opts;
    opts.budget = cfg_.exact_budget;
    opts.budget.target_bound = half_ceil(g.vertex_count());
    ExactResult r = oriented_diameter_exact(g, opts);
    if (!r.value)
        fail(Errc::VerificationFailed, "exact search found no strong orientation within budget");
    Certificate cert = finish(g, r.witness, std::move(trace));
    if (!cert.diameter || *cert.diameter > cert.bound)
        fail(Errc::VerificationFailed, "exact search exceeded the bound on a non-exception graph");
    return cert;
}

Certificate Engine::orient(const PlaneGraph& g) const {
    ValidationReport rep = is_near_triangulation(g);
    if (!rep.near_triangulation) fail(Errc::NotNearTriangulation, rep.detail);
    return orient_impl(g, 0);
}

Certificate Engine::orient_impl(const PlaneGraph& g, int depth) const {
    const int n = g.vertex_count();
    if (const CatalogEntry* ent = catalog_.match(g)) {
        Orientation d = catalog_.mapped_optimal(*ent, g);
        Certificate cert = finish(g, std::move(d), {"exception " + ent->name});
        cert.exception = true;
        cert.exception_name = ent->name;
        std::string reason;
        if (!verify_certificate(g, cert, &reason) || !cert.diameter || *cert.diameter != ent->exact_od)
            fail(Errc::VerificationFailed, "catalog orientation failed on " + ent->name + ": " + reason);
        return cert;
    }
    if (n <= cfg_.base_case_max_n)
        return exact_certificate(g, {"base-exact n=" + std::to_string(n)});

    StripResult stripped = strip_separating_outer_edges(g);
    Certificate cert;
    if (stripped.steps.empty()) {
        cert = orient_stripped(g, depth);
    } else {
        Certificate inner = orient_stripped(stripped.graph, depth);
        std::vector<Arc> arcs = inner.orientation.arcs();
        for (const StripStep& s : stripped.steps) arcs.emplace_back(s.u, s.w);
        std::vector<std::string> trace;
        for (const StripStep& s : stripped.steps) trace.push_back("strip " + id1(s.u) + " " + id1(s.w));
        for (auto& line : inner.trace) trace.push_back(std::move(line));
        cert = finish(g, Orientation(n, std::move(arcs)), std::move(trace));
    }
    if (cfg_.verify_every_level || depth == 0) return verified_or_rescue(g, std::move(cert));
    return cert;
}

Certificate Engine::orient_stripped(const PlaneGraph& g, int depth) const {
    StructureReport rep = analyze(g);
    if (!rep.has_interior) return outerplanar_impl(g, {}, depth);
    if (static_cast<int>(rep.deg2.size()) >= 4) return branch_four(g, rep, depth);
    if (!rep.decomposition) fail(Errc::HypothesisViolated, "missing decomposition with |A| == 3");
    const auto& dec = *rep.decomposition;
    int small = 0;
    for (int i = 0; i < 3; ++i)
        if (dec.n_i[i] == 3) ++small;
    if (small >= 2) return case1_impl(g, rep, depth);
    if (small == 1) return case2_impl(g, rep, depth);
    return case3_impl(g, rep, depth);
}

Certificate Engine::extend_reduction(const PlaneGraph& g, const Reduction& red, const Certificate& inner,
                                     std::vector<std::string> trace) const {
    Orientation lifted = lift_arcs(red.h, inner.orientation, g.vertex_count());
    ArcDir dir = [&lifted](VertexId u, VertexId v) { return lifted.has_arc(u, v); };
    std::vector<Arc> arcs = lifted.arcs();
    std::vector<Arc> ext = red.step.replay(dir);
    arcs.insert(arcs.end(), ext.begin(), ext.end());
    trace.push_back(red.step.trace_line());
    append_nested(trace, inner.trace);
    return finish(g, Orientation(g.vertex_count(), std::move(arcs)), std::move(trace));
}

namespace {

// cyclically consecutive windows of size k over positions along the outer cycle
std::vector<std::array<VertexId, 4>> four_windows(const PlaneGraph& g, const std::vector<VertexId>& deg2) {
    std::vector<VertexId> cyc = g.outer_cycle();
    std::vector<VertexId> in_order;
    for (VertexId v : cyc)
        if (std::find(deg2.begin(), deg2.end(), v) != deg2.end()) in_order.push_back(v);
    const int a = static_cast<int>(in_order.size());
    std::vector<int> pos_of(in_order.size());
    // span of the window = cyclic distance from first to last member
    std::vector<int> positions;
    for (int i = 0; i < static_cast<int>(cyc.size()); ++i)
        if (std::find(deg2.begin(), deg2.end(), cyc[i]) != deg2.end()) positions.push_back(i);
    (void)pos_of;

    std::vector<std::pair<int, int>> ranked;  // (span, start index)
    const int len = static_cast<int>(cyc.size());
    for (int s = 0; s < a; ++s) {
        int span = positions[(s + 3) % a] - positions[s];
        if (span < 0) span += len;
        ranked.emplace_back(span, s);
    }
    std::sort(ranked.begin(), ranked.end(), [&](auto x, auto y) {
        if (x.first != y.first) return x.first < y.first;
        return in_order[x.second] < in_order[y.second];
    });
    std::vector<std::array<VertexId, 4>> out;
    for (auto [span, s] : ranked)
        out.push_back({in_order[s % a], in_order[(s + 1) % a], in_order[(s + 2) % a], in_order[(s + 3) % a]});
    return out;
}

} // namespace

Certificate Engine::branch_four(const PlaneGraph& g, const StructureReport& rep, int depth) const {
    const int n = g.vertex_count();
    for (const auto& window : four_windows(g, rep.deg2)) {
        Reduction red;
        try {
            red = reduce_four_deg2(g, window);
        } catch (const Error&) {
            continue;
        }
        const CatalogEntry* ent = catalog_.match(red.h.graph);
        if (ent != nullptr && (ent->name == "W5" || ent->name == "G6_3")) {
            // n = 10 squeeze: fall back to a shared-neighbor pair (+1 instead of +2)
            for (size_t i = 0; i < rep.deg2.size(); ++i)
                for (size_t j = i + 1; j < rep.deg2.size(); ++j) {
                    VertexId a = rep.deg2[i], b = rep.deg2[j];
                    bool share = false;
                    for (VertexId x : g.rotation(a))
                        for (VertexId y : g.rotation(b))
                            if (x == y) share = true;
                    if (!share) continue;
                    Reduction red2 = reduce_two_deg2(g, a, b);
                    if (catalog_.match(red2.h.graph) != nullptr) continue;
                    Certificate inner = orient_impl(red2.h.graph, depth + 1);
                    return extend_reduction(g, red2, inner, {"branch-A4-squeeze n=" + std::to_string(n)});
                }
            fail(Errc::HypothesisViolated, "reduced graph is W5/G6_3 but no shared-neighbor pair exists");
        }
        if (ent != nullptr) continue;  // dodge any other exception by re-choosing the window
        Certificate inner = orient_impl(red.h.graph, depth + 1);
        return extend_reduction(g, red, inner, {"branch-A4 n=" + std::to_string(n)});
    }
    fail(Errc::VerificationFailed, "no usable four-ear reduction window");
}

Certificate Engine::case1_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const {
    const auto& dec = *rep.decomposition;
    int i1 = -1, i2 = -1;
    for (int i = 0; i < 3; ++i)
        if (dec.n_i[i] == 3) {
            if (i1 == -1)
                i1 = i;
            else if (i2 == -1)
                i2 = i;
        }
    if (i1 == -1 || i2 == -1) fail(Errc::PreconditionFailed, "case 1 needs two size-3 pieces");
    Reduction red = reduce_two_deg2(g, dec.deg2[i1], dec.deg2[i2]);
    if (catalog_.match(red.h.graph) != nullptr)
        fail(Errc::VerificationFailed, "case-1 reduced graph is unexpectedly an exception");
    Certificate inner = orient_impl(red.h.graph, depth + 1);
    return extend_reduction(g, red, inner, {"case1"});
}

Certificate Engine::orient_case1(const PlaneGraph& g, const StructureReport& rep) const {
    if (!rep.decomposition) fail(Errc::PreconditionFailed, "decomposition absent");
    return verified_or_rescue(g, case1_impl(g, rep, 0));
}

Certificate Engine::orient_case2(const PlaneGraph& g, const StructureReport& rep) const {
    if (!rep.decomposition) fail(Errc::PreconditionFailed, "decomposition absent");
    return verified_or_rescue(g, case2_impl(g, rep, 0));
}

Certificate Engine::orient_case3(const PlaneGraph& g, const StructureReport& rep) const {
    if (!rep.decomposition) fail(Errc::PreconditionFailed, "decomposition absent");
    return verified_or_rescue(g, case3_impl(g, rep, 0));
}

Certificate Engine::case2_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const {
    const auto& dec = *rep.decomposition;
    const int n = g.vertex_count();
    int k3 = -1;
    for (int i = 0; i < 3; ++i)
        if (dec.n_i[i] == 3) k3 = i;
    if (k3 == -1) fail(Errc::PreconditionFailed, "case 2 needs exactly one size-3 piece");
    const int idx1 = (k3 + 1) % 3, idx2 = (k3 + 2) % 3;
    const VertexId u3 = dec.corners[k3], u1 = dec.corners[idx1], u2 = dec.corners[idx2];
    const VertexId v3 = dec.deg2[k3];
    const int n1 = dec.n_i[idx1], n2 = dec.n_i[idx2], nT = dec.n_t;
    if (n1 < 4 || n2 < 4 || nT < 4) fail(Errc::HypothesisViolated, "case-2 piece size window violated");
    if (n1 + n2 + nT != n + 3) fail(Errc::HypothesisViolated, "case-2 size identity n1+n2+nT = n+3 violated");
    if (n1 > n - 5 || n2 > n - 5 || nT > n - 5) fail(Errc::HypothesisViolated, "case-2 piece exceeds n-5");
    // the composition arithmetic behind the bound, replayed on this instance
    for (auto [ni, nother] : {std::pair{n1, n2}, std::pair{n2, n1}}) {
        const int lhs2 = 2 * (half_ceil(ni) + half_ceil(nT));
        if (!(lhs2 <= n + 5 - nother && n + 5 - nother <= n + 3))
            fail(Errc::HypothesisViolated, "case-2 distance arithmetic violated");
    }

    std::vector<std::string> trace{"case2 nT=" + std::to_string(nT) + " n1=" + std::to_string(n1) +
                                   " n2=" + std::to_string(n2)};

    // orient the triangle disk, anchored at u2
    const Subgraph& tb = dec.t_bar;
    const VertexId t_u2 = local_id(tb, u2);
    Orientation d_t;
    const CatalogEntry* t_ent = catalog_.match(tb.graph);
    if (t_ent != nullptr) {
        if (t_ent->name != "K4")
            fail(Errc::VerificationFailed, "triangle disk matches exception " + t_ent->name + ", expected only K4");
        ExactResult r = anchored_exact(tb.graph, t_u2, nT / 2);
        if (r.status != SolveStatus::Optimal || !r.value || *r.value != nT / 2 + 1)
            fail(Errc::AnchorUnmet, "anchored orientation of the K4 disk not found");
        d_t = r.witness;
        trace.push_back("  tbar=K4 anchored at " + id1(u2));
    } else {
        Certificate ct = orient_impl(tb.graph, depth + 1);
        d_t = ct.orientation;
        append_nested(trace, ct.trace);
    }
    if (anchored_ecc(d_t, t_u2) > half_ceil(nT)) {
        if (nT <= cfg_.outerplanar_exact_max_n) {
            ExactResult r = anchored_exact(tb.graph, t_u2, half_ceil(nT));
            if (r.status != SolveStatus::Optimal) fail(Errc::AnchorUnmet, "triangle disk anchor unmet");
            d_t = r.witness;
        } else {
            fail(Errc::AnchorUnmet, "triangle disk anchor unmet");
        }
    }

    // orient the two big outerplanar pieces, anchored at u2
    auto orient_piece = [&](int idx) {
        const Subgraph& piece = dec.pieces[idx];
        const VertexId a = local_id(piece, u2);
        Certificate c = outerplanar_impl(piece.graph, a, depth + 1);
        if (anchored_ecc(c.orientation, a) > half_ceil(piece.graph.vertex_count()))
            fail(Errc::AnchorUnmet, "piece anchor unmet");
        const int np = piece.graph.vertex_count();
        if (!c.diameter || 2 * (*c.diameter) > np + 2)
            fail(Errc::AnchorUnmet, "piece diameter above n/2+1");
        return c;
    };
    Certificate c1 = orient_piece(idx1);
    Certificate c2 = orient_piece(idx2);
    append_nested(trace, c1.trace);
    append_nested(trace, c2.trace);

    Orientation acc = lift_arcs(tb, d_t, n);
    acc = combine(acc, lift_arcs(dec.pieces[idx1], c1.orientation, n), true);
    acc = combine(acc, lift_arcs(dec.pieces[idx2], c2.orientation, n), true);
    // O3 becomes a directed triangle through v3, following the chord's direction
    std::vector<Arc> arcs = acc.arcs();
    if (acc.has_arc(u3, u1)) {
        arcs.emplace_back(u1, v3);
        arcs.emplace_back(v3, u3);
    } else {
        arcs.emplace_back(u3, v3);
        arcs.emplace_back(v3, u1);
    }
    return finish(g, Orientation(n, std::move(arcs)), std::move(trace));
}

Certificate Engine::case3_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const {
    const auto& dec = *rep.decomposition;
    const int n = g.vertex_count();
    std::array<std::pair<VertexId, VertexId>, 3> pairs;
    for (int i = 0; i < 3; ++i) {
        const VertexId v = dec.deg2[i];
        VertexId vp = -1;
        for (VertexId w : g.rotation(v)) {
            bool corner = false;
            for (VertexId c : dec.corners)
                if (c == w) corner = true;
            if (!corner && g.degree(w) == 3 && (vp == -1 || w < vp)) vp = w;
        }
        if (vp == -1) fail(Errc::HypothesisViolated, "case-3 ear without a degree-3 neighbor");
        pairs[i] = {v, vp};
    }
    Reduction red = reduce_three_deg2_with_deg3(g, pairs);
    const CatalogEntry* ent = catalog_.match(red.h.graph);
    if (ent != nullptr && ent->name == "W5")
        fail(Errc::VerificationFailed, "case-3 reduced graph is W5, impossible with the triangle disk inside");
    if (ent != nullptr && (ent->name == "K4" || ent->name == "G6_3")) {
        // the two K4- pieces share a corner; orient around it
        std::array<std::pair<int, int>, 3> adjacent_pairs{{{0, 1}, {1, 2}, {2, 0}}};
        for (auto [pi, pj] : adjacent_pairs) {
            if (dec.n_i[pi] != 4 || dec.n_i[pj] != 4) continue;
            const VertexId uS = dec.corners[(pi + 1) % 3];  // pieces pi and pi+1 share this corner
            std::vector<VertexId> removed{pairs[pi].first, pairs[pi].second, pairs[pj].first, pairs[pj].second};
            Subgraph hp = delete_vertices(g, removed);
            const VertexId uS_local = local_id(hp, uS);
            Orientation d_prime;
            std::vector<std::string> trace{"case3-special H=" + ent->name};
            if (n == 10) {
                const CatalogEntry* e2 = catalog_.match(hp.graph);
                if (e2 == nullptr || e2->name != "G6_3")
                    fail(Errc::VerificationFailed, "case-3 special: expected G6_3 remainder at n=10");
                ExactResult r = anchored_exact(hp.graph, uS_local, n / 2 - 2);
                if (r.status != SolveStatus::Optimal || !r.value || *r.value != n / 2 - 1)
                    fail(Errc::AnchorUnmet, "case-3 special anchored orientation not found");
                d_prime = r.witness;
            } else if (n == 12) {
                Certificate ch = orient_impl(hp.graph, depth + 1);
                if (!ch.diameter || *ch.diameter > n / 2 - 2)
                    fail(Errc::VerificationFailed, "case-3 special: 8-vertex remainder above n/2-2");
                if (anchored_ecc(ch.orientation, uS_local) > n / 2 - 2)
                    fail(Errc::AnchorUnmet, "case-3 special anchor unmet");
                d_prime = ch.orientation;
                append_nested(trace, ch.trace);
            } else {
                fail(Errc::VerificationFailed, "case-3 special fired at n=" + std::to_string(n));
            }
            auto orient_k4minus = [&](int idx) {
                const Subgraph& piece = dec.pieces[idx];
                ExactResult r = anchored_exact(piece.graph, local_id(piece, uS), 2);
                if (r.status != SolveStatus::Optimal || !r.value || *r.value != 3)
                    fail(Errc::AnchorUnmet, "K4- piece anchored orientation not found");
                return r.witness;
            };
            Orientation acc = lift_arcs(hp, d_prime, n);
            acc = combine(acc, lift_arcs(dec.pieces[pi], orient_k4minus(pi), n), true);
            acc = combine(acc, lift_arcs(dec.pieces[pj], orient_k4minus(pj), n), true);
            return finish(g, std::move(acc), std::move(trace));
        }
        fail(Errc::VerificationFailed, "case-3 special: no adjacent pair of K4- pieces");
    }
    if (ent != nullptr) fail(Errc::VerificationFailed, "case-3 reduced graph is exception " + ent->name);
    Certificate inner = orient_impl(red.h.graph, depth + 1);
    return extend_reduction(g, red, inner, {"case3"});
}

// ---------------------------------------------------------------------------
// outerplanar machinery

namespace {

struct SerpentStrip {
    std::vector<std::pair<VertexId, VertexId>> chords;  // in strip order
    std::vector<char> lane;                             // lane[v] true = clockwise side from first ear
    VertexId ear_a = -1, ear_b = -1;
};

SerpentStrip serpent_structure(const PlaneGraph& g, VertexId ear_a, VertexId ear_b) {
    SerpentStrip s;
    s.ear_a = ear_a;
    s.ear_b = ear_b;
    const std::vector<VertexId> cyc = g.outer_cycle();
    const int len = static_cast<int>(cyc.size());
    s.lane.assign(g.vertex_count(), 0);
    int ia = -1;
    for (int i = 0; i < len; ++i)
        if (cyc[i] == ear_a) ia = i;
    for (int i = 0;; ++i) {
        VertexId v = cyc[(ia + i) % len];
        s.lane[v] = 1;
        if (v == ear_b) break;
    }
    // dual-path walk from the ear triangle
    std::set<std::pair<VertexId, VertexId>> boundary;
    for (int i = 0; i < len; ++i) {
        VertexId a = cyc[i], b = cyc[(i + 1) % len];
        boundary.insert({std::min(a, b), std::max(a, b)});
    }
    std::vector<FaceId> inner;
    for (FaceId f = 0; f < g.face_count(); ++f)
        if (f != g.outer_face()) inner.push_back(f);
    auto chords_of = [&](FaceId f) {
        std::vector<std::pair<VertexId, VertexId>> cs;
        for (const Dart& d : g.face_darts(f)) {
            auto e = std::pair{std::min(d.tail, d.head), std::max(d.tail, d.head)};
            if (!boundary.count(e)) cs.push_back(e);
        }
        return cs;
    };
    FaceId cur = -1;
    for (FaceId f : inner)
        for (const Dart& d : g.face_darts(f))
            if (d.tail == ear_a) cur = f;
    std::pair<VertexId, VertexId> from{-1, -1};
    for (size_t step = 0; step + 1 < inner.size(); ++step) {
        auto cs = chords_of(cur);
        std::pair<VertexId, VertexId> next_chord{-1, -1};
        for (auto& c : cs)
            if (c != from) next_chord = c;
        if (next_chord.first == -1) fail(Errc::PreconditionFailed, "not a two-ear strip");
        s.chords.push_back(next_chord);
        FaceId f1 = g.face_of(next_chord.first, next_chord.second);
        FaceId f2 = g.face_of(next_chord.second, next_chord.first);
        cur = (f1 == cur) ? f2 : f1;
        from = next_chord;
    }
    return s;
}

} // namespace

Orientation Engine::serpent_orientation(const PlaneGraph& g, std::optional<VertexId> anchor) const {
    const int n = g.vertex_count();
    const int bound = half_ceil(n);
    std::vector<VertexId> ears;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 2) ears.push_back(v);
    if (ears.size() != 2) fail(Errc::PreconditionFailed, "serpent handler needs exactly two ears");

    const std::vector<VertexId> cyc = g.outer_cycle();
    const int len = static_cast<int>(cyc.size());

    auto build = [&](const SerpentStrip& s, const std::function<bool(int)>& chord_to_l) {
        std::vector<Arc> arcs;
        for (int i = 0; i < len; ++i) arcs.emplace_back(cyc[i], cyc[(i + 1) % len]);
        for (size_t j = 0; j < s.chords.size(); ++j) {
            auto [a, b] = s.chords[j];
            VertexId u_side = s.lane[a] ? a : b;  // endpoint on the clockwise lane
            VertexId l_side = s.lane[a] ? b : a;
            if (chord_to_l(static_cast<int>(j)))
                arcs.emplace_back(u_side, l_side);
            else
                arcs.emplace_back(l_side, u_side);
        }
        return Orientation(n, std::move(arcs));
    };

    auto metric = [&](const Orientation& d) {
        // (#pairs above bound or unreachable, anchored violation)
        long bad = 0;
        for (VertexId v = 0; v < n; ++v) {
            auto dist = bfs_from(d, v);
            for (int x : dist)
                if (x < 0 || x > bound) ++bad;
        }
        if (anchor && bad == 0) {
            auto fwd = bfs_from(d, *anchor);
            auto bwd = bfs_to(d, *anchor);
            for (int v = 0; v < n; ++v)
                if (fwd[v] > bound || bwd[v] > bound) ++bad;
        }
        return bad;
    };

    std::vector<std::function<bool(int)>> patterns = {
        [](int j) { return j % 2 == 0; },
        [](int j) { return j % 2 == 1; },
        [](int j) { return (j / 2) % 2 == 0; },
        [](int j) { return (j / 2) % 2 == 1; },
        [](int j) { return ((j + 1) / 2) % 2 == 0; },
        [](int j) { return ((j + 1) / 2) % 2 == 1; },
    };

    Orientation best;
    long best_bad = -1;
    for (VertexId first : {ears[0], ears[1]}) {
        SerpentStrip s = serpent_structure(g, first, first == ears[0] ? ears[1] : ears[0]);
        for (const auto& pat : patterns) {
            Orientation d = build(s, pat);
            long bad = metric(d);
            if (bad == 0) return d;
            if (best_bad < 0 || bad < best_bad) {
                best_bad = bad;
                best = std::move(d);
            }
        }
    }

    // greedy chord-flip repair from the best pattern
    std::vector<Arc> arcs = best.arcs();
    std::set<std::pair<VertexId, VertexId>> boundary;
    for (int i = 0; i < len; ++i) {
        VertexId a = cyc[i], b = cyc[(i + 1) % len];
        boundary.insert({std::min(a, b), std::max(a, b)});
    }
    long cur_bad = best_bad;
    for (int sweep = 0; sweep < 4 && cur_bad > 0; ++sweep) {
        bool improved = false;
        for (size_t i = 0; i < arcs.size(); ++i) {
            auto [u, v] = arcs[i];
            if (boundary.count({std::min(u, v), std::max(u, v)})) continue;
            arcs[i] = {v, u};
            Orientation cand(n, arcs);
            long bad = metric(cand);
            if (bad < cur_bad) {
                cur_bad = bad;
                improved = true;
                if (cur_bad == 0) return cand;
            } else {
                arcs[i] = {u, v};
            }
        }
        if (!improved) break;
    }
    fail(Errc::VerificationFailed, "no serpent orientation within the bound found");
}

Certificate Engine::orient_outerplanar(const PlaneGraph& g, std::optional<VertexId> anchor) const {
    return outerplanar_impl(g, anchor, 0);
}

Certificate Engine::outerplanar_impl(const PlaneGraph& g, std::optional<VertexId> anchor, int depth) const {
    if (!is_maximal_outerplanar(g)) fail(Errc::NotMaximalOuterplanar, "input is not maximal outerplanar");
    const int n = g.vertex_count();
    const int bound = half_ceil(n);

    auto check_anchor = [&](Certificate cert) -> Certificate {
        if (anchor && anchored_ecc(cert.orientation, *anchor) > bound) {
            if (n <= cfg_.outerplanar_exact_max_n) {
                ExactResult r = anchored_exact(g, *anchor, bound, cfg_.exact_budget);
                if (r.status == SolveStatus::Optimal && r.value) {
                    Certificate c2 = finish(g, r.witness, {"anchored-exact n=" + std::to_string(n)});
                    c2.exception = cert.exception;
                    c2.exception_name = cert.exception_name;
                    return c2;
                }
            }
            fail(Errc::AnchorUnmet, "anchored eccentricity above ceil(n/2) at " + id1(*anchor));
        }
        return cert;
    };

    if (const CatalogEntry* ent = catalog_.match(g)) {
        Certificate cert;
        if (anchor) {
            ExactResult r = anchored_exact(g, *anchor, bound, cfg_.exact_budget);
            if (r.status != SolveStatus::Optimal || !r.value)
                fail(Errc::AnchorUnmet, "no anchored orientation for exception " + ent->name);
            cert = finish(g, r.witness, {"exception " + ent->name + " anchored"});
        } else {
            cert = finish(g, catalog_.mapped_optimal(*ent, g), {"exception " + ent->name});
        }
        cert.exception = true;
        cert.exception_name = ent->name;
        std::string reason;
        if (!verify_certificate(g, cert, &reason)) fail(Errc::VerificationFailed, reason);
        return cert;
    }

    if (n <= cfg_.outerplanar_exact_max_n) {
        Certificate cert;
        if (anchor) {
            ExactResult r = anchored_exact(g, *anchor, bound, cfg_.exact_budget);
            if (r.status != SolveStatus::Optimal || !r.value) fail(Errc::AnchorUnmet, "anchored search failed");
            cert = finish(g, r.witness, {"anchored-exact n=" + std::to_string(n)});
        } else {
            cert = exact_certificate(g, {"outerplanar-exact n=" + std::to_string(n)});
        }
        return verified_or_rescue(g, std::move(cert));
    }

    std::vector<VertexId> ears;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == 2) ears.push_back(v);

    Certificate cert;
    bool built = false;

    // shared-neighbor ear pair: the +1 reduction
    for (size_t i = 0; i < ears.size() && !built; ++i)
        for (size_t j = i + 1; j < ears.size() && !built; ++j) {
            bool share = false;
            for (VertexId x : g.rotation(ears[i]))
                for (VertexId y : g.rotation(ears[j]))
                    if (x == y) share = true;
            if (!share) continue;
            Reduction red = reduce_two_deg2(g, ears[i], ears[j]);
            Certificate inner = outerplanar_impl(red.h.graph, {}, depth + 1);
            cert = extend_reduction(g, red, inner, {"outerplanar-two-deg2 n=" + std::to_string(n)});
            built = true;
        }

    if (!built && ears.size() >= 4) {
        for (const auto& window : four_windows(g, ears)) {
            Reduction red;
            try {
                red = reduce_four_deg2(g, window);
            } catch (const Error&) {
                continue;
            }
            Certificate inner = outerplanar_impl(red.h.graph, {}, depth + 1);
            cert = extend_reduction(g, red, inner, {"outerplanar-four-deg2 n=" + std::to_string(n)});
            built = true;
            break;
        }
    }

    if (!built && ears.size() == 3) {
        std::array<std::pair<VertexId, VertexId>, 3> pairs;
        bool ok = true;
        for (int i = 0; i < 3 && ok; ++i) {
            VertexId v = ears[i], vp = -1;
            for (VertexId w : g.rotation(v))
                if (g.degree(w) == 3 && (vp == -1 || w < vp)) vp = w;
            if (vp == -1)
                ok = false;
            else
                pairs[i] = {v, vp};
        }
        if (ok) {
            try {
                Reduction red = reduce_three_deg2_with_deg3(g, pairs);
                Certificate inner = outerplanar_impl(red.h.graph, {}, depth + 1);
                cert = extend_reduction(g, red, inner, {"outerplanar-three-deg2 n=" + std::to_string(n)});
                built = true;
            } catch (const Error&) {
                built = false;
            }
        }
    }

    if (!built && ears.size() == 2) {
        Orientation d = serpent_orientation(g, anchor);
        cert = finish(g, std::move(d), {"outerplanar-serpent n=" + std::to_string(n)});
        built = true;
    }

    if (!built) {
        // last resort: drop two ears, recurse, and pick the sense pair that lands
        for (size_t i = 0; i < ears.size() && !built; ++i)
            for (size_t j = i + 1; j < ears.size() && !built; ++j) {
                VertexId va = ears[i], vb = ears[j];
                Subgraph h = delete_vertices(g, {va, vb});
                if (!is_maximal_outerplanar(h.graph)) continue;
                Certificate inner = outerplanar_impl(h.graph, {}, depth + 1);
                Orientation lifted = lift_arcs(h, inner.orientation, n);
                const auto na = g.rotation(va);
                const auto nb = g.rotation(vb);
                for (int sa = 0; sa < 2 && !built; ++sa)
                    for (int sb = 0; sb < 2 && !built; ++sb) {
                        std::vector<Arc> arcs = lifted.arcs();
                        arcs.emplace_back(sa ? Arc{na[0], va} : Arc{na[1], va});
                        arcs.emplace_back(sa ? Arc{va, na[1]} : Arc{va, na[0]});
                        arcs.emplace_back(sb ? Arc{nb[0], vb} : Arc{nb[1], vb});
                        arcs.emplace_back(sb ? Arc{vb, nb[1]} : Arc{vb, nb[0]});
                        Orientation cand(n, std::move(arcs));
                        auto diam = diameter(cand);
                        if (diam && *diam <= bound) {
                            cert = finish(g, std::move(cand),
                                          {"outerplanar-pair-search n=" + std::to_string(n)});
                            built = true;
                        }
                    }
            }
    }

    if (!built) fail(Errc::VerificationFailed, "no outerplanar construction landed within the bound");
    cert = check_anchor(std::move(cert));
    if (cfg_.verify_every_level || depth == 0) return verified_or_rescue(g, std::move(cert));
    return cert;
}

} // namespace ont
