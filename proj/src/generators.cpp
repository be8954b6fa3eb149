#include "ont/generators.hpp"

#include <algorithm>
#include <array>
#include <cstring>
#include <map>
#include <random>
#include <set>

#include "ont/canon.hpp"

namespace ont {

namespace {

void insert_after(std::vector<VertexId>& rot, VertexId where, VertexId w) {
    auto it = std::find(rot.begin(), rot.end(), where);
    rot.insert(it + 1, w);
}

void insert_before(std::vector<VertexId>& rot, VertexId where, VertexId w) {
    auto it = std::find(rot.begin(), rot.end(), where);
    rot.insert(it, w);
}

} // namespace

DiskBuilder DiskBuilder::triangle() {
    DiskBuilder b;
    b.rot_ = {{1, 2}, {2, 0}, {0, 1}};
    b.boundary_ = {0, 1, 2};
    b.faces_ = {{0, 1, 2}};
    return b;
}

VertexId DiskBuilder::split_face(int fi) {
    const auto [a, bb, c] = faces_[fi];
    const VertexId w = vertex_count();
    rot_.emplace_back();
    rot_.back() = {a, c, bb};
    insert_after(rot_[a], c, w);
    insert_after(rot_[bb], a, w);
    insert_after(rot_[c], bb, w);
    faces_[fi] = {a, bb, w};
    faces_.push_back({bb, c, w});
    faces_.push_back({c, a, w});
    return w;
}

VertexId DiskBuilder::glue_arc(int start, int k) {
    const int len = static_cast<int>(boundary_.size());
    if (k < 2 || k > len) fail(Errc::PreconditionFailed, "glue arc length out of range");
    std::vector<VertexId> arc(k);
    for (int i = 0; i < k; ++i) arc[i] = boundary_[(start + i) % len];
    const VertexId w = vertex_count();
    rot_.emplace_back(arc);

    insert_after(rot_[arc[0]], arc[1], w);
    for (int j = 1; j < k - 1; ++j) insert_after(rot_[arc[j]], arc[j + 1], w);
    insert_before(rot_[arc[k - 1]], arc[k - 2], w);
    for (int i = 0; i + 1 < k; ++i) faces_.push_back({arc[i + 1], arc[i], w});

    std::vector<VertexId> nb;
    nb.reserve(len - k + 3);
    nb.push_back(arc[0]);
    nb.push_back(w);
    for (int i = k - 1; i < len; ++i) nb.push_back(boundary_[(start + i) % len]);
    boundary_ = std::move(nb);
    return w;
}

PlaneGraph DiskBuilder::to_plane_graph() const { return PlaneGraph::build(rot_, boundary_); }

namespace {

uint64_t mix_seed(int n, uint64_t seed, double bias) {
    uint64_t bias_bits = 0;
    std::memcpy(&bias_bits, &bias, sizeof bias);
    uint64_t x = seed;
    x ^= 0x9E3779B97F4A7C15ull + static_cast<uint64_t>(n);
    x *= 0xBF58476D1CE4E5B9ull;
    x ^= bias_bits + (x >> 31);
    x *= 0x94D049BB133111EBull;
    return x ^ (x >> 33);
}

} // namespace

PlaneGraph random_near_triangulation(int n, uint64_t seed, double interior_bias) {
    if (n < 3) fail(Errc::PreconditionFailed, "need n >= 3");
    std::mt19937_64 rng(mix_seed(n, seed, interior_bias));
    DiskBuilder b = DiskBuilder::triangle();
    std::uniform_real_distribution<double> coin(0.0, 1.0);
    while (b.vertex_count() < n) {
        if (coin(rng) < interior_bias) {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(b.inner_faces().size()) - 1);
            b.split_face(pick(rng));
        } else {
            std::uniform_int_distribution<int> pick(0, static_cast<int>(b.boundary().size()) - 1);
            b.glue_arc(pick(rng), 2);
        }
    }
    return b.to_plane_graph();
}

PlaneGraph random_maximal_outerplanar(int n, uint64_t seed, bool fan) {
    if (n < 3) fail(Errc::PreconditionFailed, "need n >= 3");
    if (fan) {
        DiskBuilder b = DiskBuilder::triangle();
        while (b.vertex_count() < n) {
            // keep gluing onto the edge (0, last) so vertex 0 becomes the hub
            const auto& bd = b.boundary();
            int pos = -1;
            for (int i = 0; i < static_cast<int>(bd.size()); ++i)
                if (bd[i] == 0) pos = i;
            b.glue_arc(pos, 2);
        }
        return b.to_plane_graph();
    }
    std::mt19937_64 rng(mix_seed(n, seed, -1.0));
    DiskBuilder b = DiskBuilder::triangle();
    while (b.vertex_count() < n) {
        std::uniform_int_distribution<int> pick(0, static_cast<int>(b.boundary().size()) - 1);
        b.glue_arc(pick(rng), 2);
    }
    return b.to_plane_graph();
}

PlaneGraph snake(int n) {
    if (n < 3) fail(Errc::PreconditionFailed, "need n >= 3");
    DiskBuilder b = DiskBuilder::triangle();
    for (VertexId v = 3; v < n; ++v) {
        const auto& bd = b.boundary();
        const int len = static_cast<int>(bd.size());
        int pos = -1;
        for (int i = 0; i < len; ++i) {
            VertexId a = bd[i], c = bd[(i + 1) % len];
            if ((a == v - 2 && c == v - 1) || (a == v - 1 && c == v - 2)) pos = i;
        }
        b.glue_arc(pos, 2);
    }
    return b.to_plane_graph();
}

PlaneGraph tight_family(int n) {
    if (n < 5) fail(Errc::PreconditionFailed, "tight family starts at n = 5");
    return snake(n);
}

PlaneGraph search_tight_family(int n, const std::function<bool(const PlaneGraph&)>& attains, int max_tries) {
    PlaneGraph s = snake(n);
    if (attains(s)) return s;
    for (int t = 0; t < max_tries; ++t) {
        PlaneGraph g = random_maximal_outerplanar(n, 0xABCD0000u + static_cast<uint64_t>(t));
        if (attains(g)) return g;
    }
    fail(Errc::Infeasible, "no tight maximal outerplanar graph found within budget");
}

std::vector<PlaneGraph> enumerate_near_triangulations(int n) {
    if (n < 3) return {};
    // level sets of embedded classes, grown by boundary-arc gluing
    std::vector<DiskBuilder> level_builders{DiskBuilder::triangle()};
    for (int size = 3; size < n; ++size) {
        std::set<std::string> seen;
        std::vector<DiskBuilder> next;
        for (const DiskBuilder& b : level_builders) {
            const int len = static_cast<int>(b.boundary().size());
            for (int start = 0; start < len; ++start) {
                for (int k = 2; k <= len; ++k) {
                    DiskBuilder nb = b;
                    nb.glue_arc(start, k);
                    PlaneGraph g = nb.to_plane_graph();
                    if (seen.insert(embedded_canonical_form(g)).second) next.push_back(std::move(nb));
                }
            }
        }
        level_builders = std::move(next);
    }
    // project to abstract classes, deterministic order
    std::map<std::string, PlaneGraph> by_canon;
    for (const DiskBuilder& b : level_builders) {
        PlaneGraph g = b.to_plane_graph();
        std::string key = canonical_form(g);
        by_canon.emplace(std::move(key), std::move(g));
    }
    std::vector<PlaneGraph> out;
    out.reserve(by_canon.size());
    for (auto& [k, g] : by_canon) out.push_back(std::move(g));
    return out;
}

std::vector<EnumerationManifest> enumeration_manifest(int n_max) {
    std::vector<EnumerationManifest> out;
    std::vector<DiskBuilder> level{DiskBuilder::triangle()};
    {
        EnumerationManifest m;
        m.n = 3;
        m.embedded_classes = 1;
        m.abstract_classes = 1;
        if (n_max >= 3) out.push_back(m);
    }
    for (int size = 4; size <= n_max; ++size) {
        std::set<std::string> seen;
        std::vector<DiskBuilder> next;
        for (const DiskBuilder& b : level) {
            const int len = static_cast<int>(b.boundary().size());
            for (int start = 0; start < len; ++start)
                for (int k = 2; k <= len; ++k) {
                    DiskBuilder nb = b;
                    nb.glue_arc(start, k);
                    PlaneGraph g = nb.to_plane_graph();
                    if (seen.insert(embedded_canonical_form(g)).second) next.push_back(std::move(nb));
                }
        }
        level = std::move(next);
        std::set<std::string> abstract_seen;
        for (const DiskBuilder& b : level) abstract_seen.insert(canonical_form(b.to_plane_graph()));
        EnumerationManifest m;
        m.n = size;
        m.embedded_classes = static_cast<int>(level.size());
        m.abstract_classes = static_cast<int>(abstract_seen.size());
        out.push_back(m);
    }
    return out;
}

} // namespace ont
