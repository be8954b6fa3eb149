#include "ont/canon.hpp"

#include <algorithm>
#include <functional>
#include <map>
#include <numeric>

namespace ont {

namespace {

// One round of 1-dimensional color refinement; returns true when stable.
bool refine_once(const std::vector<std::vector<VertexId>>& adj, std::vector<int>& color) {
    const int n = static_cast<int>(adj.size());
    std::vector<std::pair<std::vector<int>, int>> sig(n);
    for (int v = 0; v < n; ++v) {
        std::vector<int> s;
        s.reserve(adj[v].size() + 1);
        s.push_back(color[v]);
        std::vector<int> nb;
        for (VertexId w : adj[v]) nb.push_back(color[w]);
        std::sort(nb.begin(), nb.end());
        s.insert(s.end(), nb.begin(), nb.end());
        sig[v] = {std::move(s), v};
    }
    std::vector<std::pair<std::vector<int>, int>> sorted = sig;
    std::sort(sorted.begin(), sorted.end());
    std::map<std::vector<int>, int> rank;
    for (const auto& [s, v] : sorted)
        if (!rank.count(s)) {
            int r = static_cast<int>(rank.size());
            rank[s] = r;
        }
    bool stable = true;
    int old_classes = *std::max_element(color.begin(), color.end()) + 1;
    for (int v = 0; v < n; ++v) color[v] = rank[sig[v].first];
    int new_classes = *std::max_element(color.begin(), color.end()) + 1;
    if (new_classes != old_classes) stable = false;
    return stable;
}

void refine(const std::vector<std::vector<VertexId>>& adj, std::vector<int>& color) {
    while (!refine_once(adj, color)) {
    }
}

std::string matrix_string(const std::vector<std::vector<VertexId>>& adj, const std::vector<int>& perm_inv) {
    // perm_inv[new_label] = old vertex
    const int n = static_cast<int>(adj.size());
    std::vector<std::vector<char>> mat(n, std::vector<char>(n, 0));
    std::vector<int> new_of(n);
    for (int i = 0; i < n; ++i) new_of[perm_inv[i]] = i;
    for (int v = 0; v < n; ++v)
        for (VertexId w : adj[v]) mat[new_of[v]][new_of[w]] = 1;
    std::string s = std::to_string(n) + ":";
    for (int i = 0; i < n; ++i)
        for (int j = i + 1; j < n; ++j) s.push_back(mat[i][j] ? '1' : '0');
    return s;
}

void canon_search(const std::vector<std::vector<VertexId>>& adj, std::vector<int> color, std::string& best) {
    const int n = static_cast<int>(adj.size());
    refine(adj, color);
    // find first smallest non-singleton cell
    std::vector<std::vector<int>> cells(n);
    for (int v = 0; v < n; ++v) cells[color[v]].push_back(v);
    int target = -1;
    for (int c = 0; c < n; ++c)
        if (cells[c].size() > 1) {
            target = c;
            break;
        }
    if (target == -1) {
        std::vector<int> perm_inv(n);
        for (int v = 0; v < n; ++v) perm_inv[color[v]] = v;
        std::string s = matrix_string(adj, perm_inv);
        if (best.empty() || s < best) best = s;
        return;
    }
    for (int v : cells[target]) {
        std::vector<int> c2 = color;
        // individualize v in front of its cell
        for (int w = 0; w < n; ++w)
            if (c2[w] >= target && w != v) ++c2[w];
        canon_search(adj, std::move(c2), best);
    }
}

} // namespace

std::string canonical_form(const std::vector<std::vector<VertexId>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> color(n, 0);
    for (int v = 0; v < n; ++v) color[v] = static_cast<int>(adj[v].size());
    // normalize to dense ranks
    {
        std::vector<int> vals = color;
        std::sort(vals.begin(), vals.end());
        vals.erase(std::unique(vals.begin(), vals.end()), vals.end());
        for (int v = 0; v < n; ++v)
            color[v] = static_cast<int>(std::lower_bound(vals.begin(), vals.end(), color[v]) - vals.begin());
    }
    std::string best;
    canon_search(adj, std::move(color), best);
    return best;
}

std::string canonical_form(const PlaneGraph& g) { return canonical_form(g.rotations()); }

bool are_isomorphic(const PlaneGraph& a, const PlaneGraph& b) {
    if (a.vertex_count() != b.vertex_count() || a.edge_count() != b.edge_count()) return false;
    return canonical_form(a) == canonical_form(b);
}

std::string embedded_canonical_form(const PlaneGraph& g) {
    const int n = g.vertex_count();
    std::vector<int> best;
    auto encode = [&](VertexId su, VertexId sv, bool mirrored) {
        std::vector<int> label(n, -1), anchor(n, -1), order;
        order.reserve(n);
        label[su] = 0;
        anchor[su] = sv;
        order.push_back(su);
        int next = 1;
        std::vector<int> out;
        for (size_t idx = 0; idx < order.size(); ++idx) {
            VertexId x = order[idx];
            const auto& rot = g.rotation(x);
            const int d = static_cast<int>(rot.size());
            int pos = static_cast<int>(std::find(rot.begin(), rot.end(), anchor[x]) - rot.begin());
            for (int i = 0; i < d; ++i) {
                VertexId w = mirrored ? rot[((pos - i) % d + d) % d] : rot[(pos + i) % d];
                if (label[w] == -1) {
                    label[w] = next++;
                    anchor[w] = x;
                    order.push_back(w);
                }
                out.push_back(label[w]);
            }
            out.push_back(-1);
        }
        return out;
    };
    for (const Dart& d : g.face_darts(g.outer_face())) {
        for (bool mirrored : {false, true}) {
            auto enc = mirrored ? encode(d.head, d.tail, true) : encode(d.tail, d.head, false);
            if (best.empty() || enc < best) best = std::move(enc);
        }
    }
    std::string s = std::to_string(n) + ";";
    for (int x : best) {
        s += std::to_string(x);
        s.push_back(',');
    }
    return s;
}

std::vector<VertexId> find_isomorphism(const std::vector<std::vector<VertexId>>& a,
                                       const std::vector<std::vector<VertexId>>& b) {
    const int n = static_cast<int>(a.size());
    if (static_cast<int>(b.size()) != n) return {};
    std::vector<std::vector<char>> bm(n, std::vector<char>(n, 0));
    for (int v = 0; v < n; ++v)
        for (VertexId w : b[v]) bm[v][w] = 1;

    std::vector<int> order(n);
    std::iota(order.begin(), order.end(), 0);
    std::sort(order.begin(), order.end(), [&](int x, int y) { return a[x].size() > a[y].size(); });

    std::vector<VertexId> map(n, -1);
    std::vector<char> used(n, 0);
    std::function<bool(int)> go = [&](int idx) -> bool {
        if (idx == n) return true;
        int v = order[idx];
        for (int cand = 0; cand < n; ++cand) {
            if (used[cand] || a[v].size() != b[cand].size()) continue;
            bool ok = true;
            for (VertexId w : a[v])
                if (map[w] != -1 && !bm[cand][map[w]]) {
                    ok = false;
                    break;
                }
            if (ok) {
                // every already-mapped neighbor of cand in b must be hit too
                int mapped_nb = 0;
                for (VertexId w : a[v])
                    if (map[w] != -1) ++mapped_nb;
                int cand_mapped_nb = 0;
                for (VertexId w : b[cand])
                    if (std::find(map.begin(), map.end(), w) != map.end()) ++cand_mapped_nb;
                if (mapped_nb != cand_mapped_nb) ok = false;
            }
            if (!ok) continue;
            map[v] = cand;
            used[cand] = 1;
            if (go(idx + 1)) return true;
            map[v] = -1;
            used[cand] = 0;
        }
        return false;
    };
    if (!go(0)) return {};
    return map;
}

} // namespace ont
