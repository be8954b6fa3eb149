#include "ont/exact.hpp"

#include <algorithm>
#include <array>
#include <chrono>
#include <cstring>
#include <functional>
#include <numeric>

#include "ont/canon.hpp"
#include "ont/generators.hpp"

#ifdef _OPENMP
#include <omp.h>
#endif

namespace ont {

namespace {

constexpr int kMaxN = 64;
constexpr uint8_t kFar = 0xFF;

using Clock = std::chrono::steady_clock;

struct EdgeList {
    std::vector<std::pair<VertexId, VertexId>> edges;
    std::vector<std::vector<int>> incident;  // edge ids per vertex
};

// Brandes accumulation, unweighted; returns per-edge betweenness.
std::vector<double> edge_betweenness(const std::vector<std::vector<VertexId>>& adj, const EdgeList& el) {
    const int n = static_cast<int>(adj.size());
    std::vector<double> bc(el.edges.size(), 0.0);
    std::vector<int> dist(n), sigma(n), order;
    std::vector<double> delta(n);
    std::vector<std::vector<int>> preds(n);
    for (int s = 0; s < n; ++s) {
        order.clear();
        std::fill(dist.begin(), dist.end(), -1);
        std::fill(sigma.begin(), sigma.end(), 0);
        std::fill(delta.begin(), delta.end(), 0.0);
        for (auto& p : preds) p.clear();
        dist[s] = 0;
        sigma[s] = 1;
        std::vector<int> q{s};
        for (size_t h = 0; h < q.size(); ++h) {
            int v = q[h];
            order.push_back(v);
            for (VertexId w : adj[v]) {
                if (dist[w] < 0) {
                    dist[w] = dist[v] + 1;
                    q.push_back(w);
                }
                if (dist[w] == dist[v] + 1) {
                    sigma[w] += sigma[v];
                    preds[w].push_back(v);
                }
            }
        }
        for (auto it = order.rbegin(); it != order.rend(); ++it) {
            int w = *it;
            for (int v : preds[w]) {
                double c = (static_cast<double>(sigma[v]) / sigma[w]) * (1.0 + delta[w]);
                delta[v] += c;
                // find the edge id of (v,w)
                for (int e : el.incident[v]) {
                    const auto& [a, b] = el.edges[e];
                    if ((a == v && b == w) || (a == w && b == v)) {
                        bc[e] += c;
                        break;
                    }
                }
            }
        }
    }
    return bc;
}

struct Searcher {
    const std::vector<std::vector<VertexId>>* adj = nullptr;
    EdgeList el;
    std::vector<int> edge_order;      // edge ids, branching order
    std::vector<int> order_of_edge;   // inverse
    int n = 0, m = 0;

    // search options
    std::optional<VertexId> anchor;
    int anchor_bound = 0;
    std::optional<int> target;
    uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
    double time_limit = std::numeric_limits<double>::infinity();
    Clock::time_point t0;

    // shared (atomically read/written in parallel mode)
    int* shared_best = nullptr;

    // per-worker state
    std::vector<int8_t> dir;  // 0 unset, 1 forward (as stored), 2 reversed
    std::vector<uint8_t> dist;  // n*n optimistic lower bounds
    std::vector<int> out_assigned, in_assigned, unassigned_cnt;
    uint64_t nodes = 0;
    int best_val = std::numeric_limits<int>::max();
    std::vector<Arc> best_arcs;
    bool stop = false;
    bool budget_hit = false;
    bool target_stop = false;

    uint8_t& D(int i, int j) { return dist[i * n + j]; }

    bool allows(int e, VertexId from, VertexId to) const {
        const auto& [a, b] = el.edges[e];
        if (a == from && b == to) return dir[e] != 2;
        if (a == to && b == from) return dir[e] != 1;
        return false;
    }

    void bfs_row(VertexId s) {
        std::array<int, kMaxN> q;
        int qh = 0, qt = 0;
        for (int j = 0; j < n; ++j) D(s, j) = kFar;
        D(s, s) = 0;
        q[qt++] = s;
        while (qh < qt) {
            VertexId v = q[qh++];
            for (int e : el.incident[v]) {
                const auto& [a, b] = el.edges[e];
                VertexId w = (a == v) ? b : a;
                if (D(s, w) != kFar || !allows(e, v, w)) continue;
                D(s, w) = static_cast<uint8_t>(D(s, v) + 1);
                q[qt++] = w;
            }
        }
    }

    void bfs_all() {
        for (int v = 0; v < n; ++v) bfs_row(v);
    }

    int current_limit() const {
        int lim = best_val;
        if (shared_best != nullptr) {
#ifdef _OPENMP
#pragma omp atomic read
#endif
            lim = *shared_best;
            lim = std::min(lim, best_val);
        }
        return lim;
    }

    // true if the node can still beat the limit and satisfy the anchor
    bool bounds_ok() {
        const int lim = current_limit();
        for (int i = 0; i < n; ++i)
            for (int j = 0; j < n; ++j) {
                if (D(i, j) == kFar) return false;  // even bidirectional unreachable
                if (D(i, j) >= lim) return false;
            }
        if (anchor) {
            for (int i = 0; i < n; ++i)
                if (D(i, *anchor) > anchor_bound || D(*anchor, i) > anchor_bound) return false;
        }
        return true;
    }

    bool degree_ok(VertexId v) const {
        if (unassigned_cnt[v] > 0) return true;
        return out_assigned[v] > 0 && in_assigned[v] > 0;
    }

    struct Trail {
        std::vector<int> set_edges;
    };

    // assigns edge e to direction d, updating degree counters
    void assign(int e, int8_t d, Trail& tr) {
        dir[e] = d;
        const auto& [a, b] = el.edges[e];
        VertexId tail = (d == 1) ? a : b, head = (d == 1) ? b : a;
        ++out_assigned[tail];
        ++in_assigned[head];
        --unassigned_cnt[a];
        --unassigned_cnt[b];
        tr.set_edges.push_back(e);
    }

    void undo(Trail& tr) {
        for (auto it = tr.set_edges.rbegin(); it != tr.set_edges.rend(); ++it) {
            int e = *it;
            const auto& [a, b] = el.edges[e];
            VertexId tail = (dir[e] == 1) ? a : b, head = (dir[e] == 1) ? b : a;
            --out_assigned[tail];
            --in_assigned[head];
            ++unassigned_cnt[a];
            ++unassigned_cnt[b];
            dir[e] = 0;
        }
    }

    // forces directions of last free edges at starved vertices; false = dead end
    bool propagate(Trail& tr) {
        bool changed = true;
        while (changed) {
            changed = false;
            for (int v = 0; v < n; ++v) {
                if (!degree_ok(v)) return false;
                if (unassigned_cnt[v] == 1 && (out_assigned[v] == 0 || in_assigned[v] == 0)) {
                    int free_e = -1;
                    for (int e : el.incident[v])
                        if (dir[e] == 0) free_e = e;
                    const auto& [a, b] = el.edges[free_e];
                    int8_t d;
                    if (out_assigned[v] == 0)
                        d = (a == v) ? 1 : 2;  // v must shoot out
                    else
                        d = (a == v) ? 2 : 1;  // v must receive
                    assign(free_e, d, tr);
                    changed = true;
                }
            }
        }
        return true;
    }

    void eval_leaf() {
        bfs_all();
        const int lim = current_limit();
        int diam = 0;
        for (int i = 0; i < n && diam < kFar; ++i)
            for (int j = 0; j < n; ++j) {
                if (D(i, j) == kFar) return;  // not strong
                diam = std::max(diam, static_cast<int>(D(i, j)));
            }
        if (anchor) {
            for (int i = 0; i < n; ++i)
                if (D(i, *anchor) > anchor_bound || D(*anchor, i) > anchor_bound) return;
        }
        if (diam < lim && diam < best_val) {
            best_val = diam;
            best_arcs.clear();
            for (int e = 0; e < m; ++e) {
                const auto& [a, b] = el.edges[e];
                best_arcs.emplace_back(dir[e] == 1 ? Arc{a, b} : Arc{b, a});
            }
            std::sort(best_arcs.begin(), best_arcs.end());
            if (shared_best != nullptr) {
#ifdef _OPENMP
#pragma omp critical(ont_exact_best)
#endif
                {
                    if (best_val < *shared_best) *shared_best = best_val;
                }
            }
            if (target && best_val <= *target) {
                stop = true;
                target_stop = true;
            }
        }
    }

    void dfs(int depth) {
        if (stop) return;
        ++nodes;
        if ((nodes & 1023u) == 0) {
            if (nodes > max_nodes ||
                std::chrono::duration<double>(Clock::now() - t0).count() > time_limit) {
                budget_hit = true;
                stop = true;
                return;
            }
        }
        if ((nodes & 31u) == 0) bfs_all();
        if (!bounds_ok()) return;

        int e = -1;
        for (int i = 0; i < m; ++i)
            if (dir[edge_order[i]] == 0) {
                e = edge_order[i];
                break;
            }
        if (e == -1) {
            eval_leaf();
            return;
        }
        const auto& [a, b] = el.edges[e];
        // entries are lower bounds only while arcs are being removed, so the
        // matrix must be rolled back alongside the trail
        const std::vector<uint8_t> saved = dist;
        for (int8_t d : {int8_t{1}, int8_t{2}}) {
            Trail tr;
            assign(e, d, tr);
            if (propagate(tr)) {
                bfs_row(a);
                bfs_row(b);
                dfs(depth + 1);
            }
            undo(tr);
            dist = saved;
            if (stop) return;
        }
    }
};

EdgeList make_edges(const std::vector<std::vector<VertexId>>& adj) {
    EdgeList el;
    const int n = static_cast<int>(adj.size());
    el.incident.assign(n, {});
    for (int v = 0; v < n; ++v)
        for (VertexId w : adj[v])
            if (v < w) {
                el.incident[v].push_back(static_cast<int>(el.edges.size()));
                el.incident[w].push_back(static_cast<int>(el.edges.size()));
                el.edges.emplace_back(v, w);
            }
    return el;
}

} // namespace

bool has_bridge(const std::vector<std::vector<VertexId>>& adj) {
    const int n = static_cast<int>(adj.size());
    std::vector<int> disc(n, -1), low(n, 0), parent(n, -1);
    int timer = 0;
    bool found = false;
    std::function<void(int)> go = [&](int v) {
        disc[v] = low[v] = timer++;
        bool skipped_parent = false;
        for (VertexId w : adj[v]) {
            if (disc[w] == -1) {
                parent[w] = v;
                go(w);
                low[v] = std::min(low[v], low[w]);
                if (low[w] > disc[v]) found = true;
            } else if (w != parent[v] || skipped_parent) {
                low[v] = std::min(low[v], disc[w]);
            } else {
                skipped_parent = true;  // parallel edges do not exist; first parent edge ignored
            }
        }
    };
    for (int v = 0; v < n; ++v)
        if (disc[v] == -1) go(v);
    return found;
}

ExactResult oriented_diameter_exact(const std::vector<std::vector<VertexId>>& adj, const ExactOptions& opts) {
    const int n = static_cast<int>(adj.size());
    if (n > kMaxN) fail(Errc::PreconditionFailed, "exact solver supports up to 64 vertices");
    if (has_bridge(adj)) fail(Errc::HasBridge, "graph has a bridge, no strong orientation exists");

    Searcher base;
    base.adj = &adj;
    base.el = make_edges(adj);
    base.n = n;
    base.m = static_cast<int>(base.el.edges.size());
    base.anchor = opts.anchor;
    base.anchor_bound = opts.anchor_bound;
    base.target = opts.budget.target_bound;
    base.max_nodes = opts.budget.max_nodes;
    base.time_limit = opts.budget.time_limit_secs;
    base.t0 = Clock::now();
    base.dir.assign(base.m, 0);
    base.dist.assign(static_cast<size_t>(n) * n, 0);
    base.out_assigned.assign(n, 0);
    base.in_assigned.assign(n, 0);
    base.unassigned_cnt.assign(n, 0);
    for (int v = 0; v < n; ++v) base.unassigned_cnt[v] = static_cast<int>(adj[v].size());
    if (opts.incumbent_limit) base.best_val = *opts.incumbent_limit;

    // branching order: descending betweenness, ties by edge id
    auto bc = edge_betweenness(adj, base.el);
    base.edge_order.resize(base.m);
    std::iota(base.edge_order.begin(), base.edge_order.end(), 0);
    std::stable_sort(base.edge_order.begin(), base.edge_order.end(),
                     [&](int x, int y) { return bc[x] > bc[y]; });
    base.order_of_edge.assign(base.m, 0);
    for (int i = 0; i < base.m; ++i) base.order_of_edge[base.edge_order[i]] = i;

    const bool had_limit = opts.incumbent_limit.has_value();
    const int limit_start = base.best_val;

    auto run_sequential = [&](Searcher& s) {
        // reversal symmetry: pin the first edge
        Searcher::Trail tr;
        s.assign(s.edge_order[0], 1, tr);
        if (s.propagate(tr)) {
            s.bfs_all();
            s.dfs(1);
        }
        s.undo(tr);
    };

#ifdef _OPENMP
    if (opts.parallel && base.m >= 8) {
        // expand the first few branching levels, then search subtrees in parallel
        const int split_depth = std::min(6, base.m - 2);
        std::vector<std::vector<int8_t>> seeds;  // dir vectors
        std::function<void(Searcher&, int)> expand = [&](Searcher& s, int depth) {
            int e = -1;
            for (int i = 0; i < s.m; ++i)
                if (s.dir[s.edge_order[i]] == 0) {
                    e = s.edge_order[i];
                    break;
                }
            if (depth >= split_depth || e == -1) {
                seeds.push_back(s.dir);
                return;
            }
            for (int8_t d : {int8_t{1}, int8_t{2}}) {
                Searcher::Trail tr;
                s.assign(e, d, tr);
                if (s.propagate(tr)) expand(s, depth + 1);
                s.undo(tr);
            }
        };
        {
            Searcher s0 = base;
            Searcher::Trail tr;
            s0.assign(s0.edge_order[0], 1, tr);
            if (s0.propagate(tr)) expand(s0, 1);
            s0.undo(tr);
        }
        int shared_best = base.best_val;
        std::vector<Searcher> workers;
        uint64_t total_nodes = 0;
        bool any_budget = false;
        int nthreads = 1;
#pragma omp parallel
        {
#pragma omp single
            nthreads = omp_get_num_threads();
        }
        workers.assign(nthreads, base);
        for (auto& w : workers) w.shared_best = &shared_best;
#pragma omp parallel for schedule(dynamic, 1)
        for (size_t i = 0; i < seeds.size(); ++i) {
            Searcher& s = workers[omp_get_thread_num()];
            // install seed
            Searcher::Trail tr;
            for (int e = 0; e < s.m; ++e)
                if (seeds[i][e] != 0) s.assign(e, seeds[i][e], tr);
            s.bfs_all();
            if (s.bounds_ok()) s.dfs(split_depth);
            s.undo(tr);
        }
        ExactResult res;
        res.witness = Orientation();
        int best = std::numeric_limits<int>::max();
        std::vector<Arc> best_arcs;
        bool any_target = false;
        for (auto& w : workers) {
            total_nodes += w.nodes;
            any_budget = any_budget || w.budget_hit;
            any_target = any_target || w.target_stop;
            if (w.best_val < best || (w.best_val == best && !w.best_arcs.empty() &&
                                      (best_arcs.empty() || w.best_arcs < best_arcs))) {
                best = w.best_val;
                best_arcs = w.best_arcs;
            }
        }
        res.nodes = total_nodes;
        res.complete = !any_budget && !any_target;
        if (!best_arcs.empty()) {
            res.value = best;
            res.witness = Orientation(n, best_arcs);
            res.status = (res.complete || any_target) ? SolveStatus::Optimal : SolveStatus::BudgetExhausted;
        } else {
            res.status = any_budget ? SolveStatus::BudgetExhausted : SolveStatus::Infeasible;
        }
        (void)had_limit;
        (void)limit_start;
        return res;
    }
#endif

    Searcher s = base;
    run_sequential(s);
    ExactResult res;
    res.nodes = s.nodes;
    res.complete = !s.budget_hit && !s.target_stop;
    if (!s.best_arcs.empty()) {
        res.value = s.best_val;
        res.witness = Orientation(n, s.best_arcs);
        res.status = (res.complete || s.target_stop) ? SolveStatus::Optimal : SolveStatus::BudgetExhausted;
    } else {
        res.status = s.budget_hit ? SolveStatus::BudgetExhausted : SolveStatus::Infeasible;
    }
    (void)had_limit;
    (void)limit_start;
    return res;
}

ExactResult oriented_diameter_exact(const PlaneGraph& g, const ExactOptions& opts) {
    return oriented_diameter_exact(g.rotations(), opts);
}

ExactResult anchored_exact(const PlaneGraph& g, VertexId v, int anchor_bound, const SearchBudget& budget) {
    ExactOptions opts;
    opts.budget = budget;
    opts.anchor = v;
    opts.anchor_bound = anchor_bound;
    return oriented_diameter_exact(g, opts);
}

std::vector<CensusRow> census(int n_max, const SearchBudget& per_instance, int jobs) {
    std::vector<CensusRow> rows;
    int next_id = 0;
    for (int n = 3; n <= n_max; ++n) {
        std::vector<PlaneGraph> classes = enumerate_near_triangulations(n);
        std::vector<CensusRow> level(classes.size());
#ifdef _OPENMP
#pragma omp parallel for schedule(dynamic, 1) num_threads(std::max(1, jobs)) if (jobs > 1)
#endif
        for (size_t i = 0; i < classes.size(); ++i) {
            ExactOptions opts;
            opts.budget = per_instance;
            ExactResult r = oriented_diameter_exact(classes[i], opts);
            CensusRow row;
            row.n = n;
            row.m = classes[i].edge_count();
            row.bound = half_ceil(n);
            row.budget_exhausted = (r.status == SolveStatus::BudgetExhausted);
            row.oriented_diameter = r.value.value_or(-1);
            row.exception = r.value.has_value() && !row.budget_exhausted && *r.value > row.bound;
            row.graph = classes[i];
            row.witness = r.witness;
            level[i] = std::move(row);
        }
        for (auto& row : level) {
            row.id = next_id++;
            rows.push_back(std::move(row));
        }
    }
    return rows;
}

} // namespace ont
