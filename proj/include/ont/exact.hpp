#pragma once

#include <cstdint>
#include <limits>
#include <optional>

#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"

namespace ont {

struct SearchBudget {
    uint64_t max_nodes = std::numeric_limits<uint64_t>::max();
    double time_limit_secs = std::numeric_limits<double>::infinity();
    std::optional<int> target_bound;  // stop as soon as an orientation this good is found
};

enum class SolveStatus {
    Optimal,          // search space exhausted (or target reached); value is exact/sufficient
    BudgetExhausted,  // best incumbent returned, optimality unproven
    Infeasible,       // no strong orientation satisfies the constraints
};

struct ExactResult {
    SolveStatus status = SolveStatus::Infeasible;
    std::optional<int> value;
    Orientation witness;
    uint64_t nodes = 0;
    bool complete = false;  // true iff the whole space was pruned/searched
};

struct ExactOptions {
    SearchBudget budget;
    std::optional<VertexId> anchor;      // require anchored_ecc(anchor) <= anchor_bound
    int anchor_bound = 0;
    std::optional<int> incumbent_limit;  // search only orientations with diameter < this
    bool parallel = false;
};

/// Minimum diameter over strong orientations, by branch and bound over edge
/// directions: edges in descending betweenness order, optimistic distances
/// with unassigned edges bidirectional, reversal symmetry broken by pinning
/// the first edge. Throws HasBridge when no strong orientation exists.
ExactResult oriented_diameter_exact(const PlaneGraph& g, const ExactOptions& opts = {});
ExactResult oriented_diameter_exact(const std::vector<std::vector<VertexId>>& adj, const ExactOptions& opts = {});

/// Lemma-style anchored variant: minimum diameter among strong orientations
/// with anchored eccentricity at v at most anchor_bound.
ExactResult anchored_exact(const PlaneGraph& g, VertexId v, int anchor_bound, const SearchBudget& budget = {});

struct CensusRow {
    int id = 0;
    int n = 0;
    int m = 0;
    int oriented_diameter = 0;
    int bound = 0;
    bool exception = false;
    bool budget_exhausted = false;
    PlaneGraph graph;
    Orientation witness;
};

/// Exact oriented diameters of every near-triangulation class with n <= n_max.
std::vector<CensusRow> census(int n_max, const SearchBudget& per_instance = {}, int jobs = 1);

bool has_bridge(const std::vector<std::vector<VertexId>>& adj);

} // namespace ont
