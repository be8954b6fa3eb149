#pragma once

#include <optional>
#include <string>
#include <vector>

#include "ont/catalog.hpp"
#include "ont/exact.hpp"
#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"
#include "ont/structure.hpp"

namespace ont {

struct EngineConfig {
    int base_case_max_n = 8;  // induction floor; must stay >= 8
    SearchBudget exact_budget;
    bool verify_every_level = true;
    int fallback_exact_max_n = 12;   // exact rescue after a verification failure
    int outerplanar_exact_max_n = 14;  // small maximal outerplanar graphs go straight to search
};

/// The constructive engine: orients 2-connected near triangulations within
/// ceil(n/2) (catalog exceptions aside) and certifies every output by
/// recomputation.
class Engine {
public:
    explicit Engine(Catalog catalog, EngineConfig cfg = {});

    Certificate orient(const PlaneGraph& g) const;

    /// Maximal outerplanar graphs; when `anchor` is set the certificate
    /// additionally satisfies anchored_ecc(anchor) <= ceil(n/2).
    Certificate orient_outerplanar(const PlaneGraph& g, std::optional<VertexId> anchor = {}) const;

    /// The three decomposition branches; `rep` must carry the decomposition.
    Certificate orient_case1(const PlaneGraph& g, const StructureReport& rep) const;
    Certificate orient_case2(const PlaneGraph& g, const StructureReport& rep) const;
    Certificate orient_case3(const PlaneGraph& g, const StructureReport& rep) const;

    const Catalog& catalog() const { return catalog_; }
    const EngineConfig& config() const { return cfg_; }

private:
    Certificate orient_impl(const PlaneGraph& g, int depth) const;
    Certificate orient_stripped(const PlaneGraph& g, int depth) const;
    Certificate branch_four(const PlaneGraph& g, const StructureReport& rep, int depth) const;
    Certificate case1_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const;
    Certificate case2_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const;
    Certificate case3_impl(const PlaneGraph& g, const StructureReport& rep, int depth) const;
    Certificate outerplanar_impl(const PlaneGraph& g, std::optional<VertexId> anchor, int depth) const;

    Certificate exact_certificate(const PlaneGraph& g, std::vector<std::string> trace) const;
    Certificate finish(const PlaneGraph& g, Orientation d, std::vector<std::string> trace) const;
    Certificate extend_reduction(const PlaneGraph& g, const Reduction& red, const Certificate& inner,
                                 std::vector<std::string> trace) const;
    Certificate verified_or_rescue(const PlaneGraph& g, Certificate cert) const;

    Orientation serpent_orientation(const PlaneGraph& g, std::optional<VertexId> anchor) const;

    Catalog catalog_;
    EngineConfig cfg_;
};

/// Lifts an orientation of sub.graph into the parent id space.
Orientation lift_arcs(const Subgraph& sub, const Orientation& d, int parent_n);

} // namespace ont
