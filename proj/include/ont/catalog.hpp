#pragma once

#include <iosfwd>
#include <string>
#include <vector>

#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"

namespace ont {

/// One of the seven exception graphs, defined extensionally by the census.
struct CatalogEntry {
    std::string name;  // K4minus | K4 | W5 | G6_1 | G6_2 | G6_3 | G8_1
    PlaneGraph graph;
    std::string canonical;  // abstract canonical form
    int exact_od = 0;
    Orientation optimal;                              // attains exact_od
    std::vector<std::pair<VertexId, int>> anchors;    // per-vertex anchored eccentricities
};

class Catalog {
public:
    Catalog() = default;

    /// Runs census(8), keeps the exceptions, names them and computes anchors.
    /// Throws CensusMismatch unless exactly {2 at n=4, 4 at n=6 (W5 among
    /// them), 1 at n=8} show up.
    static Catalog bootstrap(int jobs = 1);

    static Catalog load(std::istream& in);
    void save(std::ostream& out) const;

    /// Loads from `path` when valid, else bootstraps and writes the cache.
    static Catalog load_or_bootstrap(const std::string& path, int jobs = 1);

    const std::vector<CatalogEntry>& entries() const { return entries_; }
    const CatalogEntry* match(const PlaneGraph& g) const;
    const CatalogEntry* by_name(const std::string& name) const;

    /// The stored optimal orientation carried onto an isomorphic copy.
    Orientation mapped_optimal(const CatalogEntry& entry, const PlaneGraph& g) const;

private:
    void validate() const;
    std::vector<CatalogEntry> entries_;
};

} // namespace ont
