#include "ont/catalog.hpp"

#include <algorithm>
#include <fstream>
#include <map>
#include <sstream>

#include "ont/canon.hpp"
#include "ont/exact.hpp"
#include "ont/io.hpp"

namespace ont {

namespace {

bool outerplanar_embedding(const PlaneGraph& g) { return g.interior_vertices().empty(); }

bool is_wheel(const PlaneGraph& g) {
    // hub adjacent to all others, rim a cycle of degree-3 vertices
    const int n = g.vertex_count();
    int hubs = 0;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) == n - 1) ++hubs;
    if (hubs != 1 || n < 5) return false;
    for (VertexId v = 0; v < n; ++v)
        if (g.degree(v) != n - 1 && g.degree(v) != 3) return false;
    return true;
}

} // namespace

void Catalog::validate() const {
    if (entries_.size() != 7) fail(Errc::CensusMismatch, "expected 7 exception entries, found " + std::to_string(entries_.size()));
    int n4 = 0, n6 = 0, n8 = 0, wheels = 0;
    for (const auto& e : entries_) {
        const int n = e.graph.vertex_count();
        if (n == 4) ++n4;
        if (n == 6) ++n6;
        if (n == 8) ++n8;
        if (is_wheel(e.graph)) ++wheels;
        if (e.exact_od != half_ceil(n) + 1)
            fail(Errc::CensusMismatch, "entry " + e.name + " has od " + std::to_string(e.exact_od) +
                                           ", expected ceil(n/2)+1");
        if (!e.optimal.covers_exactly(e.graph)) fail(Errc::CensusMismatch, "entry " + e.name + " orientation mismatch");
        auto d = diameter(e.optimal);
        if (!d || *d != e.exact_od) fail(Errc::CensusMismatch, "entry " + e.name + " stored orientation does not attain od");
        for (auto [v, ecc] : e.anchors)
            if (ecc > half_ceil(n)) fail(Errc::CensusMismatch, "entry " + e.name + " anchor above ceil(n/2)");
    }
    if (n4 != 2 || n6 != 4 || n8 != 1 || wheels != 1)
        fail(Errc::CensusMismatch, "exception multiset is not {2 at n=4, 4 at n=6 incl. the wheel, 1 at n=8}");
}

Catalog Catalog::bootstrap(int jobs) {
    std::vector<CensusRow> rows = census(8, {}, jobs);
    std::vector<CensusRow> ex;
    for (auto& r : rows)
        if (r.exception) ex.push_back(std::move(r));

    Catalog cat;
    std::vector<CatalogEntry> at6_outer, at6_other;
    for (auto& r : ex) {
        CatalogEntry e;
        e.graph = r.graph;
        e.canonical = canonical_form(r.graph);
        e.exact_od = r.oriented_diameter;
        e.optimal = r.witness;
        const int n = r.n;
        if (n == 4)
            e.name = (r.m == 5) ? "K4minus" : "K4";
        else if (n == 8)
            e.name = "G8_1";
        else if (n == 6) {
            if (is_wheel(r.graph))
                e.name = "W5";
            else if (outerplanar_embedding(r.graph))
                e.name = "";  // named below by canonical order
            else
                e.name = "G6_3";
        }
        if (n == 6 && e.name.empty())
            at6_outer.push_back(std::move(e));
        else
            cat.entries_.push_back(std::move(e));
    }
    std::sort(at6_outer.begin(), at6_outer.end(),
              [](const CatalogEntry& a, const CatalogEntry& b) { return a.canonical < b.canonical; });
    for (size_t i = 0; i < at6_outer.size(); ++i) {
        at6_outer[i].name = "G6_" + std::to_string(i + 1);
        cat.entries_.push_back(std::move(at6_outer[i]));
    }
    std::sort(cat.entries_.begin(), cat.entries_.end(), [](const CatalogEntry& a, const CatalogEntry& b) {
        return std::pair(a.graph.vertex_count(), a.name) < std::pair(b.graph.vertex_count(), b.name);
    });

    // anchored eccentricities realizing the lemma guarantees, per vertex
    for (auto& e : cat.entries_) {
        const int n = e.graph.vertex_count();
        for (VertexId v = 0; v < n; ++v) {
            ExactResult r = anchored_exact(e.graph, v, half_ceil(n));
            if (r.status == SolveStatus::Optimal && r.value)
                e.anchors.emplace_back(v, anchored_ecc(r.witness, v));
        }
    }
    cat.validate();
    return cat;
}

const CatalogEntry* Catalog::match(const PlaneGraph& g) const {
    const int n = g.vertex_count();
    if (n != 4 && n != 6 && n != 8) return nullptr;
    std::string canon;
    for (const auto& e : entries_) {
        if (e.graph.vertex_count() != n || e.graph.edge_count() != g.edge_count()) continue;
        if (canon.empty()) canon = canonical_form(g);
        if (e.canonical == canon) return &e;
    }
    return nullptr;
}

const CatalogEntry* Catalog::by_name(const std::string& name) const {
    for (const auto& e : entries_)
        if (e.name == name) return &e;
    return nullptr;
}

Orientation Catalog::mapped_optimal(const CatalogEntry& entry, const PlaneGraph& g) const {
    std::vector<VertexId> map = find_isomorphism(entry.graph.rotations(), g.rotations());
    if (map.empty()) fail(Errc::PreconditionFailed, "graph is not isomorphic to catalog entry " + entry.name);
    std::vector<Arc> arcs;
    arcs.reserve(entry.optimal.arcs().size());
    for (const auto& [u, v] : entry.optimal.arcs()) arcs.emplace_back(map[u], map[v]);
    return Orientation(g.vertex_count(), std::move(arcs));
}

void Catalog::save(std::ostream& out) const {
    out << "ont-catalog 1\n";
    for (const auto& e : entries_) {
        out << "entry " << e.name << "\n";
        out << "od " << e.exact_od << "\n";
        out << "canonical " << e.canonical << "\n";
        out << "pg\n";
        write_pg(out, e.graph);
        out << "or\n";
        write_or(out, e.optimal);
        out << "anchors";
        for (auto [v, ecc] : e.anchors) out << " " << (v + 1) << ":" << ecc;
        out << "\nend\n";
    }
}

Catalog Catalog::load(std::istream& in) {
    std::string line;
    if (!std::getline(in, line) || line != "ont-catalog 1") fail(Errc::ParseError, "not a catalog file");
    Catalog cat;
    while (std::getline(in, line)) {
        if (line.empty()) continue;
        std::istringstream ls(line);
        std::string kw, name;
        ls >> kw;
        if (kw != "entry") fail(Errc::ParseError, "expected 'entry', got: " + line);
        ls >> name;
        CatalogEntry e;
        e.name = name;
        std::string od_line, canon_line, pg_kw;
        if (!std::getline(in, od_line) || od_line.rfind("od ", 0) != 0) fail(Errc::ParseError, "expected od line");
        e.exact_od = std::stoi(od_line.substr(3));
        if (!std::getline(in, canon_line) || canon_line.rfind("canonical ", 0) != 0)
            fail(Errc::ParseError, "expected canonical line");
        e.canonical = canon_line.substr(10);
        if (!std::getline(in, pg_kw) || pg_kw != "pg") fail(Errc::ParseError, "expected pg block");
        // read the pg block: n, n rotation lines, outer line
        std::ostringstream pg_text;
        std::string nline;
        std::getline(in, nline);
        pg_text << nline << "\n";
        int n = std::stoi(nline);
        for (int i = 0; i <= n; ++i) {
            std::getline(in, line);
            pg_text << line << "\n";
        }
        std::istringstream pg_in(pg_text.str());
        e.graph = read_pg(pg_in, "catalog");
        if (!std::getline(in, line) || line != "or") fail(Errc::ParseError, "expected or block");
        std::ostringstream or_text;
        int m = e.graph.edge_count();
        for (int i = 0; i < m; ++i) {
            std::getline(in, line);
            or_text << line << "\n";
        }
        std::istringstream or_in(or_text.str());
        e.optimal = read_or(or_in, n, "catalog");
        if (!std::getline(in, line) || line.rfind("anchors", 0) != 0) fail(Errc::ParseError, "expected anchors line");
        std::istringstream as(line.substr(7));
        std::string tok;
        while (as >> tok) {
            auto colon = tok.find(':');
            e.anchors.emplace_back(std::stoi(tok.substr(0, colon)) - 1, std::stoi(tok.substr(colon + 1)));
        }
        if (!std::getline(in, line) || line != "end") fail(Errc::ParseError, "expected end");
        cat.entries_.push_back(std::move(e));
    }
    cat.validate();
    return cat;
}

Catalog Catalog::load_or_bootstrap(const std::string& path, int jobs) {
    if (!path.empty()) {
        std::ifstream in(path);
        if (in) {
            try {
                return load(in);
            } catch (const Error&) {
                // stale or corrupt cache: rebuild below
            }
        }
    }
    Catalog cat = bootstrap(jobs);
    if (!path.empty()) {
        std::ofstream out(path);
        if (out) cat.save(out);
    }
    return cat;
}

} // namespace ont
