#include "ont/io.hpp"

#include <fstream>
#include <sstream>

#include <json.hpp>

namespace ont {

namespace {

[[noreturn]] void parse_fail(const std::string& source, int line, const std::string& msg) {
    fail(Errc::ParseError, source + ":" + std::to_string(line) + ": " + msg);
}

std::string strip_comment(const std::string& line) {
    auto pos = line.find('#');
    return pos == std::string::npos ? line : line.substr(0, pos);
}

} // namespace

PlaneGraph read_pg(std::istream& in, const std::string& source_name) {
    std::string line;
    int lineno = 0;
    int n = -1;
    std::vector<std::vector<VertexId>> rot;
    std::vector<char> seen;
    std::vector<VertexId> outer;
    bool have_outer = false;

    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        std::string first;
        if (!(ls >> first)) continue;  // blank or comment
        if (n < 0) {
            try {
                n = std::stoi(first);
            } catch (...) {
                parse_fail(source_name, lineno, "expected vertex count, got '" + first + "'");
            }
            if (n < 1) parse_fail(source_name, lineno, "vertex count must be positive");
            rot.assign(n, {});
            seen.assign(n, 0);
            continue;
        }
        if (first == "outer:") {
            int v;
            while (ls >> v) {
                if (v < 1 || v > n) parse_fail(source_name, lineno, "outer vertex id out of range: " + std::to_string(v));
                outer.push_back(v - 1);
            }
            if (outer.size() < 3) parse_fail(source_name, lineno, "outer cycle needs at least 3 vertices");
            have_outer = true;
            continue;
        }
        if (first.empty() || first.back() != ':')
            parse_fail(source_name, lineno, "expected 'v:' rotation line, got '" + first + "'");
        int v;
        try {
            v = std::stoi(first.substr(0, first.size() - 1));
        } catch (...) {
            parse_fail(source_name, lineno, "bad vertex id '" + first + "'");
        }
        if (v < 1 || v > n) parse_fail(source_name, lineno, "vertex id out of range: " + std::to_string(v));
        if (seen[v - 1]) parse_fail(source_name, lineno, "duplicate rotation line for vertex " + std::to_string(v));
        seen[v - 1] = 1;
        int w;
        while (ls >> w) {
            if (w < 1 || w > n) parse_fail(source_name, lineno, "neighbor id out of range: " + std::to_string(w));
            if (w == v) parse_fail(source_name, lineno, "loop at vertex " + std::to_string(v));
            for (VertexId prev : rot[v - 1])
                if (prev == w - 1) parse_fail(source_name, lineno, "duplicate neighbor " + std::to_string(w));
            rot[v - 1].push_back(w - 1);
        }
        if (!ls.eof()) parse_fail(source_name, lineno, "trailing garbage in rotation line");
    }
    if (n < 0) parse_fail(source_name, lineno, "empty input");
    for (int v = 0; v < n; ++v)
        if (!seen[v]) parse_fail(source_name, lineno, "missing rotation line for vertex " + std::to_string(v + 1));
    for (int v = 0; v < n; ++v)
        for (VertexId w : rot[v]) {
            bool back = false;
            for (VertexId x : rot[w])
                if (x == v) back = true;
            if (!back)
                parse_fail(source_name, lineno,
                           "asymmetric adjacency " + std::to_string(v + 1) + "-" + std::to_string(w + 1));
        }

    try {
        if (have_outer) return PlaneGraph::build(std::move(rot), outer);
        return PlaneGraph::build(std::move(rot));
    } catch (const Error& e) {
        fail(Errc::ParseError, source_name + ": " + e.what());
    }
}

PlaneGraph read_pg_file(const std::string& path) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    return read_pg(in, path);
}

void write_pg(std::ostream& out, const PlaneGraph& g) {
    out << g.vertex_count() << "\n";
    for (VertexId v = 0; v < g.vertex_count(); ++v) {
        out << (v + 1) << ":";
        for (VertexId w : g.rotation(v)) out << " " << (w + 1);
        out << "\n";
    }
    out << "outer:";
    for (VertexId v : g.face_walk(g.outer_face())) out << " " << (v + 1);
    out << "\n";
}

void write_pg_file(const std::string& path, const PlaneGraph& g) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
    write_pg(out, g);
}

Orientation read_or(std::istream& in, int vertex_count, const std::string& source_name) {
    std::string line;
    int lineno = 0;
    std::vector<Arc> arcs;
    while (std::getline(in, line)) {
        ++lineno;
        std::istringstream ls(strip_comment(line));
        int u, v;
        if (!(ls >> u)) continue;
        if (!(ls >> v)) parse_fail(source_name, lineno, "expected 'u v' arc line");
        if (u < 1 || u > vertex_count || v < 1 || v > vertex_count)
            parse_fail(source_name, lineno, "arc endpoint out of range");
        arcs.emplace_back(u - 1, v - 1);
    }
    try {
        return Orientation(vertex_count, std::move(arcs));
    } catch (const Error& e) {
        fail(Errc::ParseError, source_name + ": " + e.what());
    }
}

Orientation read_or_file(const std::string& path, int vertex_count) {
    std::ifstream in(path);
    if (!in) fail(Errc::ParseError, "cannot open " + path);
    return read_or(in, vertex_count, path);
}

void write_or(std::ostream& out, const Orientation& d) {
    for (const auto& [u, v] : d.arcs()) out << (u + 1) << " " << (v + 1) << "\n";
}

void write_or_file(const std::string& path, const Orientation& d) {
    std::ofstream out(path);
    if (!out) fail(Errc::ParseError, "cannot open " + path + " for writing");
    write_or(out, d);
}

void write_dot(std::ostream& out, const PlaneGraph& g) {
    out << "graph G {\n";
    for (const auto& [u, v] : g.edges()) out << "  " << (u + 1) << " -- " << (v + 1) << ";\n";
    out << "}\n";
}

void write_dot(std::ostream& out, const Orientation& d) {
    out << "digraph D {\n";
    for (const auto& [u, v] : d.arcs()) out << "  " << (u + 1) << " -> " << (v + 1) << ";\n";
    out << "}\n";
}

std::string certificate_report(const Certificate& cert) {
    std::ostringstream out;
    out << "diameter=" << (cert.diameter ? std::to_string(*cert.diameter) : "inf") << "\n";
    out << "bound=" << cert.bound << "\n";
    out << "strong=" << (cert.strongly_connected ? "true" : "false") << "\n";
    out << "exception=" << (cert.exception ? "true" : "false") << "\n";
    if (cert.exception) out << "exception_name=" << cert.exception_name << "\n";
    for (const auto& t : cert.trace) out << t << "\n";
    return out.str();
}

std::string certificate_json(const PlaneGraph& g, const Certificate& cert) {
    nlohmann::json j;
    j["n"] = g.vertex_count();
    j["m"] = g.edge_count();
    j["bound"] = cert.bound;
    if (cert.diameter)
        j["diameter"] = *cert.diameter;
    else
        j["diameter"] = nullptr;
    j["strong"] = cert.strongly_connected;
    j["exception"] = cert.exception;
    if (cert.exception) j["exception_name"] = cert.exception_name;
    j["trace"] = cert.trace;
    nlohmann::json arcs = nlohmann::json::array();
    for (const auto& [u, v] : cert.orientation.arcs()) arcs.push_back({u + 1, v + 1});
    j["arcs"] = arcs;
    return j.dump(2);
}

} // namespace ont
