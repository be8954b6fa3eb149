#pragma once

#include <iosfwd>
#include <string>

#include "ont/orientation.hpp"
#include "ont/plane_graph.hpp"

namespace ont {

/// .pg text format, 1-based ids:
///   line 1: n
///   then n lines "v: w1 w2 ... wk" (clockwise rotation of v)
///   optional "outer: v1 v2 ... vk" naming the outer cycle
///   '#' starts a comment
PlaneGraph read_pg(std::istream& in, const std::string& source_name = "<input>");
PlaneGraph read_pg_file(const std::string& path);
void write_pg(std::ostream& out, const PlaneGraph& g);
void write_pg_file(const std::string& path, const PlaneGraph& g);

/// .or format: one "u v" line per arc (tail head), 1-based ids.
Orientation read_or(std::istream& in, int vertex_count, const std::string& source_name = "<input>");
Orientation read_or_file(const std::string& path, int vertex_count);
void write_or(std::ostream& out, const Orientation& d);
void write_or_file(const std::string& path, const Orientation& d);

void write_dot(std::ostream& out, const PlaneGraph& g);
void write_dot(std::ostream& out, const Orientation& d);

std::string certificate_report(const Certificate& cert);
std::string certificate_json(const PlaneGraph& g, const Certificate& cert);

} // namespace ont
