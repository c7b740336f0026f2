// JSON file formats: graphs, digraph fixtures, homomorphisms, schedules and
// trace export. The graph loader reports invariant violations with the line
// of the offending element.
#pragma once

#include <string>

#include "anet/graph.hpp"
#include "anet/randomness.hpp"
#include "anet/runtime.hpp"

namespace anet {

// Throws std::runtime_error with file:line-style messages on parse or
// validation failure.
LabeledGraph load_graph(const std::string& path);
LabeledGraph parse_graph(const std::string& text, const std::string& name = "<string>");
std::string graph_to_json(const LabeledGraph& g);

SymDigraph load_digraph(const std::string& path);
SymDigraph parse_digraph(const std::string& text, const std::string& name = "<string>");
std::string digraph_to_json(const SymDigraph& d);

// Loads either format: an object with "edges" loads as a graph and is
// converted with build_dir; one with "arcs" loads directly.
SymDigraph load_any_digraph(const std::string& path);

// Arcs are addressed as "<vertex id>|<out port>", unique in D_{LxB}.
std::string homomorphism_to_json(const SymDigraph& dom, const SymDigraph& cod,
                                 const Homomorphism& h);
Homomorphism parse_homomorphism(const std::string& text, const SymDigraph& dom,
                                const SymDigraph& cod);

std::string schedule_to_json(const Schedule& s, const SymDigraph& d);
Schedule parse_schedule(const std::string& text, const SymDigraph& d);
Schedule load_schedule(const std::string& path, const SymDigraph& d);

std::string drawlog_to_json(const DrawLog& log, const SymDigraph& d,
                            const SourceAssignment& sources);

std::string read_file(const std::string& path);
void write_file(const std::string& path, const std::string& content);

} // namespace anet
