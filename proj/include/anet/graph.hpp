// Labeled graphs with port numberings and their symmetric-digraph encodings.
//
// A LabeledGraph is the network-level object: a simple connected graph where
// every vertex numbers its incident edges 1..deg. A SymDigraph is the
// digraph-level object used for all structural reasoning: arcs come in
// Sym-paired twins carrying the port pair (p, q) of their endpoints.
// SymDigraph fixtures may contain loops and multi-arcs (quotients need them);
// LabeledGraph never does.
#pragma once

#include <optional>
#include <string>
#include <vector>

namespace anet {

struct LabeledGraph {
    struct Vertex {
        std::string id;
        std::string label;
        std::string source;  // randomness class; empty = unassigned
    };
    struct Edge {
        int u = 0, v = 0;    // vertex indices
        int pu = 0, pv = 0;  // pu = port of u toward v, pv = port of v toward u
    };

    std::vector<Vertex> vertices;
    std::vector<Edge> edges;

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int find_vertex(const std::string& id) const;
    std::vector<int> degrees() const;
};

struct SymDigraph {
    struct Vertex {
        std::string id;
        std::string label;
        std::string source;  // empty = no source class attached
    };
    struct Arc {
        int src = 0, dst = 0;
        int p = 0, q = 0;    // arc label (p, q); Sym carries (q, p)
    };

    std::vector<Vertex> vertices;
    std::vector<Arc> arcs;
    std::vector<int> sym;    // arc index -> arc index

    int num_vertices() const { return static_cast<int>(vertices.size()); }
    int num_arcs() const { return static_cast<int>(arcs.size()); }
    int find_vertex(const std::string& id) const;

    // out_arcs[v] = arc indices with src == v, sorted by out-port p
    std::vector<std::vector<int>> out_arcs() const;
    // degree of v = number of out-arcs
    std::vector<int> degrees() const;
};

struct ValidationReport {
    std::vector<std::string> violations;
    bool ok() const { return violations.empty(); }
    std::string joined() const;
};

ValidationReport validate_graph(const LabeledGraph& g);

// Empty report iff d is a member of D_{LxB} (sym involution with matching
// endpoints, reversed arc labels, out-port set exactly [1, deg]) and is
// strongly connected.
ValidationReport validate_digraph(const SymDigraph& d);

// Dir(G): each edge {u,v} becomes two Sym-paired arcs labeled with the port
// pair seen from each side. Throws on an invalid input graph.
SymDigraph build_dir(const LabeledGraph& g);

// Inverse of build_dir for digraphs that encode a simple graph.
LabeledGraph undir(const SymDigraph& d);

// BFS hop distances from v (arc direction ignored; safe on symmetric digraphs).
std::vector<int> distances_from(const SymDigraph& d, int v);

int diameter(const SymDigraph& d);

struct Ball {
    int center = 0;
    int radius = 0;
    std::vector<char> has_vertex;  // indexed by vertex
    std::vector<char> has_arc;     // indexed by arc
    std::vector<int> vertex_list;  // ascending
    std::vector<int> arc_list;     // ascending

    bool contains_vertex(int v) const { return has_vertex[v] != 0; }
    bool contains_arc(int a) const { return has_arc[a] != 0; }
};

// B_D(v, r): all vertices at distance <= r and all arcs whose source or
// target is at distance <= r-1. Radius -1 gives the empty ball.
Ball ball(const SymDigraph& d, int v, int radius);

bool ball_subset(const Ball& inner, const Ball& outer);

// Vertex/arc maps; -1 marks "undefined" (partial maps on balls are normal).
struct Homomorphism {
    std::vector<int> vertex_map;
    std::vector<int> arc_map;
    std::string domain;
    std::string codomain;
};

// Checks incidence and label preservation wherever the map is defined.
// with_sources controls whether vertex source classes must be preserved.
ValidationReport validate_homomorphism(const SymDigraph& dom, const SymDigraph& cod,
                                       const Homomorphism& h, bool with_sources);

} // namespace anet
