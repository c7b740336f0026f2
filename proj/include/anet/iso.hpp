// Isomorphism of small symmetric digraphs via canonical forms.
//
// Members of D_{LxB} have out-arcs uniquely keyed by their out-port, so a
// BFS that visits out-arcs in port order from a fixed start vertex yields a
// deterministic serialization; the canonical form minimizes it over start
// vertices. Exact for the strongly connected digraphs this project handles.
#pragma once

#include <string>

#include "anet/graph.hpp"

namespace anet {

struct CanonOptions {
    bool with_sources = true;  // include source classes in vertex labels
};

std::string canonical_form(const SymDigraph& d, const CanonOptions& opts = {});

bool isomorphic(const SymDigraph& a, const SymDigraph& b, const CanonOptions& opts = {});

} // namespace anet
