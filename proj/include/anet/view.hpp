// Truncated views: the tree of non-stuttering paths out of a vertex, with
// labels copied from path endpoints. Node identity is the arc-id path, so
// construction order is deterministic and equality tests are reproducible.
#pragma once

#include <string>
#include <vector>

#include "anet/graph.hpp"

namespace anet {

struct ViewTree {
    struct Node {
        std::vector<int> path;        // arc ids from the root
        std::string label;            // label of the path endpoint
        std::string source;           // source class of the endpoint (may be empty)
        int via_p = 0, via_q = 0;     // label of the last arc; (0,0) at the root
        int parent = -1;
        std::vector<int> children;    // ordered by the extending arc's out-port
    };

    int root = 0;
    int depth = 0;
    std::vector<Node> nodes;

    std::size_t size() const { return nodes.size(); }
};

ViewTree truncated_view(const SymDigraph& d, int v, int depth);

// Canonical serialization; equal strings iff the trees are isomorphic as
// labeled rooted trees (children are port-keyed, so no backtracking needed).
std::string view_canonical(const ViewTree& t, bool with_sources = true);

} // namespace anet
