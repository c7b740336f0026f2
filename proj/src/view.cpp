#include "anet/view.hpp"

#include <sstream>
#include <stdexcept>

namespace anet {

ViewTree truncated_view(const SymDigraph& d, int v, int depth) {
    if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("truncated_view: unknown vertex");
    if (depth < 0) throw std::invalid_argument("truncated_view: negative depth");
    auto out = d.out_arcs();
    ViewTree t;
    t.depth = depth;
    t.nodes.push_back({{}, d.vertices[v].label, d.vertices[v].source, 0, 0, -1, {}});
    // breadth-first over path nodes; a path pi=a1..ap ends at t(ap)
    std::vector<int> frontier{0};
    std::vector<int> endpoint{v};
    for (int level = 0; level < depth; ++level) {
        std::vector<int> next_frontier, next_endpoint;
        for (std::size_t i = 0; i < frontier.size(); ++i) {
            int node = frontier[i];
            int end = endpoint[i];
            int last_arc = t.nodes[node].path.empty() ? -1 : t.nodes[node].path.back();
            for (int a : out[end]) {
                if (last_arc >= 0 && a == d.sym[last_arc]) continue;  // non-stuttering
                ViewTree::Node child;
                child.path = t.nodes[node].path;
                child.path.push_back(a);
                child.label = d.vertices[d.arcs[a].dst].label;
                child.source = d.vertices[d.arcs[a].dst].source;
                child.via_p = d.arcs[a].p;
                child.via_q = d.arcs[a].q;
                child.parent = node;
                int idx = static_cast<int>(t.nodes.size());
                t.nodes.push_back(std::move(child));
                t.nodes[node].children.push_back(idx);
                next_frontier.push_back(idx);
                next_endpoint.push_back(d.arcs[a].dst);
            }
        }
        frontier = std::move(next_frontier);
        endpoint = std::move(next_endpoint);
    }
    return t;
}

namespace {

void serialize_node(const ViewTree& t, int node, bool with_sources, std::ostringstream& os) {
    const auto& n = t.nodes[node];
    os << '[' << n.via_p << ',' << n.via_q << ':' << n.label;
    if (with_sources) os << '/' << n.source;
    for (int c : n.children) serialize_node(t, c, with_sources, os);
    os << ']';
}

} // namespace

std::string view_canonical(const ViewTree& t, bool with_sources) {
    std::ostringstream os;
    serialize_node(t, 0, with_sources, os);
    return os.str();
}

} // namespace anet
