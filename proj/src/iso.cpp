#include "anet/iso.hpp"

#include <deque>
#include <sstream>
#include <stdexcept>

namespace anet {

namespace {

// Serialization of d relative to the BFS discovery order seeded at start.
// Out-arcs are visited in out-port order, which is total for D_{LxB} members.
std::string serialize_from(const SymDigraph& d, const std::vector<std::vector<int>>& out,
                           int start, bool with_sources) {
    std::vector<int> disc(d.num_vertices(), -1);
    std::vector<int> order;
    order.reserve(d.num_vertices());
    std::deque<int> q{start};
    disc[start] = 0;
    order.push_back(start);
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int a : out[u]) {
            int w = d.arcs[a].dst;
            if (disc[w] < 0) {
                disc[w] = static_cast<int>(order.size());
                order.push_back(w);
                q.push_back(w);
            }
        }
    }
    if (static_cast<int>(order.size()) != d.num_vertices())
        throw std::invalid_argument("canonical_form: digraph is not connected");
    std::ostringstream os;
    for (int u : order) {
        os << 'V' << d.vertices[u].label;
        if (with_sources) os << '/' << d.vertices[u].source;
        os << '{';
        for (int a : out[u])
            os << '(' << d.arcs[a].p << ',' << d.arcs[a].q << ',' << disc[d.arcs[a].dst] << ')';
        os << '}';
    }
    return os.str();
}

} // namespace

std::string canonical_form(const SymDigraph& d, const CanonOptions& opts) {
    if (d.num_vertices() == 0) return "";
    auto out = d.out_arcs();
    for (int v = 0; v < d.num_vertices(); ++v) {
        for (std::size_t i = 1; i < out[v].size(); ++i)
            if (d.arcs[out[v][i - 1]].p == d.arcs[out[v][i]].p)
                throw std::invalid_argument("canonical_form: duplicate out-port at vertex " +
                                            d.vertices[v].id);
    }
    std::string best;
    for (int s = 0; s < d.num_vertices(); ++s) {
        std::string cur = serialize_from(d, out, s, opts.with_sources);
        if (best.empty() || cur < best) best = std::move(cur);
    }
    return best;
}

bool isomorphic(const SymDigraph& a, const SymDigraph& b, const CanonOptions& opts) {
    if (a.num_vertices() != b.num_vertices() || a.num_arcs() != b.num_arcs()) return false;
    return canonical_form(a, opts) == canonical_form(b, opts);
}

} // namespace anet
