#include "anet/graph.hpp"

#include <algorithm>
#include <deque>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anet {

int LabeledGraph::find_vertex(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i].id == id) return i;
    return -1;
}

std::vector<int> LabeledGraph::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& e : edges) {
        ++deg[e.u];
        ++deg[e.v];
    }
    return deg;
}

int SymDigraph::find_vertex(const std::string& id) const {
    for (int i = 0; i < num_vertices(); ++i)
        if (vertices[i].id == id) return i;
    return -1;
}

std::vector<std::vector<int>> SymDigraph::out_arcs() const {
    std::vector<std::vector<int>> out(vertices.size());
    for (int a = 0; a < num_arcs(); ++a) out[arcs[a].src].push_back(a);
    for (auto& v : out)
        std::sort(v.begin(), v.end(), [&](int a, int b) { return arcs[a].p < arcs[b].p; });
    return out;
}

std::vector<int> SymDigraph::degrees() const {
    std::vector<int> deg(vertices.size(), 0);
    for (const auto& a : arcs) ++deg[a.src];
    return deg;
}

std::string ValidationReport::joined() const {
    std::ostringstream os;
    for (std::size_t i = 0; i < violations.size(); ++i) {
        if (i) os << "; ";
        os << violations[i];
    }
    return os.str();
}

ValidationReport validate_graph(const LabeledGraph& g) {
    ValidationReport r;
    auto bad = [&](const std::string& m) { r.violations.push_back(m); };
    if (g.vertices.empty()) {
        bad("graph has no vertices");
        return r;
    }
    std::set<std::string> ids;
    for (const auto& v : g.vertices)
        if (!ids.insert(v.id).second) bad("duplicate vertex id \"" + v.id + "\"");

    int n = g.num_vertices();
    std::set<std::pair<int, int>> seen;
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        if (e.u < 0 || e.u >= n || e.v < 0 || e.v >= n) {
            bad("edge " + std::to_string(i) + " references unknown vertex");
            continue;
        }
        if (e.u == e.v) bad("edge " + std::to_string(i) + " is a self-loop");
        auto key = std::minmax(e.u, e.v);
        if (!seen.insert({key.first, key.second}).second)
            bad("multi-edge between \"" + g.vertices[e.u].id + "\" and \"" + g.vertices[e.v].id + "\"");
    }
    if (!r.ok()) return r;

    auto deg = g.degrees();
    std::vector<std::set<int>> ports(n);
    for (const auto& e : g.edges) {
        if (!ports[e.u].insert(e.pu).second)
            bad("vertex \"" + g.vertices[e.u].id + "\" reuses port " + std::to_string(e.pu));
        if (!ports[e.v].insert(e.pv).second)
            bad("vertex \"" + g.vertices[e.v].id + "\" reuses port " + std::to_string(e.pv));
    }
    for (int v = 0; v < n; ++v) {
        for (int p = 1; p <= deg[v]; ++p)
            if (!ports[v].count(p))
                bad("vertex \"" + g.vertices[v].id + "\" ports are not exactly [1," +
                    std::to_string(deg[v]) + "]");
        for (int p : ports[v])
            if (p < 1 || p > deg[v])
                bad("vertex \"" + g.vertices[v].id + "\" has out-of-range port " + std::to_string(p));
    }

    // connectivity
    std::vector<char> vis(n, 0);
    std::deque<int> q{0};
    vis[0] = 1;
    std::vector<std::vector<int>> adj(n);
    for (const auto& e : g.edges) {
        adj[e.u].push_back(e.v);
        adj[e.v].push_back(e.u);
    }
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[u])
            if (!vis[w]) {
                vis[w] = 1;
                q.push_back(w);
            }
    }
    if (std::count(vis.begin(), vis.end(), 1) != n) bad("graph is not connected");
    return r;
}

ValidationReport validate_digraph(const SymDigraph& d) {
    ValidationReport r;
    auto bad = [&](const std::string& m) { r.violations.push_back(m); };
    if (d.vertices.empty()) {
        bad("digraph has no vertices");
        return r;
    }
    int n = d.num_vertices();
    int m = d.num_arcs();
    if (static_cast<int>(d.sym.size()) != m) {
        bad("sym undefined for some arc");
        return r;
    }
    for (int a = 0; a < m; ++a) {
        const auto& arc = d.arcs[a];
        if (arc.src < 0 || arc.src >= n || arc.dst < 0 || arc.dst >= n) {
            bad("arc " + std::to_string(a) + " references unknown vertex");
            return r;
        }
        int s = d.sym[a];
        if (s < 0 || s >= m) {
            bad("sym undefined for arc " + std::to_string(a));
            continue;
        }
        if (d.sym[s] != a) bad("sym is not an involution at arc " + std::to_string(a));
        if (d.arcs[s].src != arc.dst || d.arcs[s].dst != arc.src)
            bad("sym partner of arc " + std::to_string(a) + " has mismatched endpoints");
        if (d.arcs[s].p != arc.q || d.arcs[s].q != arc.p)
            bad("arc " + std::to_string(a) + " label not reversed by sym");
    }
    auto deg = d.degrees();
    std::vector<std::set<int>> outp(n);
    for (int a = 0; a < m; ++a) {
        if (!outp[d.arcs[a].src].insert(d.arcs[a].p).second)
            bad("vertex \"" + d.vertices[d.arcs[a].src].id + "\" has two out-arcs with port " +
                std::to_string(d.arcs[a].p));
    }
    for (int v = 0; v < n; ++v)
        for (int p = 1; p <= deg[v]; ++p)
            if (!outp[v].count(p)) {
                bad("vertex \"" + d.vertices[v].id + "\" out-ports are not exactly [1," +
                    std::to_string(deg[v]) + "]");
                break;
            }
    for (int v = 0; v < n; ++v)
        for (int p : outp[v])
            if (p < 1 || p > deg[v]) {
                bad("vertex \"" + d.vertices[v].id + "\" has out-of-range port " + std::to_string(p));
                break;
            }

    auto dist = distances_from(d, 0);
    for (int v = 0; v < n; ++v)
        if (dist[v] < 0) {
            bad("digraph is not connected");
            break;
        }
    return r;
}

SymDigraph build_dir(const LabeledGraph& g) {
    auto rep = validate_graph(g);
    if (!rep.ok()) throw std::invalid_argument("build_dir: invalid graph: " + rep.joined());
    SymDigraph d;
    d.vertices.reserve(g.vertices.size());
    for (const auto& v : g.vertices) d.vertices.push_back({v.id, v.label, v.source});
    for (const auto& e : g.edges) {
        int a = d.num_arcs();
        d.arcs.push_back({e.u, e.v, e.pu, e.pv});
        d.arcs.push_back({e.v, e.u, e.pv, e.pu});
        d.sym.push_back(a + 1);
        d.sym.push_back(a);
    }
    return d;
}

LabeledGraph undir(const SymDigraph& d) {
    LabeledGraph g;
    for (const auto& v : d.vertices) g.vertices.push_back({v.id, v.label, v.source});
    for (int a = 0; a < d.num_arcs(); ++a) {
        if (d.sym[a] <= a) continue;  // keep one representative per sym pair
        const auto& arc = d.arcs[a];
        if (arc.src == arc.dst) throw std::invalid_argument("undir: digraph has a loop");
        g.edges.push_back({arc.src, arc.dst, arc.p, arc.q});
    }
    return g;
}

std::vector<int> distances_from(const SymDigraph& d, int v) {
    if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("distances_from: unknown vertex");
    std::vector<int> dist(d.num_vertices(), -1);
    std::vector<std::vector<int>> adj(d.num_vertices());
    for (const auto& a : d.arcs) adj[a.src].push_back(a.dst);
    std::deque<int> q{v};
    dist[v] = 0;
    while (!q.empty()) {
        int u = q.front();
        q.pop_front();
        for (int w : adj[u])
            if (dist[w] < 0) {
                dist[w] = dist[u] + 1;
                q.push_back(w);
            }
    }
    return dist;
}

int diameter(const SymDigraph& d) {
    int best = 0;
    for (int v = 0; v < d.num_vertices(); ++v) {
        auto dist = distances_from(d, v);
        for (int x : dist) best = std::max(best, x);
    }
    return best;
}

Ball ball(const SymDigraph& d, int v, int radius) {
    if (v < 0 || v >= d.num_vertices()) throw std::invalid_argument("ball: unknown vertex");
    Ball b;
    b.center = v;
    b.radius = radius;
    b.has_vertex.assign(d.num_vertices(), 0);
    b.has_arc.assign(d.num_arcs(), 0);
    if (radius < 0) return b;
    auto dist = distances_from(d, v);
    for (int u = 0; u < d.num_vertices(); ++u)
        if (dist[u] >= 0 && dist[u] <= radius) {
            b.has_vertex[u] = 1;
            b.vertex_list.push_back(u);
        }
    for (int a = 0; a < d.num_arcs(); ++a) {
        int ds = dist[d.arcs[a].src], dt = dist[d.arcs[a].dst];
        bool in = (ds >= 0 && ds <= radius - 1) || (dt >= 0 && dt <= radius - 1);
        if (in) {
            b.has_arc[a] = 1;
            b.arc_list.push_back(a);
        }
    }
    return b;
}

bool ball_subset(const Ball& inner, const Ball& outer) {
    for (int v : inner.vertex_list)
        if (!outer.has_vertex[v]) return false;
    for (int a : inner.arc_list)
        if (!outer.has_arc[a]) return false;
    return true;
}

ValidationReport validate_homomorphism(const SymDigraph& dom, const SymDigraph& cod,
                                       const Homomorphism& h, bool with_sources) {
    ValidationReport r;
    auto bad = [&](const std::string& m) { r.violations.push_back(m); };
    if (static_cast<int>(h.vertex_map.size()) != dom.num_vertices() ||
        static_cast<int>(h.arc_map.size()) != dom.num_arcs()) {
        bad("map size does not match domain");
        return r;
    }
    for (int v = 0; v < dom.num_vertices(); ++v) {
        int w = h.vertex_map[v];
        if (w < 0) continue;
        if (w >= cod.num_vertices()) {
            bad("vertex image out of range");
            continue;
        }
        if (dom.vertices[v].label != cod.vertices[w].label)
            bad("label not preserved at vertex \"" + dom.vertices[v].id + "\"");
        if (with_sources && dom.vertices[v].source != cod.vertices[w].source)
            bad("source class not preserved at vertex \"" + dom.vertices[v].id + "\"");
    }
    for (int a = 0; a < dom.num_arcs(); ++a) {
        int b = h.arc_map[a];
        if (b < 0) continue;
        if (b >= cod.num_arcs()) {
            bad("arc image out of range");
            continue;
        }
        int su = h.vertex_map[dom.arcs[a].src], tu = h.vertex_map[dom.arcs[a].dst];
        if (su < 0 || tu < 0) {
            bad("arc " + std::to_string(a) + " mapped but an endpoint is not");
            continue;
        }
        if (cod.arcs[b].src != su || cod.arcs[b].dst != tu)
            bad("incidence not preserved at arc " + std::to_string(a));
        if (cod.arcs[b].p != dom.arcs[a].p || cod.arcs[b].q != dom.arcs[a].q)
            bad("arc label not preserved at arc " + std::to_string(a));
    }
    return r;
}

} // namespace anet
