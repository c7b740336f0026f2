#include "anet/families.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

#include "anet/randomness.hpp"

namespace anet {

namespace {

std::vector<std::string> split(const std::string& s, char sep) {
    std::vector<std::string> out;
    std::string cur;
    for (char c : s) {
        if (c == sep) {
            out.push_back(cur);
            cur.clear();
        } else {
            cur.push_back(c);
        }
    }
    out.push_back(cur);
    return out;
}

std::vector<std::string> chars_of(const std::string& s) {
    std::vector<std::string> out;
    for (char c : s) out.emplace_back(1, c);
    return out;
}

} // namespace

GeneratorSpec GeneratorSpec::parse(const std::string& text) {
    GeneratorSpec spec;
    auto parts = split(text, ',');
    if (parts.empty()) throw std::invalid_argument("empty generator spec");
    {
        auto head = split(parts[0], ':');
        if (head.size() != 2) throw std::invalid_argument("generator spec needs shape:size");
        const std::string& shape = head[0];
        const std::string& size = head[1];
        if (shape == "ring") {
            spec.shape = Ring;
            spec.n = std::stoi(size);
        } else if (shape == "path") {
            spec.shape = Path;
            spec.n = std::stoi(size);
        } else if (shape == "clique") {
            spec.shape = Clique;
            spec.n = std::stoi(size);
        } else if (shape == "grid") {
            auto wh = split(size, 'x');
            if (wh.size() != 2) throw std::invalid_argument("grid spec needs grid:WxH");
            spec.shape = Grid;
            spec.width = std::stoi(wh[0]);
            spec.height = std::stoi(wh[1]);
            spec.n = spec.width * spec.height;
        } else if (shape == "random") {
            spec.shape = Random;
            spec.n = std::stoi(size);
            spec.degree = 3;
        } else {
            throw std::invalid_argument("unknown shape \"" + shape + "\"");
        }
    }
    for (std::size_t i = 1; i < parts.size(); ++i) {
        const std::string& p = parts[i];
        auto kv = split(p, '=');
        if (p == "anon")
            spec.labeling = Anonymous;
        else if (p == "distinct")
            spec.labeling = Distinct;
        else if (kv[0] == "labels" && kv.size() == 2) {
            spec.labeling = Pattern;
            spec.label_pattern = chars_of(kv[1]);
        } else if (p == "unshared")
            spec.sources = Unshared;
        else if (p == "all-shared")
            spec.sources = AllShared;
        else if (p == "one-unshared")
            spec.sources = OneUnshared;
        else if (kv[0] == "classes" && kv.size() == 2) {
            spec.sources = Classes;
            spec.source_classes = chars_of(kv[1]);
        } else if (kv[0] == "deg" && kv.size() == 2)
            spec.degree = std::stoi(kv[1]);
        else if (kv[0] == "seed" && kv.size() == 2)
            spec.seed = std::stoull(kv[1]);
        else
            throw std::invalid_argument("unknown generator option \"" + p + "\"");
    }
    return spec;
}

std::string GeneratorSpec::str() const {
    std::ostringstream os;
    switch (shape) {
        case Ring: os << "ring:" << n; break;
        case Path: os << "path:" << n; break;
        case Clique: os << "clique:" << n; break;
        case Grid: os << "grid:" << width << 'x' << height; break;
        case Random: os << "random:" << n << ",deg=" << degree << ",seed=" << seed; break;
    }
    switch (labeling) {
        case Anonymous: os << ",anon"; break;
        case Distinct: os << ",distinct"; break;
        case Pattern:
            os << ",labels=";
            for (const auto& s : label_pattern) os << s;
            break;
    }
    switch (sources) {
        case Unshared: os << ",unshared"; break;
        case AllShared: os << ",all-shared"; break;
        case OneUnshared: os << ",one-unshared"; break;
        case Classes:
            os << ",classes=";
            for (const auto& s : source_classes) os << s;
            break;
    }
    return os.str();
}

namespace {

void apply_labels_and_sources(const GeneratorSpec& spec, LabeledGraph& g) {
    int n = g.num_vertices();
    for (int v = 0; v < n; ++v) {
        switch (spec.labeling) {
            case GeneratorSpec::Anonymous: g.vertices[v].label = "o"; break;
            case GeneratorSpec::Distinct: {
                std::ostringstream os;
                os << 'L' << (v < 10 ? "0" : "") << v;
                g.vertices[v].label = os.str();
                break;
            }
            case GeneratorSpec::Pattern:
                if (spec.label_pattern.empty())
                    throw std::invalid_argument("label pattern is empty");
                g.vertices[v].label = spec.label_pattern[v % spec.label_pattern.size()];
                break;
        }
        switch (spec.sources) {
            case GeneratorSpec::Unshared: g.vertices[v].source = "s" + std::to_string(v); break;
            case GeneratorSpec::AllShared: g.vertices[v].source = "s"; break;
            case GeneratorSpec::OneUnshared: g.vertices[v].source = v == 0 ? "u" : "s"; break;
            case GeneratorSpec::Classes:
                if (spec.source_classes.empty())
                    throw std::invalid_argument("source class pattern is empty");
                g.vertices[v].source = spec.source_classes[v % spec.source_classes.size()];
                break;
        }
    }
}

} // namespace

LabeledGraph generate(const GeneratorSpec& spec) {
    LabeledGraph g;
    auto add_vertices = [&](int n) {
        for (int v = 0; v < n; ++v) g.vertices.push_back({"v" + std::to_string(v), "", ""});
    };
    switch (spec.shape) {
        case GeneratorSpec::Ring: {
            if (spec.n < 3) throw std::invalid_argument("ring generator needs n >= 3");
            add_vertices(spec.n);
            for (int v = 0; v < spec.n; ++v)
                g.edges.push_back({v, (v + 1) % spec.n, 1, 2});  // 1 = successor, 2 = predecessor
            break;
        }
        case GeneratorSpec::Path: {
            if (spec.n < 1) throw std::invalid_argument("path generator needs n >= 1");
            add_vertices(spec.n);
            for (int v = 0; v + 1 < spec.n; ++v) {
                int pv = (v + 1 == spec.n - 1) ? 1 : 2;  // the right endpoint has only port 1
                g.edges.push_back({v, v + 1, 1, pv});
            }
            break;
        }
        case GeneratorSpec::Clique: {
            if (spec.n < 2) throw std::invalid_argument("clique generator needs n >= 2");
            add_vertices(spec.n);
            // circulant ports: port_i(j) = (j - i) mod n, a bijection onto [1, n-1]
            for (int i = 0; i < spec.n; ++i)
                for (int j = i + 1; j < spec.n; ++j)
                    g.edges.push_back({i, j, (j - i) % spec.n, (i - j + spec.n) % spec.n});
            break;
        }
        case GeneratorSpec::Grid: {
            if (spec.width < 1 || spec.height < 1)
                throw std::invalid_argument("grid generator needs positive sides");
            int w = spec.width, h = spec.height;
            add_vertices(w * h);
            auto at = [w](int x, int y) { return y * w + x; };
            // ports counted in fixed direction order: right, left, down, up
            auto port = [&](int x, int y, int dir) {
                int p = 0;
                static const int dx[4] = {1, -1, 0, 0};
                static const int dy[4] = {0, 0, 1, -1};
                for (int k = 0; k <= dir; ++k) {
                    int nx = x + dx[k], ny = y + dy[k];
                    if (nx >= 0 && nx < w && ny >= 0 && ny < h) ++p;
                }
                return p;
            };
            for (int y = 0; y < h; ++y)
                for (int x = 0; x < w; ++x) {
                    if (x + 1 < w)
                        g.edges.push_back({at(x, y), at(x + 1, y), port(x, y, 0), port(x + 1, y, 1)});
                    if (y + 1 < h)
                        g.edges.push_back({at(x, y), at(x, y + 1), port(x, y, 2), port(x, y + 1, 3)});
                }
            break;
        }
        case GeneratorSpec::Random: {
            if (spec.n < 1) throw std::invalid_argument("random generator needs n >= 1");
            add_vertices(spec.n);
            Rng rng(derive_seed(spec.seed, "random-graph"));
            std::set<std::pair<int, int>> edges;
            // random spanning tree first, then extra edges toward the target degree
            for (int v = 1; v < spec.n; ++v) {
                int u = static_cast<int>(rng.below(v));
                edges.insert({std::min(u, v), std::max(u, v)});
            }
            long long target = static_cast<long long>(spec.n) * std::max(1, spec.degree) / 2;
            int attempts = 0;
            while (static_cast<long long>(edges.size()) < target && attempts < 20 * spec.n) {
                int u = static_cast<int>(rng.below(spec.n));
                int v = static_cast<int>(rng.below(spec.n));
                ++attempts;
                if (u == v) continue;
                edges.insert({std::min(u, v), std::max(u, v)});
            }
            std::vector<int> next_port(spec.n, 1);
            for (auto [u, v] : edges) {
                g.edges.push_back({u, v, next_port[u]++, next_port[v]++});
            }
            break;
        }
    }
    apply_labels_and_sources(spec, g);
    auto rep = validate_graph(g);
    if (!rep.ok()) throw std::logic_error("generator produced an invalid graph: " + rep.joined());
    return g;
}

SymDigraph ring_digraph(int m, const std::vector<std::string>& label_pattern,
                        const std::vector<std::string>& source_pattern) {
    if (m < 1) throw std::invalid_argument("ring_digraph needs m >= 1");
    SymDigraph d;
    for (int v = 0; v < m; ++v) {
        std::string label = label_pattern.empty() ? "o" : label_pattern[v % label_pattern.size()];
        std::string source =
            source_pattern.empty() ? std::string() : source_pattern[v % source_pattern.size()];
        d.vertices.push_back({"v" + std::to_string(v), label, source});
    }
    // per vertex: successor arc labeled (1,2) and predecessor arc labeled (2,1)
    std::vector<int> succ(m), pred(m);
    for (int v = 0; v < m; ++v) {
        succ[v] = d.num_arcs();
        d.arcs.push_back({v, (v + 1) % m, 1, 2});
        pred[v] = d.num_arcs();
        d.arcs.push_back({v, (v - 1 + m) % m, 2, 1});
    }
    d.sym.assign(d.num_arcs(), -1);
    for (int v = 0; v < m; ++v) {
        d.sym[succ[v]] = pred[(v + 1) % m];
        d.sym[pred[(v + 1) % m]] = succ[v];
    }
    return d;
}

Homomorphism ring_mod_covering(const SymDigraph& total, const SymDigraph& base) {
    int n = total.num_vertices(), m = base.num_vertices();
    if (m < 1 || n % m != 0)
        throw std::invalid_argument("ring_mod_covering: total size must be a multiple of base size");
    Homomorphism phi;
    phi.vertex_map.resize(n);
    for (int v = 0; v < n; ++v) phi.vertex_map[v] = v % m;
    // match arcs by (source image, label)
    std::map<std::tuple<int, int, int>, int> base_arc;
    for (int a = 0; a < base.num_arcs(); ++a)
        base_arc[{base.arcs[a].src, base.arcs[a].p, base.arcs[a].q}] = a;
    phi.arc_map.resize(total.num_arcs());
    for (int a = 0; a < total.num_arcs(); ++a) {
        auto it = base_arc.find({total.arcs[a].src % m, total.arcs[a].p, total.arcs[a].q});
        if (it == base_arc.end())
            throw std::invalid_argument("ring_mod_covering: no matching base arc");
        phi.arc_map[a] = it->second;
    }
    return phi;
}

CoveringPair generate_covering_pair(const GeneratorSpec& base_spec, int sheets) {
    if (base_spec.shape != GeneratorSpec::Ring)
        throw std::invalid_argument(
            "generate_covering_pair: no connected covering recipe for this shape");
    if (base_spec.n < 3) throw std::invalid_argument("generate_covering_pair: ring needs n >= 3");
    if (sheets < 1) throw std::invalid_argument("generate_covering_pair: sheets must be >= 1");

    CoveringPair pair;
    pair.base = generate(base_spec);
    // the total ring repeats the base labels and classes along its fibers
    GeneratorSpec total_spec = base_spec;
    total_spec.n = base_spec.n * sheets;
    total_spec.labeling = GeneratorSpec::Pattern;
    total_spec.sources = GeneratorSpec::Classes;
    total_spec.label_pattern.clear();
    total_spec.source_classes.clear();
    for (const auto& v : pair.base.vertices) {
        total_spec.label_pattern.push_back(v.label);
        total_spec.source_classes.push_back(v.source);
    }
    pair.total = generate(total_spec);
    pair.dir_total = build_dir(pair.total);
    pair.dir_base = build_dir(pair.base);
    pair.phi = ring_mod_covering(pair.dir_total, pair.dir_base);
    auto check = is_symmetric_covering(pair.dir_total, pair.dir_base, pair.phi);
    if (!check.accepted || check.witness.sheet_count != sheets)
        throw std::logic_error("generate_covering_pair: projection failed verification: " +
                               check.reason);
    return pair;
}

namespace {

// Index-mod map from a line-shaped digraph onto a ring digraph; arcs are
// matched by direction so the map is total and label mismatches at the far
// path end are left for is_quasi_covering to flag.
Homomorphism line_mod_map(const SymDigraph& d1, const SymDigraph& d0) {
    int m = d0.num_vertices();
    Homomorphism g;
    g.vertex_map.resize(d1.num_vertices());
    for (int v = 0; v < d1.num_vertices(); ++v) g.vertex_map[v] = v % m;
    std::map<int, int> succ_arc, pred_arc;  // base vertex -> arc
    for (int a = 0; a < d0.num_arcs(); ++a) {
        if (d0.arcs[a].p == 1)
            succ_arc[d0.arcs[a].src] = a;
        else
            pred_arc[d0.arcs[a].src] = a;
    }
    g.arc_map.resize(d1.num_arcs());
    for (int a = 0; a < d1.num_arcs(); ++a) {
        int src = d1.arcs[a].src, dst = d1.arcs[a].dst;
        bool forward = dst == src + 1;
        g.arc_map[a] = forward ? succ_arc.at(src % m) : pred_arc.at(src % m);
    }
    return g;
}

} // namespace

QuasiFixture path_over_ring(int path_len, int ring_m, int radius) {
    if (ring_m < 1) throw std::invalid_argument("path_over_ring: ring size must be >= 1");
    if (path_len < 3) throw std::invalid_argument("path_over_ring: path needs >= 3 vertices");
    GeneratorSpec spec;
    spec.shape = GeneratorSpec::Path;
    spec.n = path_len;
    spec.labeling = GeneratorSpec::Anonymous;
    spec.sources = GeneratorSpec::Unshared;
    QuasiFixture f;
    f.d1 = build_dir(generate(spec));
    for (auto& v : f.d1.vertices) v.source.clear();
    f.d0 = ring_digraph(ring_m);
    f.center = (path_len - 1) / 2;
    f.radius = radius;
    f.gamma = line_mod_map(f.d1, f.d0);
    return f;
}

QuasiFixture ring_over_ring(int total_n, int ring_m, int radius) {
    if (ring_m < 1 || total_n % ring_m != 0)
        throw std::invalid_argument("ring_over_ring: total size must be a multiple of base size");
    QuasiFixture f;
    f.d1 = ring_digraph(total_n);
    f.d0 = ring_digraph(ring_m);
    f.center = 0;
    f.radius = radius;
    f.gamma = ring_mod_covering(f.d1, f.d0);
    return f;
}

} // namespace anet
