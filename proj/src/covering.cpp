#include "anet/covering.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <stdexcept>

#include "anet/iso.hpp"

namespace anet {

CoveringCheck is_symmetric_covering(const SymDigraph& total, const SymDigraph& base,
                                    const Homomorphism& phi, bool with_sources) {
    CoveringCheck c;
    auto reject = [&](const std::string& why) {
        c.accepted = false;
        c.reason = why;
        return c;
    };
    if (static_cast<int>(phi.vertex_map.size()) != total.num_vertices() ||
        static_cast<int>(phi.arc_map.size()) != total.num_arcs())
        throw std::invalid_argument("is_symmetric_covering: map does not match domain");
    for (int v = 0; v < total.num_vertices(); ++v)
        if (phi.vertex_map[v] < 0 || phi.vertex_map[v] >= base.num_vertices())
            throw std::invalid_argument("is_symmetric_covering: vertex map not total into base");
    for (int a = 0; a < total.num_arcs(); ++a)
        if (phi.arc_map[a] < 0 || phi.arc_map[a] >= base.num_arcs())
            throw std::invalid_argument("is_symmetric_covering: arc map not total into base");

    auto hrep = validate_homomorphism(total, base, phi, with_sources);
    if (!hrep.ok()) return reject(hrep.joined());

    // Sym-compatibility
    for (int a = 0; a < total.num_arcs(); ++a)
        if (phi.arc_map[total.sym[a]] != base.sym[phi.arc_map[a]])
            return reject("phi does not commute with Sym at arc " + std::to_string(a));

    // Local bijectivity: for each base arc a' and each preimage of its target
    // (resp. source), exactly one incident arc maps to a'.
    std::vector<std::vector<int>> out(total.num_vertices()), in(total.num_vertices());
    for (int a = 0; a < total.num_arcs(); ++a) {
        out[total.arcs[a].src].push_back(a);
        in[total.arcs[a].dst].push_back(a);
    }
    for (int v = 0; v < total.num_vertices(); ++v) {
        std::set<int> out_images, in_images;
        for (int a : out[v])
            if (!out_images.insert(phi.arc_map[a]).second)
                return reject("phi not injective on out-arcs of \"" + total.vertices[v].id + "\"");
        for (int a : in[v])
            if (!in_images.insert(phi.arc_map[a]).second)
                return reject("phi not injective on in-arcs of \"" + total.vertices[v].id + "\"");
        int w = phi.vertex_map[v];
        int out_deg_base = 0, in_deg_base = 0;
        for (const auto& arc : base.arcs) {
            if (arc.src == w) ++out_deg_base;
            if (arc.dst == w) ++in_deg_base;
        }
        if (static_cast<int>(out_images.size()) != out_deg_base)
            return reject("phi not surjective on out-arcs of \"" + total.vertices[v].id + "\"");
        if (static_cast<int>(in_images.size()) != in_deg_base)
            return reject("phi not surjective on in-arcs of \"" + total.vertices[v].id + "\"");
    }

    // Global surjectivity and constant fiber size
    std::vector<int> fiber(base.num_vertices(), 0);
    for (int v = 0; v < total.num_vertices(); ++v) ++fiber[phi.vertex_map[v]];
    int q = fiber.empty() ? 0 : fiber[0];
    for (int w = 0; w < base.num_vertices(); ++w) {
        if (fiber[w] == 0) return reject("phi is not surjective onto base vertices");
        if (fiber[w] != q) return reject("fibers have unequal sizes");
    }
    std::vector<char> arc_hit(base.num_arcs(), 0);
    for (int a = 0; a < total.num_arcs(); ++a) arc_hit[phi.arc_map[a]] = 1;
    for (int b = 0; b < base.num_arcs(); ++b)
        if (!arc_hit[b]) return reject("phi is not surjective onto base arcs");

    c.accepted = true;
    c.witness.phi = phi;
    c.witness.sheet_count = q;
    return c;
}

namespace {

// Builds the quotient forced by a vertex partition, or returns nothing when
// the partition is not stable (members disagree on labels or signatures).
std::optional<MinimalBaseResult> quotient_by_partition(const SymDigraph& d,
                                                       const std::vector<int>& cls,
                                                       int num_classes, bool with_sources) {
    auto out = d.out_arcs();
    // representative = first member of each class
    std::vector<int> rep(num_classes, -1);
    for (int v = 0; v < d.num_vertices(); ++v)
        if (rep[cls[v]] < 0) rep[cls[v]] = v;

    // consistency: identical labels and out-signatures {(p, q, cls(dst))}
    for (int v = 0; v < d.num_vertices(); ++v) {
        int r = rep[cls[v]];
        if (d.vertices[v].label != d.vertices[r].label) return std::nullopt;
        if (with_sources && d.vertices[v].source != d.vertices[r].source) return std::nullopt;
        if (out[v].size() != out[r].size()) return std::nullopt;
        for (std::size_t i = 0; i < out[v].size(); ++i) {
            const auto& av = d.arcs[out[v][i]];
            const auto& ar = d.arcs[out[r][i]];
            if (av.p != ar.p || av.q != ar.q || cls[av.dst] != cls[ar.dst]) return std::nullopt;
        }
    }

    MinimalBaseResult res;
    for (int c = 0; c < num_classes; ++c) {
        std::string id;
        for (int v = 0; v < d.num_vertices(); ++v)
            if (cls[v] == c) id += (id.empty() ? "" : "+") + d.vertices[v].id;
        res.base.vertices.push_back(
            {id, d.vertices[rep[c]].label, with_sources ? d.vertices[rep[c]].source : std::string()});
    }
    // quotient arcs: one per (class, out-port); indexed for the forced phi
    std::map<std::pair<int, int>, int> arc_of;  // (class, p) -> base arc
    for (int c = 0; c < num_classes; ++c) {
        for (int a : out[rep[c]]) {
            const auto& arc = d.arcs[a];
            arc_of[{c, arc.p}] = res.base.num_arcs();
            res.base.arcs.push_back({c, cls[arc.dst], arc.p, arc.q});
        }
    }
    res.base.sym.assign(res.base.num_arcs(), -1);
    for (int b = 0; b < res.base.num_arcs(); ++b) {
        auto it = arc_of.find({res.base.arcs[b].dst, res.base.arcs[b].q});
        if (it == arc_of.end()) return std::nullopt;
        int partner = it->second;
        if (res.base.arcs[partner].q != res.base.arcs[b].p ||
            res.base.arcs[partner].dst != res.base.arcs[b].src)
            return std::nullopt;
        res.base.sym[b] = partner;
    }
    res.phi.vertex_map = cls;
    res.phi.arc_map.assign(d.num_arcs(), -1);
    for (int a = 0; a < d.num_arcs(); ++a)
        res.phi.arc_map[a] = arc_of.at({cls[d.arcs[a].src], d.arcs[a].p});
    res.minimal = (num_classes == d.num_vertices());

    auto check = is_symmetric_covering(d, res.base, res.phi, with_sources);
    if (!check.accepted) return std::nullopt;
    return res;
}

} // namespace

MinimalBaseResult minimal_base(const SymDigraph& d, bool with_sources) {
    auto rep = validate_digraph(d);
    if (!rep.ok()) throw std::invalid_argument("minimal_base: invalid digraph: " + rep.joined());

    auto out = d.out_arcs();
    int n = d.num_vertices();
    // initial partition: vertex label (and source class when requested)
    std::vector<int> cls(n, 0);
    {
        std::map<std::pair<std::string, std::string>, int> index;
        for (int v = 0; v < n; ++v) {
            auto key = std::make_pair(d.vertices[v].label,
                                      with_sources ? d.vertices[v].source : std::string());
            auto [it, fresh] = index.emplace(key, static_cast<int>(index.size()));
            cls[v] = it->second;
        }
    }
    // refine until stable: signature = class + sorted (p, q, cls(dst)) over out-arcs
    for (;;) {
        std::map<std::vector<int>, int> index;
        std::vector<int> next(n);
        for (int v = 0; v < n; ++v) {
            std::vector<int> sig{cls[v]};
            for (int a : out[v]) {
                sig.push_back(d.arcs[a].p);
                sig.push_back(d.arcs[a].q);
                sig.push_back(cls[d.arcs[a].dst]);
            }
            auto [it, fresh] = index.emplace(std::move(sig), static_cast<int>(index.size()));
            next[v] = it->second;
        }
        bool changed = false;
        for (int v = 0; v < n; ++v) changed |= (next[v] != cls[v]);
        cls = std::move(next);
        if (!changed) break;
    }
    int num_classes = 1 + *std::max_element(cls.begin(), cls.end());
    auto res = quotient_by_partition(d, cls, num_classes, with_sources);
    if (!res)
        throw std::logic_error("minimal_base: stable partition did not yield a covering quotient");
    return *res;
}

bool is_b_minimal(const LabeledGraph& g) {
    auto d = build_dir(g);
    return minimal_base(d, /*with_sources=*/true).minimal;
}

QuasiCoveringCheck is_quasi_covering(const QuasiCoveringWitness& w, bool with_sources) {
    QuasiCoveringCheck c;
    auto reject = [&](const std::string& why) {
        c.accepted = false;
        c.reason = why;
        return c;
    };
    const SymDigraph& d1 = *w.d1;
    const SymDigraph& d0 = *w.d0;
    if (w.center < 0 || w.center >= d1.num_vertices())
        throw std::invalid_argument("is_quasi_covering: unknown center");
    if (w.radius < 0) throw std::invalid_argument("is_quasi_covering: negative radius");
    if (static_cast<int>(w.gamma.vertex_map.size()) != d1.num_vertices() ||
        static_cast<int>(w.gamma.arc_map.size()) != d1.num_arcs())
        throw std::invalid_argument("is_quasi_covering: map does not match domain");

    Ball b = ball(d1, w.center, w.radius);
    for (int v : b.vertex_list)
        if (w.gamma.vertex_map[v] < 0)
            throw std::invalid_argument("is_quasi_covering: gamma undefined at ball vertex \"" +
                                        d1.vertices[v].id + "\"");
    for (int a : b.arc_list)
        if (w.gamma.arc_map[a] < 0)
            throw std::invalid_argument("is_quasi_covering: gamma undefined at ball arc " +
                                        std::to_string(a));

    // homomorphism + label preservation, restricted to the ball
    for (int v : b.vertex_list) {
        int img = w.gamma.vertex_map[v];
        if (img >= d0.num_vertices()) return reject("vertex image out of range");
        if (d1.vertices[v].label != d0.vertices[img].label)
            return reject("label not preserved at \"" + d1.vertices[v].id + "\"");
        if (with_sources && d1.vertices[v].source != d0.vertices[img].source)
            return reject("source class not preserved at \"" + d1.vertices[v].id + "\"");
    }
    for (int a : b.arc_list) {
        int img = w.gamma.arc_map[a];
        if (img >= d0.num_arcs()) return reject("arc image out of range");
        const auto& arc = d1.arcs[a];
        const auto& bimg = d0.arcs[img];
        if (bimg.src != w.gamma.vertex_map[arc.src] || bimg.dst != w.gamma.vertex_map[arc.dst])
            return reject("incidence not preserved at arc " + std::to_string(a));
        if (bimg.p != arc.p || bimg.q != arc.q)
            return reject("arc label not preserved at arc " + std::to_string(a));
        // (i) Sym-compatibility (Sym(a) is a ball arc whenever a is)
        if (w.gamma.arc_map[d1.sym[a]] != d0.sym[img])
            return reject("gamma does not commute with Sym at arc " + std::to_string(a));
    }

    // (ii) injectivity on ball arcs at every ball vertex
    for (int v : b.vertex_list) {
        std::set<int> out_img, in_img;
        for (int a : b.arc_list) {
            if (d1.arcs[a].src == v && !out_img.insert(w.gamma.arc_map[a]).second)
                return reject("gamma not injective on out-arcs of \"" + d1.vertices[v].id + "\"");
            if (d1.arcs[a].dst == v && !in_img.insert(w.gamma.arc_map[a]).second)
                return reject("gamma not injective on in-arcs of \"" + d1.vertices[v].id + "\"");
        }
    }

    // (iii) surjectivity at every vertex of the radius r-1 ball
    Ball inner = ball(d1, w.center, w.radius - 1);
    for (int v : inner.vertex_list) {
        std::set<int> out_img, in_img;
        for (int a : b.arc_list) {
            if (d1.arcs[a].src == v) out_img.insert(w.gamma.arc_map[a]);
            if (d1.arcs[a].dst == v) in_img.insert(w.gamma.arc_map[a]);
        }
        int img = w.gamma.vertex_map[v];
        int out_deg = 0, in_deg = 0;
        for (const auto& arc : d0.arcs) {
            if (arc.src == img) ++out_deg;
            if (arc.dst == img) ++in_deg;
        }
        if (static_cast<int>(out_img.size()) != out_deg)
            return reject("gamma not surjective on out-arcs of \"" + d1.vertices[v].id + "\"");
        if (static_cast<int>(in_img.size()) != in_deg)
            return reject("gamma not surjective on in-arcs of \"" + d1.vertices[v].id + "\"");
    }

    c.accepted = true;
    return c;
}

bool quasi_covering_proper(const QuasiCoveringWitness& w) {
    Ball inner = ball(*w.d1, w.center, w.radius - 1);
    return static_cast<int>(inner.vertex_list.size()) != w.d1->num_vertices() ||
           static_cast<int>(inner.arc_list.size()) != w.d1->num_arcs();
}

int sheets(const QuasiCoveringWitness& w, bool with_sources) {
    auto check = is_quasi_covering(w, with_sources);
    if (!check.accepted)
        throw std::invalid_argument("sheets: witness is not a quasi-covering: " + check.reason);
    Ball b = ball(*w.d1, w.center, w.radius);
    std::vector<int> interior_preimages(w.d0->num_vertices(), 0);
    for (int v = 0; v < w.d1->num_vertices(); ++v) {
        if (w.gamma.vertex_map[v] < 0) continue;
        Ball unit = ball(*w.d1, v, 1);
        if (ball_subset(unit, b)) ++interior_preimages[w.gamma.vertex_map[v]];
    }
    return *std::min_element(interior_preimages.begin(), interior_preimages.end());
}

SourceAssignment fiber_shared_assignment(const SymDigraph& total, const SymDigraph& base,
                                         const Homomorphism& phi,
                                         const SourceAssignment& base_assignment) {
    auto check = is_symmetric_covering(total, base, phi, /*with_sources=*/false);
    if (!check.accepted)
        throw std::invalid_argument("fiber_shared_assignment: phi is not a covering: " + check.reason);
    if (base_assignment.num_vertices() != base.num_vertices())
        throw std::invalid_argument("fiber_shared_assignment: assignment does not match base");
    SourceAssignment lifted;
    lifted.class_name = base_assignment.class_name;
    lifted.class_seed = base_assignment.class_seed;
    lifted.class_of.resize(total.num_vertices());
    for (int v = 0; v < total.num_vertices(); ++v)
        lifted.class_of[v] = base_assignment.class_of[phi.vertex_map[v]];
    lifted.draw_count.assign(total.num_vertices(), 0);
    return lifted;
}

std::vector<SymDigraph> brute_force_bases(const SymDigraph& d, int max_vertices, bool with_sources) {
    if (d.num_vertices() > 10)
        throw std::invalid_argument("brute_force_bases: input too large for exhaustive search");
    auto rep = validate_digraph(d);
    if (!rep.ok()) throw std::invalid_argument("brute_force_bases: invalid digraph: " + rep.joined());

    int n = d.num_vertices();
    std::vector<SymDigraph> bases;
    std::set<std::string> seen;
    // restricted growth strings enumerate set partitions
    std::vector<int> a(n, 0);
    for (;;) {
        int num_classes = 1 + *std::max_element(a.begin(), a.end());
        if (num_classes <= max_vertices) {
            auto res = quotient_by_partition(d, a, num_classes, with_sources);
            if (res) {
                std::string canon = canonical_form(res->base, {with_sources});
                if (seen.insert(canon).second) bases.push_back(std::move(res->base));
            }
        }
        // next restricted growth string
        int i = n - 1;
        for (; i > 0; --i) {
            int cap = 1 + *std::max_element(a.begin(), a.begin() + i);
            if (a[i] < cap) break;
        }
        if (i == 0) break;
        ++a[i];
        std::fill(a.begin() + i + 1, a.end(), 0);
    }
    std::sort(bases.begin(), bases.end(),
              [](const SymDigraph& x, const SymDigraph& y) { return x.num_vertices() < y.num_vertices(); });
    return bases;
}

} // namespace anet
