#include "anet/json_io.hpp"

#include <fstream>
#include <map>
#include <sstream>
#include <stdexcept>

#include <json.hpp>

namespace anet {

using nlohmann::json;

std::string read_file(const std::string& path) {
    std::ifstream in(path, std::ios::binary);
    if (!in) throw std::runtime_error("cannot open \"" + path + "\"");
    std::ostringstream os;
    os << in.rdbuf();
    return os.str();
}

void write_file(const std::string& path, const std::string& content) {
    std::ofstream out(path, std::ios::binary);
    if (!out) throw std::runtime_error("cannot write \"" + path + "\"");
    out << content;
}

namespace {

// Line numbers (1-based) of the elements of a top-level JSON array field,
// found with a small brace scanner so violation messages can point at the
// offending vertex or edge.
std::vector<int> element_lines(const std::string& text, const std::string& key) {
    std::vector<int> lines;
    std::string needle = "\"" + key + "\"";
    std::size_t at = text.find(needle);
    if (at == std::string::npos) return lines;
    std::size_t open = text.find('[', at);
    if (open == std::string::npos) return lines;
    int line = 1;
    for (std::size_t i = 0; i <= open; ++i)
        if (text[i] == '\n') ++line;
    int depth = 0;
    bool in_string = false;
    for (std::size_t i = open + 1; i < text.size(); ++i) {
        char c = text[i];
        if (c == '\n') ++line;
        if (in_string) {
            if (c == '\\')
                ++i;
            else if (c == '"')
                in_string = false;
            continue;
        }
        if (c == '"') {
            in_string = true;
        } else if (c == '{') {
            if (depth == 0) lines.push_back(line);
            ++depth;
        } else if (c == '}') {
            --depth;
        } else if (c == ']' && depth == 0) {
            break;
        }
    }
    return lines;
}

int line_of(const std::vector<int>& lines, std::size_t index) {
    return index < lines.size() ? lines[index] : 0;
}

json parse_json(const std::string& text, const std::string& name) {
    try {
        return json::parse(text);
    } catch (const json::parse_error& e) {
        throw std::runtime_error(name + ": " + e.what());
    }
}

[[noreturn]] void fail_at(const std::string& name, int line, const std::string& what) {
    std::ostringstream os;
    os << name;
    if (line > 0) os << ":" << line;
    os << ": " << what;
    throw std::runtime_error(os.str());
}

} // namespace

LabeledGraph parse_graph(const std::string& text, const std::string& name) {
    json j = parse_json(text, name);
    auto vlines = element_lines(text, "vertices");
    auto elines = element_lines(text, "edges");
    if (!j.is_object() || !j.contains("vertices") || !j.contains("edges"))
        fail_at(name, 0, "expected an object with \"vertices\" and \"edges\"");

    LabeledGraph g;
    std::map<std::string, int> index;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& jv = j["vertices"][i];
        if (!jv.contains("id") || !jv["id"].is_string())
            fail_at(name, line_of(vlines, i), "vertex needs a string \"id\"");
        LabeledGraph::Vertex v;
        v.id = jv["id"].get<std::string>();
        v.label = jv.value("label", std::string("o"));
        v.source = jv.value("source", std::string());
        if (index.count(v.id)) fail_at(name, line_of(vlines, i), "duplicate vertex id \"" + v.id + "\"");
        index[v.id] = g.num_vertices();
        g.vertices.push_back(std::move(v));
    }
    for (std::size_t i = 0; i < j["edges"].size(); ++i) {
        const auto& je = j["edges"][i];
        for (const char* field : {"u", "v", "pu", "pv"})
            if (!je.contains(field))
                fail_at(name, line_of(elines, i), std::string("edge needs \"") + field + "\"");
        auto u = index.find(je["u"].get<std::string>());
        auto v = index.find(je["v"].get<std::string>());
        if (u == index.end() || v == index.end())
            fail_at(name, line_of(elines, i), "edge references an unknown vertex");
        g.edges.push_back({u->second, v->second, je["pu"].get<int>(), je["pv"].get<int>()});
    }
    auto rep = validate_graph(g);
    if (!rep.ok()) {
        // attach the line of the first offending edge if one is identifiable
        fail_at(name, 0, rep.joined());
    }
    return g;
}

LabeledGraph load_graph(const std::string& path) { return parse_graph(read_file(path), path); }

std::string graph_to_json(const LabeledGraph& g) {
    std::ostringstream os;
    os << "{\n  \"vertices\": [\n";
    for (int v = 0; v < g.num_vertices(); ++v) {
        json jv{{"id", g.vertices[v].id}, {"label", g.vertices[v].label}};
        if (!g.vertices[v].source.empty()) jv["source"] = g.vertices[v].source;
        os << "    " << jv.dump() << (v + 1 < g.num_vertices() ? "," : "") << "\n";
    }
    os << "  ],\n  \"edges\": [\n";
    for (std::size_t i = 0; i < g.edges.size(); ++i) {
        const auto& e = g.edges[i];
        json je{{"u", g.vertices[e.u].id},
                {"v", g.vertices[e.v].id},
                {"pu", e.pu},
                {"pv", e.pv}};
        os << "    " << je.dump() << (i + 1 < g.edges.size() ? "," : "") << "\n";
    }
    os << "  ]\n}\n";
    return os.str();
}

SymDigraph parse_digraph(const std::string& text, const std::string& name) {
    json j = parse_json(text, name);
    auto vlines = element_lines(text, "vertices");
    auto alines = element_lines(text, "arcs");
    if (!j.is_object() || !j.contains("vertices") || !j.contains("arcs"))
        fail_at(name, 0, "expected an object with \"vertices\" and \"arcs\"");
    SymDigraph d;
    std::map<std::string, int> vindex;
    for (std::size_t i = 0; i < j["vertices"].size(); ++i) {
        const auto& jv = j["vertices"][i];
        if (!jv.contains("id")) fail_at(name, line_of(vlines, i), "vertex needs an \"id\"");
        SymDigraph::Vertex v;
        v.id = jv["id"].get<std::string>();
        v.label = jv.value("label", std::string("o"));
        v.source = jv.value("source", std::string());
        if (vindex.count(v.id))
            fail_at(name, line_of(vlines, i), "duplicate vertex id \"" + v.id + "\"");
        vindex[v.id] = d.num_vertices();
        d.vertices.push_back(std::move(v));
    }
    std::map<std::string, int> aindex;
    for (std::size_t i = 0; i < j["arcs"].size(); ++i) {
        const auto& ja = j["arcs"][i];
        for (const char* field : {"id", "s", "t", "p", "q"})
            if (!ja.contains(field))
                fail_at(name, line_of(alines, i), std::string("arc needs \"") + field + "\"");
        auto s = vindex.find(ja["s"].get<std::string>());
        auto t = vindex.find(ja["t"].get<std::string>());
        if (s == vindex.end() || t == vindex.end())
            fail_at(name, line_of(alines, i), "arc references an unknown vertex");
        std::string id = ja["id"].get<std::string>();
        if (aindex.count(id)) fail_at(name, line_of(alines, i), "duplicate arc id \"" + id + "\"");
        aindex[id] = d.num_arcs();
        d.arcs.push_back({s->second, t->second, ja["p"].get<int>(), ja["q"].get<int>()});
    }
    d.sym.assign(d.num_arcs(), -1);
    if (!j.contains("sym") || !j["sym"].is_object()) fail_at(name, 0, "expected a \"sym\" object");
    for (const auto& [from, to] : j["sym"].items()) {
        auto a = aindex.find(from);
        auto b = aindex.find(to.get<std::string>());
        if (a == aindex.end() || b == aindex.end()) fail_at(name, 0, "sym references an unknown arc");
        d.sym[a->second] = b->second;
        d.sym[b->second] = a->second;
    }
    for (int a = 0; a < d.num_arcs(); ++a)
        if (d.sym[a] < 0) fail_at(name, 0, "sym undefined for some arc");
    auto rep = validate_digraph(d);
    if (!rep.ok()) fail_at(name, 0, rep.joined());
    return d;
}

SymDigraph load_digraph(const std::string& path) { return parse_digraph(read_file(path), path); }

std::string digraph_to_json(const SymDigraph& d) {
    json j;
    j["vertices"] = json::array();
    for (const auto& v : d.vertices) {
        json jv{{"id", v.id}, {"label", v.label}};
        if (!v.source.empty()) jv["source"] = v.source;
        j["vertices"].push_back(jv);
    }
    j["arcs"] = json::array();
    auto arc_id = [&](int a) {
        return d.vertices[d.arcs[a].src].id + "|" + std::to_string(d.arcs[a].p);
    };
    for (int a = 0; a < d.num_arcs(); ++a) {
        j["arcs"].push_back({{"id", arc_id(a)},
                             {"s", d.vertices[d.arcs[a].src].id},
                             {"t", d.vertices[d.arcs[a].dst].id},
                             {"p", d.arcs[a].p},
                             {"q", d.arcs[a].q}});
    }
    j["sym"] = json::object();
    for (int a = 0; a < d.num_arcs(); ++a)
        if (a <= d.sym[a]) j["sym"][arc_id(a)] = arc_id(d.sym[a]);
    return j.dump(2) + "\n";
}

SymDigraph load_any_digraph(const std::string& path) {
    std::string text = read_file(path);
    json j = parse_json(text, path);
    if (j.is_object() && j.contains("arcs")) return parse_digraph(text, path);
    return build_dir(parse_graph(text, path));
}

namespace {

std::string arc_key(const SymDigraph& d, int a) {
    return d.vertices[d.arcs[a].src].id + "|" + std::to_string(d.arcs[a].p);
}

std::map<std::string, int> arc_keys(const SymDigraph& d) {
    std::map<std::string, int> out;
    for (int a = 0; a < d.num_arcs(); ++a) out[arc_key(d, a)] = a;
    return out;
}

} // namespace

std::string homomorphism_to_json(const SymDigraph& dom, const SymDigraph& cod,
                                 const Homomorphism& h) {
    json j;
    j["vertex_map"] = json::object();
    for (int v = 0; v < dom.num_vertices(); ++v)
        if (h.vertex_map[v] >= 0)
            j["vertex_map"][dom.vertices[v].id] = cod.vertices[h.vertex_map[v]].id;
    j["arc_map"] = json::object();
    for (int a = 0; a < dom.num_arcs(); ++a)
        if (h.arc_map[a] >= 0) j["arc_map"][arc_key(dom, a)] = arc_key(cod, h.arc_map[a]);
    return j.dump(2) + "\n";
}

Homomorphism parse_homomorphism(const std::string& text, const SymDigraph& dom,
                                const SymDigraph& cod) {
    json j = parse_json(text, "<homomorphism>");
    Homomorphism h;
    h.vertex_map.assign(dom.num_vertices(), -1);
    h.arc_map.assign(dom.num_arcs(), -1);
    for (const auto& [from, to] : j.at("vertex_map").items()) {
        int u = dom.find_vertex(from);
        int w = cod.find_vertex(to.get<std::string>());
        if (u < 0 || w < 0) throw std::runtime_error("homomorphism references unknown vertex");
        h.vertex_map[u] = w;
    }
    auto dkeys = arc_keys(dom);
    auto ckeys = arc_keys(cod);
    for (const auto& [from, to] : j.at("arc_map").items()) {
        auto a = dkeys.find(from);
        auto b = ckeys.find(to.get<std::string>());
        if (a == dkeys.end() || b == ckeys.end())
            throw std::runtime_error("homomorphism references unknown arc \"" + from + "\"");
        h.arc_map[a->second] = b->second;
    }
    return h;
}

std::string schedule_to_json(const Schedule& s, const SymDigraph& d) {
    json j = json::array();
    for (const auto& e : s) {
        json je;
        switch (e.kind) {
            case EventKind::Wakeup: je["kind"] = "wakeup"; break;
            case EventKind::Deliver:
                je["kind"] = "deliver";
                je["port"] = e.port;
                break;
            case EventKind::Spontaneous:
                je["kind"] = "spontaneous";
                je["tag"] = "C";
                break;
        }
        je["vertex"] = d.vertices[e.vertex].id;
        j.push_back(je);
    }
    return j.dump(2) + "\n";
}

Schedule parse_schedule(const std::string& text, const SymDigraph& d) {
    json j = parse_json(text, "<schedule>");
    Schedule s;
    for (const auto& je : j) {
        Event e;
        std::string kind = je.at("kind").get<std::string>();
        int v = d.find_vertex(je.at("vertex").get<std::string>());
        if (v < 0) throw std::runtime_error("schedule references unknown vertex");
        e.vertex = v;
        if (kind == "wakeup")
            e.kind = EventKind::Wakeup;
        else if (kind == "deliver") {
            e.kind = EventKind::Deliver;
            e.port = je.at("port").get<int>();
        } else if (kind == "spontaneous")
            e.kind = EventKind::Spontaneous;
        else
            throw std::runtime_error("unknown schedule event kind \"" + kind + "\"");
        s.push_back(e);
    }
    return s;
}

Schedule load_schedule(const std::string& path, const SymDigraph& d) {
    return parse_schedule(read_file(path), d);
}

std::string drawlog_to_json(const DrawLog& log, const SymDigraph& d,
                            const SourceAssignment& sources) {
    json j = json::array();
    for (const auto& r : log) {
        j.push_back({{"vertex", d.vertices[r.vertex].id},
                     {"class", sources.class_name[r.source_class]},
                     {"index", r.index},
                     {"bit", r.bit}});
    }
    return j.dump() + "\n";
}

} // namespace anet
