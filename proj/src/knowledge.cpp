#include "anet/knowledge.hpp"

#include <map>
#include <stdexcept>

#include "anet/covering.hpp"
#include "anet/iso.hpp"

namespace anet {

Knowledge Knowledge::parse(const std::string& text) {
    Knowledge k;
    auto colon = text.find(':');
    std::string head = text.substr(0, colon);
    std::string arg = colon == std::string::npos ? "" : text.substr(colon + 1);
    auto want_int = [&](KnowledgeKind kind, int min_value) {
        k.kind = kind;
        try {
            k.param = std::stoi(arg);
        } catch (...) {
            throw std::invalid_argument("knowledge \"" + text + "\": integer argument expected");
        }
        if (k.param < min_value)
            throw std::invalid_argument("knowledge \"" + text + "\": argument must be >= " +
                                        std::to_string(min_value));
    };
    if (head == "none")
        k.kind = KnowledgeKind::NoKnowledge;
    else if (head == "exact-size")
        want_int(KnowledgeKind::ExactSize, 1);
    else if (head == "bound")
        want_int(KnowledgeKind::SizeBound, 1);
    else if (head == "two-approx")
        want_int(KnowledgeKind::TwoApprox, 1);
    else if (head == "bk")
        want_int(KnowledgeKind::BoundedSharing, 1);
    else if (head == "topology") {
        k.kind = KnowledgeKind::Topology;
        if (arg.empty()) throw std::invalid_argument("knowledge topology: file path expected");
        k.topology_path = arg;
    } else {
        throw std::invalid_argument("unknown knowledge \"" + text + "\"");
    }
    return k;
}

std::string Knowledge::str() const {
    switch (kind) {
        case KnowledgeKind::NoKnowledge: return "none";
        case KnowledgeKind::SizeBound: return "bound:" + std::to_string(param);
        case KnowledgeKind::TwoApprox: return "two-approx:" + std::to_string(param);
        case KnowledgeKind::ExactSize: return "exact-size:" + std::to_string(param);
        case KnowledgeKind::Topology: return "topology:" + topology_path;
        case KnowledgeKind::BoundedSharing: return "bk:" + std::to_string(param);
    }
    return "?";
}

bool family_contains(const Knowledge& f, const SymDigraph& d) {
    int n = d.num_vertices();
    switch (f.kind) {
        case KnowledgeKind::NoKnowledge:
            return true;
        case KnowledgeKind::SizeBound:
            return n <= f.param;
        case KnowledgeKind::TwoApprox:
            return 2 * n > f.param && n <= f.param;
        case KnowledgeKind::ExactSize:
            return n == f.param;
        case KnowledgeKind::Topology:
            if (!f.topology) throw std::invalid_argument("topology knowledge has no digraph loaded");
            return isomorphic(d, *f.topology);
        case KnowledgeKind::BoundedSharing: {
            // The sharing classes must be readable from the labels: when the
            // digraph carries explicit source classes, labels and classes
            // must determine each other; otherwise labels stand in for them.
            bool has_sources = false;
            for (const auto& v : d.vertices)
                if (!v.source.empty()) has_sources = true;
            std::map<std::string, int> by_class;
            if (has_sources) {
                std::map<std::string, std::string> l2s, s2l;
                for (const auto& v : d.vertices) {
                    auto [it1, f1] = l2s.emplace(v.label, v.source);
                    if (!f1 && it1->second != v.source) return false;
                    auto [it2, f2] = s2l.emplace(v.source, v.label);
                    if (!f2 && it2->second != v.label) return false;
                }
                for (const auto& v : d.vertices) ++by_class[v.source];
            } else {
                for (const auto& v : d.vertices) ++by_class[v.label];
            }
            int sharing = 0;
            for (const auto& v : d.vertices)
                if (by_class[has_sources ? v.source : v.label] > 1) ++sharing;
            return sharing <= f.param;
        }
    }
    return false;
}

int tau_of(const Knowledge& f, const SymDigraph& d) {
    switch (f.kind) {
        case KnowledgeKind::BoundedSharing:
            return (f.param + 1) * d.num_vertices();
        case KnowledgeKind::TwoApprox:
        case KnowledgeKind::ExactSize:
        case KnowledgeKind::Topology:
            return 2 * d.num_vertices();
        case KnowledgeKind::SizeBound:
            return 2 * f.param;  // uniform over the family
        case KnowledgeKind::NoKnowledge:
            throw std::invalid_argument("no tau function exists without knowledge");
    }
    throw std::invalid_argument("tau_of: unknown kind");
}

ElectionMode decide_mode(const Knowledge& f, const std::vector<const SymDigraph*>& corpus) {
    switch (f.kind) {
        case KnowledgeKind::NoKnowledge:
            return ElectionMode::Refuse;
        case KnowledgeKind::SizeBound:
        case KnowledgeKind::BoundedSharing:
            // coverings stay inside these families, so only proper
            // quasi-coverings are excluded
            return ElectionMode::MonteCarlo;
        case KnowledgeKind::TwoApprox:
        case KnowledgeKind::ExactSize:
        case KnowledgeKind::Topology:
            for (const auto* d : corpus)
                if (!minimal_base(*d, /*with_sources=*/true).minimal) return ElectionMode::MonteCarlo;
            return ElectionMode::LasVegas;
    }
    return ElectionMode::Refuse;
}

} // namespace anet
