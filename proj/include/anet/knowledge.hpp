// Structural-knowledge descriptors: the family membership predicate and,
// where the characterizations supply one, the tau radius bound that lets
// M_tau detect termination.
#pragma once

#include <memory>
#include <string>
#include <vector>

#include "anet/graph.hpp"

namespace anet {

enum class KnowledgeKind { NoKnowledge, SizeBound, TwoApprox, ExactSize, Topology, BoundedSharing };

struct Knowledge {
    KnowledgeKind kind = KnowledgeKind::NoKnowledge;
    int param = 0;  // S for bounds/exact size, T for two-approx, K for sharing
    std::shared_ptr<const SymDigraph> topology;
    std::string topology_path;  // set by parse; caller loads the digraph

    // CLI strings: exact-size:N, bound:S, two-approx:T, topology:FILE, bk:K, none
    static Knowledge parse(const std::string& text);
    std::string str() const;

    bool has_tau() const { return kind != KnowledgeKind::NoKnowledge; }
};

bool family_contains(const Knowledge& f, const SymDigraph& d);

// Radius bound such that no (proper) quasi-covering of a family member with
// a larger radius stays in the family. SizeBound admits one for proper
// quasi-coverings only (coverings remain possible), so it is Monte Carlo
// only. Throws for NoKnowledge.
int tau_of(const Knowledge& f, const SymDigraph& d);

enum class ElectionMode { LasVegas, MonteCarlo, Refuse };

inline const char* to_string(ElectionMode m) {
    switch (m) {
        case ElectionMode::LasVegas: return "LasVegas";
        case ElectionMode::MonteCarlo: return "MonteCarlo";
        default: return "Refuse";
    }
}

// LasVegas needs a tau excluding every distinct quasi-covering plus
// B-minimality of the whole corpus; bounds give Monte Carlo; no knowledge
// refuses.
ElectionMode decide_mode(const Knowledge& f, const std::vector<const SymDigraph*>& corpus);

} // namespace anet
