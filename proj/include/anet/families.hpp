// Graph and fixture generators: rings, paths, cliques, grids, random
// graphs, fibered covering pairs and quasi-covering witnesses. Generation is
// deterministic: identical specs give byte-identical graphs.
//
// Ring port convention, fixed globally: port 1 is the successor, port 2 the
// predecessor, so anonymous rings are maximally symmetric.
#pragma once

#include <cstdint>
#include <string>
#include <vector>

#include "anet/covering.hpp"
#include "anet/graph.hpp"

namespace anet {

struct GeneratorSpec {
    enum Shape { Ring, Path, Clique, Grid, Random } shape = Ring;
    int n = 0;                 // vertex count (rings, paths, cliques, random)
    int width = 0, height = 0; // grids
    int degree = 0;            // random graphs: target average degree
    std::uint64_t seed = 0;    // random graphs

    enum Labeling { Anonymous, Distinct, Pattern } labeling = Anonymous;
    std::vector<std::string> label_pattern;  // cycled over vertices

    enum Sources { Unshared, AllShared, Classes, OneUnshared } sources = Unshared;
    std::vector<std::string> source_classes;  // cycled over vertices

    // e.g. "ring:6,anon,classes=ababab", "clique:4,distinct,one-unshared",
    // "grid:3x2", "random:8,deg=3,seed=7,labels=xy"
    static GeneratorSpec parse(const std::string& text);
    std::string str() const;
};

LabeledGraph generate(const GeneratorSpec& spec);

struct CoveringPair {
    LabeledGraph total;
    LabeledGraph base;
    SymDigraph dir_total;
    SymDigraph dir_base;
    Homomorphism phi;  // dir_total -> dir_base, passes is_symmetric_covering
};

// Connected q-sheeted coverings from the generator's repertoire; rings lift
// to rings (C_{qn} over C_n). Other shapes are refused.
CoveringPair generate_covering_pair(const GeneratorSpec& base_spec, int sheets);

// The quotient of a consistently oriented ring: m >= 3 gives Dir(C_m),
// m = 2 the two-vertex double-arc digraph, m = 1 the single vertex with a
// Sym-paired loop pair. Labels/classes cycled from the patterns (may be
// empty for anonymous/unassigned).
SymDigraph ring_digraph(int m, const std::vector<std::string>& label_pattern = {},
                        const std::vector<std::string>& source_pattern = {});

// Index-mod covering projection between ring digraphs (total_n a multiple
// of base_m).
Homomorphism ring_mod_covering(const SymDigraph& total, const SymDigraph& base);

struct QuasiFixture {
    SymDigraph d1;
    SymDigraph d0;
    int center = 0;
    int radius = 0;
    Homomorphism gamma;

    QuasiCoveringWitness witness() const { return {&d1, &d0, center, radius, gamma}; }
};

// A long path looks like a ring up to the radius where its ends become
// visible: the index-mod map onto Dir(C_m), centered midway.
QuasiFixture path_over_ring(int path_len, int ring_m, int radius);

// A large ring over a small one; a covering, usable at any radius.
QuasiFixture ring_over_ring(int total_n, int ring_m, int radius);

} // namespace anet
