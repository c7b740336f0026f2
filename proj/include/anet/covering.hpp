// Symmetric coverings, minimal bases, B-minimality, quasi-coverings and
// sheet counting: the structural predicates behind the election results.
#pragma once

#include <optional>
#include <string>
#include <vector>

#include "anet/graph.hpp"
#include "anet/randomness.hpp"

namespace anet {

struct CoveringWitness {
    Homomorphism phi;
    int sheet_count = 0;
};

struct CoveringCheck {
    bool accepted = false;
    std::string reason;          // first failure when rejected
    CoveringWitness witness;     // valid when accepted
};

// Accepts iff phi is a label-preserving homomorphism total -> base that is
// locally bijective on in- and out-arcs at every vertex, commutes with Sym,
// and is surjective. with_sources extends label preservation to B-classes.
CoveringCheck is_symmetric_covering(const SymDigraph& total, const SymDigraph& base,
                                    const Homomorphism& phi, bool with_sources = true);

struct MinimalBaseResult {
    SymDigraph base;
    Homomorphism phi;            // quotient projection, passes is_symmetric_covering
    bool minimal = false;        // |base| == |d|
};

// Quotient by the coarsest partition stable under labeled-neighborhood
// refinement. with_sources folds source classes into the initial partition
// (B-minimality). The projection is re-verified before returning.
MinimalBaseResult minimal_base(const SymDigraph& d, bool with_sources = true);

bool is_b_minimal(const LabeledGraph& g);

struct QuasiCoveringWitness {
    const SymDigraph* d1 = nullptr;
    const SymDigraph* d0 = nullptr;
    int center = 0;
    int radius = 0;
    Homomorphism gamma;          // defined at least on Ball(d1, center, radius)
};

struct QuasiCoveringCheck {
    bool accepted = false;
    std::string reason;
};

// Local criterion for quasi-coverings: gamma is a label-preserving
// homomorphism on the ball, Sym-compatible there, injective on the ball arcs
// at every ball vertex, and surjective onto the base arcs at every vertex of
// the radius r-1 ball. Throws if gamma is undefined somewhere on the ball.
QuasiCoveringCheck is_quasi_covering(const QuasiCoveringWitness& w, bool with_sources = true);

// Proper iff Ball(center, radius-1) is not all of d1. (A non-proper
// quasi-covering is a covering.)
bool quasi_covering_proper(const QuasiCoveringWitness& w);

// Minimal over base vertices of the number of preimages whose 1-ball lies
// inside the witness ball. Throws std::invalid_argument if the witness fails
// is_quasi_covering.
int sheets(const QuasiCoveringWitness& w, bool with_sources = true);

// Exhaustively enumerates vertex partitions, keeps those whose forced
// quotient map passes is_symmetric_covering, and returns the bases deduped
// up to isomorphism. Test oracle for minimal_base; guarded to small inputs.
std::vector<SymDigraph> brute_force_bases(const SymDigraph& d, int max_vertices = 8,
                                          bool with_sources = true);

// The adversarial source layout under which executions lift (Lemma 3.1
// setting): every total vertex v joins the class of phi(v), with the base
// class seeds. Rejects phi that is not an accepted covering projection.
SourceAssignment fiber_shared_assignment(const SymDigraph& total, const SymDigraph& base,
                                         const Homomorphism& phi,
                                         const SourceAssignment& base_assignment);

} // namespace anet
