#include "anet/verifier.hpp"

namespace anet {

SourceAssignment assignment_for(const SymDigraph& d, std::uint64_t master_seed) {
    std::vector<std::string> classes(d.num_vertices());
    bool any = false;
    for (const auto& v : d.vertices)
        if (!v.source.empty()) any = true;
    for (int v = 0; v < d.num_vertices(); ++v)
        classes[v] = any ? d.vertices[v].source : "s" + std::to_string(v);
    if (any)
        for (const auto& v : d.vertices)
            if (v.source.empty())
                throw std::invalid_argument("assignment_for: vertex \"" + v.id +
                                            "\" has no source class");
    return SourceAssignment::from_classes(classes, master_seed);
}

std::shared_ptr<const LabelTable> joint_label_table(const SymDigraph& a, const SymDigraph& b) {
    std::vector<std::string> labels;
    for (const auto& v : a.vertices) labels.push_back(v.label);
    for (const auto& v : b.vertices) labels.push_back(v.label);
    return std::make_shared<const LabelTable>(LabelTable::from_strings(std::move(labels)));
}

CheckReport impossibility_witness(const SymDigraph& total, const SymDigraph& base,
                                  const Homomorphism& phi, int n_total_param, int rounds,
                                  const std::vector<std::uint64_t>& seeds) {
    auto covering = is_symmetric_covering(total, base, phi, /*with_sources=*/false);
    if (!covering.accepted)
        throw std::invalid_argument("impossibility_witness: phi rejected: " + covering.reason);
    if (covering.witness.sheet_count < 2)
        throw std::invalid_argument("impossibility_witness: needs at least 2 sheets");

    CheckReport report;
    report.check = "impossibility";
    {
        std::ostringstream os;
        os << total.num_vertices() << "-vertex total over " << base.num_vertices()
           << "-vertex base, n_total=" << n_total_param << ", " << seeds.size() << " seeds";
        report.instance = os.str();
    }
    report.pass = true;

    MAlgorithm alg(n_total_param, joint_label_table(total, base));
    for (std::uint64_t seed : seeds) {
        auto lifted = lift_and_compare(total, base, phi, alg, rounds, seed);
        if (!lifted.equality.pass) {
            report.pass = false;
            report.seed = seed;
            report.counterexample = lifted.equality.counterexample;
            return report;
        }
        auto outcome = evaluate_outcome(lifted.lifted_trace.final_states);
        if (outcome.outcome == Outcome::Correct) {
            report.pass = false;
            report.seed = seed;
            report.counterexample = Counterexample{0, outcome.elected_vertex,
                                                   "lifted run produced a Correct election"};
            return report;
        }
        if (outcome.outcome != Outcome::Undecided && outcome.outcome != Outcome::MultipleElected) {
            report.pass = false;
            report.seed = seed;
            report.counterexample =
                Counterexample{0, -1, std::string("terminal outcome was ") + to_string(outcome.outcome)};
            return report;
        }
    }
    return report;
}

} // namespace anet
