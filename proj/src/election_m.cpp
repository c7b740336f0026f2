#include "anet/election_m.hpp"

#include <sstream>

namespace anet {

std::string MState::serialize(bool with_bits) const {
    std::ostringstream os;
    os << "l=" << label << ";n=" << number;
    if (with_bits) os << ";b=" << bits.str();
    os << ";N=[";
    for (const auto& e : view.entries()) {
        os << '(' << e.m << ',' << e.l << ',';
        if (with_bits) os << e.b.str();
        os << ',' << e.p << ',' << e.q << ')';
    }
    os << "];M=[";
    for (const auto& e : mailbox.entries()) {
        os << '(' << e.n << ',' << e.l << ',';
        if (with_bits) os << e.b.str();
        os << ",[";
        for (const auto& v : e.N.entries()) {
            os << '(' << v.m << ',' << v.l << ',';
            if (with_bits) os << v.b.str();
            os << ',' << v.p << ',' << v.q << ')';
        }
        os << "])";
    }
    os << "];d=" << to_string(decision);
    return os.str();
}

const MailboxAnalysis& analyze_mailbox(const MState& s, const LabelTable& labels) {
    MailboxAnalysis& cache = s.analysis_cache;
    if (cache.version == s.mailbox.version()) return cache;
    cache.version = s.mailbox.version();
    Coherence c = maximal_coherent(s.mailbox);
    cache.coherent = c.coherent;
    cache.smax = std::move(c.smax);
    cache.dm.reset();
    cache.dm_valid = false;
    cache.dm_max_number = 0;
    if (cache.coherent) {
        auto dm = std::make_shared<SymDigraph>(build_dm(cache.smax, labels));
        cache.dm_valid = validate_digraph(*dm).ok();
        cache.dm_max_number = 0;
        for (const auto& e : cache.smax) cache.dm_max_number = std::max(cache.dm_max_number, e.n);
        cache.dm = std::move(dm);
    }
    return cache;
}

MState MAlgorithm::initial_state(const std::string& label, int degree) const {
    MState s;
    s.label = labels_->id_of(label);
    s.degree = degree;
    s.number = 0;
    s.view = View::initial(degree);
    return s;
}

bool MAlgorithm::spontaneous_guard(const State& s) const {
    if (s.decision != Decision::Undecided) return false;
    if (s.mailbox.has_number(n_total_)) return false;
    return analyze_mailbox(s, *labels_).coherent;
}

} // namespace anet
