#include "anet/election_mtau.hpp"

#include <sstream>

namespace anet {

std::string MTState::serialize(bool with_bits) const {
    std::ostringstream os;
    os << MState::serialize(with_bits) << ";c=" << counter << ";A=[";
    for (std::size_t q = 0; q < neighbor_counter.size(); ++q)
        os << '(' << (q + 1) << ',' << neighbor_counter[q] << ')';
    os << ']';
    return os.str();
}

MTState MTauAlgorithm::initial_state(const std::string& label, int degree) const {
    MTState s;
    s.label = labels_->id_of(label);
    s.degree = degree;
    s.number = 0;
    s.view = View::initial(degree);
    s.counter = -1;
    s.neighbor_counter.assign(degree, -1);
    return s;
}

bool MTauAlgorithm::spontaneous_guard(const State& s) const {
    if (s.decision != Decision::Undecided) return false;
    const auto& a = analyze_mailbox(s, *labels_);
    if (!a.coherent) return false;
    // keep extending the bit sequence until the reconstruction is a family
    // member whose tau has been reached
    if (!a.dm_valid || !family_contains(knowledge_, *a.dm)) return true;
    return s.counter < tau_of(knowledge_, *a.dm);
}

} // namespace anet
