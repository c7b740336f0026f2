// Randomized Mazurkiewicz enumeration/election with known network size.
//
// Three rules: I (wake-up: take number 1, draw a bit, seed the mailbox,
// broadcast), R (receive: merge mailboxes, renumber when beaten on the own
// number, refresh the view on the receiving port, re-add the own record,
// broadcast iff the mailbox changed), C (spontaneous: extend the bit
// sequence and broadcast; enabled while the mailbox is coherent and the
// terminal number has not been observed). A node is ELECTED when its number
// reaches the known size, NON-ELECTED once that number shows up in its
// mailbox; both are absorbing.
#pragma once

#include <memory>
#include <optional>
#include <string>

#include "anet/mailbox.hpp"

namespace anet {

enum class Decision { Undecided, Elected, NonElected };

inline const char* to_string(Decision d) {
    switch (d) {
        case Decision::Elected: return "ELECTED";
        case Decision::NonElected: return "NON-ELECTED";
        default: return "UNDECIDED";
    }
}

// Cached coherence/D_M analysis, keyed by the mailbox version.
struct MailboxAnalysis {
    std::uint64_t version = ~0ull;
    bool coherent = false;
    std::vector<MailboxEntry> smax;
    std::shared_ptr<const SymDigraph> dm;  // built when coherent
    bool dm_valid = false;                 // passes validate_digraph
    int dm_max_number = 0;
};

struct MMessage {
    int n = 0;
    LabelId l = kBottomLabel;
    BitSeq b;
    Mailbox mbox;
    bool operator==(const MMessage& o) const {
        return n == o.n && l == o.l && b == o.b && mbox == o.mbox;
    }
};

struct MState {
    LabelId label = kBottomLabel;
    int degree = 0;
    int number = 0;
    BitSeq bits;
    View view;
    Mailbox mailbox;
    Decision decision = Decision::Undecided;

    mutable MailboxAnalysis analysis_cache;

    bool operator==(const MState& o) const {
        return label == o.label && degree == o.degree && number == o.number && bits == o.bits &&
               view == o.view && mailbox == o.mailbox && decision == o.decision;
    }
    std::string serialize(bool with_bits = true) const;
};

// Recomputes (or reuses) coherence and D_M for the state's mailbox.
const MailboxAnalysis& analyze_mailbox(const MState& s, const LabelTable& labels);

class MAlgorithm {
public:
    using State = MState;
    using Payload = MMessage;

    MAlgorithm(int n_total, std::shared_ptr<const LabelTable> labels)
        : n_total_(n_total), labels_(std::move(labels)) {}

    int n_total() const { return n_total_; }
    const LabelTable& labels() const { return *labels_; }

    State initial_state(const std::string& label, int degree) const;

    bool wakeup_guard(const State& s) const { return s.number == 0; }
    bool spontaneous_guard(const State& s) const;

    template <class Drawer>
    std::optional<Payload> on_wakeup(State& s, Drawer&& draw) const {
        s.number = 1;
        s.bits.append(draw());
        s.mailbox = Mailbox();
        s.mailbox.add({s.number, s.label, s.bits, View::from_entries({})});
        update_decision(s);
        return Payload{s.number, s.label, s.bits, s.mailbox};
    }

    template <class Drawer>
    std::optional<Payload> on_receive(State& s, const Payload& msg, int p, int q, Drawer&&) const {
        bool changed = s.mailbox.merge(msg.mbox);
        bool beaten = false;
        for (const auto& e : s.mailbox.entries()) {
            if (e.n == s.number &&
                compare_keys(s.label, s.bits, s.view, e.l, e.b, e.N) < 0) {
                beaten = true;
                break;
            }
        }
        if (s.number == 0 || beaten) s.number = 1 + s.mailbox.max_number();
        s.view.replace_port(q, {msg.n, msg.l, msg.b, p, q});
        changed |= s.mailbox.add({s.number, s.label, s.bits, s.view});
        update_decision(s);
        if (changed) return Payload{s.number, s.label, s.bits, s.mailbox};
        return std::nullopt;
    }

    template <class Drawer>
    std::optional<Payload> on_spontaneous(State& s, Drawer&& draw) const {
        s.bits.append(draw());
        return Payload{s.number, s.label, s.bits, s.mailbox};
    }

private:
    void update_decision(State& s) const {
        if (s.decision != Decision::Undecided) return;  // absorbing
        if (s.number == n_total_)
            s.decision = Decision::Elected;
        else if (s.mailbox.has_number(n_total_))
            s.decision = Decision::NonElected;
    }

    int n_total_ = 0;
    std::shared_ptr<const LabelTable> labels_;
};

enum class Outcome { Correct, MultipleElected, NoneElected, Undecided };

inline const char* to_string(Outcome o) {
    switch (o) {
        case Outcome::Correct: return "Correct";
        case Outcome::MultipleElected: return "MultipleElected";
        case Outcome::NoneElected: return "NoneElected";
        default: return "Undecided";
    }
}

struct OutcomeReport {
    Outcome outcome = Outcome::Undecided;
    int elected_vertex = -1;  // valid for Correct
};

template <class State>
OutcomeReport evaluate_outcome(const std::vector<State>& finals) {
    OutcomeReport r;
    int elected = 0;
    for (std::size_t v = 0; v < finals.size(); ++v) {
        if (finals[v].decision == Decision::Undecided) {
            r.outcome = Outcome::Undecided;
            return r;
        }
        if (finals[v].decision == Decision::Elected) {
            ++elected;
            r.elected_vertex = static_cast<int>(v);
        }
    }
    if (elected == 1)
        r.outcome = Outcome::Correct;
    else if (elected > 1)
        r.outcome = Outcome::MultipleElected;
    else
        r.outcome = Outcome::NoneElected;
    if (r.outcome != Outcome::Correct) r.elected_vertex = -1;
    return r;
}

} // namespace anet
