// Algorithm M extended with generalized-SSP counters for arbitrary
// structural knowledge. c(v) tracks the radius up to which the computation
// around v is stable on the current mailbox; a node decides once c(v)
// reaches tau of the digraph it reconstructs, provided that digraph belongs
// to the knowledge family.
#pragma once

#include "anet/election_m.hpp"
#include "anet/knowledge.hpp"

namespace anet {

struct MTMessage {
    int n = 0;
    LabelId l = kBottomLabel;
    BitSeq b;
    Mailbox mbox;
    int a = -1;  // sender's counter at send time
    bool operator==(const MTMessage& o) const {
        return n == o.n && l == o.l && b == o.b && mbox == o.mbox && a == o.a;
    }
};

struct MTState : MState {
    int counter = -1;                  // c(v)
    std::vector<int> neighbor_counter; // A(v), indexed by port-1, -1 = unknown

    bool operator==(const MTState& o) const {
        return static_cast<const MState&>(*this) == static_cast<const MState&>(o) &&
               counter == o.counter && neighbor_counter == o.neighbor_counter;
    }
    std::string serialize(bool with_bits = true) const;
};

class MTauAlgorithm {
public:
    using State = MTState;
    using Payload = MTMessage;

    MTauAlgorithm(Knowledge knowledge, std::shared_ptr<const LabelTable> labels)
        : knowledge_(std::move(knowledge)), labels_(std::move(labels)) {
        if (!knowledge_.has_tau())
            throw std::invalid_argument(
                "M_tau cannot run without knowledge: no tau function exists");
    }

    const Knowledge& knowledge() const { return knowledge_; }
    const LabelTable& labels() const { return *labels_; }

    State initial_state(const std::string& label, int degree) const;

    bool wakeup_guard(const State& s) const { return s.number == 0; }
    bool spontaneous_guard(const State& s) const;

    template <class Drawer>
    std::optional<Payload> on_wakeup(State& s, Drawer&& draw) const {
        s.number = 1;
        s.counter = -1;
        s.bits.append(draw());
        s.mailbox = Mailbox();
        s.mailbox.add({s.number, s.label, s.bits, View::from_entries({})});
        update_decision(s);
        return Payload{s.number, s.label, s.bits, s.mailbox, s.counter};
    }

    template <class Drawer>
    std::optional<Payload> on_receive(State& s, const Payload& msg, int p, int q, Drawer&&) const {
        int c_old = s.counter;
        bool changed = s.mailbox.merge(msg.mbox);
        bool beaten = false;
        for (const auto& e : s.mailbox.entries()) {
            if (e.n == s.number && compare_keys(s.label, s.bits, s.view, e.l, e.b, e.N) < 0) {
                beaten = true;
                break;
            }
        }
        if (s.number == 0 || beaten) s.number = 1 + s.mailbox.max_number();
        s.view.replace_port(q, {msg.n, msg.l, msg.b, p, q});
        changed |= s.mailbox.add({s.number, s.label, s.bits, s.view});
        if (changed) {
            s.counter = -1;
            s.neighbor_counter.assign(s.degree, -1);
        }
        if (s.mailbox.proj_equal(msg.mbox)) s.neighbor_counter[q - 1] = msg.a;
        bool neighbors_caught_up = true;
        for (int a : s.neighbor_counter)
            if (a < s.counter) neighbors_caught_up = false;
        if (neighbors_caught_up && quiescence_check(s, c_old)) ++s.counter;
        update_decision(s);
        if (changed || s.counter != c_old)
            return Payload{s.number, s.label, s.bits, s.mailbox, s.counter};
        return std::nullopt;
    }

    template <class Drawer>
    std::optional<Payload> on_spontaneous(State& s, Drawer&& draw) const {
        s.bits.append(draw());
        return Payload{s.number, s.label, s.bits, s.mailbox, s.counter};
    }

private:
    // Counter increment gate: coherent mailbox, no reset earlier in this
    // step, and the reconstructed digraph is a family member within tau.
    bool quiescence_check(const State& s, int c_old) const {
        if (s.counter != c_old) return false;
        const auto& a = analyze_mailbox(s, *labels_);
        if (!a.coherent || !a.dm_valid) return false;
        if (!family_contains(knowledge_, *a.dm)) return false;
        return s.counter <= tau_of(knowledge_, *a.dm);
    }

    void update_decision(State& s) const {
        if (s.decision != Decision::Undecided) return;
        const auto& a = analyze_mailbox(s, *labels_);
        if (!a.coherent || !a.dm_valid) return;
        if (!family_contains(knowledge_, *a.dm)) return;
        if (s.counter >= tau_of(knowledge_, *a.dm))
            s.decision = (s.number == a.dm_max_number) ? Decision::Elected : Decision::NonElected;
    }

    Knowledge knowledge_;
    std::shared_ptr<const LabelTable> labels_;
};

} // namespace anet
