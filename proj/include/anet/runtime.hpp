// Deterministic message-passing simulator: FIFO channels per arc, one event
// per rule application, pluggable schedulers. Runs are pure functions of
// (digraph, algorithm, source seeds, policy, budget); rerunning reproduces
// every state and drawn bit exactly.
#pragma once

#include <algorithm>
#include <cstdint>
#include <deque>
#include <optional>
#include <stdexcept>
#include <string>
#include <vector>

#include "anet/graph.hpp"
#include "anet/randomness.hpp"

namespace anet {

enum class EventKind { Wakeup, Deliver, Spontaneous };

struct Event {
    EventKind kind = EventKind::Wakeup;
    int vertex = 0;
    int port = 0;  // receiving port, Deliver only

    bool operator==(const Event&) const = default;
};

using Schedule = std::vector<Event>;

enum class RunStatus { Terminated, Undecided };

inline const char* to_string(RunStatus s) {
    return s == RunStatus::Terminated ? "terminated" : "undecided";
}

struct PolicyConfig {
    enum Kind { Synchronous, SeededRandom, Scripted, Adaptive } kind = Synchronous;
    std::uint64_t seed = 0;                   // SeededRandom / Adaptive
    const Schedule* script = nullptr;         // Scripted
    std::uint64_t max_rounds = UINT64_MAX;    // Synchronous

    static PolicyConfig synchronous(std::uint64_t max_rounds = UINT64_MAX) {
        PolicyConfig p;
        p.kind = Synchronous;
        p.max_rounds = max_rounds;
        return p;
    }
    static PolicyConfig seeded_random(std::uint64_t seed) {
        PolicyConfig p;
        p.kind = SeededRandom;
        p.seed = seed;
        return p;
    }
    static PolicyConfig scripted(const Schedule& s) {
        PolicyConfig p;
        p.kind = Scripted;
        p.script = &s;
        return p;
    }
    static PolicyConfig adaptive(std::uint64_t seed) {
        PolicyConfig p;
        p.kind = Adaptive;
        p.seed = seed;
        return p;
    }
};

template <class Alg>
struct Trace {
    std::vector<typename Alg::State> initial_states;
    std::vector<Event> events;
    // post-event state of the acting vertex, parallel to events (optional)
    std::vector<typename Alg::State> post_states;
    std::vector<typename Alg::State> final_states;
    // event index right after each completed synchronous round
    std::vector<std::size_t> round_ends;
    DrawLog draw_log;
    RunStatus status = RunStatus::Undecided;
    std::uint64_t num_events = 0;
    std::uint64_t num_rounds = 0;
};

// Streaming hook; states are owned by the runner and valid during the call.
template <class Alg>
struct StepObserver {
    virtual ~StepObserver() = default;
    virtual void on_init(const SymDigraph&, const std::vector<typename Alg::State>&) {}
    virtual void on_step(std::size_t step_index, const Event&, const typename Alg::State& before,
                         const std::vector<typename Alg::State>& states_after) {}
};

struct RunOptions {
    std::uint64_t budget = 1'000'000;  // events; exceeding yields Undecided
    bool record_steps = false;         // keep per-event post states in the trace
};

template <class Alg>
class Simulation {
public:
    Simulation(const SymDigraph& d, const Alg& alg, SourceAssignment sources)
        : d_(&d), alg_(&alg), sources_(std::move(sources)) {
        if (sources_.num_vertices() != d.num_vertices())
            throw std::invalid_argument("run: source assignment does not match digraph");
        out_ = d.out_arcs();
        auto deg = d.degrees();
        in_arc_by_port_.assign(d.num_vertices(), {});
        for (int v = 0; v < d.num_vertices(); ++v) in_arc_by_port_[v].assign(deg[v] + 1, -1);
        for (int a = 0; a < d.num_arcs(); ++a) in_arc_by_port_[d.arcs[a].dst][d.arcs[a].q] = a;
        channels_.assign(d.num_arcs(), {});
        received_.assign(d.num_vertices(), 0);
        for (int v = 0; v < d.num_vertices(); ++v)
            states_.push_back(alg.initial_state(d.vertices[v].label, deg[v]));
    }

    const std::vector<typename Alg::State>& states() const { return states_; }
    DrawLog& draw_log() { return draw_log_; }

    bool event_enabled(const Event& e) const {
        int v = e.vertex;
        if (v < 0 || v >= d_->num_vertices()) return false;
        switch (e.kind) {
            case EventKind::Wakeup:
                return !received_[v] && alg_->wakeup_guard(states_[v]);
            case EventKind::Deliver: {
                if (e.port < 1 || e.port >= static_cast<int>(in_arc_by_port_[v].size())) return false;
                int a = in_arc_by_port_[v][e.port];
                return a >= 0 && !channels_[a].empty();
            }
            case EventKind::Spontaneous:
                return alg_->spontaneous_guard(states_[v]);
        }
        return false;
    }

    std::vector<Event> enabled_events() const {
        std::vector<Event> out;
        for (int v = 0; v < d_->num_vertices(); ++v) {
            for (int q = 1; q < static_cast<int>(in_arc_by_port_[v].size()); ++q) {
                int a = in_arc_by_port_[v][q];
                if (a >= 0 && !channels_[a].empty()) out.push_back({EventKind::Deliver, v, q});
            }
            if (!received_[v] && alg_->wakeup_guard(states_[v]))
                out.push_back({EventKind::Wakeup, v, 0});
            if (alg_->spontaneous_guard(states_[v]))
                out.push_back({EventKind::Spontaneous, v, 0});
        }
        return out;
    }

    // Applies one event; throws if it is not enabled.
    void apply(const Event& e) {
        if (!event_enabled(e)) throw std::runtime_error("schedule references a disabled event");
        int v = e.vertex;
        auto drawer = [this, v]() { return draw_bit(sources_, v, &draw_log_); };
        std::optional<typename Alg::Payload> sent;
        switch (e.kind) {
            case EventKind::Wakeup:
                sent = alg_->on_wakeup(states_[v], drawer);
                break;
            case EventKind::Deliver: {
                int a = in_arc_by_port_[v][e.port];
                typename Alg::Payload msg = std::move(channels_[a].front());
                channels_[a].pop_front();
                received_[v] = 1;
                sent = alg_->on_receive(states_[v], msg, d_->arcs[a].p, d_->arcs[a].q, drawer);
                break;
            }
            case EventKind::Spontaneous:
                sent = alg_->on_spontaneous(states_[v], drawer);
                break;
        }
        if (sent) {
            for (int a : out_[v]) channels_[a].push_back(*sent);
        }
    }

    std::vector<std::uint64_t> channel_sizes() const {
        std::vector<std::uint64_t> out(channels_.size());
        for (std::size_t i = 0; i < channels_.size(); ++i) out[i] = channels_[i].size();
        return out;
    }

    int in_arc(int v, int q) const { return in_arc_by_port_[v][q]; }
    const SymDigraph& digraph() const { return *d_; }

private:
    const SymDigraph* d_;
    const Alg* alg_;
    SourceAssignment sources_;
    std::vector<std::vector<int>> out_;
    std::vector<std::vector<int>> in_arc_by_port_;
    std::vector<std::deque<typename Alg::Payload>> channels_;
    std::vector<char> received_;
    std::vector<typename Alg::State> states_;
    DrawLog draw_log_;
};

template <class Alg>
Trace<Alg> run(const SymDigraph& d, const Alg& alg, SourceAssignment sources,
               const PolicyConfig& policy, const RunOptions& opts = {},
               StepObserver<Alg>* observer = nullptr) {
    if (opts.budget == 0) throw std::invalid_argument("run: budget must be > 0");
    Simulation<Alg> sim(d, alg, std::move(sources));
    Trace<Alg> trace;
    trace.initial_states = sim.states();
    if (observer) observer->on_init(d, sim.states());

    std::uint64_t executed = 0;
    auto step = [&](const Event& e) {
        typename Alg::State before = sim.states()[e.vertex];
        sim.apply(e);
        if (observer) observer->on_step(executed, e, before, sim.states());
        trace.events.push_back(e);
        if (opts.record_steps) trace.post_states.push_back(sim.states()[e.vertex]);
        ++executed;
    };

    switch (policy.kind) {
        case PolicyConfig::Scripted: {
            if (!policy.script) throw std::invalid_argument("run: scripted policy without script");
            trace.status = RunStatus::Terminated;
            for (const auto& e : *policy.script) {
                if (executed >= opts.budget) {
                    trace.status = RunStatus::Undecided;
                    break;
                }
                step(e);
            }
            break;
        }
        case PolicyConfig::SeededRandom:
        case PolicyConfig::Adaptive: {
            Rng rng(derive_seed(policy.seed, "scheduler"));
            trace.status = RunStatus::Undecided;
            for (;;) {
                if (executed >= opts.budget) break;
                auto enabled = sim.enabled_events();
                if (enabled.empty()) {
                    trace.status = RunStatus::Terminated;
                    break;
                }
                std::size_t pick;
                if (policy.kind == PolicyConfig::Adaptive) {
                    // adversary peeks at states: prefer delivering to the
                    // vertex with the largest current serialization, random
                    // among those
                    std::vector<std::size_t> best;
                    std::string best_key;
                    for (std::size_t i = 0; i < enabled.size(); ++i) {
                        std::string key = sim.states()[enabled[i].vertex].serialize();
                        if (best.empty() || key > best_key) {
                            best.assign(1, i);
                            best_key = key;
                        } else if (key == best_key) {
                            best.push_back(i);
                        }
                    }
                    pick = best[rng.below(best.size())];
                } else {
                    pick = rng.below(enabled.size());
                }
                step(enabled[pick]);
            }
            break;
        }
        case PolicyConfig::Synchronous: {
            trace.status = RunStatus::Undecided;
            bool out_of_budget = false;
            auto deg = d.degrees();
            while (trace.num_rounds < policy.max_rounds) {
                auto pending = sim.channel_sizes();
                bool acted = false;
                for (int v = 0; v < d.num_vertices() && !out_of_budget; ++v) {
                    bool delivered = false;
                    for (int q = 1; q <= deg[v]; ++q) {
                        int a = sim.in_arc(v, q);
                        if (a < 0) continue;
                        for (std::uint64_t i = 0; i < pending[a] && !out_of_budget; ++i) {
                            if (executed >= opts.budget) {
                                out_of_budget = true;
                                break;
                            }
                            step({EventKind::Deliver, v, q});
                            delivered = true;
                            acted = true;
                        }
                    }
                    if (out_of_budget) break;
                    if (!delivered) {
                        Event wake{EventKind::Wakeup, v, 0};
                        Event spont{EventKind::Spontaneous, v, 0};
                        if (sim.event_enabled(wake)) {
                            if (executed >= opts.budget) {
                                out_of_budget = true;
                                break;
                            }
                            step(wake);
                            acted = true;
                        } else if (sim.event_enabled(spont)) {
                            if (executed >= opts.budget) {
                                out_of_budget = true;
                                break;
                            }
                            step(spont);
                            acted = true;
                        }
                    }
                }
                if (out_of_budget) break;
                if (!acted) {
                    trace.status = RunStatus::Terminated;
                    break;
                }
                ++trace.num_rounds;
                trace.round_ends.push_back(trace.events.size());
            }
            break;
        }
    }
    trace.final_states = sim.states();
    trace.draw_log = std::move(sim.draw_log());
    trace.num_events = executed;
    return trace;
}

// The lift of a base schedule along a covering: every base event on v'
// becomes the same event on each vertex of the fiber over v', in vertex
// order.
inline Schedule lift_schedule(const Schedule& base_events, const std::vector<int>& vertex_map,
                              int total_vertices) {
    std::vector<std::vector<int>> fiber(
        *std::max_element(vertex_map.begin(), vertex_map.end()) + 1);
    for (int v = 0; v < total_vertices; ++v) fiber[vertex_map[v]].push_back(v);
    Schedule lifted;
    for (const auto& e : base_events)
        for (int v : fiber[e.vertex]) lifted.push_back({e.kind, v, e.port});
    return lifted;
}

} // namespace anet
