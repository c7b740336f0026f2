// Executable checks of the lifting results on concrete traces, plus
// streaming trace invariants: state monotonicity, SSP counter discipline,
// and the runtime quasi-covering guarantee.
#pragma once

#include <map>
#include <optional>
#include <sstream>
#include <unordered_map>

#include "anet/covering.hpp"
#include "anet/election_m.hpp"
#include "anet/election_mtau.hpp"
#include "anet/families.hpp"
#include "anet/runtime.hpp"

namespace anet {

struct Counterexample {
    std::uint64_t step = 0;
    int vertex = -1;
    std::string detail;
};

struct CheckReport {
    std::string check;
    std::string instance;
    bool pass = false;
    std::uint64_t seed = 0;
    std::optional<Counterexample> counterexample;

    std::string line() const {
        std::ostringstream os;
        os << (pass ? "[PASS] " : "[FAIL] ") << check << " " << instance << " seed=" << seed;
        if (counterexample)
            os << " (step " << counterexample->step << ", vertex " << counterexample->vertex << ": "
               << counterexample->detail << ")";
        return os.str();
    }
};

// Per-vertex source classes for a digraph: explicit classes from the vertex
// source fields when present, otherwise one fresh class per vertex.
SourceAssignment assignment_for(const SymDigraph& d, std::uint64_t master_seed);

std::shared_ptr<const LabelTable> joint_label_table(const SymDigraph& a, const SymDigraph& b);

// ---------------------------------------------------------------------------
// Trace invariants (streaming observers)

// State monotonicity along executions: the number never decreases, the bit
// sequence extends by suffix, the view grows in the view order, the mailbox
// grows (up to bit refreshes), the own record stays maximal among entries
// with the own number, and the numbers in any mailbox are dense.
template <class Alg>
class MonotonicityObserver : public StepObserver<Alg> {
public:
    void on_step(std::size_t idx, const Event& e, const typename Alg::State& before,
                 const std::vector<typename Alg::State>& states) override {
        if (failure_) return;
        const auto& after = states[e.vertex];
        auto fail = [&](const std::string& what) {
            failure_ = Counterexample{idx, e.vertex, what};
        };
        if (after.number < before.number) return fail("number decreased");
        if (!before.bits.prefix_of(after.bits)) return fail("bit sequence not extended by suffix");
        if (compare_views(before.view, after.view) > 0) return fail("view decreased");
        if (!before.mailbox.covered_by(after.mailbox)) return fail("mailbox lost an entry");
        if (!after.mailbox.key_is_maximal(after.number, after.label, after.bits, after.view))
            return fail("own record not maximal for its number");
        int mx = after.mailbox.max_number();
        for (int m = 1; m <= mx; ++m)
            if (!after.mailbox.has_number(m))
                return fail("mailbox numbers not dense at " + std::to_string(m));
        for (int m = 1; m <= mx; ++m) {
            bool held = false;
            for (const auto& s : states)
                if (s.number == m) held = true;
            if (!held) return fail("no vertex currently holds number " + std::to_string(m));
        }
    }

    const std::optional<Counterexample>& failure() const { return failure_; }

private:
    std::optional<Counterexample> failure_;
};

// Counter discipline of the SSP extension: under an unchanged mailbox the
// counter moves by at most one and dominates the recorded neighbor minimum;
// a counter of k certifies that every neighbor reached k-1 on the same
// mailbox at some earlier step.
class CounterDisciplineObserver : public StepObserver<MTauAlgorithm> {
public:
    void on_init(const SymDigraph& d, const std::vector<MTState>& states) override {
        d_ = &d;
        neighbor_lists_.assign(d.num_vertices(), {});
        for (const auto& a : d.arcs) neighbor_lists_[a.src].push_back(a.dst);
        for (auto& nl : neighbor_lists_) {
            std::sort(nl.begin(), nl.end());
            nl.erase(std::unique(nl.begin(), nl.end()), nl.end());
        }
        history_.assign(d.num_vertices(), {});
        for (int v = 0; v < d.num_vertices(); ++v) record(v, states[v]);
    }

    void on_step(std::size_t idx, const Event& e, const MTState& before,
                 const std::vector<MTState>& states) override {
        if (failure_) return;
        int v = e.vertex;
        const auto& after = states[v];
        auto fail = [&](const std::string& what) { failure_ = Counterexample{idx, v, what}; };
        if (before.mailbox.proj_equal(after.mailbox)) {
            if (after.counter < before.counter || after.counter > before.counter + 1)
                return fail("counter moved by more than one under an unchanged mailbox");
            int min_a = after.neighbor_counter.empty()
                            ? -1
                            : *std::min_element(after.neighbor_counter.begin(),
                                                after.neighbor_counter.end());
            if (after.counter < min_a)
                return fail("counter below the recorded neighbor minimum");
        }
        if (after.counter >= 1) {
            std::string key = after.mailbox.proj_key();
            for (int w : neighbor_lists_[v]) {
                auto it = history_[w].find(key);
                if (it == history_[w].end() || it->second < after.counter - 1)
                    return fail("neighbor " + d_->vertices[w].id + " never reached counter " +
                                std::to_string(after.counter - 1) + " on this mailbox");
            }
        }
        record(v, after);
    }

    const std::optional<Counterexample>& failure() const { return failure_; }

private:
    void record(int v, const MTState& s) {
        auto& slot = history_[v][s.mailbox.proj_key()];
        slot = std::max(slot, s.counter);
    }

    const SymDigraph* d_ = nullptr;
    std::vector<std::vector<int>> neighbor_lists_;
    std::vector<std::unordered_map<std::string, int>> history_;
    std::optional<Counterexample> failure_;
};

// Runtime quasi-covering guarantee: whenever a node's maximal mailbox is
// coherent and its counter is non-negative, the real digraph is a
// quasi-covering of the reconstruction D_M, centered at the node with the
// counter as radius, via the map that sends each vertex to the number it
// held when its mailbox matched.
class QuasiCoverRuntimeObserver : public StepObserver<MTauAlgorithm> {
public:
    explicit QuasiCoverRuntimeObserver(const MTauAlgorithm& alg) : alg_(&alg) {}

    void on_init(const SymDigraph& d, const std::vector<MTState>& states) override {
        d_ = &d;
        latest_number_.assign(d.num_vertices(), {});
        for (int v = 0; v < d.num_vertices(); ++v)
            latest_number_[v][states[v].mailbox.proj_key()] = states[v].number;
    }

    void on_step(std::size_t idx, const Event& e, const MTState&,
                 const std::vector<MTState>& states) override {
        int v = e.vertex;
        const auto& after = states[v];
        latest_number_[v][after.mailbox.proj_key()] = after.number;
        if (failure_) return;
        const auto& a = analyze_mailbox(after, alg_->labels());
        if (!a.coherent || after.counter < 0) return;
        ++checked_;
        auto fail = [&](const std::string& what) { failure_ = Counterexample{idx, v, what}; };

        std::string key = after.mailbox.proj_key();
        Ball b = ball(*d_, v, after.counter);
        Homomorphism gamma;
        gamma.vertex_map.assign(d_->num_vertices(), -1);
        gamma.arc_map.assign(d_->num_arcs(), -1);
        std::map<int, int> dm_vertex;  // number -> D_M vertex
        for (int i = 0; i < a.dm->num_vertices(); ++i)
            dm_vertex[std::stoi(a.dm->vertices[i].id)] = i;
        for (int w : b.vertex_list) {
            auto it = latest_number_[w].find(key);
            if (it == latest_number_[w].end())
                return fail("vertex " + d_->vertices[w].id + " never held this mailbox");
            auto dv = dm_vertex.find(it->second);
            if (dv == dm_vertex.end())
                return fail("number " + std::to_string(it->second) + " absent from D_M");
            gamma.vertex_map[w] = dv->second;
        }
        std::map<std::tuple<int, int, int, int>, int> dm_arc;
        for (int i = 0; i < a.dm->num_arcs(); ++i)
            dm_arc[{a.dm->arcs[i].src, a.dm->arcs[i].dst, a.dm->arcs[i].p, a.dm->arcs[i].q}] = i;
        for (int ai : b.arc_list) {
            const auto& arc = d_->arcs[ai];
            auto it = dm_arc.find({gamma.vertex_map[arc.src], gamma.vertex_map[arc.dst], arc.p, arc.q});
            if (it == dm_arc.end()) return fail("ball arc has no image in D_M");
            gamma.arc_map[ai] = it->second;
        }
        QuasiCoveringWitness w{d_, a.dm.get(), v, after.counter, gamma};
        auto check = is_quasi_covering(w, /*with_sources=*/false);
        if (!check.accepted) return fail("quasi-covering check failed: " + check.reason);
    }

    const std::optional<Counterexample>& failure() const { return failure_; }
    std::uint64_t checked() const { return checked_; }

private:
    const MTauAlgorithm* alg_;
    const SymDigraph* d_ = nullptr;
    std::vector<std::unordered_map<std::string, int>> latest_number_;
    std::optional<Counterexample> failure_;
    std::uint64_t checked_ = 0;
};

// ---------------------------------------------------------------------------
// Lifting checks

struct LiftingOptions {
    int corrupt_class = -1;  // negative control: re-seed one lifted class
};

// Runs k synchronous rounds on the base, replays them on the covering with
// fiber-shared sources, and asserts state(v) == state(phi(v)) after every
// base event, exactly.
template <class Alg>
CheckReport check_lifting(const SymDigraph& total, const SymDigraph& base, const Homomorphism& phi,
                          const Alg& alg, int rounds, std::uint64_t seed,
                          const LiftingOptions& opts = {}) {
    CheckReport report;
    report.check = "lifting";
    report.seed = seed;
    {
        std::ostringstream os;
        os << total.num_vertices() << "-vertex total over " << base.num_vertices()
           << "-vertex base, " << rounds << " rounds";
        report.instance = os.str();
    }
    auto covering = is_symmetric_covering(total, base, phi, /*with_sources=*/false);
    if (!covering.accepted)
        throw std::invalid_argument("check_lifting: phi rejected: " + covering.reason);

    SourceAssignment base_sources = assignment_for(base, seed);
    RunOptions base_opts;
    base_opts.budget = UINT64_MAX;
    base_opts.record_steps = true;
    auto base_trace = run(base, alg, base_sources, PolicyConfig::synchronous(rounds), base_opts);

    SourceAssignment lifted = fiber_shared_assignment(total, base, phi, base_sources);
    if (opts.corrupt_class >= 0 && opts.corrupt_class < lifted.num_classes())
        lifted.class_seed[opts.corrupt_class] ^= 0x5DEECE66DULL;

    Schedule script = lift_schedule(base_trace.events, phi.vertex_map, total.num_vertices());

    // group boundaries: base event i covers lifted steps [prefix[i], prefix[i+1])
    std::vector<std::size_t> group_end;
    {
        std::vector<int> fiber_size(base.num_vertices(), 0);
        for (int v = 0; v < total.num_vertices(); ++v) ++fiber_size[phi.vertex_map[v]];
        std::size_t acc = 0;
        for (const auto& e : base_trace.events) {
            acc += static_cast<std::size_t>(fiber_size[e.vertex]);
            group_end.push_back(acc);
        }
    }

    struct LiftObserver : StepObserver<Alg> {
        const Trace<Alg>* base_trace = nullptr;
        const std::vector<int>* vmap = nullptr;
        const std::vector<std::size_t>* group_end = nullptr;
        std::vector<typename Alg::State> base_states;
        std::size_t next_group = 0;
        std::optional<Counterexample> failure;

        void on_step(std::size_t idx, const Event&, const typename Alg::State&,
                     const std::vector<typename Alg::State>& states) override {
            if (failure) return;
            while (next_group < group_end->size() && (*group_end)[next_group] == idx + 1) {
                base_states[base_trace->events[next_group].vertex] =
                    base_trace->post_states[next_group];
                for (std::size_t v = 0; v < states.size(); ++v) {
                    if (!(states[v] == base_states[(*vmap)[v]])) {
                        failure = Counterexample{idx, static_cast<int>(v),
                                                 "state differs from its projection after base event " +
                                                     std::to_string(next_group)};
                        return;
                    }
                }
                ++next_group;
            }
        }
    } obs;
    obs.base_trace = &base_trace;
    obs.vmap = &phi.vertex_map;
    obs.group_end = &group_end;
    obs.base_states = base_trace.initial_states;

    RunOptions lifted_opts;
    lifted_opts.budget = UINT64_MAX;
    run(total, alg, lifted, PolicyConfig::scripted(script), lifted_opts, &obs);

    report.pass = !obs.failure.has_value();
    report.counterexample = obs.failure;
    return report;
}

// Lifted synchronous run of a complete trace; returns the lifted final
// states along with the per-step comparison result.
template <class Alg>
struct LiftedRun {
    CheckReport equality;
    Trace<Alg> lifted_trace;
};

template <class Alg>
LiftedRun<Alg> lift_and_compare(const SymDigraph& total, const SymDigraph& base,
                                const Homomorphism& phi, const Alg& alg, int rounds,
                                std::uint64_t seed) {
    LiftedRun<Alg> out;
    out.equality = check_lifting(total, base, phi, alg, rounds, seed);
    SourceAssignment base_sources = assignment_for(base, seed);
    RunOptions base_opts;
    base_opts.budget = UINT64_MAX;
    auto base_trace = run(base, alg, base_sources, PolicyConfig::synchronous(rounds), base_opts);
    SourceAssignment lifted = fiber_shared_assignment(total, base, phi, base_sources);
    Schedule script = lift_schedule(base_trace.events, phi.vertex_map, total.num_vertices());
    RunOptions lifted_opts;
    lifted_opts.budget = UINT64_MAX;
    out.lifted_trace = run(total, alg, lifted, PolicyConfig::scripted(script), lifted_opts);
    out.lifted_trace.status = base_trace.status;
    return out;
}

// Quasi-lifting: after k < r synchronous rounds on both sides with sources
// shared along gamma inside the ball, the state-labeled total digraph is a
// quasi-covering of the state-labeled base of radius r-k, and the center is
// in the same state as its image.
template <class Alg>
CheckReport check_quasi_lifting(const QuasiFixture& f, const Alg& alg, int k, std::uint64_t seed) {
    CheckReport report;
    report.check = "quasi-lifting";
    report.seed = seed;
    {
        std::ostringstream os;
        os << f.d1.num_vertices() << "-vertex over " << f.d0.num_vertices() << "-vertex, r="
           << f.radius << ", k=" << k;
        report.instance = os.str();
    }
    if (k < 0 || k >= f.radius) throw std::invalid_argument("check_quasi_lifting: need 0 <= k < r");
    auto w = f.witness();
    auto pre = is_quasi_covering(w, /*with_sources=*/false);
    if (!pre.accepted)
        throw std::invalid_argument("check_quasi_lifting: witness rejected: " + pre.reason);

    // base classes are per-vertex; ball vertices of d1 share the class of
    // their image, the rest draw fresh classes
    std::vector<std::string> base_class(f.d0.num_vertices());
    for (int v = 0; v < f.d0.num_vertices(); ++v) base_class[v] = "b" + std::to_string(v);
    SourceAssignment src0 = SourceAssignment::from_classes(base_class, seed);

    Ball b = ball(f.d1, f.center, f.radius);
    std::vector<std::string> total_class(f.d1.num_vertices());
    for (int v = 0; v < f.d1.num_vertices(); ++v)
        total_class[v] =
            b.has_vertex[v] ? base_class[f.gamma.vertex_map[v]] : "x" + std::to_string(v);
    SourceAssignment src1 = SourceAssignment::from_classes(total_class, seed);

    RunOptions opts;
    opts.budget = UINT64_MAX;
    auto t0 = run(f.d0, alg, src0, PolicyConfig::synchronous(k), opts);
    auto t1 = run(f.d1, alg, src1, PolicyConfig::synchronous(k), opts);

    // state-labeled digraphs: the node state joins the vertex label
    SymDigraph d0s = f.d0;
    for (int v = 0; v < d0s.num_vertices(); ++v) {
        d0s.vertices[v].label += "|" + t0.final_states[v].serialize();
        d0s.vertices[v].source = base_class[v];
    }
    SymDigraph d1s = f.d1;
    for (int v = 0; v < d1s.num_vertices(); ++v) {
        d1s.vertices[v].label += "|" + t1.final_states[v].serialize();
        d1s.vertices[v].source = total_class[v];
    }
    QuasiCoveringWitness residual{&d1s, &d0s, f.center, f.radius - k, f.gamma};
    auto post = is_quasi_covering(residual, /*with_sources=*/true);
    if (!post.accepted) {
        report.pass = false;
        report.counterexample = Counterexample{static_cast<std::uint64_t>(k), f.center, post.reason};
        return report;
    }
    if (!(t1.final_states[f.center] == t0.final_states[f.gamma.vertex_map[f.center]])) {
        report.pass = false;
        report.counterexample =
            Counterexample{static_cast<std::uint64_t>(k), f.center, "center state differs"};
        return report;
    }
    report.pass = true;
    return report;
}

// Impossibility witness over a covering with >= 2 sheets and fiber-shared
// sources: no seed may produce a Correct lifted outcome, any terminal
// outcome must be MultipleElected, and fiberwise equality must hold
// throughout.
CheckReport impossibility_witness(const SymDigraph& total, const SymDigraph& base,
                                  const Homomorphism& phi, int n_total_param, int rounds,
                                  const std::vector<std::uint64_t>& seeds);

} // namespace anet
