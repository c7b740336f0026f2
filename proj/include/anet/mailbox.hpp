// Local views and mailboxes for the Mazurkiewicz-style enumeration:
// the order on (label, bit sequence, view) keys, per-number maximal entries
// S(M), the coherence predicate, and the digraph D_M a node reconstructs
// from a coherent mailbox.
//
// Mailbox equality and inclusion are compared without the bit sequences
// (at both the entry level and inside views); the union keeps full entries
// but drops an entry whenever another entry is the same record with every
// bit sequence extended, which keeps mailboxes small.
#pragma once

#include <cstdint>
#include <optional>
#include <string>
#include <vector>

#include "anet/bits.hpp"
#include "anet/graph.hpp"

namespace anet {

using LabelId = int;
constexpr LabelId kBottomLabel = -1;  // the bottom label, below every real label

// Interns label strings; ids are ranks in lexicographic order, so comparing
// ids agrees with the total order on L.
class LabelTable {
public:
    static LabelTable from_strings(std::vector<std::string> labels);
    LabelId id_of(const std::string& s) const;
    const std::string& name(LabelId id) const;
    int size() const { return static_cast<int>(names_.size()); }

private:
    std::vector<std::string> names_;
};

struct ViewEntry {
    int m = 0;         // neighbor's number
    LabelId l = kBottomLabel;
    BitSeq b;          // prefix of the neighbor's bit sequence
    int p = 0, q = 0;  // the arc from the neighbor to this node is labeled (p, q)
};

// entry order: lexicographic on (m, l, b, p, q), b alphabetic
int compare(const ViewEntry& a, const ViewEntry& b);
bool operator==(const ViewEntry& a, const ViewEntry& b);

// A local view: finite entry set, canonically sorted, at most one entry per
// receiving port q.
class View {
public:
    static View initial(int degree);  // {(0, bottom, eps, 0, q) : q in [1, deg]}
    static View from_entries(std::vector<ViewEntry> entries);

    void replace_port(int q, ViewEntry e);
    const ViewEntry* by_port(int q) const;
    const std::vector<ViewEntry>& entries() const { return entries_; }
    bool contains(const ViewEntry& e) const;
    bool operator==(const View& o) const { return entries_ == o.entries_; }

private:
    std::vector<ViewEntry> entries_;
};

// N1 before N2 iff the maximum of the symmetric difference lies in N2.
// Total: -1, 0, +1.
int compare_views(const View& a, const View& b);

// The order on (label, bits, view) keys used everywhere by the algorithms.
int compare_keys(LabelId l1, const BitSeq& b1, const View& n1,
                 LabelId l2, const BitSeq& b2, const View& n2);

struct MailboxEntry {
    int n = 0;
    LabelId l = kBottomLabel;
    BitSeq b;
    View N;
};

int compare_full(const MailboxEntry& a, const MailboxEntry& b);  // (n, l, b, N)
bool operator==(const MailboxEntry& a, const MailboxEntry& b);

// true iff keep is the same record as drop with every bit sequence extended
// (same number, label and bit-stripped view; entry bits and per-port view
// bits of drop are prefixes of keep's). Reflexive.
bool entry_subsumed(const MailboxEntry& drop, const MailboxEntry& keep);

class Mailbox {
public:
    bool empty() const { return entries_.empty(); }
    std::size_t size() const { return entries_.size(); }
    const std::vector<MailboxEntry>& entries() const { return entries_; }
    std::uint64_t version() const { return version_; }

    // Insert with subsumption normalization; returns true iff the projected
    // (bit-stripped) entry set changed.
    bool add(MailboxEntry e);
    bool merge(const Mailbox& other);

    int max_number() const;  // 0 when empty
    bool has_number(int n) const;

    // S(M): for each number present, the entry whose key is maximal among
    // entries sharing that number. Sorted by number.
    std::vector<const MailboxEntry*> maximal_per_number() const;

    // true iff no entry with this number has a strictly greater key
    bool key_is_maximal(int n, LabelId l, const BitSeq& b, const View& N) const;

    bool proj_equal(const Mailbox& o) const;
    // every projected entry of this occurs in o
    bool proj_subset_of(const Mailbox& o) const;
    // every entry of this is subsumed by some entry of o (monotonicity check)
    bool covered_by(const Mailbox& o) const;

    bool operator==(const Mailbox& o) const { return entries_ == o.entries_; }

    std::string proj_key() const;  // canonical serialization of the projection

private:
    std::vector<MailboxEntry> entries_;  // sorted by compare_full, normalized
    std::uint64_t version_ = 0;
};

struct Coherence {
    bool coherent = false;
    std::vector<MailboxEntry> smax;  // S(M), sorted by number
};

// S(M) plus the cross-reference test: every view entry of a maximal element
// names a positive port and number, a real label, and is echoed by the
// unique maximal element of that number (label match, bit prefix, back arc).
Coherence maximal_coherent(const Mailbox& m);

// The digraph reconstructed from a coherent S(M): vertices are the numbers,
// every view entry (n', l', p, q) of the element numbered n contributes the
// arc n' -> n labeled (p, q), and Sym maps it to the back arc n -> n'
// labeled (q, p). Throws std::invalid_argument when coherence fails.
SymDigraph build_dm(const std::vector<MailboxEntry>& smax, const LabelTable& labels);

} // namespace anet
