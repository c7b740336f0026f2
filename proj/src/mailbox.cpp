#include "anet/mailbox.hpp"

#include <algorithm>
#include <map>
#include <set>
#include <sstream>
#include <stdexcept>

namespace anet {

LabelTable LabelTable::from_strings(std::vector<std::string> labels) {
    std::sort(labels.begin(), labels.end());
    labels.erase(std::unique(labels.begin(), labels.end()), labels.end());
    LabelTable t;
    t.names_ = std::move(labels);
    return t;
}

LabelId LabelTable::id_of(const std::string& s) const {
    auto it = std::lower_bound(names_.begin(), names_.end(), s);
    if (it == names_.end() || *it != s)
        throw std::invalid_argument("LabelTable: unknown label \"" + s + "\"");
    return static_cast<LabelId>(it - names_.begin());
}

const std::string& LabelTable::name(LabelId id) const {
    static const std::string bottom = "_|_";
    if (id == kBottomLabel) return bottom;
    return names_.at(static_cast<std::size_t>(id));
}

int compare(const ViewEntry& a, const ViewEntry& b) {
    if (a.m != b.m) return a.m < b.m ? -1 : 1;
    if (a.l != b.l) return a.l < b.l ? -1 : 1;
    if (int c = compare(a.b, b.b); c != 0) return c;
    if (a.p != b.p) return a.p < b.p ? -1 : 1;
    if (a.q != b.q) return a.q < b.q ? -1 : 1;
    return 0;
}

bool operator==(const ViewEntry& a, const ViewEntry& b) { return compare(a, b) == 0; }

View View::initial(int degree) {
    View v;
    for (int q = 1; q <= degree; ++q) v.entries_.push_back({0, kBottomLabel, BitSeq(), 0, q});
    std::sort(v.entries_.begin(), v.entries_.end(),
              [](const ViewEntry& a, const ViewEntry& b) { return compare(a, b) < 0; });
    return v;
}

View View::from_entries(std::vector<ViewEntry> entries) {
    View v;
    v.entries_ = std::move(entries);
    std::sort(v.entries_.begin(), v.entries_.end(),
              [](const ViewEntry& a, const ViewEntry& b) { return compare(a, b) < 0; });
    v.entries_.erase(std::unique(v.entries_.begin(), v.entries_.end()), v.entries_.end());
    return v;
}

void View::replace_port(int q, ViewEntry e) {
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [q](const ViewEntry& x) { return x.q == q; }),
                   entries_.end());
    auto pos = std::lower_bound(entries_.begin(), entries_.end(), e,
                                [](const ViewEntry& a, const ViewEntry& b) { return compare(a, b) < 0; });
    entries_.insert(pos, std::move(e));
}

const ViewEntry* View::by_port(int q) const {
    for (const auto& e : entries_)
        if (e.q == q) return &e;
    return nullptr;
}

bool View::contains(const ViewEntry& e) const {
    return std::binary_search(entries_.begin(), entries_.end(), e,
                              [](const ViewEntry& a, const ViewEntry& b) { return compare(a, b) < 0; });
}

int compare_views(const View& va, const View& vb) {
    const auto& a = va.entries();
    const auto& b = vb.entries();
    // walk both sorted sets from the top; the first disagreement is the
    // maximum of the symmetric difference
    int i = static_cast<int>(a.size()) - 1;
    int j = static_cast<int>(b.size()) - 1;
    while (i >= 0 && j >= 0) {
        int c = compare(a[i], b[j]);
        if (c == 0) {
            --i;
            --j;
        } else {
            return c < 0 ? -1 : 1;
        }
    }
    if (i >= 0) return 1;
    if (j >= 0) return -1;
    return 0;
}

int compare_keys(LabelId l1, const BitSeq& b1, const View& n1,
                 LabelId l2, const BitSeq& b2, const View& n2) {
    if (l1 != l2) return l1 < l2 ? -1 : 1;
    if (int c = compare(b1, b2); c != 0) return c;
    return compare_views(n1, n2);
}

int compare_full(const MailboxEntry& a, const MailboxEntry& b) {
    if (a.n != b.n) return a.n < b.n ? -1 : 1;
    return compare_keys(a.l, a.b, a.N, b.l, b.b, b.N);
}

bool operator==(const MailboxEntry& a, const MailboxEntry& b) { return compare_full(a, b) == 0; }

bool entry_subsumed(const MailboxEntry& drop, const MailboxEntry& keep) {
    if (drop.n != keep.n || drop.l != keep.l) return false;
    if (!drop.b.prefix_of(keep.b)) return false;
    const auto& de = drop.N.entries();
    const auto& ke = keep.N.entries();
    if (de.size() != ke.size()) return false;
    // match view entries by receiving port; stripped records must agree and
    // bits must refine
    for (const auto& d : de) {
        const ViewEntry* k = keep.N.by_port(d.q);
        if (!k || k->m != d.m || k->l != d.l || k->p != d.p) return false;
        if (!d.b.prefix_of(k->b)) return false;
    }
    return true;
}

bool Mailbox::add(MailboxEntry e) {
    bool proj_new = true;
    for (const auto& have : entries_) {
        if (entry_subsumed(e, have)) return false;  // covers equality too
    }
    // a projected twin exists iff some entry shares (n, l, stripped N)
    for (const auto& have : entries_) {
        if (have.n == e.n && have.l == e.l && have.N.entries().size() == e.N.entries().size()) {
            bool same = true;
            for (const auto& d : e.N.entries()) {
                const ViewEntry* k = have.N.by_port(d.q);
                if (!k || k->m != d.m || k->l != d.l || k->p != d.p) {
                    same = false;
                    break;
                }
            }
            if (same) {
                proj_new = false;
                break;
            }
        }
    }
    entries_.erase(std::remove_if(entries_.begin(), entries_.end(),
                                  [&](const MailboxEntry& have) { return entry_subsumed(have, e); }),
                   entries_.end());
    auto pos = std::lower_bound(
        entries_.begin(), entries_.end(), e,
        [](const MailboxEntry& a, const MailboxEntry& b) { return compare_full(a, b) < 0; });
    entries_.insert(pos, std::move(e));
    ++version_;
    return proj_new;
}

bool Mailbox::merge(const Mailbox& other) {
    bool changed = false;
    for (const auto& e : other.entries_) changed |= add(e);
    return changed;
}

int Mailbox::max_number() const {
    int best = 0;
    for (const auto& e : entries_) best = std::max(best, e.n);
    return best;
}

bool Mailbox::has_number(int n) const {
    for (const auto& e : entries_)
        if (e.n == n) return true;
    return false;
}

std::vector<const MailboxEntry*> Mailbox::maximal_per_number() const {
    // entries_ sorted by (n, key): the last entry of each number group is the
    // key-maximal one
    std::vector<const MailboxEntry*> out;
    for (std::size_t i = 0; i < entries_.size(); ++i) {
        if (i + 1 == entries_.size() || entries_[i + 1].n != entries_[i].n)
            out.push_back(&entries_[i]);
    }
    return out;
}

bool Mailbox::key_is_maximal(int n, LabelId l, const BitSeq& b, const View& N) const {
    for (const auto& e : entries_) {
        if (e.n != n) continue;
        if (compare_keys(l, b, N, e.l, e.b, e.N) < 0) return false;
    }
    return true;
}

namespace {

void append_proj_entry(std::ostringstream& os, const MailboxEntry& e) {
    os << e.n << ':' << e.l << '[';
    for (const auto& v : e.N.entries()) os << v.m << ',' << v.l << ',' << v.p << ',' << v.q << ';';
    os << ']';
}

std::set<std::string> proj_set(const Mailbox& m) {
    std::set<std::string> out;
    for (const auto& e : m.entries()) {
        std::ostringstream os;
        append_proj_entry(os, e);
        out.insert(os.str());
    }
    return out;
}

} // namespace

bool Mailbox::proj_equal(const Mailbox& o) const { return proj_set(*this) == proj_set(o); }

bool Mailbox::proj_subset_of(const Mailbox& o) const {
    auto a = proj_set(*this), b = proj_set(o);
    return std::includes(b.begin(), b.end(), a.begin(), a.end());
}

bool Mailbox::covered_by(const Mailbox& o) const {
    for (const auto& e : entries_) {
        bool ok = false;
        for (const auto& k : o.entries_)
            if (entry_subsumed(e, k)) {
                ok = true;
                break;
            }
        if (!ok) return false;
    }
    return true;
}

std::string Mailbox::proj_key() const {
    std::ostringstream os;
    for (const auto& s : proj_set(*this)) os << s << '|';
    return os.str();
}

Coherence maximal_coherent(const Mailbox& m) {
    Coherence c;
    auto smax = m.maximal_per_number();
    if (smax.empty()) return c;  // empty S is not coherent
    for (const auto* e : smax) c.smax.push_back(*e);

    auto find_number = [&](int n) -> const MailboxEntry* {
        for (const auto& e : c.smax)
            if (e.n == n) return &e;
        return nullptr;
    };
    for (const auto& e1 : c.smax) {
        for (const auto& v : e1.N.entries()) {
            if (v.p == 0 || v.m == 0 || v.l == kBottomLabel) return c;
            const MailboxEntry* e2 = find_number(v.m);
            if (!e2) return c;
            if (e2->l != v.l) return c;
            if (!e2->b.prefix_of(v.b)) return c;
            if (!e2->N.contains({e1.n, e1.l, e1.b, v.q, v.p})) return c;
        }
    }
    c.coherent = true;
    return c;
}

SymDigraph build_dm(const std::vector<MailboxEntry>& smax, const LabelTable& labels) {
    SymDigraph d;
    std::map<int, int> vertex_of;  // number -> vertex index
    for (const auto& e : smax) {
        if (vertex_of.count(e.n))
            throw std::invalid_argument("build_dm: duplicate number in S(M)");
        vertex_of[e.n] = d.num_vertices();
        d.vertices.push_back({std::to_string(e.n), labels.name(e.l), ""});
    }
    std::map<std::tuple<int, int, int, int>, int> arc_of;  // (src#, dst#, p, q) -> arc
    for (const auto& e : smax) {
        for (const auto& v : e.N.entries()) {
            auto src = vertex_of.find(v.m);
            if (src == vertex_of.end())
                throw std::invalid_argument("build_dm: view references an absent number");
            d.arcs.push_back({src->second, vertex_of.at(e.n), v.p, v.q});
            arc_of[{v.m, e.n, v.p, v.q}] = d.num_arcs() - 1;
        }
    }
    d.sym.assign(d.num_arcs(), -1);
    for (const auto& [key, a] : arc_of) {
        auto [sn, tn, p, q] = key;
        auto it = arc_of.find({tn, sn, q, p});
        if (it == arc_of.end())
            throw std::invalid_argument("build_dm: missing back arc; S(M) is not coherent");
        d.sym[a] = it->second;
    }
    return d;
}

} // namespace anet
