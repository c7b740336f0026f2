// Seeded random sources with sharing classes. Each class owns a
// counter-addressable bit stream: bit(class, t) is a pure function of the
// class seed and the index t, so two vertices of the same class observe
// identical bits at identical draw indices regardless of interleaving.
#pragma once

#include <cstdint>
#include <stdexcept>
#include <string>
#include <string_view>
#include <vector>

namespace anet {

inline std::uint64_t splitmix64(std::uint64_t x) {
    x += 0x9E3779B97F4A7C15ULL;
    x = (x ^ (x >> 30)) * 0xBF58476D1CE4E5B9ULL;
    x = (x ^ (x >> 27)) * 0x94D049BB133111EBULL;
    return x ^ (x >> 31);
}

// Derives a child seed from a master seed and a textual tag.
inline std::uint64_t derive_seed(std::uint64_t master, std::string_view tag) {
    std::uint64_t h = splitmix64(master ^ 0xA0761D6478BD642FULL);
    for (unsigned char c : tag) h = splitmix64(h ^ c);
    return h;
}

inline std::uint64_t derive_seed(std::uint64_t master, std::uint64_t index) {
    return splitmix64(splitmix64(master ^ 0xE7037ED1A0B428DBULL) ^ index);
}

// Deterministic unbiased bit for (class seed, draw index).
inline int stream_bit(std::uint64_t class_seed, std::uint64_t index) {
    return static_cast<int>(splitmix64(class_seed ^ splitmix64(index + 1)) >> 63);
}

// Small deterministic generator for scheduler decisions; kept separate from
// the source streams so adversary randomness never perturbs algorithm bits.
class Rng {
public:
    explicit Rng(std::uint64_t seed) : state_(seed) {}
    std::uint64_t next() {
        state_ += 0x9E3779B97F4A7C15ULL;
        std::uint64_t z = state_;
        z = (z ^ (z >> 30)) * 0xBF58476D1CE4E5B9ULL;
        z = (z ^ (z >> 27)) * 0x94D049BB133111EBULL;
        return z ^ (z >> 31);
    }
    // uniform in [0, n), rejection sampled
    std::uint64_t below(std::uint64_t n) {
        if (n == 0) throw std::invalid_argument("Rng::below(0)");
        std::uint64_t limit = UINT64_MAX - UINT64_MAX % n;
        std::uint64_t x;
        do { x = next(); } while (x >= limit);
        return x % n;
    }

private:
    std::uint64_t state_;
};

struct DrawRecord {
    int vertex = 0;
    int source_class = 0;
    std::uint64_t index = 0;
    int bit = 0;
    bool operator==(const DrawRecord&) const = default;
};

using DrawLog = std::vector<DrawRecord>;

// Partition of vertices into randomness classes plus per-vertex draw cursors.
struct SourceAssignment {
    std::vector<int> class_of;              // vertex -> class index
    std::vector<std::string> class_name;    // class index -> id
    std::vector<std::uint64_t> class_seed;  // class index -> stream seed
    std::vector<std::uint64_t> draw_count;  // vertex -> next index

    int num_vertices() const { return static_cast<int>(class_of.size()); }
    int num_classes() const { return static_cast<int>(class_seed.size()); }

    // Class seeds derived from one master experiment seed and the class id.
    static SourceAssignment from_classes(const std::vector<std::string>& vertex_class,
                                         std::uint64_t master_seed);

    void reset_counters() { draw_count.assign(draw_count.size(), 0); }
};

int draw_bit(SourceAssignment& a, int vertex, DrawLog* log = nullptr);

} // namespace anet
