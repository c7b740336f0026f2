#include "anet/randomness.hpp"

#include <map>

namespace anet {

SourceAssignment SourceAssignment::from_classes(const std::vector<std::string>& vertex_class,
                                                std::uint64_t master_seed) {
    SourceAssignment a;
    a.class_of.resize(vertex_class.size());
    std::map<std::string, int> index;
    for (std::size_t v = 0; v < vertex_class.size(); ++v) {
        auto [it, fresh] = index.emplace(vertex_class[v], static_cast<int>(a.class_name.size()));
        if (fresh) {
            a.class_name.push_back(vertex_class[v]);
            a.class_seed.push_back(derive_seed(master_seed, vertex_class[v]));
        }
        a.class_of[v] = it->second;
    }
    a.draw_count.assign(vertex_class.size(), 0);
    return a;
}

int draw_bit(SourceAssignment& a, int vertex, DrawLog* log) {
    if (vertex < 0 || vertex >= a.num_vertices())
        throw std::invalid_argument("draw_bit: unknown vertex");
    int cls = a.class_of[vertex];
    std::uint64_t idx = a.draw_count[vertex]++;
    int bit = stream_bit(a.class_seed[cls], idx);
    if (log) log->push_back({vertex, cls, idx, bit});
    return bit;
}

} // namespace anet
