#include "ogs/graph.hpp"

#include <numeric>

#include "ogs/errors.hpp"

namespace ogs {

Int OrderClassGraph::total_vertices() const {
    Int total = 0;
    for (const auto& c : classes) total += c.size;
    return total;
}

OrderClassGraph class_graph(const OrderProfile& profile) {
    OrderClassGraph cg;
    cg.classes.reserve(profile.size());
    for (const auto& [d, c] : profile) cg.classes.push_back({d, c});  // map is sorted
    std::size_t t = cg.classes.size();
    cg.rel.assign(t, std::vector<bool>(t, false));
    for (std::size_t i = 0; i < t; ++i)
        for (std::size_t j = i + 1; j < t; ++j) {
            // classes sorted ascending, so only d_i | d_j can hold
            bool related = mpz_divisible_p(cg.classes[j].order.get_mpz_t(),
                                           cg.classes[i].order.get_mpz_t()) != 0;
            cg.rel[i][j] = cg.rel[j][i] = related;
        }
    return cg;
}

DenseGraph expand_dense(const OrderClassGraph& cg, std::size_t cap) {
    Int total = cg.total_vertices();
    if (total > Int(static_cast<unsigned long>(cap)))
        throw CapExceeded("dense expansion of " + total.get_str() +
                          " vertices exceeds cap " + std::to_string(cap));
    std::size_t n = static_cast<std::size_t>(total.get_ui());

    DenseGraph g;
    g.n = n;
    g.words_per_row = (n + 63) / 64;
    g.bits.assign(n * g.words_per_row, 0);
    g.class_of.resize(n);

    std::vector<std::size_t> offset(cg.num_classes() + 1, 0);
    for (std::size_t c = 0; c < cg.num_classes(); ++c)
        offset[c + 1] = offset[c] + static_cast<std::size_t>(cg.classes[c].size.get_ui());
    for (std::size_t c = 0; c < cg.num_classes(); ++c)
        for (std::size_t v = offset[c]; v < offset[c + 1]; ++v) g.class_of[v] = c;

    auto set_edge = [&](std::size_t i, std::size_t j) {
        g.bits[i * g.words_per_row + j / 64] |= (std::uint64_t{1} << (j % 64));
        g.bits[j * g.words_per_row + i / 64] |= (std::uint64_t{1} << (i % 64));
    };
    for (std::size_t i = 0; i < n; ++i)
        for (std::size_t j = i + 1; j < n; ++j) {
            std::size_t ci = g.class_of[i], cj = g.class_of[j];
            if (ci == cj || cg.rel[ci][cj]) set_edge(i, j);
        }
    return g;
}

GraphStats graph_stats(const OrderClassGraph& cg) {
    GraphStats s;
    s.vertex_count = cg.total_vertices();
    std::size_t t = cg.num_classes();
    s.degrees_by_class.reserve(t);
    Int degree_sum = 0;
    for (std::size_t i = 0; i < t; ++i) {
        Int deg = cg.classes[i].size - 1;
        for (std::size_t j = 0; j < t; ++j)
            if (j != i && cg.rel[i][j]) deg += cg.classes[j].size;
        s.degrees_by_class.push_back(deg);
        degree_sum += deg * cg.classes[i].size;
    }
    s.edge_count = degree_sum / 2;

    // Connectivity on the class super-graph: each class is internally a
    // clique, so the expansion is connected iff the super-graph is.
    if (t <= 1) {
        s.connected = true;
    } else {
        std::vector<std::size_t> parent(t);
        std::iota(parent.begin(), parent.end(), 0);
        auto find = [&](std::size_t a) {
            while (parent[a] != a) a = parent[a] = parent[parent[a]];
            return a;
        };
        for (std::size_t i = 0; i < t; ++i)
            for (std::size_t j = i + 1; j < t; ++j)
                if (cg.rel[i][j]) parent[find(i)] = find(j);
        s.connected = true;
        for (std::size_t i = 1; i < t && s.connected; ++i)
            if (find(i) != find(0)) s.connected = false;
    }
    return s;
}

}  // namespace ogs
