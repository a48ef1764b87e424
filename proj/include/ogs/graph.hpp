#pragma once

#include <cstddef>
#include <cstdint>
#include <vector>

#include "ogs/group.hpp"

namespace ogs {

/// Implicit superpower graph: one class per element order. Each class is a
/// clique; classes are fully joined iff their orders are comparable under
/// divisibility.
struct OrderClassGraph {
    struct OrderClass {
        Int order;
        Int size;
    };
    std::vector<OrderClass> classes;       // sorted by order ascending
    std::vector<std::vector<bool>> rel;    // symmetric, false diagonal

    std::size_t num_classes() const { return classes.size(); }
    Int total_vertices() const;
};

/// Explicit bit-packed adjacency, vertices numbered class by class.
struct DenseGraph {
    std::size_t n = 0;
    std::size_t words_per_row = 0;
    std::vector<std::uint64_t> bits;
    std::vector<std::size_t> class_of;

    bool adjacent(std::size_t i, std::size_t j) const {
        return (bits[i * words_per_row + j / 64] >> (j % 64)) & 1u;
    }
};

struct GraphStats {
    Int vertex_count;
    Int edge_count;
    bool connected = false;
    std::vector<Int> degrees_by_class;
};

OrderClassGraph class_graph(const OrderProfile& profile);

constexpr std::size_t kDenseCap = 20000;

DenseGraph expand_dense(const OrderClassGraph& cg, std::size_t cap = kDenseCap);

GraphStats graph_stats(const OrderClassGraph& cg);

}  // namespace ogs
