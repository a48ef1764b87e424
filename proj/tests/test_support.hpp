#pragma once

#include <random>

#include "ogs/group.hpp"

namespace ogs::testing {

/// Random group expression with bounded depth. Parameter range is kept small
/// enough that typical draws stay enumerable.
inline GroupExprPtr random_expr(std::mt19937& rng, int max_depth,
                                std::uint64_t max_n = 12) {
    std::uniform_int_distribution<int> pick(0, max_depth > 0 ? 2 : 1);
    switch (pick(rng)) {
        case 0: {
            std::uniform_int_distribution<std::uint64_t> n(1, max_n);
            return GroupExpr::cyclic(n(rng));
        }
        case 1: {
            std::uniform_int_distribution<std::uint64_t> n(3, max_n);
            return GroupExpr::dihedral(n(rng));
        }
        default:
            return GroupExpr::product(random_expr(rng, max_depth - 1, max_n),
                                      random_expr(rng, max_depth - 1, max_n));
    }
}

/// Draw until the group order fits under the cap.
inline GroupExprPtr random_expr_capped(std::mt19937& rng, int max_depth,
                                       std::uint64_t order_cap,
                                       std::uint64_t max_n = 12) {
    for (;;) {
        auto e = random_expr(rng, max_depth, max_n);
        if (e->order() <= Int(static_cast<unsigned long>(order_cap))) return e;
    }
}

}  // namespace ogs::testing
