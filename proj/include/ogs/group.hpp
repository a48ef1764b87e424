#pragma once

#include <cstdint>
#include <map>
#include <memory>

#include <gmpxx.h>

namespace ogs {

using Int = mpz_class;
using Rational = mpq_class;

/// Symbolic description of a finite group: cyclic Z_n, dihedral D_n
/// (order 2n), or a direct product.
struct GroupExpr;
using GroupExprPtr = std::shared_ptr<const GroupExpr>;

struct GroupExpr {
    enum class Tag { Cyclic, Dihedral, Product };

    Tag tag;
    std::uint64_t n = 0;       // Cyclic / Dihedral parameter
    GroupExprPtr left, right;  // Product factors

    static GroupExprPtr cyclic(std::uint64_t n);    // requires n >= 1
    static GroupExprPtr dihedral(std::uint64_t n);  // requires n >= 3
    static GroupExprPtr product(GroupExprPtr l, GroupExprPtr r);

    Int order() const;

    bool operator==(const GroupExpr& other) const;
};

/// Element-order census: order -> number of elements of that order.
using OrderProfile = std::map<Int, Int>;

std::uint64_t euler_phi(std::uint64_t n);

/// Arithmetic census. Cyclic via divisor/totient counts, dihedral adds n
/// reflections of order 2, products convolve profiles under lcm.
OrderProfile order_profile(const GroupExpr& expr);

/// Brute-force oracle: materializes every element order. Throws CapExceeded
/// when the group has more than `cap` elements.
OrderProfile enumerate_element_orders(const GroupExpr& expr, std::uint64_t cap);

}  // namespace ogs
