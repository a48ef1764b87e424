#include "ogs/group.hpp"

#include <numeric>
#include <utility>
#include <vector>

#include "ogs/errors.hpp"

namespace ogs {

GroupExprPtr GroupExpr::cyclic(std::uint64_t n) {
    if (n < 1) throw DomainError("Cyclic group parameter must be >= 1");
    auto e = std::make_shared<GroupExpr>();
    e->tag = Tag::Cyclic;
    e->n = n;
    return e;
}

GroupExprPtr GroupExpr::dihedral(std::uint64_t n) {
    // D1/D2 conventions conflict (Z2 vs Klein four); reject below 3.
    if (n < 3) throw DomainError("Dihedral group parameter must be >= 3");
    auto e = std::make_shared<GroupExpr>();
    e->tag = Tag::Dihedral;
    e->n = n;
    return e;
}

GroupExprPtr GroupExpr::product(GroupExprPtr l, GroupExprPtr r) {
    if (!l || !r) throw DomainError("Product requires two factors");
    auto e = std::make_shared<GroupExpr>();
    e->tag = Tag::Product;
    e->left = std::move(l);
    e->right = std::move(r);
    return e;
}

Int GroupExpr::order() const {
    switch (tag) {
        case Tag::Cyclic: return Int(static_cast<unsigned long>(n));
        case Tag::Dihedral: return 2 * Int(static_cast<unsigned long>(n));
        case Tag::Product: return left->order() * right->order();
    }
    return 0;
}

bool GroupExpr::operator==(const GroupExpr& other) const {
    if (tag != other.tag) return false;
    if (tag == Tag::Product) return *left == *other.left && *right == *other.right;
    return n == other.n;
}

namespace {

std::vector<std::pair<std::uint64_t, unsigned>> factorize(std::uint64_t n) {
    std::vector<std::pair<std::uint64_t, unsigned>> fs;
    for (std::uint64_t q = 2; q * q <= n; ++q) {
        if (n % q == 0) {
            unsigned e = 0;
            while (n % q == 0) { n /= q; ++e; }
            fs.emplace_back(q, e);
        }
    }
    if (n > 1) fs.emplace_back(n, 1);
    return fs;
}

// Profile of Z_n: phi(d) elements of order d for each divisor d | n.
void add_cyclic_profile(OrderProfile& out, std::uint64_t n) {
    auto fs = factorize(n);
    // Walk all divisors together with their totients.
    std::vector<std::pair<Int, Int>> divs = {{Int(1), Int(1)}};  // (d, phi(d))
    for (auto [q, e] : fs) {
        std::vector<std::pair<Int, Int>> next;
        next.reserve(divs.size() * (e + 1));
        for (auto& [d, ph] : divs) {
            Int dq = d, phq = ph;
            next.emplace_back(d, ph);
            for (unsigned i = 1; i <= e; ++i) {
                dq *= static_cast<unsigned long>(q);
                phq = (i == 1) ? ph * static_cast<unsigned long>(q - 1)
                               : phq * static_cast<unsigned long>(q);
                next.emplace_back(dq, phq);
            }
        }
        divs = std::move(next);
    }
    for (auto& [d, ph] : divs) out[d] += ph;
}

OrderProfile profile_impl(const GroupExpr& e) {
    OrderProfile out;
    switch (e.tag) {
        case GroupExpr::Tag::Cyclic:
            add_cyclic_profile(out, e.n);
            break;
        case GroupExpr::Tag::Dihedral:
            add_cyclic_profile(out, e.n);
            out[Int(2)] += static_cast<unsigned long>(e.n);
            break;
        case GroupExpr::Tag::Product: {
            OrderProfile l = profile_impl(*e.left);
            OrderProfile r = profile_impl(*e.right);
            for (auto& [d1, c1] : l)
                for (auto& [d2, c2] : r) {
                    Int l12;
                    mpz_lcm(l12.get_mpz_t(), d1.get_mpz_t(), d2.get_mpz_t());
                    out[l12] += c1 * c2;
                }
            break;
        }
    }
    return out;
}

void collect_orders(const GroupExpr& e, std::vector<Int>& out) {
    switch (e.tag) {
        case GroupExpr::Tag::Cyclic:
            for (std::uint64_t i = 0; i < e.n; ++i)
                out.push_back(Int(static_cast<unsigned long>(e.n / std::gcd(i, e.n))));
            break;
        case GroupExpr::Tag::Dihedral:
            for (std::uint64_t i = 0; i < e.n; ++i)
                out.push_back(Int(static_cast<unsigned long>(e.n / std::gcd(i, e.n))));
            for (std::uint64_t i = 0; i < e.n; ++i) out.push_back(Int(2));
            break;
        case GroupExpr::Tag::Product: {
            std::vector<Int> l, r;
            collect_orders(*e.left, l);
            collect_orders(*e.right, r);
            out.reserve(out.size() + l.size() * r.size());
            for (auto& a : l)
                for (auto& b : r) {
                    Int l12;
                    mpz_lcm(l12.get_mpz_t(), a.get_mpz_t(), b.get_mpz_t());
                    out.push_back(l12);
                }
            break;
        }
    }
}

}  // namespace

std::uint64_t euler_phi(std::uint64_t n) {
    std::uint64_t result = n;
    for (auto [q, e] : factorize(n)) result = result / q * (q - 1);
    return result;
}

OrderProfile order_profile(const GroupExpr& expr) { return profile_impl(expr); }

OrderProfile enumerate_element_orders(const GroupExpr& expr, std::uint64_t cap) {
    if (expr.order() > Int(static_cast<unsigned long>(cap)))
        throw CapExceeded("group order " + expr.order().get_str() +
                          " exceeds enumeration cap " + std::to_string(cap));
    std::vector<Int> orders;
    collect_orders(expr, orders);
    OrderProfile out;
    for (auto& d : orders) out[d] += 1;
    return out;
}

}  // namespace ogs
