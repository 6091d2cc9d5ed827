#pragma once

#include <cstddef>
#include <utility>
#include <vector>

#include "pqsim/rational.hpp"

namespace pqsim {

/// Multiset of rationals kept in non-decreasing order.
class OrderedSet {
public:
    OrderedSet() = default;
    explicit OrderedSet(std::vector<Rational> values); // sorts the input

    void insert(const Rational& v);
    const std::vector<Rational>& values() const { return values_; }
    std::size_t size() const { return values_.size(); }
    bool empty() const { return values_.empty(); }

    /// Largest element; ContractError when empty.
    const Rational& max() const;

    bool operator==(const OrderedSet&) const = default;

private:
    std::vector<Rational> values_;
};

/// Elementwise a_i >= b_i over the common prefix (vacuously true when one
/// set is empty).
bool dominates(const OrderedSet& a, const OrderedSet& b);

/// Adds add_a to A and add_b to B. Preconditions (ContractError when
/// violated): dominates(A, B), add_a >= add_b, and either add_b <= max(B)
/// or |A| <= |B|. The result then still satisfies dominates.
std::pair<OrderedSet, OrderedSet> insert_pair(const OrderedSet& a, const OrderedSet& b,
                                              const Rational& add_a, const Rational& add_b);

/// Adds add_b to B only, under the same preconditions (without add_a);
/// dominates(A, B') still holds.
OrderedSet insert_single(const OrderedSet& a, const OrderedSet& b, const Rational& add_b);

}  // namespace pqsim
