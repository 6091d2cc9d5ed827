#include "pqsim/ordsets.hpp"

#include <algorithm>

#include "pqsim/errors.hpp"

namespace pqsim {

OrderedSet::OrderedSet(std::vector<Rational> values) : values_(std::move(values)) {
    std::sort(values_.begin(), values_.end());
}

void OrderedSet::insert(const Rational& v) {
    values_.insert(std::upper_bound(values_.begin(), values_.end(), v), v);
}

const Rational& OrderedSet::max() const {
    if (values_.empty()) throw ContractError("max: ordered set is empty");
    return values_.back();
}

bool dominates(const OrderedSet& a, const OrderedSet& b) {
    const std::size_t n = std::min(a.size(), b.size());
    for (std::size_t i = 0; i < n; ++i)
        if (a.values()[i] < b.values()[i]) return false;
    return true;
}

namespace {

void require_preconditions(const OrderedSet& a, const OrderedSet& b, const Rational& add_b,
                           const char* op) {
    if (!dominates(a, b))
        throw ContractError(std::string(op) + ": A must dominate B");
    const bool below_tail = !b.empty() && add_b <= b.max();
    const bool size_ok = a.size() <= b.size();
    if (!below_tail && !size_ok)
        throw ContractError(std::string(op) + ": needs b <= max(B) or |A| <= |B|");
}

}  // namespace

std::pair<OrderedSet, OrderedSet> insert_pair(const OrderedSet& a, const OrderedSet& b,
                                              const Rational& add_a, const Rational& add_b) {
    if (add_a < add_b) throw ContractError("insert_pair: requires a >= b");
    require_preconditions(a, b, add_b, "insert_pair");
    OrderedSet a2 = a;
    OrderedSet b2 = b;
    a2.insert(add_a);
    b2.insert(add_b);
    return {std::move(a2), std::move(b2)};
}

OrderedSet insert_single(const OrderedSet& a, const OrderedSet& b, const Rational& add_b) {
    require_preconditions(a, b, add_b, "insert_single");
    OrderedSet b2 = b;
    b2.insert(add_b);
    return b2;
}

}  // namespace pqsim
