#define DOCTEST_CONFIG_IMPLEMENT_WITH_MAIN
#include <doctest.h>

#include <random>
#include <vector>

#include "pqsim/ordsets.hpp"

using namespace pqsim;

namespace {

OrderedSet set_of(std::initializer_list<long long> values) {
    std::vector<Rational> v;
    for (long long x : values) v.emplace_back(x);
    return OrderedSet(std::move(v));
}

// All non-decreasing sequences over {1..max_value} with size <= max_len.
std::vector<std::vector<int>> enumerate_multisets(int max_value, int max_len) {
    std::vector<std::vector<int>> out;
    std::vector<int> current;
    auto rec = [&](auto&& self, int min_value) -> void {
        out.push_back(current);
        if (static_cast<int>(current.size()) == max_len) return;
        for (int v = min_value; v <= max_value; ++v) {
            current.push_back(v);
            self(self, v);
            current.pop_back();
        }
    };
    rec(rec, 1);
    return out;
}

OrderedSet to_set(const std::vector<int>& values) {
    std::vector<Rational> v;
    for (int x : values) v.emplace_back(x);
    return OrderedSet(std::move(v));
}

bool pair_preconditions(const OrderedSet& a, const OrderedSet& b, const Rational& add_b) {
    if (!dominates(a, b)) return false;
    return (!b.empty() && add_b <= b.max()) || a.size() <= b.size();
}

}  // namespace

TEST_CASE("dominance is an elementwise prefix comparison") {
    CHECK(dominates(set_of({2, 4}), set_of({1, 3})));
    CHECK(!dominates(set_of({3, 5}), set_of({2, 6})));
    CHECK(dominates(set_of({}), set_of({1, 2})));
    CHECK(dominates(set_of({1, 2}), set_of({})));
    CHECK(dominates(set_of({2}), set_of({1, 100})));
}

TEST_CASE("dominance is reflexive and transitive on equal lengths") {
    std::mt19937 rng(3);
    for (int round = 0; round < 2000; ++round) {
        const std::size_t n = rng() % 6;
        std::vector<Rational> c, b, a;
        for (std::size_t i = 0; i < n; ++i) c.emplace_back(static_cast<long long>(rng() % 20));
        OrderedSet C(c);
        for (const Rational& v : C.values()) b.push_back(v + Rational(static_cast<long long>(rng() % 4)));
        OrderedSet B0(b);
        for (const Rational& v : B0.values()) a.push_back(v + Rational(static_cast<long long>(rng() % 4)));
        OrderedSet A(a);
        REQUIRE(dominates(A, A));
        REQUIRE(dominates(A, B0));
        REQUIRE(dominates(B0, C));
        REQUIRE(dominates(A, C));
    }
}

TEST_CASE("adding a pair keeps dominance") {
    auto [a1, b1] = insert_pair(set_of({2, 4}), set_of({1, 3}), Rational(5), Rational(3));
    CHECK(a1.values() == std::vector<Rational>{Rational(2), Rational(4), Rational(5)});
    CHECK(b1.values() == std::vector<Rational>{Rational(1), Rational(3), Rational(3)});
    CHECK(dominates(a1, b1));

    auto [a2, b2] = insert_pair(set_of({2}), set_of({1, 3}), Rational(9), Rational(8));
    CHECK(a2.values() == std::vector<Rational>{Rational(2), Rational(9)});
    CHECK(b2.values() == std::vector<Rational>{Rational(1), Rational(3), Rational(8)});
    CHECK(dominates(a2, b2));
}

TEST_CASE("adding to the dominated set alone keeps dominance") {
    OrderedSet b1 = insert_single(set_of({2, 4}), set_of({1, 3}), Rational(2));
    CHECK(b1.values() == std::vector<Rational>{Rational(1), Rational(2), Rational(3)});
    CHECK(dominates(set_of({2, 4}), b1));

    OrderedSet b2 = insert_single(set_of({5}), set_of({1, 2}), Rational(10));
    CHECK(b2.values() == std::vector<Rational>{Rational(1), Rational(2), Rational(10)});
    CHECK(dominates(set_of({5}), b2));
}

TEST_CASE("precondition violations are contract errors") {
    CHECK_THROWS_AS(insert_pair(set_of({1}), set_of({2}), Rational(3), Rational(2)),
                    ContractError);
    CHECK_THROWS_AS(insert_pair(set_of({2}), set_of({1}), Rational(1), Rational(2)),
                    ContractError);
    // |A| > |B| and the new element exceeds max(B).
    CHECK_THROWS_AS(insert_pair(set_of({2, 4}), set_of({1}), Rational(9), Rational(8)),
                    ContractError);
    CHECK_THROWS_AS(insert_single(set_of({2, 4}), set_of({1}), Rational(8)), ContractError);
}

TEST_CASE("exhaustive small-domain check of both insertions") {
    const auto multisets = enumerate_multisets(4, 4);
    long long pair_cases = 0, single_cases = 0;
    for (const auto& av : multisets) {
        for (const auto& bv : multisets) {
            const OrderedSet a = to_set(av);
            const OrderedSet b = to_set(bv);
            if (!dominates(a, b)) continue;
            for (int x = 1; x <= 4; ++x) {
                for (int y = 1; y <= 4; ++y) {
                    if (x < y || !pair_preconditions(a, b, Rational(y))) continue;
                    auto [a2, b2] = insert_pair(a, b, Rational(x), Rational(y));
                    REQUIRE(dominates(a2, b2));
                    ++pair_cases;
                }
                if (pair_preconditions(a, b, Rational(x))) {
                    REQUIRE(dominates(a, insert_single(a, b, Rational(x))));
                    ++single_cases;
                }
            }
        }
    }
    // Guard against the filter accidentally voiding the whole sweep.
    CHECK(pair_cases > 10000);
    CHECK(single_cases > 5000);
}

TEST_CASE("randomized rational cases keep dominance") {
    std::mt19937 rng(17);
    auto rational = [&rng]() {
        return Rational(1 + static_cast<long long>(rng() % 60),
                        1 + static_cast<long long>(rng() % 6));
    };
    int checked = 0;
    while (checked < 20000) {
        const std::size_t nb = rng() % 7;
        const std::size_t extra = rng() % 3;
        std::vector<Rational> bv;
        for (std::size_t i = 0; i < nb; ++i) bv.push_back(rational());
        OrderedSet b(bv);
        // Build a dominating A of length |B| - 0..2 or |B| + extra.
        std::vector<Rational> av;
        const std::size_t na = rng() % 2 == 0 ? nb + extra : nb - std::min(nb, extra);
        Rational floor(0);
        for (std::size_t i = 0; i < na; ++i) {
            Rational base = i < nb ? b.values()[i] : floor;
            Rational v = std::max(floor, base + Rational(static_cast<long long>(rng() % 5), 3));
            av.push_back(v);
            floor = v;
        }
        OrderedSet a(av);
        Rational add_b = rational();
        Rational add_a = add_b + Rational(static_cast<long long>(rng() % 9), 2);
        if (!pair_preconditions(a, b, add_b)) continue;
        auto [a2, b2] = insert_pair(a, b, add_a, add_b);
        REQUIRE(dominates(a2, b2));
        REQUIRE(dominates(a, insert_single(a, b, add_b)));
        ++checked;
    }
}
