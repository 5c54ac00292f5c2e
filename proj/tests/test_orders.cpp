#include <gtest/gtest.h>

#include <algorithm>
#include <set>

#include "generators.hpp"
#include "slinf/orders.hpp"

using namespace slinf;

namespace {

std::vector<std::int64_t> indices(const std::vector<Position>& ps) {
    std::vector<std::int64_t> out;
    for (auto p : ps) out.push_back(p.index);
    return out;
}

}  // namespace

TEST(Orders, PrecedesExamples) {
    EXPECT_TRUE(precedes(OrderSpec(OrderKind::RightInfinite), {1}, {2}));
    EXPECT_FALSE(precedes(OrderSpec(OrderKind::LeftInfinite), {-1}, {-2}));
    EXPECT_TRUE(precedes(OrderSpec(OrderKind::TwoSided), {-3}, {5}));
}

TEST(Orders, InvalidPositionsAreRejected) {
    EXPECT_THROW(precedes(OrderSpec(OrderKind::RightInfinite), {0}, {2}), DomainError);
    EXPECT_THROW(precedes(OrderSpec(OrderKind::LeftInfinite), {1}, {-2}), DomainError);
    EXPECT_THROW(OrderSpec(OrderKind::RightInfinite, {{1, 2}, {2, 3}}), DomainError);
    EXPECT_THROW(OrderSpec(OrderKind::RightInfinite, {{4, 4}}), DomainError);
    EXPECT_THROW(OrderSpec(OrderKind::LeftInfinite, {{-1, 3}}), DomainError);
}

TEST(Orders, PositiveRootExamples) {
    const OrderSpec r(OrderKind::RightInfinite);
    EXPECT_TRUE(is_positive_root(r, {1}, {3}));
    EXPECT_FALSE(is_positive_root(r, {3}, {1}));
    EXPECT_FALSE(is_positive_root(OrderSpec(OrderKind::TwoSided), {0}, {-1}));
    EXPECT_THROW(is_positive_root(r, {2}, {2}), DomainError);
}

TEST(Orders, RelabelingSwapsPositions) {
    const OrderSpec o(OrderKind::RightInfinite, {{5, 2}});
    EXPECT_EQ(o.relabeling().front(), (OrderSpec::Transposition{2, 5}));
    EXPECT_TRUE(precedes(o, {5}, {3}));
    EXPECT_TRUE(precedes(o, {3}, {2}));
    EXPECT_EQ(o.slot({5}).index, 2);
    EXPECT_EQ(OrderSpec(OrderKind::RightInfinite, {{2, 5}}), o);
}

TEST(Orders, WindowExamples) {
    EXPECT_EQ(indices(finite_window(OrderSpec(OrderKind::RightInfinite), 3)), (std::vector<std::int64_t>{1, 2, 3}));
    EXPECT_EQ(indices(finite_window(OrderSpec(OrderKind::LeftInfinite), 3)), (std::vector<std::int64_t>{-3, -2, -1}));
    EXPECT_EQ(indices(finite_window(OrderSpec(OrderKind::TwoSided), 3)), (std::vector<std::int64_t>{-1, 0, 1}));
    EXPECT_EQ(indices(finite_window(OrderSpec(OrderKind::TwoSided), 4)), (std::vector<std::int64_t>{-1, 0, 1, 2}));
    EXPECT_THROW(finite_window(OrderSpec(OrderKind::TwoSided), 0), DomainError);
}

TEST(OrdersProperty, StrictTotalOrder) {
    gen::Rng rng(11);
    for (int trial = 0; trial < 300; ++trial) {
        const auto kind = gen::random_kind(rng);
        const OrderSpec o = gen::random_order(rng, kind);
        auto position = [&]() -> Position {
            switch (kind) {
            case OrderKind::RightInfinite: return {rng.uniform(1, 10)};
            case OrderKind::LeftInfinite: return {rng.uniform(-10, -1)};
            default: return {rng.uniform(-6, 6)};
            }
        };
        const Position a = position(), b = position(), c = position();
        EXPECT_FALSE(precedes(o, a, a));
        if (a != b) {
            EXPECT_NE(precedes(o, a, b), precedes(o, b, a));
            EXPECT_NE(is_positive_root(o, a, b), is_positive_root(o, b, a));
        }
        if (precedes(o, a, b) && precedes(o, b, c)) {
            EXPECT_TRUE(precedes(o, a, c));
        }
    }
}

TEST(OrdersProperty, WindowsAreNestedAndConvex) {
    gen::Rng rng(12);
    for (int trial = 0; trial < 60; ++trial) {
        const auto kind = gen::random_kind(rng);
        const OrderSpec o = gen::random_order(rng, kind);
        std::set<std::int64_t> previous;
        for (std::size_t n = 1; n <= 12; ++n) {
            const auto w = finite_window(o, n);
            ASSERT_EQ(w.size(), n);
            std::set<std::int64_t> now;
            for (auto p : w) now.insert(p.index);
            EXPECT_TRUE(std::includes(now.begin(), now.end(), previous.begin(), previous.end()));
            // listed along the order, and nothing outside lies between two members
            for (std::size_t i = 0; i + 1 < w.size(); ++i) EXPECT_TRUE(precedes(o, w[i], w[i + 1]));
            std::vector<std::int64_t> slots;
            for (auto p : w) slots.push_back(o.slot(p).index);
            EXPECT_EQ(slots.back() - slots.front() + 1, static_cast<std::int64_t>(n));
            previous = now;
        }
    }
}
